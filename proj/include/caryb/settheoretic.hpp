#pragma once

#include "caryb/modcoalg.hpp"

namespace caryb {

// The set-theoretic side is deliberately implemented with integer index
// tables only, sharing no arithmetic with the linear engine, so that
// agreement under oracle_compare is meaningful cross-validation.

struct FiniteRack {
  std::string name;
  int size = 0;
  std::vector<std::vector<int>> op;  // op[x][y] = x*y
};

// Bijectivity of every right translation plus right self-distributivity,
// both by full enumeration.
Report check_rack_axioms(const FiniteRack& r);
bool is_quandle(const FiniteRack& r);  // x*x = x for all x

// Set-theoretic YBE for R(x,y) = (y, x*y), enumerated over all triples.
CheckResult check_set_ybe(const FiniteRack& r);

FiniteRack trivial_quandle(int n);
FiniteRack cyclic_rack(int n);                                   // x*y = x+1 on Z_n
FiniteRack conjugation_quandle(const GroupTable& g, int fold = 1);  // x*y = y^{-k} x y^k
FiniteRack core_quandle(const GroupTable& g);                    // x*y = y x^{-1} y
FiniteRack alexander_quandle(int p, int t);                      // x*y = tx + (1-t)y over F_p

// A finite set with a right G-action and ν: X → G with ν(x·g) = g⁻¹ν(x)g.
struct SetAugRack {
  std::string name;
  GroupTable group;
  std::vector<std::string> labels;        // carrier
  std::vector<std::vector<int>> action;   // [x][g]
  std::vector<int> nu;                    // [x] → group index
};

// Right-action axioms and the augmentation identity, by enumeration.
Report check_set_aug_rack(const SetAugRack& r);

// Induced operation x*y = x·ν(y).
FiniteRack induced_rack(const SetAugRack& r);

SetAugRack conj_aug_rack(const GroupTable& g);     // X = G, conjugation action, ν = id
SetAugRack heap_aug_rack(const GroupTable& g);     // X = G×G, (x,y)·g = (xg,yg), ν = x⁻¹y
SetAugRack adjoint_aug_rack(const GroupTable& g);  // X = G×G, componentwise conjugation, ν = xy

// Lifts the tables into a certified categorical augmented rack over k[G]
// with group-like comultiplication. Certification failure signals an
// oracle/engine inconsistency.
RackBuildResult linearize(const SetAugRack& r, const Field& field);

// Element-for-element agreement of ν, action, q and R between the set
// tables and a categorical rack on the same labeled basis; the R comparison
// is full map equality.
Report oracle_compare(const SetAugRack& set_rack, const AugmentedRack& cat_rack);

}  // namespace caryb
