#pragma once

#include <optional>
#include <string>

#include "caryb/hopf.hpp"

namespace caryb {

// A coalgebra (Δ_X, ε_X) carrying a right H-module action X⊗H → X whose
// comultiplication is compatible with the action. Assembly is free-form so
// fixtures can be built; certification happens in make_augmented_rack.
struct ModuleCoalgebra {
  BasedSpace space;
  LinMap delta;    // X → X⊗X
  LinMap epsilon;  // X → k
  LinMap action;   // X⊗H → X
  HopfPtr hopf;
};

// A certified categorical augmented rack (X, H, ν): ν is a coalgebra
// morphism X → H satisfying ν(x·g) = S(g¹)ν(x)g². Instances are only handed
// out by make_augmented_rack after every defining identity has been checked.
struct AugmentedRack {
  std::string name;
  ModuleCoalgebra X;
  LinMap nu;  // X → H
  bool cocommutative_certified = false;
  Report certification;
  Json descriptor;  // construction provenance

  const BasedSpace& space() const { return X.space; }
  const Field& field() const { return X.delta.field(); }
  const HopfAlgebra& hopf() const { return *X.hopf; }
};

struct RackBuildResult {
  std::optional<AugmentedRack> rack;  // present iff report.all_passed()
  Report report;
};

// Coalgebra + module axioms plus the action/comultiplication compatibility.
Report check_module_coalgebra(const ModuleCoalgebra& X, const std::string& subject);

// Just the compatibility square Δ_X(x·g) = (x¹·g¹)⊗(x²·g²).
CheckResult check_action_compatibility(const ModuleCoalgebra& X);

// A coalgebra seen through its comultiplication and counit; lets morphism
// checks treat X and H uniformly.
struct CoalgebraView {
  const BasedSpace* space;
  const LinMap* delta;
  const LinMap* epsilon;
};
CoalgebraView coalgebra_of(const ModuleCoalgebra& X);
CoalgebraView coalgebra_of(const HopfAlgebra& h);

// Δ_tgt∘f = (f⊗f)∘Δ_src and ε_tgt∘f = ε_src.
Report check_coalgebra_morphism(const LinMap& f, CoalgebraView src, CoalgebraView tgt,
                                const std::string& subject);

// ν∘action = μ(μ⊗1)(S⊗ν⊗1)(τ⊗1)(1⊗Δ_H) as maps X⊗H → H.
CheckResult check_augmentation(const ModuleCoalgebra& X, const LinMap& nu);

// Runs every defining check; returns the certified rack or the report of
// what failed. cocommutative_certified records τΔ_X = Δ_X together with
// cocommutativity of H (the hypothesis of the YBE theorem downstream).
RackBuildResult make_augmented_rack(std::string name, ModuleCoalgebra X, LinMap nu,
                                    Json descriptor = Json::object());

// H-equivariant coalgebra morphism with ν₂∘f = ν₁; racks must share H.
Report check_rack_homomorphism(const LinMap& f, const AugmentedRack& r1, const AugmentedRack& r2);

bool is_cocommutative_coalgebra(CoalgebraView v, const Field& field);

}  // namespace caryb
