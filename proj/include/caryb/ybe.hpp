#pragma once

#include "caryb/constructions.hpp"

namespace caryb {

// q = action∘(1⊗ν): q(x⊗y) = x·ν(y).
LinMap sd_map(const AugmentedRack& r);

// q(q⊗1) = q(q⊗q)(1⊗τ⊗1)(1⊗1⊗Δ) on X^{⊗3}. The free-standing overload lets
// fixtures check hand-corrupted maps.
CheckResult check_self_distributive(const LinMap& q, const LinMap& delta, const BasedSpace& X);
Report check_self_distributive(const AugmentedRack& r);

// Δ∘q = (q⊗q)(1⊗τ⊗1)(Δ⊗Δ).
CheckResult check_sd_comult_compatibility(const LinMap& q, const LinMap& delta, const BasedSpace& X);
Report check_sd_comult_compatibility(const AugmentedRack& r);

// An invertible solution candidate R_{m,n}: X^{⊗m}⊗X^{⊗n} → X^{⊗n}⊗X^{⊗m}
// with its verified two-sided inverse.
struct YBOperator {
  int m = 1;
  int n = 1;
  BasedSpace source;
  BasedSpace target;
  LinMap forward;
  LinMap inverse;
};

// R(x⊗y) = y¹ ⊗ q(x⊗y²), R⁻¹(x⊗y) = (y·S(ν(x²)))⊗x¹; the inverse identities
// are verified at construction and failure throws with a witness.
YBOperator r_matrix(const AugmentedRack& r);

// R built from raw structure maps, without any certification; used to probe
// hypothesis-violating inputs. verify_inverse=false skips the inverse check
// and stores a zero map as the inverse placeholder.
YBOperator r_matrix_from_parts(const BasedSpace& X, const LinMap& delta, const LinMap& action,
                               const LinMap& nu, const HopfAlgebra& h, bool verify_inverse);

// The (1,1) inverse alone (same formula the YBOperator carries).
LinMap r_inverse(const AugmentedRack& r);

// Braiding R_{m,n} through ν_n and Δ_n of the power structures; the inverse
// uses q⁻¹(y⊗x') = y·S(ν_n(x')).
YBOperator braiding(const AugmentedRack& r, int m, int n, const BuildOptions& opts = {});

// (R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R) on X^{⊗3}, evaluated basis vector by
// basis vector through chained sparse applies. The report is labeled
// theorem-backed only when the rack carries the cocommutativity certificate.
Report check_ybe(const AugmentedRack& r, const YBOperator& op);
CheckResult check_ybe_operator(const LinMap& forward, const BasedSpace& X, const Field& field,
                               std::string note);

// R⁻¹R = RR⁻¹ = 1 as reportable checks.
Report check_invertibility(const YBOperator& op, const Field& field, const std::string& subject);

// Both braiding coherence identities with A = X^{⊗l}, B = X^{⊗m}, C = X^{⊗n}.
Report check_hexagons(const AugmentedRack& r, int l, int m, int n, const BuildOptions& opts = {});

// R_{m,n} equals the fixed reduced word of adjacent R_{1,1} crossings
// realizing the (m,n) block transposition.
Report check_braiding_decomposition(const AugmentedRack& r, int m, int n,
                                    const BuildOptions& opts = {});

// Deterministic reduced word (crossing positions, 1-based, applied in order)
// for the permutation moving the first m strands past the last n.
std::vector<int> block_transposition_word(int m, int n);

}  // namespace caryb
