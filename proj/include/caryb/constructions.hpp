#pragma once

#include "caryb/modcoalg.hpp"

namespace caryb {

struct BuildOptions {
  std::int64_t dimension_cap = 4096;  // largest carrier a construction may produce
};

// Δ^(n-1): V → V^{⊗n} by left iteration (Δ⊗1^{⊗k})···Δ; identity for n = 1.
LinMap iterated_comultiplication(const LinMap& delta, const BasedSpace& space, int n);

// Left-iterated multiplication M: V^{⊗n} → V, μ(μ⊗1)(μ⊗1⊗1)···; identity
// for n = 1. Associativity makes every bracketing equal; this fixes one.
LinMap iterated_multiplication(const LinMap& mu, const BasedSpace& space, int n);

// ad: H⊗H → H, (x⊗y) ↦ ad_y(x) = S(y¹)xy².
LinMap adjoint_map(const HopfAlgebra& h);

// Quantum heap on X = H⊗H: ν(x⊗y) = S(x)y, action (x⊗y)·g = xg¹⊗yg²,
// Δ_X = (1⊗τ⊗1)(Δ⊗Δ). Certified when H is cocommutative; for other H the
// attempt is made anyway and the report records what failed.
RackBuildResult heap_rack(const HopfPtr& h, const BuildOptions& opts = {});

// Adjoint rack on X = H⊗H: ν(x⊗y) = xy, action (x⊗y)·g = ad_{g¹}(x)⊗ad_{g²}(y).
RackBuildResult adjoint_rack(const HopfPtr& h, const BuildOptions& opts = {});

// Doubling: Y = X⊗X with Δ_Y = (1⊗τ⊗1)(Δ_X⊗Δ_X), y·h = y·Δ_H(h)
// componentwise, ν̃ = μ(ν⊗ν). Iterable.
RackBuildResult double_rack(const AugmentedRack& r, const BuildOptions& opts = {});

// Tensor power X^{⊗n} with Δ_n, ε_n, the action through Δ_H^(n-1), and
// ν_n = M∘ν^{⊗n}. power_rack(r, 1) is r itself; power_rack(r, 2) agrees
// map-for-map with double_rack(r).
RackBuildResult power_rack(const AugmentedRack& r, int n, const BuildOptions& opts = {});

}  // namespace caryb
