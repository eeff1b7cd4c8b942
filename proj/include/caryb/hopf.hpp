#pragma once

#include <memory>
#include <string>

#include "caryb/group.hpp"
#include "caryb/linmap.hpp"
#include "caryb/report.hpp"

namespace caryb {

// A finite-dimensional Hopf algebra (μ, η, Δ, ε, S) over the session field.
// The public constructors verify every axiom; unchecked() exists for test
// fixtures (corrupted structure maps and the like).
class HopfAlgebra {
 public:
  static HopfAlgebra unchecked(std::string name, BasedSpace space, Field field, LinMap mu,
                               LinMap eta, LinMap delta, LinMap epsilon, LinMap antipode);

  const std::string& name() const { return name_; }
  const BasedSpace& space() const { return space_; }
  const Field& field() const { return field_; }
  std::int64_t dim() const { return space_.dim(); }

  const LinMap& mu() const { return mu_; }
  const LinMap& eta() const { return eta_; }
  const LinMap& delta() const { return delta_; }
  const LinMap& epsilon() const { return epsilon_; }
  const LinMap& antipode() const { return antipode_; }

 private:
  HopfAlgebra(std::string name, BasedSpace space, Field field, LinMap mu, LinMap eta, LinMap delta,
              LinMap epsilon, LinMap antipode);

  std::string name_;
  BasedSpace space_;
  Field field_;
  LinMap mu_, eta_, delta_, epsilon_, antipode_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// k[G]: basis G, μ the multiplication table, Δ(g) = g⊗g, ε(g) = 1,
// S(g) = g⁻¹. Cocommutative for every G. Axiom-checked before returning.
HopfPtr group_algebra(const GroupTable& g, const Field& field);

// k^G: basis {δ_g}, pointwise μ, Δ(δ_g) = Σ_{hk=g} δ_h⊗δ_k, ε(δ_g) = [g=e],
// S(δ_g) = δ_{g⁻¹}. Cocommutative iff G is abelian. Axiom-checked.
HopfPtr function_algebra(const GroupTable& g, const Field& field);

// Associativity, unit, coassociativity, counit, bialgebra compatibility and
// the antipode condition, each verified exhaustively over basis vectors.
Report check_hopf_axioms(const HopfAlgebra& h);

// Derived identities μ(S⊗S) = S∘μ∘τ and (S⊗S)∘Δ = τ∘Δ∘S; failure here on a
// valid Hopf algebra indicates an engine bug.
Report check_antipode_twist(const HopfAlgebra& h);

bool is_cocommutative(const HopfAlgebra& h);  // τ∘Δ = Δ
bool is_involutory(const HopfAlgebra& h);     // S∘S = 1

}  // namespace caryb
