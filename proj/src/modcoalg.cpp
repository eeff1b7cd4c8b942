#include "caryb/modcoalg.hpp"

namespace caryb {

CoalgebraView coalgebra_of(const ModuleCoalgebra& X) { return {&X.space, &X.delta, &X.epsilon}; }
CoalgebraView coalgebra_of(const HopfAlgebra& h) { return {&h.space(), &h.delta(), &h.epsilon()}; }

bool is_cocommutative_coalgebra(CoalgebraView v, const Field& field) {
  const std::int64_t n = v.space->dim();
  Pipeline lhs, rhs;
  lhs.then(*v.delta);
  rhs.then(*v.delta).then_perm({{n, n}, {1, 0}});
  return !first_basis_mismatch(lhs, rhs, n, field).has_value();
}

CheckResult check_action_compatibility(const ModuleCoalgebra& X) {
  const Field& F = X.delta.field();
  const std::int64_t x = X.space.dim(), h = X.hopf->dim();
  const BasedSpace dom = tensor(X.space, X.hopf->space());
  const BasedSpace cod = tensor(X.space, X.space);
  Pipeline lhs, rhs;
  lhs.then(X.action).then(X.delta);
  rhs.then_tensor({map_factor(X.delta), map_factor(X.hopf->delta())})
      .then_perm({{x, x, h, h}, {0, 2, 1, 3}})
      .then_tensor({map_factor(X.action), map_factor(X.action)});
  return check_equal_on_basis("rack.action_compatibility", "Δ(x·g) = (x¹·g¹)⊗(x²·g²)", lhs, rhs,
                              dom, cod, F);
}

Report check_module_coalgebra(const ModuleCoalgebra& X, const std::string& subject) {
  const Field& F = X.delta.field();
  const HopfAlgebra& H = *X.hopf;
  const std::int64_t x = X.space.dim(), h = H.dim();
  const BasedSpace XX = tensor(X.space, X.space);

  Report rep(subject);
  {
    Pipeline lhs, rhs;
    lhs.then(X.delta).then_tensor({map_factor(X.delta), id_factor(x)});
    rhs.then(X.delta).then_tensor({id_factor(x), map_factor(X.delta)});
    rep.add(check_equal_on_basis("coalg.coassociativity", "(Δ⊗1)Δ = (1⊗Δ)Δ", lhs, rhs, X.space,
                                 tensor(XX, X.space), F));
  }
  {
    Pipeline ident;
    ident.then_tensor({id_factor(x)});
    Pipeline lhs;
    lhs.then(X.delta).then_tensor({map_factor(X.epsilon), id_factor(x)});
    rep.add(check_equal_on_basis("coalg.counit_left", "(ε⊗1)Δ = 1", lhs, ident, X.space, X.space, F));
    Pipeline rhs;
    rhs.then(X.delta).then_tensor({id_factor(x), map_factor(X.epsilon)});
    rep.add(check_equal_on_basis("coalg.counit_right", "(1⊗ε)Δ = 1", rhs, ident, X.space, X.space, F));
  }
  {
    Pipeline lhs, rhs;
    lhs.then_tensor({id_factor(x), map_factor(H.eta())}).then(X.action);
    rhs.then_tensor({id_factor(x)});
    rep.add(check_equal_on_basis("module.action_unit", "x·1 = x", lhs, rhs, X.space, X.space, F));
  }
  {
    Pipeline lhs, rhs;
    lhs.then_tensor({id_factor(x), map_factor(H.mu())}).then(X.action);
    rhs.then_tensor({map_factor(X.action), id_factor(h)}).then(X.action);
    rep.add(check_equal_on_basis("module.action_mult", "x·(gh) = (x·g)·h", lhs, rhs,
                                 tensor(tensor(X.space, H.space()), H.space()), X.space, F));
  }
  rep.add(check_action_compatibility(X));
  return rep;
}

Report check_coalgebra_morphism(const LinMap& f, CoalgebraView src, CoalgebraView tgt,
                                const std::string& subject) {
  const Field& F = f.field();
  if (f.source().dim() != src.space->dim())
    throw DimensionError("coalgebra morphism source", f.source().dim(), src.space->dim());
  if (f.target().dim() != tgt.space->dim())
    throw DimensionError("coalgebra morphism target", f.target().dim(), tgt.space->dim());

  Report rep(subject);
  {
    Pipeline lhs, rhs;
    lhs.then(f).then(*tgt.delta);
    rhs.then(*src.delta).then_tensor({map_factor(f), map_factor(f)});
    rep.add(check_equal_on_basis("morphism.comultiplication", "Δ∘f = (f⊗f)∘Δ", lhs, rhs, *src.space,
                                 tensor(*tgt.space, *tgt.space), F));
  }
  {
    Pipeline lhs, rhs;
    lhs.then(f).then(*tgt.epsilon);
    rhs.then(*src.epsilon);
    rep.add(check_equal_on_basis("morphism.counit", "ε∘f = ε", lhs, rhs, *src.space,
                                 BasedSpace::unit(), F));
  }
  return rep;
}

CheckResult check_augmentation(const ModuleCoalgebra& X, const LinMap& nu) {
  const Field& F = X.delta.field();
  const HopfAlgebra& H = *X.hopf;
  const std::int64_t x = X.space.dim(), h = H.dim();
  Pipeline lhs, rhs;
  lhs.then(X.action).then(nu);
  rhs.then_tensor({id_factor(x), map_factor(H.delta())})
      .then_perm({{x, h, h}, {1, 0, 2}})
      .then_tensor({map_factor(H.antipode()), map_factor(nu), id_factor(h)})
      .then_tensor({map_factor(H.mu()), id_factor(h)})
      .then(H.mu());
  return check_equal_on_basis("rack.augmentation", "ν(x·g) = S(g¹)ν(x)g²", lhs, rhs,
                              tensor(X.space, H.space()), H.space(), F);
}

RackBuildResult make_augmented_rack(std::string name, ModuleCoalgebra X, LinMap nu, Json descriptor) {
  Report rep = check_module_coalgebra(X, name);
  Report morphism = check_coalgebra_morphism(nu, coalgebra_of(X), coalgebra_of(*X.hopf), name);
  for (CheckResult c : morphism.checks()) {
    c.id = "rack.nu_" + c.id.substr(std::string("morphism.").size());
    rep.add(std::move(c));
  }
  rep.add(check_augmentation(X, nu));

  RackBuildResult out{std::nullopt, rep};
  if (!rep.all_passed()) return out;

  AugmentedRack r{std::move(name), std::move(X), std::move(nu), false, std::move(rep),
                  std::move(descriptor)};
  r.cocommutative_certified =
      is_cocommutative_coalgebra(coalgebra_of(r.X), r.field()) && is_cocommutative(*r.X.hopf);
  out.rack = std::move(r);
  return out;
}

Report check_rack_homomorphism(const LinMap& f, const AugmentedRack& r1, const AugmentedRack& r2) {
  const Field& F = f.field();
  const HopfAlgebra &h1 = r1.hopf(), &h2 = r2.hopf();
  if (h1.mu() != h2.mu() || h1.delta() != h2.delta() || h1.antipode() != h2.antipode() ||
      h1.eta() != h2.eta() || h1.epsilon() != h2.epsilon())
    throw Error("rack homomorphism check requires racks over the same Hopf algebra");

  const std::string subject = "hom: " + r1.name + " → " + r2.name;
  Report rep = check_coalgebra_morphism(f, coalgebra_of(r1.X), coalgebra_of(r2.X), subject);
  {
    Pipeline lhs, rhs;
    lhs.then(r1.X.action).then(f);
    rhs.then_tensor({map_factor(f), id_factor(h1.dim())}).then(r2.X.action);
    rep.add(check_equal_on_basis("morphism.equivariance", "f(x·g) = f(x)·g", lhs, rhs,
                                 tensor(r1.space(), h1.space()), r2.space(), F));
  }
  {
    Pipeline lhs, rhs;
    lhs.then(f).then(r2.nu);
    rhs.then(r1.nu);
    rep.add(check_equal_on_basis("morphism.augmentation", "ν₂∘f = ν₁", lhs, rhs, r1.space(),
                                 h1.space(), F));
  }
  return rep;
}

}  // namespace caryb
