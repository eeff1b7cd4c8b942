#include "caryb/hopf.hpp"

namespace caryb {

namespace {

void require_dims(const HopfAlgebra& h) {
  const std::int64_t n = h.dim();
  auto need = [](const LinMap& m, std::int64_t src, std::int64_t tgt, const char* what) {
    if (m.source().dim() != src) throw DimensionError(std::string(what) + " source", m.source().dim(), src);
    if (m.target().dim() != tgt) throw DimensionError(std::string(what) + " target", m.target().dim(), tgt);
  };
  need(h.mu(), n * n, n, "mu");
  need(h.eta(), 1, n, "eta");
  need(h.delta(), n, n * n, "delta");
  need(h.epsilon(), n, 1, "epsilon");
  need(h.antipode(), n, n, "antipode");
}

}  // namespace

HopfAlgebra::HopfAlgebra(std::string name, BasedSpace space, Field field, LinMap mu, LinMap eta,
                         LinMap delta, LinMap epsilon, LinMap antipode)
    : name_(std::move(name)),
      space_(std::move(space)),
      field_(field),
      mu_(std::move(mu)),
      eta_(std::move(eta)),
      delta_(std::move(delta)),
      epsilon_(std::move(epsilon)),
      antipode_(std::move(antipode)) {
  require_dims(*this);
}

HopfAlgebra HopfAlgebra::unchecked(std::string name, BasedSpace space, Field field, LinMap mu,
                                   LinMap eta, LinMap delta, LinMap epsilon, LinMap antipode) {
  return HopfAlgebra(std::move(name), std::move(space), field, std::move(mu), std::move(eta),
                     std::move(delta), std::move(epsilon), std::move(antipode));
}

HopfPtr group_algebra(const GroupTable& g, const Field& field) {
  const int n = g.order();
  BasedSpace H(g.elements());
  BasedSpace HH = tensor(H, H);
  const Scalar one = field.one();

  std::vector<LinMap::Entry> mu, eta, delta, eps, s;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mu.push_back({g.mul(a, b), static_cast<std::int64_t>(a) * n + b, one});
  eta.push_back({g.identity(), 0, one});
  for (int a = 0; a < n; ++a) {
    delta.push_back({static_cast<std::int64_t>(a) * n + a, a, one});
    eps.push_back({0, a, one});
    s.push_back({g.inverse(a), a, one});
  }

  auto h = std::make_shared<const HopfAlgebra>(HopfAlgebra::unchecked(
      "k[" + g.name() + "]", H, field, LinMap(HH, H, field, std::move(mu)),
      LinMap(BasedSpace::unit(), H, field, std::move(eta)), LinMap(H, HH, field, std::move(delta)),
      LinMap(H, BasedSpace::unit(), field, std::move(eps)), LinMap(H, H, field, std::move(s))));
  Report r = check_hopf_axioms(*h);
  if (!r.all_passed()) throw Error("group algebra failed its axiom check: " + r.text());
  return h;
}

HopfPtr function_algebra(const GroupTable& g, const Field& field) {
  const int n = g.order();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) labels.push_back("d:" + g.element(a));
  BasedSpace H(labels);
  BasedSpace HH = tensor(H, H);
  const Scalar one = field.one();

  std::vector<LinMap::Entry> mu, eta, delta, eps, s;
  for (int a = 0; a < n; ++a) {
    mu.push_back({a, static_cast<std::int64_t>(a) * n + a, one});
    eta.push_back({a, 0, one});
    s.push_back({g.inverse(a), a, one});
  }
  eps.push_back({0, g.identity(), one});
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      delta.push_back({static_cast<std::int64_t>(h1) * n + h2, g.mul(h1, h2), one});

  auto h = std::make_shared<const HopfAlgebra>(HopfAlgebra::unchecked(
      "k^" + g.name(), H, field, LinMap(HH, H, field, std::move(mu)),
      LinMap(BasedSpace::unit(), H, field, std::move(eta)), LinMap(H, HH, field, std::move(delta)),
      LinMap(H, BasedSpace::unit(), field, std::move(eps)), LinMap(H, H, field, std::move(s))));
  Report r = check_hopf_axioms(*h);
  if (!r.all_passed()) throw Error("function algebra failed its axiom check: " + r.text());
  return h;
}

Report check_hopf_axioms(const HopfAlgebra& h) {
  require_dims(h);
  const Field& F = h.field();
  const BasedSpace& H = h.space();
  const std::int64_t n = H.dim();
  const BasedSpace H2 = tensor(H, H);
  const BasedSpace H3 = tensor(H2, H);
  const BasedSpace K = BasedSpace::unit();
  const LinMap &mu = h.mu(), &eta = h.eta(), &delta = h.delta(), &eps = h.epsilon(), &S = h.antipode();

  Report rep(h.name());
  auto run = [&](std::string id, std::string law, const Pipeline& lhs, const Pipeline& rhs,
                 const BasedSpace& dom, const BasedSpace& cod) {
    rep.add(check_equal_on_basis(std::move(id), std::move(law), lhs, rhs, dom, cod, F));
  };

  {
    Pipeline lhs, rhs;
    lhs.then_tensor({map_factor(mu), id_factor(n)}).then(mu);
    rhs.then_tensor({id_factor(n), map_factor(mu)}).then(mu);
    run("hopf.associativity", "μ(μ⊗1) = μ(1⊗μ)", lhs, rhs, H3, H);
  }
  {
    Pipeline lhs, rhs;
    lhs.then_tensor({map_factor(eta), id_factor(n)}).then(mu);
    rhs.then_tensor({id_factor(n)});
    run("hopf.unit_left", "μ(η⊗1) = 1", lhs, rhs, H, H);
    Pipeline lhs2, rhs2;
    lhs2.then_tensor({id_factor(n), map_factor(eta)}).then(mu);
    rhs2.then_tensor({id_factor(n)});
    run("hopf.unit_right", "μ(1⊗η) = 1", lhs2, rhs2, H, H);
  }
  {
    Pipeline lhs, rhs;
    lhs.then(delta).then_tensor({map_factor(delta), id_factor(n)});
    rhs.then(delta).then_tensor({id_factor(n), map_factor(delta)});
    run("hopf.coassociativity", "(Δ⊗1)Δ = (1⊗Δ)Δ", lhs, rhs, H, tensor(H2, H));
  }
  {
    Pipeline lhs, rhs;
    lhs.then(delta).then_tensor({map_factor(eps), id_factor(n)});
    rhs.then_tensor({id_factor(n)});
    run("hopf.counit_left", "(ε⊗1)Δ = 1", lhs, rhs, H, H);
    Pipeline lhs2, rhs2;
    lhs2.then(delta).then_tensor({id_factor(n), map_factor(eps)});
    rhs2.then_tensor({id_factor(n)});
    run("hopf.counit_right", "(1⊗ε)Δ = 1", lhs2, rhs2, H, H);
  }
  {
    Pipeline lhs, rhs;
    lhs.then(mu).then(delta);
    rhs.then_tensor({map_factor(delta), map_factor(delta)})
        .then_perm({{n, n, n, n}, {0, 2, 1, 3}})
        .then_tensor({map_factor(mu), map_factor(mu)});
    run("hopf.bialgebra", "Δμ = (μ⊗μ)(1⊗τ⊗1)(Δ⊗Δ)", lhs, rhs, H2, H2);
  }
  {
    Pipeline lhs, rhs;
    lhs.then(eta).then(delta);
    rhs.then_tensor({map_factor(eta), map_factor(eta)});
    run("hopf.bialgebra_unit", "Δη = η⊗η", lhs, rhs, K, H2);
    Pipeline lhs2, rhs2;
    lhs2.then(mu).then(eps);
    rhs2.then_tensor({map_factor(eps), map_factor(eps)});
    run("hopf.bialgebra_counit", "εμ = ε⊗ε", lhs2, rhs2, H2, K);
    Pipeline lhs3, rhs3;
    lhs3.then(eta).then(eps);
    rhs3.then_tensor({id_factor(1)});
    run("hopf.bialgebra_counit_unit", "εη = 1", lhs3, rhs3, K, K);
  }
  {
    Pipeline unit_counit;
    unit_counit.then(eps).then(eta);
    Pipeline lhs;
    lhs.then(delta).then_tensor({map_factor(S), id_factor(n)}).then(mu);
    run("hopf.antipode_left", "μ(S⊗1)Δ = ηε", lhs, unit_counit, H, H);
    Pipeline rhs;
    rhs.then(delta).then_tensor({id_factor(n), map_factor(S)}).then(mu);
    run("hopf.antipode_right", "μ(1⊗S)Δ = ηε", rhs, unit_counit, H, H);
  }
  return rep;
}

Report check_antipode_twist(const HopfAlgebra& h) {
  const Field& F = h.field();
  const BasedSpace& H = h.space();
  const std::int64_t n = H.dim();
  const BasedSpace H2 = tensor(H, H);
  const LinMap &mu = h.mu(), &delta = h.delta(), &S = h.antipode();

  Report rep(h.name());
  {
    Pipeline lhs, rhs;
    lhs.then_tensor({map_factor(S), map_factor(S)}).then(mu);
    rhs.then_perm({{n, n}, {1, 0}}).then(mu).then(S);
    rep.add(check_equal_on_basis("hopf.antipode_twist_mul", "μ(S⊗S) = Sμτ", lhs, rhs, H2, H, F));
  }
  {
    Pipeline lhs, rhs;
    lhs.then(delta).then_tensor({map_factor(S), map_factor(S)});
    rhs.then(S).then(delta).then_perm({{n, n}, {1, 0}});
    rep.add(check_equal_on_basis("hopf.antipode_twist_comul", "(S⊗S)Δ = τΔS", lhs, rhs, H, H2, F));
  }
  return rep;
}

bool is_cocommutative(const HopfAlgebra& h) {
  const std::int64_t n = h.dim();
  Pipeline lhs, rhs;
  lhs.then(h.delta());
  rhs.then(h.delta()).then_perm({{n, n}, {1, 0}});
  return !first_basis_mismatch(lhs, rhs, n, h.field()).has_value();
}

bool is_involutory(const HopfAlgebra& h) {
  Pipeline lhs, rhs;
  lhs.then(h.antipode()).then(h.antipode());
  rhs.then_tensor({id_factor(h.dim())});
  return !first_basis_mismatch(lhs, rhs, h.dim(), h.field()).has_value();
}

}  // namespace caryb
