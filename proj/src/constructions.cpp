#include "caryb/constructions.hpp"

namespace caryb {

namespace {

void check_cap(std::int64_t dim, const BuildOptions& opts) {
  if (dim > opts.dimension_cap) throw CapError(dim, opts.dimension_cap);
}

// [0,2,4,...,1,3,5,...]: collects first comultiplication legs, then second.
FactorPerm interleave_split(std::int64_t d, int n) {
  FactorPerm p;
  p.dims.assign(static_cast<std::size_t>(2 * n), d);
  for (int i = 0; i < n; ++i) p.perm.push_back(2 * i);
  for (int i = 0; i < n; ++i) p.perm.push_back(2 * i + 1);
  return p;
}

}  // namespace

LinMap iterated_comultiplication(const LinMap& delta, const BasedSpace& space, int n) {
  if (n < 1) throw Error("iterated comultiplication needs n >= 1");
  const Field& F = delta.field();
  if (n == 1) return LinMap::identity(space, F);
  const std::int64_t d = space.dim();
  Pipeline p;
  p.then(delta);
  std::int64_t rest = 1;
  for (int k = 2; k < n; ++k) {
    p.then_tensor({map_factor(delta), id_factor(d * rest)});
    rest *= d;
  }
  return materialize(p, space, tensor_power(space, n), F);
}

LinMap iterated_multiplication(const LinMap& mu, const BasedSpace& space, int n) {
  if (n < 1) throw Error("iterated multiplication needs n >= 1");
  const Field& F = mu.field();
  if (n == 1) return LinMap::identity(space, F);
  const std::int64_t d = space.dim();
  Pipeline p;
  for (int k = n; k >= 2; --k) {
    std::int64_t tail = 1;
    for (int i = 0; i < k - 2; ++i) tail *= d;
    p.then_tensor({map_factor(mu), id_factor(tail)});
  }
  return materialize(p, tensor_power(space, n), space, F);
}

LinMap adjoint_map(const HopfAlgebra& h) {
  const Field& F = h.field();
  const std::int64_t n = h.dim();
  Pipeline p;
  p.then_tensor({id_factor(n), map_factor(h.delta())})
      .then_perm({{n, n, n}, {1, 0, 2}})
      .then_tensor({map_factor(h.antipode()), id_factor(n), id_factor(n)})
      .then_tensor({map_factor(h.mu()), id_factor(n)})
      .then(h.mu());
  return materialize(p, tensor(h.space(), h.space()), h.space(), F);
}

RackBuildResult heap_rack(const HopfPtr& h, const BuildOptions& opts) {
  const Field& F = h->field();
  const std::int64_t n = h->dim();
  check_cap(n * n, opts);
  const BasedSpace X = tensor(h->space(), h->space());
  const BasedSpace XX = tensor(X, X);

  Pipeline pd;
  pd.then_tensor({map_factor(h->delta()), map_factor(h->delta())})
      .then_perm({{n, n, n, n}, {0, 2, 1, 3}});
  LinMap delta = materialize(pd, X, XX, F);

  Pipeline pe;
  pe.then_tensor({map_factor(h->epsilon()), map_factor(h->epsilon())});
  LinMap epsilon = materialize(pe, X, BasedSpace::unit(), F);

  Pipeline pa;
  pa.then_tensor({id_factor(n), id_factor(n), map_factor(h->delta())})
      .then_perm({{n, n, n, n}, {0, 2, 1, 3}})
      .then_tensor({map_factor(h->mu()), map_factor(h->mu())});
  LinMap action = materialize(pa, tensor(X, h->space()), X, F);

  Pipeline pn;
  pn.then_tensor({map_factor(h->antipode()), id_factor(n)}).then(h->mu());
  LinMap nu = materialize(pn, X, h->space(), F);

  Json desc;
  desc["kind"] = "heap";
  desc["base"] = h->name();
  RackBuildResult out = make_augmented_rack("heap(" + h->name() + ")",
                                            ModuleCoalgebra{X, delta, epsilon, action, h},
                                            std::move(nu), std::move(desc));
  if (!is_cocommutative(*h))
    out.report.note("base Hopf algebra is not cocommutative; the heap construction is only "
                    "guaranteed for cocommutative H, so this is an empirical attempt");
  return out;
}

RackBuildResult adjoint_rack(const HopfPtr& h, const BuildOptions& opts) {
  const Field& F = h->field();
  const std::int64_t n = h->dim();
  check_cap(n * n, opts);
  const BasedSpace X = tensor(h->space(), h->space());
  const BasedSpace XX = tensor(X, X);

  Pipeline pd;
  pd.then_tensor({map_factor(h->delta()), map_factor(h->delta())})
      .then_perm({{n, n, n, n}, {0, 2, 1, 3}});
  LinMap delta = materialize(pd, X, XX, F);

  Pipeline pe;
  pe.then_tensor({map_factor(h->epsilon()), map_factor(h->epsilon())});
  LinMap epsilon = materialize(pe, X, BasedSpace::unit(), F);

  LinMap ad = adjoint_map(*h);
  Pipeline pa;
  pa.then_tensor({id_factor(n), id_factor(n), map_factor(h->delta())})
      .then_perm({{n, n, n, n}, {0, 2, 1, 3}})
      .then_tensor({map_factor(ad), map_factor(ad)});
  LinMap action = materialize(pa, tensor(X, h->space()), X, F);

  LinMap nu = h->mu().with_spaces(X, h->space());

  Json desc;
  desc["kind"] = "adjoint";
  desc["base"] = h->name();
  RackBuildResult out = make_augmented_rack("adjoint(" + h->name() + ")",
                                            ModuleCoalgebra{X, delta, epsilon, action, h},
                                            std::move(nu), std::move(desc));
  if (!is_cocommutative(*h))
    out.report.note("base Hopf algebra is not cocommutative; the adjoint construction is only "
                    "guaranteed for cocommutative H, so this is an empirical attempt");
  return out;
}

RackBuildResult double_rack(const AugmentedRack& r, const BuildOptions& opts) {
  const Field& F = r.field();
  const HopfPtr h = r.X.hopf;
  const std::int64_t x = r.space().dim(), hd = h->dim();
  check_cap(x * x, opts);
  const BasedSpace Y = tensor(r.space(), r.space());
  const BasedSpace YY = tensor(Y, Y);

  Pipeline pd;
  pd.then_tensor({map_factor(r.X.delta), map_factor(r.X.delta)})
      .then_perm({{x, x, x, x}, {0, 2, 1, 3}});
  LinMap delta = materialize(pd, Y, YY, F);

  Pipeline pe;
  pe.then_tensor({map_factor(r.X.epsilon), map_factor(r.X.epsilon)});
  LinMap epsilon = materialize(pe, Y, BasedSpace::unit(), F);

  Pipeline pa;
  pa.then_tensor({id_factor(x), id_factor(x), map_factor(h->delta())})
      .then_perm({{x, x, hd, hd}, {0, 2, 1, 3}})
      .then_tensor({map_factor(r.X.action), map_factor(r.X.action)});
  LinMap action = materialize(pa, tensor(Y, h->space()), Y, F);

  Pipeline pn;
  pn.then_tensor({map_factor(r.nu), map_factor(r.nu)}).then(h->mu());
  LinMap nu = materialize(pn, Y, h->space(), F);

  Json desc;
  desc["kind"] = "double";
  desc["base"] = r.descriptor;
  return make_augmented_rack("double(" + r.name + ")",
                             ModuleCoalgebra{Y, delta, epsilon, action, h}, std::move(nu),
                             std::move(desc));
}

RackBuildResult power_rack(const AugmentedRack& r, int n, const BuildOptions& opts) {
  if (n < 1) throw Error("power_rack needs n >= 1");
  if (n == 1) return {r, r.certification};

  const Field& F = r.field();
  const HopfPtr h = r.X.hopf;
  const std::int64_t x = r.space().dim(), hd = h->dim();
  std::int64_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= x;
    check_cap(dim, opts);
  }
  const BasedSpace Y = tensor_power(r.space(), n);
  const BasedSpace YY = tensor(Y, Y);

  Pipeline pd;
  pd.then_tensor(std::vector<TensorFactor>(static_cast<std::size_t>(n), map_factor(r.X.delta)))
      .then_perm(interleave_split(x, n));
  LinMap delta = materialize(pd, Y, YY, F);

  Pipeline pe;
  pe.then_tensor(std::vector<TensorFactor>(static_cast<std::size_t>(n), map_factor(r.X.epsilon)));
  LinMap epsilon = materialize(pe, Y, BasedSpace::unit(), F);

  LinMap deltaH_n = iterated_comultiplication(h->delta(), h->space(), n);
  FactorPerm pairup;
  pairup.dims.assign(static_cast<std::size_t>(2 * n), 0);
  for (int i = 0; i < n; ++i) {
    pairup.dims[static_cast<std::size_t>(i)] = x;
    pairup.dims[static_cast<std::size_t>(n + i)] = hd;
    pairup.perm.push_back(i);
    pairup.perm.push_back(n + i);
  }
  Pipeline pa;
  std::vector<TensorFactor> pre(static_cast<std::size_t>(n), id_factor(x));
  pre.push_back(map_factor(deltaH_n));
  pa.then_tensor(std::move(pre))
      .then_perm(std::move(pairup))
      .then_tensor(std::vector<TensorFactor>(static_cast<std::size_t>(n), map_factor(r.X.action)));
  LinMap action = materialize(pa, tensor(Y, h->space()), Y, F);

  LinMap M = iterated_multiplication(h->mu(), h->space(), n);
  Pipeline pn;
  pn.then_tensor(std::vector<TensorFactor>(static_cast<std::size_t>(n), map_factor(r.nu))).then(M);
  LinMap nu = materialize(pn, Y, h->space(), F);

  Json desc;
  desc["kind"] = "power";
  desc["n"] = n;
  desc["base"] = r.descriptor;
  return make_augmented_rack("power" + std::to_string(n) + "(" + r.name + ")",
                             ModuleCoalgebra{Y, delta, epsilon, action, h}, std::move(nu),
                             std::move(desc));
}

}  // namespace caryb
