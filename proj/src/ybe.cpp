#include "caryb/ybe.hpp"

#include <map>

namespace caryb {

namespace {

LinMap materialize_sd(const BasedSpace& X, const LinMap& action, const LinMap& nu, const Field& F) {
  Pipeline p;
  p.then_tensor({id_factor(X.dim()), map_factor(nu)}).then(action);
  return materialize(p, tensor(X, X), X, F);
}

// forward/inverse wiring shared by r_matrix (m = n = 1, spelled out on the
// rack's own maps) and braiding (general powers).
YBOperator build_operator(int m, int n, const BasedSpace& A, const BasedSpace& B,
                          const LinMap& delta_n, const LinMap& nu_n, const LinMap& act_m,
                          const LinMap& antipode, const Field& F, bool verify,
                          const std::string& subject) {
  const std::int64_t a = A.dim(), b = B.dim();
  Pipeline q;
  q.then_tensor({id_factor(a), map_factor(nu_n)}).then(act_m);
  LinMap qmap = materialize(q, tensor(A, B), A, F);

  Pipeline pf;
  pf.then_tensor({id_factor(a), map_factor(delta_n)})
      .then_perm({{a, b, b}, {1, 0, 2}})
      .then_tensor({id_factor(b), map_factor(qmap)});
  LinMap forward = materialize(pf, tensor(A, B), tensor(B, A), F);

  LinMap snu = compose(antipode, nu_n);
  Pipeline pi;
  pi.then_tensor({map_factor(delta_n), id_factor(a)})
      .then_perm({{b, b, a}, {2, 1, 0}})
      .then_tensor({id_factor(a), map_factor(snu), id_factor(b)})
      .then_tensor({map_factor(act_m), id_factor(b)});
  LinMap inverse = materialize(pi, tensor(B, A), tensor(A, B), F);

  if (verify) {
    LinMap id_ab = LinMap::identity(tensor(A, B), F);
    LinMap id_ba = LinMap::identity(tensor(B, A), F);
    if (compose(inverse, forward) != id_ab || compose(forward, inverse) != id_ba) {
      Pipeline lhs, rhs;
      lhs.then(forward).then(inverse);
      rhs.then(id_ab);
      auto w = first_basis_mismatch(lhs, rhs, a * b, F);
      std::string detail = w ? " first witness at basis " + tensor(A, B).label(w->index) +
                                   ": R⁻¹R gives " + format_vec(w->lhs, tensor(A, B))
                             : " (mismatch on the RR⁻¹ side)";
      throw Error(subject + ": braiding inverse verification failed;" + detail);
    }
  }
  return {m, n, tensor(A, B), tensor(B, A), std::move(forward), std::move(inverse)};
}

}  // namespace

LinMap sd_map(const AugmentedRack& r) {
  return materialize_sd(r.space(), r.X.action, r.nu, r.field());
}

CheckResult check_self_distributive(const LinMap& q, const LinMap& delta, const BasedSpace& X) {
  const Field& F = q.field();
  const std::int64_t x = X.dim();
  Pipeline lhs, rhs;
  lhs.then_tensor({map_factor(q), id_factor(x)}).then(q);
  rhs.then_tensor({id_factor(x), id_factor(x), map_factor(delta)})
      .then_perm({{x, x, x, x}, {0, 2, 1, 3}})
      .then_tensor({map_factor(q), map_factor(q)})
      .then(q);
  return check_equal_on_basis("sd.self_distributive",
                              "q(q⊗1) = q(q⊗q)(1⊗τ⊗1)(1⊗1⊗Δ)", lhs, rhs,
                              tensor(tensor(X, X), X), X, F);
}

Report check_self_distributive(const AugmentedRack& r) {
  Report rep(r.name);
  LinMap q = sd_map(r);
  rep.add(check_self_distributive(q, r.X.delta, r.space()));
  return rep;
}

CheckResult check_sd_comult_compatibility(const LinMap& q, const LinMap& delta, const BasedSpace& X) {
  const Field& F = q.field();
  const std::int64_t x = X.dim();
  Pipeline lhs, rhs;
  lhs.then(q).then(delta);
  rhs.then_tensor({map_factor(delta), map_factor(delta)})
      .then_perm({{x, x, x, x}, {0, 2, 1, 3}})
      .then_tensor({map_factor(q), map_factor(q)});
  return check_equal_on_basis("sd.comult_compatible", "Δq = (q⊗q)(1⊗τ⊗1)(Δ⊗Δ)", lhs, rhs,
                              tensor(X, X), tensor(X, X), F);
}

Report check_sd_comult_compatibility(const AugmentedRack& r) {
  Report rep(r.name);
  LinMap q = sd_map(r);
  rep.add(check_sd_comult_compatibility(q, r.X.delta, r.space()));
  return rep;
}

YBOperator r_matrix(const AugmentedRack& r) {
  return build_operator(1, 1, r.space(), r.space(), r.X.delta, r.nu, r.X.action,
                        r.hopf().antipode(), r.field(), true, r.name);
}

YBOperator r_matrix_from_parts(const BasedSpace& X, const LinMap& delta, const LinMap& action,
                               const LinMap& nu, const HopfAlgebra& h, bool verify_inverse) {
  return build_operator(1, 1, X, X, delta, nu, action, h.antipode(), h.field(), verify_inverse,
                        "r_matrix_from_parts");
}

LinMap r_inverse(const AugmentedRack& r) { return r_matrix(r).inverse; }

YBOperator braiding(const AugmentedRack& r, int m, int n, const BuildOptions& opts) {
  if (m < 1 || n < 1) throw Error("braiding needs m, n >= 1");
  std::int64_t dom = 1;
  for (int i = 0; i < m + n; ++i) {
    dom *= r.space().dim();
    if (dom > opts.dimension_cap) throw CapError(dom, opts.dimension_cap);
  }
  RackBuildResult pm = power_rack(r, m, opts);
  RackBuildResult pn = power_rack(r, n, opts);
  if (!pm.rack || !pn.rack)
    throw Error("braiding: power structure failed certification:\n" +
                (pm.rack ? pn.report : pm.report).text());
  return build_operator(m, n, pm.rack->space(), pn.rack->space(), pn.rack->X.delta, pn.rack->nu,
                        pm.rack->X.action, r.hopf().antipode(), r.field(),
                        true, r.name + " R_{" + std::to_string(m) + "," + std::to_string(n) + "}");
}

CheckResult check_ybe_operator(const LinMap& forward, const BasedSpace& X, const Field& field,
                               std::string note) {
  const std::int64_t x = X.dim();
  Pipeline lhs, rhs;
  lhs.then_tensor({map_factor(forward), id_factor(x)})
      .then_tensor({id_factor(x), map_factor(forward)})
      .then_tensor({map_factor(forward), id_factor(x)});
  rhs.then_tensor({id_factor(x), map_factor(forward)})
      .then_tensor({map_factor(forward), id_factor(x)})
      .then_tensor({id_factor(x), map_factor(forward)});
  CheckResult c = check_equal_on_basis("ybe.braid_relation",
                                       "(R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R)", lhs, rhs,
                                       tensor(tensor(X, X), X), tensor(tensor(X, X), X), field);
  c.note = std::move(note);
  return c;
}

Report check_ybe(const AugmentedRack& r, const YBOperator& op) {
  Report rep(r.name);
  rep.add(check_ybe_operator(op.forward, r.space(), r.field(),
                             r.cocommutative_certified
                                 ? "theorem-backed: cocommutativity certified"
                                 : "empirical: no cocommutativity certificate"));
  return rep;
}

Report check_invertibility(const YBOperator& op, const Field& field, const std::string& subject) {
  Report rep(subject);
  const std::int64_t d = op.source.dim();
  {
    Pipeline lhs, rhs;
    lhs.then(op.forward).then(op.inverse);
    rhs.then_tensor({id_factor(d)});
    rep.add(check_equal_on_basis("ybe.inverse_left", "R⁻¹∘R = 1", lhs, rhs, op.source, op.source, field));
  }
  {
    Pipeline lhs, rhs;
    lhs.then(op.inverse).then(op.forward);
    rhs.then_tensor({id_factor(op.target.dim())});
    rep.add(check_equal_on_basis("ybe.inverse_right", "R∘R⁻¹ = 1", lhs, rhs, op.target, op.target, field));
  }
  return rep;
}

Report check_hexagons(const AugmentedRack& r, int l, int m, int n, const BuildOptions& opts) {
  const Field& F = r.field();
  const std::int64_t x = r.space().dim();
  std::map<std::pair<int, int>, YBOperator> ops;
  auto R = [&](int s, int t) -> const YBOperator& {
    auto key = std::make_pair(s, t);
    auto it = ops.find(key);
    if (it == ops.end()) it = ops.emplace(key, braiding(r, s, t, opts)).first;
    return it->second;
  };
  auto dim_pow = [&](int k) {
    std::int64_t d = 1;
    for (int i = 0; i < k; ++i) d *= x;
    return d;
  };
  const std::int64_t a = dim_pow(l), b = dim_pow(m), c = dim_pow(n);
  const BasedSpace domain = tensor_power(r.space(), l + m + n);
  const std::string lmn = "(" + std::to_string(l) + "," + std::to_string(m) + "," +
                          std::to_string(n) + ")";

  Report rep(r.name + " hexagons " + lmn);
  {
    Pipeline lhs, rhs;
    lhs.then_tensor({map_factor(R(l, m + n).forward)});
    rhs.then_tensor({map_factor(R(l, m).forward), id_factor(c)})
        .then_tensor({id_factor(b), map_factor(R(l, n).forward)});
    rep.add(check_equal_on_basis("braid.hexagon_split_right",
                                 "R_{A,B⊗C} = (1⊗R_{A,C})(R_{A,B}⊗1)", lhs, rhs, domain, domain, F));
  }
  {
    Pipeline lhs, rhs;
    lhs.then_tensor({map_factor(R(l + m, n).forward)});
    rhs.then_tensor({id_factor(a), map_factor(R(m, n).forward)})
        .then_tensor({map_factor(R(l, n).forward), id_factor(b)});
    rep.add(check_equal_on_basis("braid.hexagon_split_left",
                                 "R_{A⊗B,C} = (R_{A,C}⊗1)(1⊗R_{B,C})", lhs, rhs, domain, domain, F));
  }
  return rep;
}

std::vector<int> block_transposition_word(int m, int n) {
  std::vector<int> strands(static_cast<std::size_t>(m + n));
  for (int i = 0; i < m + n; ++i) strands[static_cast<std::size_t>(i)] = i;
  std::vector<int> word;
  for (;;) {
    bool moved = false;
    for (int p = 0; p + 1 < m + n; ++p) {
      if (strands[static_cast<std::size_t>(p)] < m && strands[static_cast<std::size_t>(p + 1)] >= m) {
        std::swap(strands[static_cast<std::size_t>(p)], strands[static_cast<std::size_t>(p + 1)]);
        word.push_back(p + 1);
        moved = true;
        break;
      }
    }
    if (!moved) return word;
  }
}

Report check_braiding_decomposition(const AugmentedRack& r, int m, int n, const BuildOptions& opts) {
  const Field& F = r.field();
  const std::int64_t x = r.space().dim();
  YBOperator rmn = braiding(r, m, n, opts);
  YBOperator r11 = braiding(r, 1, 1, opts);
  std::vector<int> word = block_transposition_word(m, n);

  Pipeline lhs;
  lhs.then(rmn.forward);
  Pipeline rhs;
  std::string word_str;
  for (int p : word) {
    std::vector<TensorFactor> factors;
    std::int64_t left = 1, right = 1;
    for (int i = 0; i < p - 1; ++i) left *= x;
    for (int i = 0; i < m + n - p - 1; ++i) right *= x;
    if (left > 1) factors.push_back(id_factor(left));
    factors.push_back(map_factor(r11.forward));
    if (right > 1) factors.push_back(id_factor(right));
    rhs.then_tensor(std::move(factors));
    word_str += (word_str.empty() ? "c" : " c") + std::to_string(p);
  }

  const BasedSpace domain = tensor_power(r.space(), m + n);
  Report rep(r.name + " decomposition (" + std::to_string(m) + "," + std::to_string(n) + ")");
  CheckResult c = check_equal_on_basis("braid.decomposition",
                                       "R_{m,n} equals its reduced crossing word", lhs, rhs, domain,
                                       domain, F);
  c.note = "word: " + word_str;
  rep.add(std::move(c));
  return rep;
}

}  // namespace caryb
