#include "caryb/settheoretic.hpp"

#include "caryb/ybe.hpp"

namespace caryb {

namespace {

int pow_mod_group(const GroupTable& g, int y, int k) {
  int r = g.identity();
  for (int i = 0; i < k; ++i) r = g.mul(r, y);
  return r;
}

std::vector<std::vector<int>> square_table(int n) {
  return std::vector<std::vector<int>>(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
}

}  // namespace

Report check_rack_axioms(const FiniteRack& r) {
  const int n = r.size;
  Report rep(r.name);
  {
    CheckResult c{"set.translation_bijective", "R_y: x ↦ x*y is a bijection for every y", true,
                  static_cast<std::int64_t>(n) * n, std::nullopt, ""};
    for (int y = 0; y < n && c.passed; ++y) {
      std::vector<bool> hit(static_cast<std::size_t>(n), false);
      for (int x = 0; x < n; ++x) {
        int v = r.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        if (hit[static_cast<std::size_t>(v)]) {
          c.passed = false;
          c.witness = Witness{y, "column y=" + std::to_string(y),
                              "x=" + std::to_string(x) + " collides at " + std::to_string(v), ""};
          break;
        }
        hit[static_cast<std::size_t>(v)] = true;
      }
    }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"set.self_distributive", "(x*y)*z = (x*z)*(y*z)", true,
                  static_cast<std::int64_t>(n) * n * n, std::nullopt, ""};
    for (int x = 0; x < n && c.passed; ++x)
      for (int y = 0; y < n && c.passed; ++y)
        for (int z = 0; z < n; ++z) {
          auto star = [&](int a, int b) { return r.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
          if (star(star(x, y), z) != star(star(x, z), star(y, z))) {
            c.passed = false;
            c.witness = Witness{x, "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")",
                                std::to_string(star(star(x, y), z)), std::to_string(star(star(x, z), star(y, z)))};
            break;
          }
        }
    rep.add(std::move(c));
  }
  return rep;
}

bool is_quandle(const FiniteRack& r) {
  for (int x = 0; x < r.size; ++x)
    if (r.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] != x) return false;
  return true;
}

CheckResult check_set_ybe(const FiniteRack& r) {
  const int n = r.size;
  auto star = [&](int a, int b) { return r.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  struct T {
    int a, b, c;
  };
  auto r1 = [&](T t) { return T{t.b, star(t.a, t.b), t.c}; };  // R on first two
  auto r2 = [&](T t) { return T{t.a, t.c, star(t.b, t.c)}; };  // R on last two
  CheckResult c{"set.ybe", "(R×1)(1×R)(R×1) = (1×R)(R×1)(1×R) for R(x,y) = (y, x*y)", true,
                static_cast<std::int64_t>(n) * n * n, std::nullopt, ""};
  for (int a = 0; a < n && c.passed; ++a)
    for (int b = 0; b < n && c.passed; ++b)
      for (int cc = 0; cc < n; ++cc) {
        T lhs = r1(r2(r1(T{a, b, cc})));
        T rhs = r2(r1(r2(T{a, b, cc})));
        if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.c != rhs.c) {
          c.passed = false;
          c.witness = Witness{a, "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc) + ")",
                              "(" + std::to_string(lhs.a) + "," + std::to_string(lhs.b) + "," + std::to_string(lhs.c) + ")",
                              "(" + std::to_string(rhs.a) + "," + std::to_string(rhs.b) + "," + std::to_string(rhs.c) + ")"};
          break;
        }
      }
  return c;
}

FiniteRack trivial_quandle(int n) {
  FiniteRack r{"trivial quandle on " + std::to_string(n) + " elements", n, square_table(n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = x;
  return r;
}

FiniteRack cyclic_rack(int n) {
  FiniteRack r{"cyclic rack on Z" + std::to_string(n), n, square_table(n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + 1) % n;
  return r;
}

FiniteRack conjugation_quandle(const GroupTable& g, int fold) {
  const int n = g.order();
  FiniteRack r{std::to_string(fold) + "-fold conjugation quandle on " + g.name(), n, square_table(n)};
  for (int y = 0; y < n; ++y) {
    const int yk = pow_mod_group(g, y, fold);
    const int yki = g.inverse(yk);
    for (int x = 0; x < n; ++x)
      r.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g.mul(g.mul(yki, x), yk);
  }
  return r;
}

FiniteRack core_quandle(const GroupTable& g) {
  const int n = g.order();
  FiniteRack r{"core quandle on " + g.name(), n, square_table(n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      r.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g.mul(g.mul(y, g.inverse(x)), y);
  return r;
}

FiniteRack alexander_quandle(int p, int t) {
  if (p < 2) throw InputError("alexander quandle needs a modulus >= 2");
  const int tm = ((t % p) + p) % p;
  if (tm == 0) throw InputError("alexander quandle needs t to be a unit mod p");
  FiniteRack r{"Alexander quandle over Z" + std::to_string(p) + " with t=" + std::to_string(t), p,
               square_table(p)};
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      r.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          (tm * x % p + ((1 - tm) % p + p) * y % p) % p;
  return r;
}

Report check_set_aug_rack(const SetAugRack& r) {
  const int n = static_cast<int>(r.labels.size());
  const int m = r.group.order();
  Report rep(r.name);
  {
    CheckResult c{"set.action_identity", "x·e = x", true, n, std::nullopt, ""};
    for (int x = 0; x < n; ++x)
      if (r.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(r.group.identity())] != x) {
        c.passed = false;
        c.witness = Witness{x, r.labels[static_cast<std::size_t>(x)], "", ""};
        break;
      }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"set.action_compose", "(x·g)·h = x·(gh)", true,
                  static_cast<std::int64_t>(n) * m * m, std::nullopt, ""};
    for (int x = 0; x < n && c.passed; ++x)
      for (int g = 0; g < m && c.passed; ++g)
        for (int h = 0; h < m; ++h) {
          int lhs = r.action[static_cast<std::size_t>(r.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)])]
                            [static_cast<std::size_t>(h)];
          int rhs = r.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(r.group.mul(g, h))];
          if (lhs != rhs) {
            c.passed = false;
            c.witness = Witness{x,
                                r.labels[static_cast<std::size_t>(x)] + " with (g,h)=(" + r.group.element(g) +
                                    "," + r.group.element(h) + ")",
                                r.labels[static_cast<std::size_t>(lhs)], r.labels[static_cast<std::size_t>(rhs)]};
            break;
          }
        }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"set.augmentation", "ν(x·g) = g⁻¹ν(x)g", true, static_cast<std::int64_t>(n) * m,
                  std::nullopt, ""};
    for (int x = 0; x < n && c.passed; ++x)
      for (int g = 0; g < m; ++g) {
        int lhs = r.nu[static_cast<std::size_t>(r.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)])];
        int rhs = r.group.mul(r.group.mul(r.group.inverse(g), r.nu[static_cast<std::size_t>(x)]), g);
        if (lhs != rhs) {
          c.passed = false;
          c.witness = Witness{x, r.labels[static_cast<std::size_t>(x)] + " with g=" + r.group.element(g),
                              r.group.element(lhs), r.group.element(rhs)};
          break;
        }
      }
    rep.add(std::move(c));
  }
  return rep;
}

FiniteRack induced_rack(const SetAugRack& r) {
  const int n = static_cast<int>(r.labels.size());
  FiniteRack out{"rack induced by " + r.name, n, square_table(n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          r.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(r.nu[static_cast<std::size_t>(y)])];
  return out;
}

SetAugRack conj_aug_rack(const GroupTable& g) {
  const int n = g.order();
  SetAugRack r{"set.conj(" + g.name() + ")", g, g.elements(), square_table(n), std::vector<int>(static_cast<std::size_t>(n))};
  r.action.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    r.nu[static_cast<std::size_t>(x)] = x;
    for (int a = 0; a < n; ++a)
      r.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] = g.mul(g.mul(g.inverse(a), x), a);
  }
  return r;
}

SetAugRack heap_aug_rack(const GroupTable& g) {
  const int n = g.order();
  const int nn = n * n;
  SetAugRack r{"set.heap(" + g.name() + ")", g, {}, {}, std::vector<int>(static_cast<std::size_t>(nn))};
  r.labels.reserve(static_cast<std::size_t>(nn));
  r.action.assign(static_cast<std::size_t>(nn), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = x * n + y;
      r.labels.push_back("(" + g.element(x) + "⊗" + g.element(y) + ")");
      r.nu[static_cast<std::size_t>(i)] = g.mul(g.inverse(x), y);
      for (int a = 0; a < n; ++a)
        r.action[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = g.mul(x, a) * n + g.mul(y, a);
    }
  return r;
}

SetAugRack adjoint_aug_rack(const GroupTable& g) {
  const int n = g.order();
  const int nn = n * n;
  SetAugRack r{"set.adjoint(" + g.name() + ")", g, {}, {}, std::vector<int>(static_cast<std::size_t>(nn))};
  r.labels.reserve(static_cast<std::size_t>(nn));
  r.action.assign(static_cast<std::size_t>(nn), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = x * n + y;
      r.labels.push_back("(" + g.element(x) + "⊗" + g.element(y) + ")");
      r.nu[static_cast<std::size_t>(i)] = g.mul(x, y);
      for (int a = 0; a < n; ++a) {
        const int ai = g.inverse(a);
        r.action[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
            g.mul(g.mul(ai, x), a) * n + g.mul(g.mul(ai, y), a);
      }
    }
  return r;
}

RackBuildResult linearize(const SetAugRack& r, const Field& field) {
  const int n = static_cast<int>(r.labels.size());
  const int m = r.group.order();
  HopfPtr h = group_algebra(r.group, field);
  BasedSpace X(r.labels);
  const Scalar one = field.one();

  std::vector<LinMap::Entry> delta, eps, act, nu;
  for (int x = 0; x < n; ++x) {
    delta.push_back({static_cast<std::int64_t>(x) * n + x, x, one});
    eps.push_back({0, x, one});
    nu.push_back({r.nu[static_cast<std::size_t>(x)], x, one});
    for (int g = 0; g < m; ++g)
      act.push_back({r.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)],
                     static_cast<std::int64_t>(x) * m + g, one});
  }
  Json desc;
  desc["kind"] = "linearized";
  desc["base"] = r.name;
  return make_augmented_rack(
      "linearized(" + r.name + ")",
      ModuleCoalgebra{X, LinMap(X, tensor(X, X), field, std::move(delta)),
                      LinMap(X, BasedSpace::unit(), field, std::move(eps)),
                      LinMap(tensor(X, h->space()), X, field, std::move(act)), h},
      LinMap(X, h->space(), field, std::move(nu)), std::move(desc));
}

Report oracle_compare(const SetAugRack& set_rack, const AugmentedRack& cat_rack) {
  const int n = static_cast<int>(set_rack.labels.size());
  const int m = set_rack.group.order();
  const Field& F = cat_rack.field();
  Report rep("oracle: " + set_rack.name + " vs " + cat_rack.name);

  {
    CheckResult c{"oracle.basis_labels", "carrier labels coincide with the categorical basis", true,
                  n, std::nullopt, ""};
    if (cat_rack.space().dim() != n) {
      c.passed = false;
      c.witness = Witness{-1, "carrier", std::to_string(n), std::to_string(cat_rack.space().dim())};
    } else {
      for (int i = 0; i < n; ++i)
        if (cat_rack.space().label(i) != set_rack.labels[static_cast<std::size_t>(i)]) {
          c.passed = false;
          c.witness = Witness{i, set_rack.labels[static_cast<std::size_t>(i)],
                              set_rack.labels[static_cast<std::size_t>(i)], cat_rack.space().label(i)};
          break;
        }
    }
    rep.add(std::move(c));
    if (!rep.all_passed()) return rep;
  }

  auto expect_single = [&](const SparseVec& got, std::int64_t want) {
    return got.size() == 1 && got[0].index == want && got[0].value.is_one();
  };

  {
    CheckResult c{"oracle.nu", "ν agrees on every basis element", true, n, std::nullopt, ""};
    for (int x = 0; x < n; ++x) {
      SparseVec got = cat_rack.nu.apply_basis(x);
      std::int64_t want = set_rack.nu[static_cast<std::size_t>(x)];
      if (!expect_single(got, want)) {
        c.passed = false;
        c.witness = Witness{x, set_rack.labels[static_cast<std::size_t>(x)],
                            set_rack.group.element(static_cast<int>(want)),
                            format_vec(got, cat_rack.hopf().space())};
        break;
      }
    }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"oracle.action", "the action agrees on every (x, g)", true,
                  static_cast<std::int64_t>(n) * m, std::nullopt, ""};
    for (int x = 0; x < n && c.passed; ++x)
      for (int g = 0; g < m; ++g) {
        SparseVec got = cat_rack.X.action.apply_basis(static_cast<std::int64_t>(x) * m + g);
        std::int64_t want = set_rack.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)];
        if (!expect_single(got, want)) {
          c.passed = false;
          c.witness = Witness{x, set_rack.labels[static_cast<std::size_t>(x)] + "·" + set_rack.group.element(g),
                              set_rack.labels[static_cast<std::size_t>(static_cast<int>(want))],
                              format_vec(got, cat_rack.space())};
          break;
        }
      }
    rep.add(std::move(c));
  }
  FiniteRack induced = induced_rack(set_rack);
  {
    LinMap q = sd_map(cat_rack);
    CheckResult c{"oracle.sd_map", "q agrees with x*y = x·ν(y) on every pair", true,
                  static_cast<std::int64_t>(n) * n, std::nullopt, ""};
    for (int x = 0; x < n && c.passed; ++x)
      for (int y = 0; y < n; ++y) {
        SparseVec got = q.apply_basis(static_cast<std::int64_t>(x) * n + y);
        std::int64_t want = induced.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        if (!expect_single(got, want)) {
          c.passed = false;
          c.witness = Witness{x,
                              set_rack.labels[static_cast<std::size_t>(x)] + " * " +
                                  set_rack.labels[static_cast<std::size_t>(y)],
                              set_rack.labels[static_cast<std::size_t>(static_cast<int>(want))],
                              format_vec(got, cat_rack.space())};
          break;
        }
      }
    rep.add(std::move(c));
  }
  {
    std::vector<LinMap::Entry> entries;
    const Scalar one = F.one();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        entries.push_back({static_cast<std::int64_t>(y) * n +
                               induced.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)],
                           static_cast<std::int64_t>(x) * n + y, one});
    LinMap set_r(tensor(cat_rack.space(), cat_rack.space()), tensor(cat_rack.space(), cat_rack.space()),
                 F, std::move(entries));
    YBOperator cat_r = r_matrix(cat_rack);
    CheckResult c{"oracle.r_matrix", "R agrees with (x,y) ↦ (y, x*y) as a full map", true,
                  static_cast<std::int64_t>(n) * n, std::nullopt, ""};
    if (cat_r.forward != set_r) {
      c.passed = false;
      Pipeline lhs, rhs;
      lhs.then(cat_r.forward);
      rhs.then(set_r);
      auto w = first_basis_mismatch(lhs, rhs, static_cast<std::int64_t>(n) * n, F);
      if (w)
        c.witness = Witness{w->index, cat_r.source.label(w->index), format_vec(w->rhs, cat_r.target),
                            format_vec(w->lhs, cat_r.target)};
    }
    rep.add(std::move(c));
  }
  return rep;
}

}  // namespace caryb
