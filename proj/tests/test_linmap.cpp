#include <doctest.h>

#include <random>

#include "caryb/parallel.hpp"
#include "caryb/pipeline.hpp"

using namespace caryb;

namespace {

const Field F = Field::rationals();

BasedSpace make_space(int dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return BasedSpace(labels);
}

LinMap random_map(std::mt19937_64& rng, const BasedSpace& src, const BasedSpace& tgt) {
  std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
  std::vector<LinMap::Entry> e;
  for (std::int64_t c = 0; c < src.dim(); ++c)
    for (std::int64_t r = 0; r < tgt.dim(); ++r)
      if (coin(rng) == 0) e.push_back({r, c, Scalar::rational(val(rng))});
  return LinMap(src, tgt, F, std::move(e));
}

}  // namespace

TEST_CASE("based space invariants") {
  CHECK_THROWS_AS(BasedSpace({"a", "a"}), Error);
  BasedSpace a({"x", "y"});
  BasedSpace b({"u", "v", "w"});
  BasedSpace ab = tensor(a, b);
  CHECK(ab.dim() == 6);
  CHECK(ab.label(0) == "(x⊗u)");
  CHECK(ab.label(5) == "(y⊗w)");  // left factor varies slowest
}

TEST_CASE("identity and zero application") {
  BasedSpace s = make_space(3, "e");
  LinMap id = LinMap::identity(s, F);
  SparseVec e2 = basis_vec(2, F);
  CHECK(vec_equal(id.apply(e2), e2));
  LinMap z = LinMap::zero(s, s, F);
  CHECK(z.apply(e2).empty());
  CHECK(z.apply({{0, F.one()}, {1, Scalar::rational(5)}}).empty());
}

TEST_CASE("apply rejects out-of-range indices naming both dims") {
  BasedSpace s = make_space(3, "e");
  LinMap id = LinMap::identity(s, F);
  try {
    id.apply({{7, F.one()}});
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    CHECK(e.got == 7);
    CHECK(e.want == 3);
  }
}

TEST_CASE("compose requires matching inner dimensions") {
  LinMap f = LinMap::identity(make_space(3, "a"), F);
  LinMap g = LinMap::identity(make_space(4, "b"), F);
  CHECK_THROWS_AS(compose(f, g), DimensionError);
}

TEST_CASE("composition with identity and associativity") {
  std::mt19937_64 rng(7);
  BasedSpace a = make_space(3, "a"), b = make_space(4, "b"), c = make_space(2, "c"), d = make_space(3, "d");
  LinMap f = random_map(rng, b, a);
  CHECK(compose(f, LinMap::identity(b, F)) == f);
  CHECK(compose(LinMap::identity(a, F), f) == f);
  for (int i = 0; i < 25; ++i) {
    LinMap h = random_map(rng, d, c);
    LinMap g = random_map(rng, c, b);
    LinMap fm = random_map(rng, b, a);
    CHECK(compose(compose(fm, g), h) == compose(fm, compose(g, h)));
  }
}

TEST_CASE("apply through a composite equals chained applies") {
  std::mt19937_64 rng(11);
  BasedSpace a = make_space(4, "a"), b = make_space(3, "b"), c = make_space(4, "c");
  for (int i = 0; i < 25; ++i) {
    LinMap f = random_map(rng, b, a);
    LinMap g = random_map(rng, c, b);
    LinMap fg = compose(f, g);
    for (std::int64_t v = 0; v < c.dim(); ++v)
      CHECK(vec_equal(fg.apply_basis(v), f.apply(g.apply_basis(v))));
  }
}

// elementwise Kronecker oracle: (f⊗g)[(i,j),(k,l)] = f[i,k]·g[j,l]
TEST_CASE("tensor product matches the elementwise Kronecker oracle") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 10; ++iter) {
    BasedSpace a = make_space(2 + iter % 3, "a"), b = make_space(4, "b");
    BasedSpace c = make_space(3, "c"), d = make_space(2, "d");
    LinMap f = random_map(rng, a, b);  // a → b
    LinMap g = random_map(rng, c, d);  // c → d
    LinMap fg = tensor(f, g);
    CHECK(fg.source().dim() == a.dim() * c.dim());
    CHECK(fg.target().dim() == b.dim() * d.dim());
    for (std::int64_t i = 0; i < b.dim(); ++i)
      for (std::int64_t j = 0; j < d.dim(); ++j)
        for (std::int64_t k = 0; k < a.dim(); ++k)
          for (std::int64_t l = 0; l < c.dim(); ++l)
            CHECK(fg.entry(i * d.dim() + j, k * c.dim() + l) == f.entry(i, k) * g.entry(j, l));
  }
}

TEST_CASE("identity tensor identity is identity") {
  BasedSpace a = make_space(3, "a"), b = make_space(5, "b");
  CHECK(tensor(LinMap::identity(a, F), LinMap::identity(b, F)) ==
        LinMap::identity(tensor(a, b), F).with_spaces(tensor(a, b), tensor(a, b)));
}

TEST_CASE("Kronecker interchange law on random sparse maps") {
  std::mt19937_64 rng(17);
  BasedSpace a = make_space(3, "a"), b = make_space(2, "b"), c = make_space(4, "c");
  BasedSpace d = make_space(2, "d"), e = make_space(3, "e"), h = make_space(2, "h");
  for (int i = 0; i < 20; ++i) {
    LinMap f = random_map(rng, b, a);   // b → a
    LinMap fp = random_map(rng, c, b);  // c → b
    LinMap g = random_map(rng, e, d);   // e → d
    LinMap gp = random_map(rng, h, e);  // h → e
    CHECK(compose(tensor(f, g), tensor(fp, gp)) == tensor(compose(f, fp), compose(g, gp)));
  }
}

TEST_CASE("tensor is strictly associative under row-major indexing") {
  std::mt19937_64 rng(19);
  BasedSpace a = make_space(2, "a"), b = make_space(3, "b"), c = make_space(2, "c");
  LinMap f = random_map(rng, a, a), g = random_map(rng, b, b), h = random_map(rng, c, c);
  CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
}

TEST_CASE("transposition swaps basis factors") {
  BasedSpace a = make_space(2, "a"), b = make_space(3, "b");
  LinMap tau = transposition(a, b, F);
  // τ(e1⊗e2) = e2⊗e1
  SparseVec v = tau.apply_basis(1 * b.dim() + 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].index == 2 * a.dim() + 1);
  LinMap tau_back = transposition(b, a, F);
  CHECK(compose(tau_back, tau) == LinMap::identity(tensor(a, b), F));
  // τ on 1⊗n is numerically the identity
  BasedSpace unit = BasedSpace::unit();
  LinMap tau_unit = transposition(unit, b, F);
  CHECK(tau_unit.nnz() == 3);
  for (const auto& en : tau_unit.entries()) CHECK(en.row == en.col);
}

// permutation-group oracle: both sides must realize the permutation
// (1 3 2) → ... computed independently on indices
TEST_CASE("transposition satisfies the braid relation on dim-2 factors") {
  BasedSpace x = make_space(2, "x");
  BasedSpace xx = tensor(x, x), xxx = tensor(xx, x);
  LinMap tau = transposition(x, x, F);
  LinMap id = LinMap::identity(x, F);
  LinMap lhs = compose(tensor(tau, id), compose(tensor(id, tau), tensor(tau, id)));
  LinMap rhs = compose(tensor(id, tau), compose(tensor(tau, id), tensor(id, tau)));
  CHECK(lhs == rhs);
  auto oracle = [](std::int64_t i) {  // (a,b,c) ↦ (c,b,a): the half-twist of three strands
    std::int64_t a = i / 4, b = (i / 2) % 2, c = i % 2;
    return c * 4 + b * 2 + a;
  };
  for (std::int64_t i = 0; i < 8; ++i) {
    SparseVec v = lhs.apply_basis(i);
    REQUIRE(v.size() == 1);
    CHECK(v[0].index == oracle(i));
    CHECK(v[0].value.is_one());
  }
}

TEST_CASE("pipelines agree with materialized composites") {
  std::mt19937_64 rng(23);
  BasedSpace a = make_space(3, "a"), b = make_space(2, "b");
  LinMap f = random_map(rng, a, a), g = random_map(rng, b, b);
  LinMap fg = tensor(f, g);
  Pipeline p;
  p.then_tensor({map_factor(f), map_factor(g)});
  for (std::int64_t i = 0; i < 6; ++i) CHECK(vec_equal(p.apply_basis(i, F), fg.apply_basis(i)));

  Pipeline perm;
  perm.then_perm({{a.dim(), b.dim()}, {1, 0}});
  LinMap tau = transposition(a, b, F);
  for (std::int64_t i = 0; i < 6; ++i) CHECK(vec_equal(perm.apply_basis(i, F), tau.apply_basis(i)));

  LinMap mat = materialize(p, tensor(a, b), tensor(a, b), F);
  CHECK(mat == fg);
}

TEST_CASE("first_basis_mismatch finds the smallest witness") {
  BasedSpace s = make_space(5, "e");
  LinMap id = LinMap::identity(s, F);
  std::vector<LinMap::Entry> entries;
  for (std::int64_t i = 0; i < 5; ++i) entries.push_back({i, i, i == 3 ? Scalar::rational(2) : F.one()});
  LinMap almost(s, s, F, std::move(entries));
  Pipeline pl, pr;
  pl.then(id);
  pr.then(almost);
  auto w = first_basis_mismatch(pl, pr, 5, F);
  REQUIRE(w.has_value());
  CHECK(w->index == 3);
  CHECK(!first_basis_mismatch(pl, pl, 5, F).has_value());
}

TEST_CASE("parallel witness search still reports the smallest index") {
  const std::int64_t dim = 40000;
  std::vector<std::string> labels;
  for (std::int64_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  BasedSpace s(labels);
  std::vector<LinMap::Entry> entries;
  for (std::int64_t i = 0; i < dim; ++i)
    entries.push_back({i, i, (i == 17777 || i == 33333) ? Scalar::rational(2) : F.one()});
  LinMap almost(s, s, F, std::move(entries));
  LinMap ident = LinMap::identity(s, F);
  Pipeline pl, pr;
  pl.then(ident);
  pr.then(almost);
  set_thread_count(2);
  auto w = first_basis_mismatch(pl, pr, dim, F);
  set_thread_count(0);
  REQUIRE(w.has_value());
  CHECK(w->index == 17777);
}

TEST_CASE("linmap constructor merges duplicates and drops zeros") {
  BasedSpace s = make_space(2, "e");
  LinMap m(s, s, F,
           {{0, 0, Scalar::rational(1)}, {0, 0, Scalar::rational(-1)}, {1, 0, Scalar::rational(2)},
            {1, 0, Scalar::rational(3)}});
  REQUIRE(m.nnz() == 1);
  CHECK(m.entries()[0].value.str() == "5");
  CHECK_THROWS_AS(LinMap(s, s, F, {{5, 0, F.one()}}), DimensionError);
}
