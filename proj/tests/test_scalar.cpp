#include <doctest.h>

#include <random>

#include "caryb/scalar.hpp"

using namespace caryb;

TEST_CASE("rationals are stored normalized") {
  Scalar s = Scalar::rational(6, -4);
  CHECK(s.str() == "-3/2");
  CHECK(Scalar::rational(0, 7).str() == "0");
  CHECK(Scalar::rational(-14, -7).str() == "2");
  CHECK(Field::rationals().parse("35/-21").str() == "-5/3");
}

TEST_CASE("exact field laws, no tolerance anywhere") {
  Scalar a = Scalar::rational(22, 7);
  CHECK((a + (-a)).is_zero());
  CHECK((a * a.inverse()).is_one());
  CHECK((a - a).str() == "0");
  Scalar third = Scalar::rational(1, 3);
  CHECK((third + third + third).is_one());  // would fail for floats
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar::rational(1) / Scalar::rational(0), Error);
  CHECK_THROWS_AS(Scalar::rational(0).inverse(), Error);
}

TEST_CASE("mixed-field arithmetic is rejected") {
  CHECK_THROWS_AS(Scalar::rational(1) + Scalar::mod(1, 5), FieldMismatchError);
  CHECK_THROWS_AS(Scalar::mod(1, 5) * Scalar::mod(1, 7), FieldMismatchError);
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  Scalar a = f5.integer(3), b = f5.integer(4);
  CHECK((a + b).str() == "2");
  CHECK((a * b).str() == "2");
  CHECK((a - b).str() == "4");
  CHECK((a / b).str() == "2");  // 3 * 4^{-1} = 3 * 4 = 12 = 2
  CHECK((-a).str() == "2");
  for (std::uint64_t v = 1; v < 5; ++v) CHECK((Scalar::mod(v, 5) * Scalar::mod(v, 5).inverse()).is_one());
  CHECK_THROWS_AS(Field::prime(6), InputError);
  CHECK(f5.parse("7/3").str() == "4");  // 2 * 3^{-1} = 2 * 2 = 4
}

TEST_CASE("field name roundtrip") {
  CHECK(Field::parse_name("rational") == Field::rationals());
  CHECK(Field::parse_name("fp:7") == Field::prime(7));
  CHECK(Field::prime(7).name() == "fp:7");
  CHECK_THROWS_AS(Field::parse_name("float"), InputError);
}

// Cross-check the int64 fast path and its GMP overflow fallback against
// plain GMP arithmetic on values spanning both regimes.
TEST_CASE("scalar arithmetic agrees with GMP") {
  std::mt19937_64 rng(20240817);
  auto random_scalar = [&](bool huge) {
    std::int64_t bound = huge ? (std::int64_t{1} << 62) : 1000;
    std::uniform_int_distribution<std::int64_t> num(-bound, bound);
    std::uniform_int_distribution<std::int64_t> den(1, bound);
    long n = static_cast<long>(num(rng)), d = static_cast<long>(den(rng));
    return std::make_pair(Scalar::rational(n, d), mpq_class(mpz_class(n), mpz_class(d)));
  };
  for (int iter = 0; iter < 2000; ++iter) {
    auto [a, qa] = random_scalar(iter % 3 == 0);
    auto [b, qb] = random_scalar(iter % 2 == 0);
    qa.canonicalize();
    qb.canonicalize();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
    CHECK((a == b) == (qa == qb));
  }
}

TEST_CASE("parse and print are inverse on canonical strings") {
  Field f = Field::rationals();
  for (const char* s : {"0", "1", "-1", "3/2", "-22/7", "123456789123456789123456789/2"}) {
    CHECK(f.parse(s).str() == s);
  }
  CHECK_THROWS_AS(f.parse("1/0"), InputError);
  CHECK_THROWS_AS(f.parse("x"), InputError);
}

TEST_CASE("huge values survive the GMP fallback") {
  Field f = Field::rationals();
  Scalar big = f.parse("123456789123456789123456789");
  Scalar sum = f.zero();
  for (int i = 0; i < 10; ++i) sum += big;
  CHECK(sum.str() == "1234567891234567891234567890");
  CHECK((big * big).str() == "15241578780673678546105778281054720515622620750190521");
  CHECK((big - big).is_zero());
  CHECK((big / big).is_one());
}
