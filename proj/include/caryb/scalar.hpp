#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "caryb/error.hpp"

namespace caryb {

class Scalar;

// Coefficient field of a session: exact rationals (the default) or a prime
// field F_p. Every scalar created through a Field carries the field's
// characteristic, so mixed-field arithmetic is detected at run time.
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long n) const;

  // Accepts "n" or "n/d" (arbitrary precision). In F_p mode d must be
  // invertible mod p.
  Scalar parse(const std::string& text) const;

  // "rational" or "fp:<p>"; the inverse of parse_name.
  std::string name() const;
  static Field parse_name(const std::string& name);

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;  // 0 = rationals
};

// An exact field element. Rationals are stored as a normalized int64
// numerator/denominator pair when they fit, with a shared arbitrary-precision
// GMP value as overflow fallback. Prime-field elements are residues mod p.
// Values are immutable in spirit: all operations return fresh scalars, and
// the big representation is shared on copy.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(long num, long den = 1);
  static Scalar rational(const mpq_class& v);
  static Scalar mod(std::uint64_t value, std::uint64_t p);

  bool is_zero() const;
  bool is_one() const;
  std::uint64_t characteristic() const { return p_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws Error on division by zero
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text form: "3", "-1/2", or the residue for F_p. parse is
  // Field::parse.
  std::string str() const;

  // Exact rational value (rational mode only).
  mpq_class to_mpq() const;

 private:
  friend class Field;

  // Small path invariants: den_ > 0, gcd(|num_|, den_) == 1, big_ == nullptr.
  // Prime-field path: p_ != 0, num_ holds the residue in [0, p), den_ == 1.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
  std::uint64_t p_ = 0;

  static Scalar from_mpq(mpq_class v);
  static Scalar small(std::int64_t num, std::int64_t den);
  void check_same_field(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace caryb
