#include "caryb/scalar.hpp"

#include <numeric>
#include <ostream>

namespace caryb {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pos(std::int64_t v, std::uint64_t p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(m);
}

// Inverse mod p via extended Euclid; p prime, a != 0 mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

bool fits_i64(const mpz_class& z) {
  return z.fits_slong_p();  // long == int64 on this platform
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw InputError("F_p requires a prime p, got " + std::to_string(p));
  if (p >= (1ull << 31)) throw InputError("F_p supports p < 2^31, got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return p_ ? Scalar::mod(0, p_) : Scalar(); }
Scalar Field::one() const { return p_ ? Scalar::mod(1, p_) : Scalar::rational(1); }

Scalar Field::integer(long n) const {
  return p_ ? Scalar::mod(mod_pos(n, p_), p_) : Scalar::rational(n);
}

Scalar Field::parse(const std::string& text) const {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw InputError("cannot parse scalar '" + text + "'");
  if (d == 0) throw InputError("zero denominator in scalar '" + text + "'");
  if (p_ == 0) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar::rational(q);
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class nn = ((n % p) + p) % p, dd = ((d % p) + p) % p;
  if (dd == 0) throw InputError("denominator of '" + text + "' is 0 mod " + std::to_string(p_));
  std::uint64_t r = nn.get_ui() * inv_mod(dd.get_ui(), p_) % p_;
  return Scalar::mod(r, p_);
}

std::string Field::name() const { return p_ ? "fp:" + std::to_string(p_) : "rational"; }

Field Field::parse_name(const std::string& name) {
  if (name == "rational" || name == "q") return rationals();
  if (name.rfind("fp:", 0) == 0) {
    try {
      return prime(std::stoull(name.substr(3)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw InputError("unknown scalar mode '" + name + "' (expected 'rational' or 'fp:<p>')");
}

Scalar Scalar::small(std::int64_t num, std::int64_t den) {
  Scalar s;
  s.num_ = num;
  s.den_ = den;
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  mpq_class q(num, den);  // handles INT64_MIN corner cases
  q.canonicalize();
  return from_mpq(std::move(q));
}

Scalar Scalar::rational(const mpq_class& v) {
  mpq_class q = v;
  q.canonicalize();
  return from_mpq(std::move(q));
}

Scalar Scalar::mod(std::uint64_t value, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  s.num_ = static_cast<std::int64_t>(value % p);
  return s;
}

Scalar Scalar::from_mpq(mpq_class v) {
  if (fits_i64(v.get_num()) && fits_i64(v.get_den()))
    return small(v.get_num().get_si(), v.get_den().get_si());
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(v));
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (p_) throw Error("to_mpq on a prime-field scalar");
  if (big_) return *big_;
  return mpq_class(mpz_class(num_), mpz_class(den_));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_)
    throw FieldMismatchError("scalar field mismatch: " + (p_ ? "fp:" + std::to_string(p_) : "rational") +
                             " vs " + (o.p_ ? "fp:" + std::to_string(o.p_) : "rational"));
}

bool Scalar::is_zero() const { return !big_ && num_ == 0; }

bool Scalar::is_one() const {
  if (big_) return false;  // a big value never equals 1 (it would have been demoted)
  return num_ == 1 && den_ == 1;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
  return to_mpq() == o.to_mpq();  // both normalized, so value comparison
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (p_) return mod(static_cast<std::uint64_t>(num_ + o.num_) % p_, p_);
  if (!big_ && !o.big_) {
    std::int64_t ad, bc, n, d;
    if (!__builtin_mul_overflow(num_, o.den_, &ad) && !__builtin_mul_overflow(o.num_, den_, &bc) &&
        !__builtin_add_overflow(ad, bc, &n) && !__builtin_mul_overflow(den_, o.den_, &d) &&
        n != INT64_MIN) {
      if (n == 0) return Scalar();
      std::int64_t g = std::gcd(n < 0 ? -n : n, d);
      return small(n / g, d / g);
    }
  }
  return from_mpq(to_mpq() + o.to_mpq());
}

Scalar Scalar::operator-() const {
  if (p_) return num_ == 0 ? *this : mod(p_ - static_cast<std::uint64_t>(num_), p_);
  if (!big_ && num_ != INT64_MIN) return small(-num_, den_);
  return from_mpq(-to_mpq());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (p_)
    return mod(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_) % p_, p_);
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) return Scalar();
    // cross-reduce so normalized inputs yield a normalized product
    std::int64_t a = num_, b = den_, c = o.num_, d = o.den_;
    if (a != INT64_MIN && c != INT64_MIN) {
      std::int64_t g1 = std::gcd(a < 0 ? -a : a, d);
      std::int64_t g2 = std::gcd(c < 0 ? -c : c, b);
      a /= g1;
      d /= g1;
      c /= g2;
      b /= g2;
      std::int64_t n, dd;
      if (!__builtin_mul_overflow(a, c, &n) && !__builtin_mul_overflow(b, d, &dd))
        return small(n, dd);
    }
  }
  return from_mpq(to_mpq() * o.to_mpq());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (p_) return mod(inv_mod(static_cast<std::uint64_t>(num_), p_), p_);
  if (!big_ && num_ != INT64_MIN)
    return num_ > 0 ? small(den_, num_) : small(-den_, -num_);
  return from_mpq(mpq_class(1) / to_mpq());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::string Scalar::str() const {
  if (p_) return std::to_string(num_);
  if (big_) return big_->get_str();
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace caryb
