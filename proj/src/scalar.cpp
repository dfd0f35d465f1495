#include "hopfind/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "hopfind/error.hpp"

namespace hopfind {

namespace {

using i128 = __int128;

constexpr i128 kI64Max = std::numeric_limits<std::int64_t>::max();
constexpr i128 kI64Min = std::numeric_limits<std::int64_t>::min();

bool fitsI64(i128 v) { return v <= kI64Max && v > kI64Min; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t modPow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

bool isPrimeNumber(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

mpq_class mpqFromI64(std::int64_t n) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
  return mpq_class(z);
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31U) || !isPrimeNumber(p)) {
    throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return fromInt(0); }
Scalar Field::one() const { return fromInt(1); }

Scalar Field::fromInt(std::int64_t n) const {
  if (p_ == 0) return Scalar(n);
  return Scalar::modular(n, p_);
}

Scalar Field::parse(std::string_view text) const {
  auto parseInt = [&](std::string_view part) -> mpz_class {
    std::string s(part);
    if (s.empty()) throw InputError("empty scalar literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InputError("malformed scalar literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InputError("malformed scalar literal '" + std::string(text) + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  };
  std::size_t slash = text.find('/');
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parseInt(text));
  } else {
    mpz_class num = parseInt(text.substr(0, slash));
    mpz_class den = parseInt(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(num, den);
    q.canonicalize();
  }
  return coerce(Scalar::fromMpq(q));
}

Scalar Field::coerce(const Scalar& s) const {
  if (p_ == 0) {
    if (s.isModular()) throw ShapeError("cannot map an F_p element into Q");
    return s;
  }
  if (s.isModular()) {
    if (s.modulus() != p_) throw ShapeError("scalars from different prime fields");
    return s;
  }
  return Scalar::modular(static_cast<std::int64_t>(s.residue(p_)), p_);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

// ---------------------------------------------------------------- Scalar

Scalar Scalar::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (fitsI64(n) && fitsI64(d)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  mpq_class q(mpqFromI64(num) / mpqFromI64(den));
  return normalizeBig(q);
}

Scalar Scalar::fromMpq(const mpq_class& q) { return normalizeBig(q); }

Scalar Scalar::modular(std::int64_t value, std::uint32_t p) {
  Scalar s;
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  s.num_ = r;
  s.p_ = p;
  return s;
}

Scalar Scalar::normalizeBig(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    long nv = mpz_get_si(n.get_mpz_t());
    long dv = mpz_get_si(d.get_mpz_t());
    if (nv != std::numeric_limits<long>::min()) {
      Scalar s;
      s.num_ = nv;
      s.den_ = dv;
      return s;
    }
  }
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  s.num_ = 1;  // marks non-zero
  return s;
}

mpq_class Scalar::toMpq() const {
  if (big_) return *big_;
  return mpq_class(mpqFromI64(num_) / mpqFromI64(den_));
}

std::uint64_t Scalar::residue(std::uint32_t p) const {
  if (p_ != 0) return static_cast<std::uint64_t>(num_);
  if (big_) {
    mpz_class n = big_->get_num() % p;
    mpz_class d = big_->get_den() % p;
    if (n < 0) n += p;
    if (d == 0) throw ShapeError("denominator not invertible in F_" + std::to_string(p));
    std::uint64_t nv = n.get_ui();
    std::uint64_t dv = d.get_ui();
    return nv * modPow(dv, p - 2, p) % p;
  }
  std::int64_t n = num_ % static_cast<std::int64_t>(p);
  if (n < 0) n += p;
  std::uint64_t d = static_cast<std::uint64_t>(den_) % p;
  if (d == 0) throw ShapeError("denominator not invertible in F_" + std::to_string(p));
  return static_cast<std::uint64_t>(n) * modPow(d, p - 2, p) % p;
}

Scalar Scalar::operator-() const {
  if (p_ != 0) return modular(num_ == 0 ? 0 : static_cast<std::int64_t>(p_) - num_, p_);
  if (big_) return normalizeBig(-*big_);
  if (num_ == std::numeric_limits<std::int64_t>::min()) return normalizeBig(-toMpq());
  Scalar s = *this;
  s.num_ = -num_;
  return s;
}

Scalar Scalar::inverse() const {
  if (isZero()) throw std::domain_error("inverse of zero");
  if (p_ != 0) {
    return modular(static_cast<std::int64_t>(modPow(static_cast<std::uint64_t>(num_), p_ - 2, p_)), p_);
  }
  if (big_) return normalizeBig(1 / *big_);
  return fraction(den_, num_);
}

Scalar Scalar::addRational(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
        return Scalar(r);
      }
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fitsI64(n) && fitsI64(d)) {
      Scalar s;
      s.num_ = static_cast<std::int64_t>(n);
      s.den_ = static_cast<std::int64_t>(d);
      return s;
    }
  }
  return normalizeBig(a.toMpq() + b.toMpq());
}

Scalar Scalar::mulRational(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar();
    i128 n1 = a.num_;
    i128 d1 = a.den_;
    i128 n2 = b.num_;
    i128 d2 = b.den_;
    if (d1 != 1 || d2 != 1) {
      i128 g1 = gcd128(n1, d2);
      i128 g2 = gcd128(n2, d1);
      n1 /= g1;
      d2 /= g1;
      n2 /= g2;
      d1 /= g2;
    }
    i128 n = n1 * n2;
    i128 d = d1 * d2;
    if (fitsI64(n) && fitsI64(d)) {
      Scalar s;
      s.num_ = static_cast<std::int64_t>(n);
      s.den_ = static_cast<std::int64_t>(d);
      return s;
    }
  }
  return normalizeBig(a.toMpq() * b.toMpq());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.p_ == 0 && b.p_ == 0) return Scalar::addRational(a, b);
  std::uint32_t p = a.p_ != 0 ? a.p_ : b.p_;
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw ShapeError("scalars from different prime fields");
  std::uint64_t r = (a.residue(p) + b.residue(p)) % p;
  return Scalar::modular(static_cast<std::int64_t>(r), p);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (b.isZero()) return a;
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.p_ == 0 && b.p_ == 0) return Scalar::mulRational(a, b);
  std::uint32_t p = a.p_ != 0 ? a.p_ : b.p_;
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw ShapeError("scalars from different prime fields");
  std::uint64_t r = a.residue(p) * b.residue(p) % p;
  return Scalar::modular(static_cast<std::int64_t>(r), p);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.p_ == 0 && a.p_ != 0) return a * Scalar::modular(static_cast<std::int64_t>(b.residue(a.p_)), a.p_).inverse();
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == 0 && b.p_ == 0) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
    return *a.big_ == *b.big_;
  }
  std::uint32_t p = a.p_ != 0 ? a.p_ : b.p_;
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) return false;
  return a.residue(p) == b.residue(p);
}

std::string Scalar::toString() const {
  if (p_ != 0) return std::to_string(num_);
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.toString(); }

}  // namespace hopfind
