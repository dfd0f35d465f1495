#ifndef HOPFIND_SCALAR_HPP
#define HOPFIND_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfind {

class Scalar;

/// Ground field: either the rationals or a prime field F_p (p < 2^31).
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool isPrime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar fromInt(std::int64_t n) const;
  /// Parses "a", "-a" or "a/b"; the result lives in this field.
  Scalar parse(std::string_view text) const;
  /// Maps a field-neutral value (integer or rational) into this field.
  Scalar coerce(const Scalar& s) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact element of Q or of F_p.
///
/// Rationals are kept as reduced int64 fractions and promoted to GMP
/// rationals on overflow. Modular values carry their modulus; a rational
/// combined with a modular value is mapped into F_p first (its
/// denominator must be invertible there). Integer literals are therefore
/// usable in either field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t n) : num_(n) {}  // NOLINT: literals are field-neutral
  Scalar(int n) : num_(n) {}           // NOLINT

  static Scalar fraction(std::int64_t num, std::int64_t den);
  static Scalar fromMpq(const mpq_class& q);
  static Scalar modular(std::int64_t value, std::uint32_t p);

  bool isZero() const { return big_ == nullptr && num_ == 0; }
  bool isOne() const { return big_ == nullptr && num_ == 1 && den_ == 1; }
  bool isModular() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "a" or "a/b" for rationals, the canonical residue for F_p.
  std::string toString() const;
  /// Exact rational value; for modular scalars, the residue in [0, p).
  mpq_class toMpq() const;

 private:
  friend class Field;

  static Scalar normalizeBig(mpq_class q);
  static Scalar addRational(const Scalar& a, const Scalar& b);
  static Scalar mulRational(const Scalar& a, const Scalar& b);
  std::uint64_t residue(std::uint32_t p) const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t p_ = 0;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfind

#endif  // HOPFIND_SCALAR_HPP
