#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gorcol/errors.hpp"

namespace gorcol {

/// A computation field: the rationals, or a prime field GF(p) with p fixed.
/// Value type; two Fields compare equal iff they denote the same field.
class Field {
 public:
  Field() = default;  // rationals
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);  // validates primality, p < 2^31

  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t modulus() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;  // 0 means rationals
};

/// An exact field element. Rational values are kept in canonical reduced
/// form with positive denominator (mpq invariant); prime-field values are
/// residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(long long n, const Field& f);
  static Scalar of_fraction(long long num, long long den, const Field& f);
  static Scalar of_rational(const mpq_class& q);  // rationals only

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Underlying rational value; throws unless the field is the rationals.
  const mpq_class& rational() const;
  /// Underlying residue; throws unless the field is a prime field.
  std::uint64_t residue() const;

  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field f_;
  mpq_class q_;           // used when f_ is the rationals
  std::uint64_t r_ = 0;   // used when f_ is a prime field
};

}  // namespace gorcol
