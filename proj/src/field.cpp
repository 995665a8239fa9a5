#include "gorcol/field.hpp"

namespace gorcol {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw ArithmeticError("element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw ArithmeticError("prime modulus must be < 2^31");
  if (!is_prime_u64(p)) throw ArithmeticError("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::uint64_t Field::modulus() const {
  if (p_ == 0) throw FieldMismatchError("rational field has no modulus");
  return p_;
}

std::string Field::str() const {
  return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.f_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return of_int(1, f); }

Scalar Scalar::of_int(long long n, const Field& f) {
  Scalar s;
  s.f_ = f;
  if (f.is_prime_field()) {
    std::int64_t p = static_cast<std::int64_t>(f.modulus());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  } else {
    s.q_ = mpq_class(static_cast<long>(n));
  }
  return s;
}

Scalar Scalar::of_fraction(long long num, long long den, const Field& f) {
  if (den == 0) throw ArithmeticError("zero denominator");
  if (f.is_prime_field()) {
    return of_int(num, f) / of_int(den, f);
  }
  Scalar s;
  s.f_ = f;
  s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::of_rational(const mpq_class& q) {
  Scalar s;
  s.q_ = q;
  return s;
}

bool Scalar::is_zero() const {
  return f_.is_prime_field() ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const {
  return f_.is_prime_field() ? r_ == 1 : q_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (f_ != o.f_)
    throw FieldMismatchError("mixed field contexts: " + f_.str() + " vs " + o.f_.str());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (f_.is_prime_field()) {
    s.r_ = r_ == 0 ? 0 : f_.modulus() - r_;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (f_.is_prime_field()) {
    s.r_ = r_ + o.r_;
    if (s.r_ >= f_.modulus()) s.r_ -= f_.modulus();
  } else {
    s.q_ = q_ + o.q_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (f_.is_prime_field()) {
    s.r_ = (r_ * o.r_) % f_.modulus();  // p < 2^31 keeps the product in range
  } else {
    s.q_ = q_ * o.q_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  Scalar s = *this;
  if (f_.is_prime_field()) {
    s.r_ = mod_inverse(r_, f_.modulus());
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return f_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

const mpq_class& Scalar::rational() const {
  if (f_.is_prime_field()) throw FieldMismatchError("prime-field scalar has no rational value");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (!f_.is_prime_field()) throw FieldMismatchError("rational scalar has no residue");
  return r_;
}

std::string Scalar::str() const {
  return f_.is_prime_field() ? std::to_string(r_) : q_.get_str();
}

}  // namespace gorcol
