#include "gorcol/polynomial.hpp"

#include <sstream>

#include "gorcol/errors.hpp"

namespace gorcol {

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)), terms_(TermOrder{ring_.get()}) {}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (c.field() != p.ring_->field())
    throw FieldMismatchError("coefficient from a different field context");
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m) {
  const Field f = ring->field();
  return monomial(std::move(ring), m, Scalar::one(f));
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  const Monomial one = ring->one();
  return monomial(std::move(ring), one, c);
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != ring_->nvars()) throw DimensionError("monomial does not fit ring");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> Polynomial::homogeneous_wdeg() const {
  if (terms_.empty()) return 0;
  int d = ring_->wdeg(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (ring_->wdeg(m) != d) return std::nullopt;
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(ring_->field()) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_->same_ring(*o.ring_)) throw RingMismatchError("polynomials from different rings");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(ring_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t.times(m), c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!ring_->same_ring(*o.ring_)) throw RingMismatchError("polynomials from different rings");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_)
    for (const auto& [n, d] : o.terms_) r.add_term(m.times(n), c * d);
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(ring_, Scalar::one(ring_->field()));
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_ring(*o.ring_)) throw RingMismatchError("polynomials from different rings");
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

std::vector<Scalar> Polynomial::coords(int wdeg) const {
  std::vector<Scalar> v(ring_->dim(wdeg), Scalar::zero(ring_->field()));
  for (const auto& [m, c] : terms_) {
    if (ring_->wdeg(m) != wdeg)
      throw InhomogeneousError("polynomial is not homogeneous of degree " + std::to_string(wdeg));
    v[ring_->index_of(wdeg, m)] = c;
  }
  return v;
}

Polynomial Polynomial::from_coords(RingPtr ring, int wdeg, const std::vector<Scalar>& coords) {
  const auto& basis = ring->basis(wdeg);
  if (coords.size() != basis.size()) throw DimensionError("coordinate vector has wrong length");
  Polynomial p(ring);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) p.terms_.emplace(basis[i], coords[i]);
  }
  return p;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    bool negative = false;
    if (!ring_->field().is_prime_field() && sgn(c.rational()) < 0) {
      negative = true;
      coeff = -c;
    }
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    bool has_vars = m.total_degree() > 0;
    if (!coeff.is_one() || !has_vars) {
      out << coeff.str();
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (std::size_t j = 0; j < m.nvars(); ++j) {
      if (m[j] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << ring_->var_name(j);
      if (m[j] > 1) out << "^" << m[j];
    }
  }
  return out.str();
}

}  // namespace gorcol
