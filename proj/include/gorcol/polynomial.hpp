#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gorcol/ring.hpp"

namespace gorcol {

/// Term order for polynomial storage: weighted degree ascending, then
/// lexicographic descending (X1-heaviest first within a degree).
struct TermOrder {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = ring->wdeg(a), db = ring->wdeg(b);
    if (da != db) return da < db;
    return Monomial::lex_greater(a, b);
  }
};

/// Finite map monomial -> nonzero scalar over an exact field.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, TermOrder>;

  explicit Polynomial(RingPtr ring);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);
  static Polynomial monomial(RingPtr ring, const Monomial& m);  // coefficient 1
  static Polynomial constant(RingPtr ring, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Weighted degree when all terms share one; nullopt when inhomogeneous.
  /// The zero polynomial reports degree 0.
  std::optional<int> homogeneous_wdeg() const;
  bool is_homogeneous() const { return homogeneous_wdeg().has_value(); }

  Scalar coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned n) const;

  bool operator==(const Polynomial& o) const;

  /// Coefficient vector in ring.basis(wdeg); requires the polynomial to be
  /// homogeneous of that degree (or zero).
  std::vector<Scalar> coords(int wdeg) const;
  static Polynomial from_coords(RingPtr ring, int wdeg, const std::vector<Scalar>& coords);

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  RingPtr ring_;
  TermMap terms_;
};

}  // namespace gorcol
