#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gorcol/matrix.hpp"
#include "gorcol/polynomial.hpp"

namespace gorcol {

/// Homogeneous ideal inside a degree-truncated graded polynomial ring.
/// A handle owns a generator list and a write-once cache of per-degree
/// row spaces (canonical echelon bases in the fixed monomial order).
/// Copies share the cache.
class IdealHandle {
 public:
  static IdealHandle make(RingPtr ring, std::vector<Polynomial> gens, int degree_bound);

  const RingPtr& ring() const;
  const std::vector<Polynomial>& generators() const;
  int degree_bound() const;
  bool is_zero() const;

  /// Same generators under a different truncation bound (fresh cache).
  IdealHandle with_bound(int bound) const;

  /// Canonical echelon basis of the degree-i piece. Throws DegreeBoundError
  /// above the bound.
  const Echelon& slice(int i) const;
  std::size_t slice_rank(int i) const { return slice(i).rank(); }
  bool slice_full(int i) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Hilbert function, standard monomials and reduction data for T/I up to
/// the handle's degree bound. If the quotient cannot be certified Artinian
/// within the bound, the view carries an explicit truncation marker and
/// length/max_degree refuse to answer.
class QuotientView {
 public:
  static QuotientView make(const IdealHandle& ideal);

  const IdealHandle& ideal() const;
  const RingPtr& ring() const;

  bool truncated() const;
  std::size_t h(int i) const;
  /// Hilbert values h(0..max nonzero degree); empty for the zero ring.
  const std::vector<std::size_t>& hilbert() const;
  std::size_t length() const;  // throws TruncationError when truncated
  int max_degree() const;      // Max(S); throws when truncated or zero ring

  const std::vector<Monomial>& std_monomials(int i) const;

  /// Coordinates of f modulo I in the standard-monomial basis of deg(f).
  std::vector<Scalar> reduce(const Polynomial& f) const;
  std::vector<Scalar> reduce_full(int wdeg, std::vector<Scalar> full_coords) const;

  /// Matrix of multiplication by variable j from the degree-i standard
  /// basis into the degree-(i + w_j) one; rows index the target basis.
  const DenseMatrix& var_mult(std::size_t j, int i) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// --- constructors for common ideals ---

IdealHandle zero_ideal(RingPtr ring, int bound);
IdealHandle unit_ideal(RingPtr ring, int bound);
IdealHandle monomial_ideal(RingPtr ring, const std::vector<Monomial>& gens, int bound);
IdealHandle maximal_ideal(RingPtr ring, int bound);
/// (X1,...,Xd)^n, generated by all exponent tuples of total degree n.
IdealHandle power_of_maximal(RingPtr ring, int n, int bound);
/// The complete intersection (X1^{n1}, ..., Xd^{nd}).
IdealHandle pure_power_ideal(RingPtr ring, const std::vector<int>& powers, int bound);
IdealHandle principal_ideal(const Polynomial& f, int bound);

/// Default truncation bound for quotient work over ideals generated in
/// degree <= n: covers the top degree of the pure-power intersection
/// plus slack for colon stabilization.
int default_bound(std::size_t d, int max_gen_degree);

// --- operations ---

QuotientView quotient_view(const IdealHandle& ideal);

bool is_unit_ideal(const IdealHandle& ideal);

/// True iff f (homogeneous) lies in I. The zero polynomial is in every ideal.
bool membership(const Polynomial& f, const IdealHandle& ideal);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_power(const IdealHandle& a, int n);

/// (I : J), computed per degree as the kernel of multiplication into T/I,
/// returned with a minimal homogeneous generating set. Completion is
/// certified by max_weight consecutive full slices of the result within
/// the bound, otherwise TruncationError. Colon by the unit ideal is
/// rejected.
IdealHandle colon(const IdealHandle& ideal, const IdealHandle& by, int bound);
IdealHandle colon(const IdealHandle& ideal, const IdealHandle& by);

struct SocleInfo {
  std::size_t dim = 0;
  std::vector<Polynomial> basis;          // reduced representatives in T
  std::vector<std::size_t> per_degree;    // dim of the degree-i socle piece
};

/// Socle (I : m)/I of the Artinian quotient T/I.
SocleInfo socle(const IdealHandle& ideal);

/// Smallest degree with a nonzero slice. Throws ZeroIdealError on the zero
/// ideal.
int order_of(const IdealHandle& ideal);

/// Minimal number of homogeneous generators (graded Nakayama).
std::size_t min_generators(const IdealHandle& ideal);

/// Canonical minimal homogeneous generating set for the same ideal.
IdealHandle minimalize(const IdealHandle& ideal, int bound);

/// Slice-by-slice equality up to certified stabilization (both ideals must
/// become cofinite within the common bound, else TruncationError).
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

}  // namespace gorcol
