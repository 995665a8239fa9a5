#pragma once

#include <vector>

#include "gorcol/ideal.hpp"

namespace gorcol {

/// Macaulay inverse system of an Artinian graded quotient R = T/I: the
/// annihilator of I inside dual polynomials under contraction. The dual
/// degree-j piece is the orthogonal complement of the ideal's degree-j
/// slice, so dim(omega) = lambda(R).
class InverseSystem {
 public:
  static InverseSystem make(const QuotientView& ambient);

  const QuotientView& ambient() const;

  int top_degree() const;  // highest dual degree (= Max of the quotient)
  std::size_t dim() const;
  std::size_t dim_at(int j) const;

  /// Canonical basis of the dual degree-j piece; rows are coordinate
  /// vectors over the degree-j monomial basis read as dual monomials.
  const Echelon& dual_basis(int j) const;

  /// Contraction by variable k as a matrix from dual degree j into dual
  /// degree j - w_k coordinates (columns index the source basis).
  const DenseMatrix& contraction(std::size_t k, int j) const;

  struct DualElement {
    int degree;
    std::vector<Scalar> raw;  // coordinates over the dual monomial basis
  };
  /// Module generators of omega over R (Nakayama from the top degree down).
  const std::vector<DualElement>& module_generators() const;

  /// Raw contraction of a dual coordinate vector by variable k.
  std::vector<Scalar> contract_raw(int j, const std::vector<Scalar>& raw, std::size_t k) const;

  /// Coordinates of a raw dual vector in the canonical basis at degree j;
  /// throws InternalCheckError if the vector is not in the span.
  std::vector<Scalar> express(int j, const std::vector<Scalar>& raw) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Basis of Hom_R(omega, R) as a k-space, decomposed into graded pieces:
/// a map of degree e sends dual degree j into the degree (e - j) piece of R.
/// Each map is verified to commute with every variable action.
class HomBasis {
 public:
  static HomBasis make(const InverseSystem& omega);

  struct Map {
    int degree;                       // e
    std::vector<DenseMatrix> blocks;  // per dual degree j: dim omega_j x h(e - j)
  };

  const std::vector<Map>& maps() const;
  std::size_t dim() const;

  /// Image of a dual element under one map, lifted to a polynomial in T
  /// supported on standard monomials.
  Polynomial apply(const InverseSystem& omega, const Map& map,
                   const InverseSystem::DualElement& w) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Trace ideal omega*(omega) of the canonical module, reported as its
/// preimage in T (an ideal containing I), with a canonical minimal
/// generating set.
IdealHandle trace_ideal(const QuotientView& ambient);

bool is_gorenstein(const QuotientView& ambient);

/// Hilbert function is extremal in every degree given the embedding
/// dimension and socle degree.
bool is_compressed(const QuotientView& ambient);

}  // namespace gorcol
