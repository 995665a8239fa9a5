#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gorcol {

/// m-primary monomial ideal in two variables, kept as the minimal
/// generator antichain sorted by x-exponent (so y-exponents strictly
/// decrease). m-primary means pure powers of both variables appear.
class MonomialIdeal2 {
 public:
  static MonomialIdeal2 make(std::vector<std::pair<int, int>> gens);

  const std::vector<std::pair<int, int>>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  int order() const;   // min total degree of a generator
  int pure_x() const;  // a with x^a a generator
  int pure_y() const;  // b with y^b a generator

  bool contains(int x, int y) const;

  /// Staircase height over column x: least b with (x, b) in the ideal.
  std::vector<int> heights() const;

  long long colength() const;  // lattice points under the staircase

  /// lambda((I : m) / I), counted directly from the staircase corners.
  long long socle_dimension() const;

  MonomialIdeal2 product(const MonomialIdeal2& o) const;
  MonomialIdeal2 power(int k) const;

  bool operator==(const MonomialIdeal2& o) const { return gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal2& o) const { return gens_ != o.gens_; }

  std::string str() const;

 private:
  std::vector<std::pair<int, int>> gens_;
};

/// Lower boundary of the exponent polyhedron. Vertices are the generator
/// points lying on the boundary (collinear ones kept), ordered from the
/// x-axis vertex to the y-axis vertex; complement_area is the exact area
/// between the boundary and the axes.
struct NewtonPolygon {
  std::vector<std::pair<int, int>> vertices;
  mpq_class complement_area;
};

NewtonPolygon newton_polygon(const MonomialIdeal2& ideal);

/// Smallest integrally closed monomial ideal containing the input: all
/// lattice points on or above the Newton boundary. Idempotent.
MonomialIdeal2 integral_closure(const MonomialIdeal2& ideal);

struct Codim2Invariants {
  int ord = 0;
  std::size_t mu = 0;
  long long colength = 0;
  long long closure_colength = 0;
  bool integrally_closed = false;
};

Codim2Invariants invariants(const MonomialIdeal2& ideal);

/// Orders of the transforms at the torus-fixed infinitely near base
/// points, gathered by the two-chart blowup recursion. charts[i] is the
/// chart path ("" for the root, then 'x'/'y' letters).
struct BasePointTree {
  std::vector<int> orders;
  std::vector<std::string> charts;
};

BasePointTree base_point_tree(const MonomialIdeal2& ideal);

/// Sum of ord(ord+1)/2 over the base-point tree; cross-checked against the
/// lattice-point count of the integral closure (InternalCheckError on
/// mismatch).
long long hd_length(const MonomialIdeal2& ideal);

/// Sum of squared orders over the tree; cross-checked against twice the
/// Newton complement area.
long long multiplicity(const MonomialIdeal2& ideal);

struct ReductionResult {
  std::vector<long long> f_coeffs;  // coefficients against generators()
  std::vector<long long> g_coeffs;
  int r = -1;                // I^(r+1) = (f,g) I^r
  long long ci_colength = 0; // lambda(T/(f,g))
  int attempts = 1;
};

/// Seeded random two-generated reduction of the ideal, verified by exact
/// certified linear algebra in truncated quotients; also checks
/// lambda(T/(f,g)) = multiplicity. Throws ReductionFailureError after the
/// retry budget.
ReductionResult minimal_reduction(const MonomialIdeal2& ideal, std::uint64_t seed);

struct Codim2Report {
  long long e0 = 0;
  long long lambda = 0;
  long long lambda_closure = 0;
  int ord = 0, ord_closure = 0;
  std::size_t mu = 0, mu_closure = 0;
  long long socle_dim = 0;
  int reduction_r = -1;
  long long ci_colength = 0;
  bool ineq_mult_ord = false;    // e0 + ord(closure) <= 2 lambda(closure)
  bool ineq_mult_socle = false;  // e0 + mu - 1 <= 2 lambda
  bool colength_within_socle_bound = false;  // lambda(S)-lambda(R) <= lambda(R)-socle
  bool tree_single_node = false;
  bool mult_ord_tight = false;   // e0 + ord = 2 lambda(closure)
};

/// Multiplicity, order and socle inequalities together with the verified
/// reduction colength for one ideal.
Codim2Report colength_report(const MonomialIdeal2& ideal, std::uint64_t seed);

}  // namespace gorcol
