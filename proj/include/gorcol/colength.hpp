#pragma once

#include <optional>

#include "gorcol/inverse_system.hpp"

namespace gorcol {

/// Sum of the variables, the linear form every witness colon divides by.
Polynomial linear_form_sum(const RingPtr& ring);

struct WitnessResult {
  IdealHandle ideal;  // C = (X1^n, ..., Xd^n) : l^s
  QuotientView view;  // T/C
  bool gorenstein = false;
  bool inside_mn = false;  // C contained in m^n
  int max_degree = 0;      // Max(T/C), always d(n-1) - s
  std::size_t length = 0;
};

/// Witness colon ideal for the Gorenstein cover construction. Throws
/// DegenerateWitnessError when l^s already lies in the complete
/// intersection.
WitnessResult witness_ideal(std::size_t d, int n, int s, const Field& field);
/// Same construction inside a caller-supplied standard-graded ring.
WitnessResult witness_ideal(const RingPtr& ring, int n, int s);

struct RrrResult {
  int min_degree = 0;          // least degree of a nonzero f with l^m f = 0
  bool l_power_vanishes = false;
  int bound_ceil = 0;          // ceil((t - m + 1) / 2)
  bool bound_holds = false;
};

/// Per-degree kernel scan for the least degree annihilated by l^m in
/// T/(X1^{n1}, ..., Xd^{nd}).
RrrResult rrr_min_degree(const std::vector<int>& n_tuple, int m, const Field& field);

struct ColengthBounds {
  std::size_t lower = 0;  // lambda(R / trace of the canonical module)
  std::size_t upper = 0;
  bool certified = false;  // lower == upper pins the Gorenstein colength
};

/// Bounds on the Gorenstein colength of R. A supplied witness must define
/// a Gorenstein quotient and sit inside the defining ideal, otherwise
/// WitnessRejectedError; without a witness the trivial upper bound
/// lambda(R) is reported.
ColengthBounds colength_bounds(const QuotientView& ambient,
                               const std::optional<IdealHandle>& witness);

}  // namespace gorcol
