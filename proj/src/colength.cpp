#include "gorcol/colength.hpp"

#include "gorcol/errors.hpp"

namespace gorcol {

Polynomial linear_form_sum(const RingPtr& ring) {
  Polynomial l(ring);
  for (std::size_t j = 0; j < ring->nvars(); ++j)
    l = l + Polynomial::monomial(ring, ring->var(j));
  return l;
}

WitnessResult witness_ideal(std::size_t d, int n, int s, const Field& field) {
  return witness_ideal(PolyRing::make(d, field), n, s);
}

WitnessResult witness_ideal(const RingPtr& ring, int n, int s) {
  if (!ring->standard_graded())
    throw HypothesisError("witness construction expects the standard grading");
  std::size_t d = ring->nvars();
  if (d < 1 || n < 1) throw HypothesisError("witness requires d >= 1 and n >= 1");
  if (s < 0) throw HypothesisError("witness exponent must be nonnegative");
  int bound = default_bound(d, n) + 1;
  IdealHandle ci = pure_power_ideal(ring, std::vector<int>(d, n), bound);

  IdealHandle C = ci;
  if (s > 0) {
    Polynomial ls = linear_form_sum(ring).pow(static_cast<unsigned>(s));
    if (static_cast<int>(s) > ci.degree_bound())
      throw DegenerateWitnessError("exponent " + std::to_string(s) +
                                   " exceeds the socle degree of the complete intersection");
    if (membership(ls, ci))
      throw DegenerateWitnessError("l^" + std::to_string(s) +
                                   " lies in the complete intersection; witness degenerates");
    C = colon(ci, principal_ideal(ls, bound), bound);
  }

  WitnessResult res{C, quotient_view(C)};
  res.gorenstein = socle(C).dim == 1;
  res.inside_mn = order_of(C) >= n;
  res.max_degree = res.view.max_degree();
  res.length = res.view.length();
  int expected_max = static_cast<int>(d) * (n - 1) - s;
  if (res.max_degree != expected_max)
    throw InternalCheckError("Max(T/C) = " + std::to_string(res.max_degree) +
                             " but the Gorenstein duality shift predicts " +
                             std::to_string(expected_max));
  return res;
}

RrrResult rrr_min_degree(const std::vector<int>& n_tuple, int m, const Field& field) {
  if (n_tuple.empty()) throw HypothesisError("empty exponent tuple");
  for (int ni : n_tuple)
    if (ni < 1) throw HypothesisError("exponents must be positive");
  if (m < 1) throw HypothesisError("annihilator power must be positive");
  int t = 0;
  for (int ni : n_tuple) t += ni - 1;

  auto ring = PolyRing::make(n_tuple.size(), field);
  int bound = t + m + 2;
  IdealHandle ci = pure_power_ideal(ring, n_tuple, bound);
  QuotientView S = quotient_view(ci);

  RrrResult res;
  res.bound_ceil = t - m + 1 > 0 ? (t - m + 2) / 2 : 0;

  Polynomial lm = linear_form_sum(ring).pow(static_cast<unsigned>(m));
  if (membership(lm, ci)) {
    res.l_power_vanishes = true;
    res.min_degree = 0;
    res.bound_holds = res.min_degree >= res.bound_ceil;
    return res;
  }

  for (int j = 0; S.h(j) > 0; ++j) {
    std::size_t hj = S.h(j);
    std::size_t ht = S.h(j + m);
    DenseMatrix M(ht, hj, ring->field());
    const auto& std_j = S.std_monomials(j);
    for (std::size_t c = 0; c < hj; ++c) {
      Polynomial p = lm.times_monomial(std_j[c]);
      auto red = S.reduce_full(j + m, p.coords(j + m));
      for (std::size_t r = 0; r < ht; ++r) M.at(r, c) = red[r];
    }
    if (!kernel_basis(M).empty()) {
      res.min_degree = j;
      res.bound_holds = res.min_degree >= res.bound_ceil;
      return res;
    }
  }
  throw InternalCheckError("multiplication by a nonzero l^m has no kernel in any degree");
}

ColengthBounds colength_bounds(const QuotientView& ambient,
                               const std::optional<IdealHandle>& witness) {
  if (ambient.truncated())
    throw TruncationError("colength bounds require an Artinian quotient");
  ColengthBounds out;
  IdealHandle trace = trace_ideal(ambient);
  out.lower = quotient_view(trace).length();

  if (witness) {
    const IdealHandle& W = *witness;
    if (!W.ring()->same_ring(*ambient.ring()))
      throw RingMismatchError("witness lives in a different ring");
    QuotientView wq = quotient_view(W);
    if (wq.truncated() || socle(W).dim != 1)
      throw WitnessRejectedError("witness does not define a Gorenstein Artinian quotient");
    IdealHandle target = ambient.ideal();
    for (const auto& g : W.generators()) {
      int deg = *g.homogeneous_wdeg();
      IdealHandle probe =
          target.degree_bound() >= deg ? target : target.with_bound(deg);
      if (!membership(g, probe))
        throw WitnessRejectedError("witness is not contained in the defining ideal");
    }
    out.upper = wq.length() - ambient.length();
  } else {
    out.upper = ambient.length();  // the trivial bound
  }
  out.certified = out.lower == out.upper;
  return out;
}

}  // namespace gorcol
