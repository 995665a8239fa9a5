#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gorcol/ideal.hpp"
#include "gorcol/matrix.hpp"

namespace gtest_util {

using namespace gorcol;

inline DenseMatrix mat_of_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  DenseMatrix m(0, cols, f);
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    row.reserve(r.size());
    for (long long v : r) row.push_back(Scalar::of_int(v, f));
    m.append_row(row);
  }
  return m;
}

inline std::vector<Scalar> vec_of_ints(const Field& f, const std::vector<long long>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (long long x : v) out.push_back(Scalar::of_int(x, f));
  return out;
}

/// Deterministic draw in [lo, hi]; avoids std::uniform_int_distribution,
/// whose output is implementation-defined.
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

inline Polynomial poly_of_monomial(const RingPtr& ring, std::vector<int> e) {
  return Polynomial::monomial(ring, Monomial(std::move(e)));
}

/// Count of degree-i monomials in a monomial ideal by direct enumeration:
/// an independent oracle for slice ranks of monomial ideals.
inline std::size_t monomial_slice_count(const RingPtr& ring, const std::vector<Monomial>& gens,
                                        int wdeg) {
  std::size_t count = 0;
  for (const auto& m : ring->basis(wdeg)) {
    for (const auto& g : gens) {
      if (g.divides(m)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace gtest_util
