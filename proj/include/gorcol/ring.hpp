#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gorcol/field.hpp"

namespace gorcol {

/// Exponent tuple over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);

  std::size_t nvars() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int total_degree() const;

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // this | o
  Monomial quotient(const Monomial& o) const;  // this / o, requires o | this

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  /// Lexicographic comparison with X1 > X2 > ...; used within a degree.
  static bool lex_greater(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Graded polynomial ring context: variable count, coefficient field and
/// positive variable weights (all 1 for the standard grading). Caches the
/// monomial basis of each (weighted) degree in the fixed order: within a
/// degree, lexicographic descending with X1 > X2 > ...
class PolyRing {
 public:
  static std::shared_ptr<const PolyRing> make(std::size_t nvars, const Field& field,
                                              std::vector<int> weights = {});

  std::size_t nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t j) const { return weights_[j]; }
  int max_weight() const { return max_weight_; }
  bool standard_graded() const { return max_weight_ == 1; }

  int wdeg(const Monomial& m) const;

  const std::vector<Monomial>& basis(int wdeg) const;
  std::size_t dim(int wdeg) const { return basis(wdeg).size(); }
  std::size_t index_of(int wdeg, const Monomial& m) const;

  Monomial one() const { return Monomial(std::vector<int>(nvars_, 0)); }
  Monomial var(std::size_t j, int power = 1) const;

  std::string var_name(std::size_t j) const;

  bool same_ring(const PolyRing& o) const {
    return nvars_ == o.nvars_ && field_ == o.field_ && weights_ == o.weights_;
  }

 private:
  PolyRing(std::size_t nvars, const Field& field, std::vector<int> weights);

  struct DegreeCache {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };
  const DegreeCache& degree_cache(int wdeg) const;

  std::size_t nvars_;
  Field field_;
  std::vector<int> weights_;
  int max_weight_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<DegreeCache>> cache_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

}  // namespace gorcol
