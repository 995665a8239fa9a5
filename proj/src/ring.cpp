#include "gorcol/ring.hpp"

#include <numeric>

#include "gorcol/errors.hpp"

namespace gorcol {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw DimensionError("negative exponent in monomial");
}

int Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::times(const Monomial& o) const {
  if (o.nvars() != nvars()) throw DimensionError("monomial variable counts differ");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (o.nvars() != nvars()) throw DimensionError("monomial variable counts differ");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  if (!o.divides(*this)) throw DimensionError("monomial quotient is not integral");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

PolyRing::PolyRing(std::size_t nvars, const Field& field, std::vector<int> weights)
    : nvars_(nvars), field_(field), weights_(std::move(weights)) {
  if (nvars_ == 0) throw DimensionError("ring needs at least one variable");
  if (weights_.empty()) weights_.assign(nvars_, 1);
  if (weights_.size() != nvars_) throw DimensionError("weight count does not match variables");
  for (int w : weights_)
    if (w < 1) throw DimensionError("weights must be positive");
  max_weight_ = *std::max_element(weights_.begin(), weights_.end());
}

std::shared_ptr<const PolyRing> PolyRing::make(std::size_t nvars, const Field& field,
                                               std::vector<int> weights) {
  return std::shared_ptr<const PolyRing>(new PolyRing(nvars, field, std::move(weights)));
}

int PolyRing::wdeg(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionError("monomial does not belong to this ring");
  int d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += weights_[i] * m[i];
  return d;
}

namespace {

void enumerate(std::size_t var, int remaining, const std::vector<int>& weights,
               std::vector<int>& current, std::vector<Monomial>& out) {
  if (var + 1 == weights.size()) {
    if (remaining % weights[var] == 0) {
      current[var] = remaining / weights[var];
      out.emplace_back(current);
      current[var] = 0;
    }
    return;
  }
  // lex descending: largest exponent of the current variable first
  for (int e = remaining / weights[var]; e >= 0; --e) {
    current[var] = e;
    enumerate(var + 1, remaining - e * weights[var], weights, current, out);
  }
  current[var] = 0;
}

}  // namespace

const PolyRing::DegreeCache& PolyRing::degree_cache(int wdeg) const {
  if (wdeg < 0) throw DimensionError("negative degree");
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<std::size_t>(wdeg) >= cache_.size()) cache_.resize(wdeg + 1);
  auto& slot = cache_[wdeg];
  if (!slot) {
    auto c = std::make_unique<DegreeCache>();
    std::vector<int> current(nvars_, 0);
    enumerate(0, wdeg, weights_, current, c->basis);
    for (std::size_t i = 0; i < c->basis.size(); ++i) c->index.emplace(c->basis[i], i);
    slot = std::move(c);
  }
  return *slot;
}

const std::vector<Monomial>& PolyRing::basis(int wdeg) const {
  return degree_cache(wdeg).basis;
}

std::size_t PolyRing::index_of(int wdeg, const Monomial& m) const {
  const auto& c = degree_cache(wdeg);
  auto it = c.index.find(m);
  if (it == c.index.end()) throw DimensionError("monomial not of the requested degree");
  return it->second;
}

Monomial PolyRing::var(std::size_t j, int power) const {
  if (j >= nvars_) throw DimensionError("variable index out of range");
  std::vector<int> e(nvars_, 0);
  e[j] = power;
  return Monomial(std::move(e));
}

std::string PolyRing::var_name(std::size_t j) const {
  if (j >= nvars_) throw DimensionError("variable index out of range");
  static const char* short_names[] = {"x", "y", "z", "w"};
  if (nvars_ <= 4) return short_names[j];
  return "x" + std::to_string(j + 1);
}

}  // namespace gorcol
