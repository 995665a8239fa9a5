#include "gorcol/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gorcol/errors.hpp"

namespace gorcol {

namespace {

std::vector<std::size_t> free_columns(const Echelon& e, std::size_t cols) {
  std::vector<bool> piv(cols, false);
  for (auto p : e.pivots) piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!piv[c]) free.push_back(c);
  return free;
}

Echelon identity_echelon(const Field& f, std::size_t cols) {
  DenseMatrix m(cols, cols, f);
  std::vector<std::size_t> pivots(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    m.at(i, i) = Scalar::one(f);
    pivots[i] = i;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

/// Coordinates of X_j * (row at degree from) inside degree from + w_j.
std::vector<Scalar> shift_row(const PolyRing& ring, int from, const Echelon& ech,
                              std::size_t row, std::size_t j) {
  int to = from + ring.weight(j);
  const auto& src = ring.basis(from);
  std::vector<Scalar> out(ring.dim(to), Scalar::zero(ring.field()));
  Monomial xj = ring.var(j);
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Scalar& v = ech.mat.at(row, c);
    if (v.is_zero()) continue;
    out[ring.index_of(to, src[c].times(xj))] = v;
  }
  return out;
}

std::vector<Scalar> normalize_leading(std::vector<Scalar> v) {
  for (auto& s : v) {
    if (!s.is_zero()) {
      Scalar inv = s.inverse();
      for (auto& t : v)
        if (!t.is_zero()) t = t * inv;
      break;
    }
  }
  return v;
}

}  // namespace

struct IdealHandle::Impl {
  RingPtr ring;
  std::vector<Polynomial> gens;
  int bound = 0;
  mutable std::mutex mu;
  mutable std::vector<std::unique_ptr<Echelon>> slices;
};

IdealHandle IdealHandle::make(RingPtr ring, std::vector<Polynomial> gens, int degree_bound) {
  if (degree_bound < 0) throw DimensionError("negative degree bound");
  auto impl = std::make_shared<Impl>();
  impl->ring = std::move(ring);
  impl->bound = degree_bound;
  for (auto& g : gens) {
    if (!g.ring()->same_ring(*impl->ring))
      throw RingMismatchError("generator from a different ring");
    if (g.is_zero()) continue;
    auto d = g.homogeneous_wdeg();
    if (!d) throw InhomogeneousError("inhomogeneous generator: " + g.str());
    if (*d > degree_bound)
      throw DegreeBoundError("generator degree exceeds the truncation bound");
    impl->gens.push_back(std::move(g));
  }
  IdealHandle h;
  h.impl_ = std::move(impl);
  return h;
}

const RingPtr& IdealHandle::ring() const { return impl_->ring; }
const std::vector<Polynomial>& IdealHandle::generators() const { return impl_->gens; }
int IdealHandle::degree_bound() const { return impl_->bound; }
bool IdealHandle::is_zero() const { return impl_->gens.empty(); }

IdealHandle IdealHandle::with_bound(int bound) const {
  if (bound == impl_->bound) return *this;
  return make(impl_->ring, impl_->gens, bound);
}

const Echelon& IdealHandle::slice(int i) const {
  const auto& im = *impl_;
  if (i < 0) throw DimensionError("negative degree");
  if (i > im.bound)
    throw DegreeBoundError("degree " + std::to_string(i) + " above bound " +
                           std::to_string(im.bound));
  std::lock_guard<std::mutex> lock(im.mu);
  if (im.slices.size() <= static_cast<std::size_t>(i)) im.slices.resize(i + 1);
  const PolyRing& ring = *im.ring;
  for (int k = 0; k <= i; ++k) {
    if (im.slices[k]) continue;
    std::size_t cols = ring.dim(k);
    // once every lower slice reachable by one variable is full, so is this one
    if (k >= 1 && cols > 0) {
      bool all_full = true;
      for (std::size_t j = 0; j < ring.nvars(); ++j) {
        int low = k - ring.weight(j);
        if (low < 0) continue;
        if (im.slices[low]->rank() != ring.dim(low)) {
          all_full = false;
          break;
        }
      }
      if (all_full) {
        im.slices[k] = std::make_unique<Echelon>(identity_echelon(ring.field(), cols));
        continue;
      }
    }
    EchelonBuilder b(ring.field(), cols);
    for (std::size_t j = 0; j < ring.nvars() && !b.full(); ++j) {
      int low = k - ring.weight(j);
      if (low < 0) continue;
      const Echelon& e = *im.slices[low];
      for (std::size_t r = 0; r < e.rank() && !b.full(); ++r)
        b.insert(shift_row(ring, low, e, r, j));
    }
    for (const auto& g : im.gens) {
      if (b.full()) break;
      if (*g.homogeneous_wdeg() == k) b.insert(g.coords(k));
    }
    im.slices[k] = std::make_unique<Echelon>(b.to_echelon());
  }
  return *im.slices[i];
}

bool IdealHandle::slice_full(int i) const {
  return slice(i).rank() == impl_->ring->dim(i);
}

struct QuotientView::Impl {
  IdealHandle ideal;
  bool truncated = false;
  std::vector<std::size_t> hilb;  // computed values, trimmed when certified
  std::size_t length = 0;
  int maxdeg = -1;
  mutable std::mutex mu;
  mutable std::map<int, std::vector<Monomial>> stdmons;
  mutable std::map<int, std::vector<std::size_t>> freecols;
  mutable std::map<std::pair<std::size_t, int>, std::unique_ptr<DenseMatrix>> mult;
};

QuotientView QuotientView::make(const IdealHandle& ideal) {
  auto impl = std::make_shared<Impl>();
  impl->ideal = ideal;
  const PolyRing& ring = *ideal.ring();
  int run = 0;
  bool certified = false;
  std::vector<std::size_t> h;
  for (int i = 0; i <= ideal.degree_bound(); ++i) {
    std::size_t hi = ring.dim(i) - ideal.slice(i).rank();
    h.push_back(hi);
    run = (hi == 0) ? run + 1 : 0;
    if (run >= ring.max_weight()) {
      certified = true;
      break;
    }
  }
  impl->truncated = !certified;
  if (certified) {
    while (!h.empty() && h.back() == 0) h.pop_back();
    impl->maxdeg = static_cast<int>(h.size()) - 1;
    for (auto v : h) impl->length += v;
  }
  impl->hilb = std::move(h);
  QuotientView q;
  q.impl_ = std::move(impl);
  return q;
}

const IdealHandle& QuotientView::ideal() const { return impl_->ideal; }
const RingPtr& QuotientView::ring() const { return impl_->ideal.ring(); }
bool QuotientView::truncated() const { return impl_->truncated; }

std::size_t QuotientView::h(int i) const {
  if (i < 0) throw DimensionError("negative degree");
  if (static_cast<std::size_t>(i) < impl_->hilb.size()) return impl_->hilb[i];
  if (impl_->truncated)
    throw TruncationError("Hilbert function unknown beyond the truncation bound");
  return 0;
}

const std::vector<std::size_t>& QuotientView::hilbert() const { return impl_->hilb; }

std::size_t QuotientView::length() const {
  if (impl_->truncated)
    throw TruncationError("quotient not certified Artinian within the degree bound");
  return impl_->length;
}

int QuotientView::max_degree() const {
  if (impl_->truncated)
    throw TruncationError("quotient not certified Artinian within the degree bound");
  if (impl_->maxdeg < 0) throw DimensionError("zero ring has no top degree");
  return impl_->maxdeg;
}

const std::vector<Monomial>& QuotientView::std_monomials(int i) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto it = impl_->stdmons.find(i);
  if (it == impl_->stdmons.end()) {
    const Echelon& e = impl_->ideal.slice(i);
    const PolyRing& ring = *impl_->ideal.ring();
    auto free = free_columns(e, ring.dim(i));
    std::vector<Monomial> mons;
    mons.reserve(free.size());
    for (auto c : free) mons.push_back(ring.basis(i)[c]);
    impl_->freecols.emplace(i, std::move(free));
    it = impl_->stdmons.emplace(i, std::move(mons)).first;
  }
  return it->second;
}

std::vector<Scalar> QuotientView::reduce_full(int wdeg, std::vector<Scalar> full) const {
  const Echelon& e = impl_->ideal.slice(wdeg);
  e.reduce(full);
  std_monomials(wdeg);  // populate the free-column cache
  std::lock_guard<std::mutex> lock(impl_->mu);
  const auto& free = impl_->freecols.at(wdeg);
  std::vector<Scalar> out;
  out.reserve(free.size());
  for (auto c : free) out.push_back(full[c]);
  return out;
}

std::vector<Scalar> QuotientView::reduce(const Polynomial& f) const {
  auto d = f.homogeneous_wdeg();
  if (!d) throw InhomogeneousError("cannot reduce an inhomogeneous polynomial");
  return reduce_full(*d, f.coords(*d));
}

const DenseMatrix& QuotientView::var_mult(std::size_t j, int i) const {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->mult.find({j, i});
    if (it != impl_->mult.end()) return *it->second;
  }
  const PolyRing& ring = *impl_->ideal.ring();
  int to = i + ring.weight(j);
  const auto& src = std_monomials(i);
  std::size_t target_dim = std_monomials(to).size();
  auto m = std::make_unique<DenseMatrix>(target_dim, src.size(), ring.field());
  Monomial xj = ring.var(j);
  for (std::size_t c = 0; c < src.size(); ++c) {
    std::vector<Scalar> full(ring.dim(to), Scalar::zero(ring.field()));
    full[ring.index_of(to, src[c].times(xj))] = Scalar::one(ring.field());
    auto red = reduce_full(to, std::move(full));
    for (std::size_t r = 0; r < target_dim; ++r) m->at(r, c) = red[r];
  }
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto [it, inserted] = impl_->mult.emplace(std::make_pair(j, i), std::move(m));
  return *it->second;
}

// --- constructors ---

IdealHandle zero_ideal(RingPtr ring, int bound) {
  return IdealHandle::make(std::move(ring), {}, bound);
}

IdealHandle unit_ideal(RingPtr ring, int bound) {
  Polynomial one = Polynomial::constant(ring, Scalar::one(ring->field()));
  return IdealHandle::make(std::move(ring), {one}, bound);
}

IdealHandle monomial_ideal(RingPtr ring, const std::vector<Monomial>& gens, int bound) {
  std::vector<Polynomial> ps;
  ps.reserve(gens.size());
  for (const auto& m : gens) ps.push_back(Polynomial::monomial(ring, m));
  return IdealHandle::make(std::move(ring), std::move(ps), bound);
}

IdealHandle maximal_ideal(RingPtr ring, int bound) {
  std::vector<Monomial> vars;
  for (std::size_t j = 0; j < ring->nvars(); ++j) vars.push_back(ring->var(j));
  return monomial_ideal(std::move(ring), vars, bound);
}

namespace {
void tuples_of_total_degree(std::size_t var, int remaining, std::vector<int>& cur,
                            std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    tuples_of_total_degree(var + 1, remaining - e, cur, out);
  }
}
}  // namespace

IdealHandle power_of_maximal(RingPtr ring, int n, int bound) {
  if (n <= 0) return unit_ideal(std::move(ring), bound);
  std::vector<Monomial> mons;
  std::vector<int> cur(ring->nvars(), 0);
  tuples_of_total_degree(0, n, cur, mons);
  return monomial_ideal(std::move(ring), mons, bound);
}

IdealHandle pure_power_ideal(RingPtr ring, const std::vector<int>& powers, int bound) {
  if (powers.size() != ring->nvars()) throw DimensionError("one exponent per variable required");
  std::vector<Monomial> mons;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    if (powers[j] < 1) throw DimensionError("pure powers must be positive");
    mons.push_back(ring->var(j, powers[j]));
  }
  return monomial_ideal(std::move(ring), mons, bound);
}

IdealHandle principal_ideal(const Polynomial& f, int bound) {
  return IdealHandle::make(f.ring(), {f}, bound);
}

int default_bound(std::size_t d, int max_gen_degree) {
  int n = std::max(1, max_gen_degree);
  return static_cast<int>(d) * (n - 1) + 2;
}

// --- operations ---

QuotientView quotient_view(const IdealHandle& ideal) { return QuotientView::make(ideal); }

bool is_unit_ideal(const IdealHandle& ideal) {
  for (const auto& g : ideal.generators())
    if (*g.homogeneous_wdeg() == 0) return true;
  return false;
}

bool membership(const Polynomial& f, const IdealHandle& ideal) {
  if (f.is_zero()) return true;
  if (!f.ring()->same_ring(*ideal.ring()))
    throw RingMismatchError("polynomial from a different ring");
  auto d = f.homogeneous_wdeg();
  if (!d) throw InhomogeneousError("membership requires a homogeneous polynomial");
  std::vector<Scalar> v = f.coords(*d);
  return ideal.slice(*d).reduce(v);
}

namespace {
void check_same_ring(const IdealHandle& a, const IdealHandle& b) {
  if (!a.ring()->same_ring(*b.ring()))
    throw RingMismatchError("ideals live in different rings");
}
}  // namespace

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealHandle::make(a.ring(), std::move(gens), std::max(a.degree_bound(), b.degree_bound()));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  std::set<std::vector<int>> seen_monomials;  // dedupe pure-monomial products
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial p = f * g;
      if (p.num_terms() == 1 && p.terms().begin()->second.is_one()) {
        if (!seen_monomials.insert(p.terms().begin()->first.exponents()).second) continue;
      }
      gens.push_back(std::move(p));
    }
  }
  return IdealHandle::make(a.ring(), std::move(gens), std::max(a.degree_bound(), b.degree_bound()));
}

IdealHandle ideal_power(const IdealHandle& a, int n) {
  if (n < 0) throw DimensionError("negative ideal power");
  if (n == 0) return unit_ideal(a.ring(), a.degree_bound());
  IdealHandle r = a;
  for (int i = 1; i < n; ++i) r = ideal_product(r, a);
  return r;
}

IdealHandle colon(const IdealHandle& ideal, const IdealHandle& by, int bound) {
  check_same_ring(ideal, by);
  if (by.is_zero()) throw ZeroIdealError("colon by the zero ideal");
  const PolyRing& ring = *ideal.ring();
  int max_e = 0;
  for (const auto& g : by.generators()) {
    int e = *g.homogeneous_wdeg();
    if (e == 0) throw UnitIdealError("colon by the unit ideal is rejected");
    max_e = std::max(max_e, e);
  }
  IdealHandle lifted =
      ideal.degree_bound() >= bound + max_e ? ideal : ideal.with_bound(bound + max_e);

  std::vector<std::unique_ptr<Echelon>> K(bound + 1);
  std::vector<Polynomial> gens_out;
  int full_run = 0;
  for (int i = 0; i <= bound; ++i) {
    std::size_t cols = ring.dim(i);
    // stacked kernel: v is in the colon iff v*g reduces to 0 mod the ideal
    // for every generator g
    std::size_t total_rows = 0;
    std::vector<std::tuple<const Polynomial*, int, std::vector<std::size_t>>> blocks;
    for (const auto& g : by.generators()) {
      int target = i + *g.homogeneous_wdeg();
      auto free = free_columns(lifted.slice(target), ring.dim(target));
      total_rows += free.size();
      blocks.emplace_back(&g, target, std::move(free));
    }
    DenseMatrix M(total_rows, cols, ring.field());
    for (std::size_t c = 0; c < cols; ++c) {
      Polynomial base = Polynomial::monomial(ideal.ring(), ring.basis(i)[c]);
      std::size_t row0 = 0;
      for (const auto& [g, target, free] : blocks) {
        std::vector<Scalar> v = (base * *g).coords(target);
        lifted.slice(target).reduce(v);
        for (std::size_t r = 0; r < free.size(); ++r) M.at(row0 + r, c) = v[free[r]];
        row0 += free.size();
      }
    }
    auto kern = kernel_basis(M);
    EchelonBuilder kb(ring.field(), cols);
    for (auto& v : kern) kb.insert(std::move(v));
    K[i] = std::make_unique<Echelon>(kb.to_echelon());

    // graded Nakayama: strip everything already in m * (colon so far)
    EchelonBuilder old(ring.field(), cols);
    for (std::size_t j = 0; j < ring.nvars(); ++j) {
      int low = i - ring.weight(j);
      if (low < 0) continue;
      const Echelon& e = *K[low];
      for (std::size_t r = 0; r < e.rank() && !old.full(); ++r)
        old.insert(shift_row(ring, low, e, r, j));
    }
    for (std::size_t r = 0; r < K[i]->rank(); ++r) {
      auto row = K[i]->mat.row(r);
      if (old.contains(row)) continue;
      auto rem = normalize_leading(old.remainder(row));
      gens_out.push_back(Polynomial::from_coords(ideal.ring(), i, rem));
      old.insert(std::move(rem));
    }

    full_run = (K[i]->rank() == cols) ? full_run + 1 : 0;
    if (full_run >= ring.max_weight())
      return IdealHandle::make(ideal.ring(), std::move(gens_out), bound);
  }
  throw TruncationError("colon did not stabilize within the degree bound");
}

IdealHandle colon(const IdealHandle& ideal, const IdealHandle& by) {
  return colon(ideal, by, ideal.degree_bound());
}

SocleInfo socle(const IdealHandle& ideal) {
  QuotientView qv = quotient_view(ideal);
  if (qv.truncated())
    throw TruncationError("socle requires an Artinian quotient within the bound");
  SocleInfo info;
  if (qv.hilbert().empty()) return info;  // zero ring
  const PolyRing& ring = *ideal.ring();
  int M = qv.max_degree();
  IdealHandle m = maximal_ideal(ideal.ring(), ideal.degree_bound());
  IdealHandle C = colon(ideal, m, std::min(ideal.degree_bound(), M + ring.max_weight()));
  info.per_degree.assign(M + 1, 0);
  for (int i = 0; i <= M; ++i) {
    const Echelon& ci = C.slice(i);
    const Echelon& ii = ideal.slice(i);
    std::size_t diff = ci.rank() - ii.rank();
    info.per_degree[i] = diff;
    info.dim += diff;
    if (diff == 0) continue;
    EchelonBuilder b(ring.field(), ring.dim(i));
    for (std::size_t r = 0; r < ii.rank(); ++r) b.insert(ii.mat.row(r));
    for (std::size_t r = 0; r < ci.rank(); ++r) {
      auto row = ci.mat.row(r);
      if (b.contains(row)) continue;
      auto rem = normalize_leading(b.remainder(row));
      info.basis.push_back(Polynomial::from_coords(ideal.ring(), i, rem));
      b.insert(std::move(rem));
    }
  }
  return info;
}

int order_of(const IdealHandle& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError("order of the zero ideal");
  int best = ideal.degree_bound() + 1;
  for (const auto& g : ideal.generators()) best = std::min(best, *g.homogeneous_wdeg());
  return best;
}

namespace {

/// Shared walk for minimal-generator extraction: calls sink(i, remainder)
/// for each new generator found in degree i.
template <typename Sink>
void nakayama_walk(const IdealHandle& ideal, Sink&& sink) {
  const PolyRing& ring = *ideal.ring();
  int max_gen_deg = 0;
  for (const auto& g : ideal.generators())
    max_gen_deg = std::max(max_gen_deg, *g.homogeneous_wdeg());
  for (int i = 0; i <= max_gen_deg; ++i) {
    const Echelon& cur = ideal.slice(i);
    if (cur.rank() == 0) continue;
    EchelonBuilder old(ring.field(), ring.dim(i));
    for (std::size_t j = 0; j < ring.nvars(); ++j) {
      int low = i - ring.weight(j);
      if (low < 0) continue;
      const Echelon& e = ideal.slice(low);
      for (std::size_t r = 0; r < e.rank() && !old.full(); ++r)
        old.insert(shift_row(ring, low, e, r, j));
    }
    for (std::size_t r = 0; r < cur.rank(); ++r) {
      auto row = cur.mat.row(r);
      if (old.contains(row)) continue;
      auto rem = normalize_leading(old.remainder(row));
      sink(i, rem);
      old.insert(std::move(rem));
    }
  }
}

}  // namespace

std::size_t min_generators(const IdealHandle& ideal) {
  std::size_t mu = 0;
  nakayama_walk(ideal, [&](int, const std::vector<Scalar>&) { ++mu; });
  return mu;
}

IdealHandle minimalize(const IdealHandle& ideal, int bound) {
  std::vector<Polynomial> gens;
  nakayama_walk(ideal, [&](int i, const std::vector<Scalar>& rem) {
    gens.push_back(Polynomial::from_coords(ideal.ring(), i, rem));
  });
  return IdealHandle::make(ideal.ring(), std::move(gens), bound);
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  const PolyRing& ring = *a.ring();
  int bound = std::min(a.degree_bound(), b.degree_bound());
  int full_run = 0;
  for (int i = 0; i <= bound; ++i) {
    const Echelon& ea = a.slice(i);
    const Echelon& eb = b.slice(i);
    if (!(ea == eb)) return false;
    full_run = (ea.rank() == ring.dim(i)) ? full_run + 1 : 0;
    if (full_run >= ring.max_weight()) return true;
  }
  throw TruncationError("cannot certify ideal equality within the degree bound");
}

}  // namespace gorcol
