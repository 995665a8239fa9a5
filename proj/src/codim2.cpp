#include "gorcol/codim2.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gorcol/errors.hpp"
#include "gorcol/matrix.hpp"

namespace gorcol {

namespace {

std::vector<std::pair<int, int>> minimalize_antichain(std::vector<std::pair<int, int>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<int, int>> keep;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (q != p && q.first <= p.first && q.second <= p.second) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(p);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace

MonomialIdeal2 MonomialIdeal2::make(std::vector<std::pair<int, int>> gens) {
  for (const auto& [a, b] : gens)
    if (a < 0 || b < 0) throw DimensionError("negative exponent");
  auto keep = minimalize_antichain(std::move(gens));
  if (keep.empty()) throw NotMPrimaryError("no generators");
  if (keep.size() == 1 && keep[0] == std::pair<int, int>{0, 0})
    throw NotMPrimaryError("unit ideal is not a proper m-primary ideal");
  if (keep.front().first != 0 || keep.back().second != 0)
    throw NotMPrimaryError("m-primary requires pure powers of both variables");
  MonomialIdeal2 I;
  I.gens_ = std::move(keep);
  return I;
}

int MonomialIdeal2::order() const {
  int best = gens_[0].first + gens_[0].second;
  for (const auto& [a, b] : gens_) best = std::min(best, a + b);
  return best;
}

int MonomialIdeal2::pure_x() const { return gens_.back().first; }
int MonomialIdeal2::pure_y() const { return gens_.front().second; }

bool MonomialIdeal2::contains(int x, int y) const {
  for (const auto& [a, b] : gens_)
    if (a <= x && b <= y) return true;
  return false;
}

std::vector<int> MonomialIdeal2::heights() const {
  int a = pure_x();
  std::vector<int> h(a, 0);
  for (int x = 0; x < a; ++x) {
    int best = pure_y();
    for (const auto& [ga, gb] : gens_)
      if (ga <= x) best = std::min(best, gb);
    h[x] = best;
  }
  return h;
}

long long MonomialIdeal2::colength() const {
  long long total = 0;
  for (int v : heights()) total += v;
  return total;
}

long long MonomialIdeal2::socle_dimension() const {
  auto h = heights();
  h.push_back(0);  // column pure_x
  long long corners = 0;
  for (std::size_t x = 0; x + 1 < h.size(); ++x)
    if (h[x + 1] < h[x]) ++corners;
  return corners;
}

MonomialIdeal2 MonomialIdeal2::product(const MonomialIdeal2& o) const {
  std::vector<std::pair<int, int>> pts;
  for (const auto& [a, b] : gens_)
    for (const auto& [c, d] : o.gens_) pts.emplace_back(a + c, b + d);
  return make(std::move(pts));
}

MonomialIdeal2 MonomialIdeal2::power(int k) const {
  if (k < 1) throw DimensionError("power must be positive");
  MonomialIdeal2 out = *this;
  for (int i = 1; i < k; ++i) out = out.product(*this);
  return out;
}

std::string MonomialIdeal2::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    const auto& [a, b] = gens_[i];
    if (a == 0 && b == 0) {
      os << "1";
      continue;
    }
    if (a > 0) {
      os << "x";
      if (a > 1) os << "^" << a;
      if (b > 0) os << "*";
    }
    if (b > 0) {
      os << "y";
      if (b > 1) os << "^" << b;
    }
  }
  return os.str();
}

NewtonPolygon newton_polygon(const MonomialIdeal2& ideal) {
  const auto& gens = ideal.generators();  // x ascending, y strictly descending
  // lower-left hull, keeping generator points that sit on the boundary
  std::vector<std::pair<int, int>> chain;
  for (const auto& p : gens) {
    while (chain.size() >= 2) {
      const auto& A = chain[chain.size() - 2];
      const auto& B = chain[chain.size() - 1];
      // pop B when it lies strictly above the segment A -> p
      long long lhs = static_cast<long long>(B.second - A.second) * (p.first - B.first);
      long long rhs = static_cast<long long>(p.second - B.second) * (B.first - A.first);
      if (lhs > rhs)
        chain.pop_back();
      else
        break;
    }
    chain.push_back(p);
  }
  NewtonPolygon np;
  np.complement_area = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    long long dx = chain[i + 1].first - chain[i].first;
    long long sy = chain[i].second + chain[i + 1].second;
    mpq_class term(static_cast<long>(dx * sy), 2);
    term.canonicalize();
    np.complement_area += term;
  }
  np.vertices.assign(chain.rbegin(), chain.rend());  // x descending
  return np;
}

MonomialIdeal2 integral_closure(const MonomialIdeal2& ideal) {
  NewtonPolygon np = newton_polygon(ideal);
  std::vector<std::pair<int, int>> chain(np.vertices.rbegin(), np.vertices.rend());
  std::vector<std::pair<int, int>> pts;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& [x1, y1] = chain[i];
    const auto& [x2, y2] = chain[i + 1];
    for (int x = x1; x < x2; ++x) {
      // ceil of y1 + (x - x1) (y2 - y1) / (x2 - x1)
      long long num = static_cast<long long>(y1) * (x2 - x1) +
                      static_cast<long long>(x - x1) * (y2 - y1);
      long long den = x2 - x1;
      pts.emplace_back(x, static_cast<int>((num + den - 1) / den));
    }
  }
  pts.emplace_back(ideal.pure_x(), 0);
  return MonomialIdeal2::make(std::move(pts));
}

Codim2Invariants invariants(const MonomialIdeal2& ideal) {
  Codim2Invariants inv;
  inv.ord = ideal.order();
  inv.mu = ideal.num_generators();
  inv.colength = ideal.colength();
  MonomialIdeal2 closure = integral_closure(ideal);
  inv.closure_colength = closure.colength();
  inv.integrally_closed = closure == ideal;
  if (closure.order() != inv.ord)
    throw InternalCheckError("integral closure changed the order");
  if (inv.integrally_closed &&
      static_cast<long long>(inv.mu) - 1 != static_cast<long long>(inv.ord))
    throw InternalCheckError("integrally closed ideal with mu - 1 != ord");
  return inv;
}

namespace {

void blowup_recurse(std::vector<std::pair<int, int>> gens, const std::string& path,
                    BasePointTree& tree) {
  if (path.size() > 128)
    throw InternalCheckError("base point recursion exceeded the depth cap");
  for (const auto& g : gens)
    if (g.first == 0 && g.second == 0) return;  // unit ideal, nothing here
  int o = gens[0].first + gens[0].second;
  for (const auto& [a, b] : gens) o = std::min(o, a + b);
  tree.orders.push_back(o);
  tree.charts.push_back(path);

  // chart x: y -> xy, then strip the monomial gcd
  std::vector<std::pair<int, int>> tx;
  int gx = INT32_MAX, gy = INT32_MAX;
  for (const auto& [a, b] : gens) {
    tx.emplace_back(a + b, b);
    gx = std::min(gx, a + b);
    gy = std::min(gy, b);
  }
  for (auto& [a, b] : tx) {
    a -= gx;
    b -= gy;
  }
  blowup_recurse(minimalize_antichain(std::move(tx)), path + "x", tree);

  // chart y: x -> xy
  std::vector<std::pair<int, int>> ty;
  gx = INT32_MAX;
  gy = INT32_MAX;
  for (const auto& [a, b] : gens) {
    ty.emplace_back(a, a + b);
    gx = std::min(gx, a);
    gy = std::min(gy, a + b);
  }
  for (auto& [a, b] : ty) {
    a -= gx;
    b -= gy;
  }
  blowup_recurse(minimalize_antichain(std::move(ty)), path + "y", tree);
}

}  // namespace

BasePointTree base_point_tree(const MonomialIdeal2& ideal) {
  BasePointTree tree;
  blowup_recurse(ideal.generators(), "", tree);
  return tree;
}

long long hd_length(const MonomialIdeal2& ideal) {
  BasePointTree tree = base_point_tree(ideal);
  long long sum = 0;
  for (int o : tree.orders) sum += static_cast<long long>(o) * (o + 1) / 2;
  long long closure = integral_closure(ideal).colength();
  if (sum != closure)
    throw InternalCheckError("base-point length sum " + std::to_string(sum) +
                             " disagrees with the closure colength " +
                             std::to_string(closure));
  return sum;
}

long long multiplicity(const MonomialIdeal2& ideal) {
  BasePointTree tree = base_point_tree(ideal);
  long long sum = 0;
  for (int o : tree.orders) sum += static_cast<long long>(o) * o;
  NewtonPolygon np = newton_polygon(ideal);
  if (np.complement_area * 2 != static_cast<long>(sum))
    throw InternalCheckError("squared-order sum disagrees with twice the complement area");
  return sum;
}

namespace {

constexpr std::uint64_t kPrimes[3] = {2147483647ull, 2147483629ull, 2147483587ull};

struct SparsePoly {  // integer polynomial in two variables
  std::vector<std::pair<std::pair<int, int>, long long>> terms;
  int ord = 0;  // min total degree
};

SparsePoly combine(const std::vector<std::pair<int, int>>& gens,
                   const std::vector<long long>& coeffs) {
  SparsePoly p;
  p.ord = INT32_MAX;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    p.terms.push_back({gens[i], coeffs[i]});
    p.ord = std::min(p.ord, gens[i].first + gens[i].second);
  }
  return p;
}

/// Least K with every degree-K monomial inside the ideal.
int containment_degree(const MonomialIdeal2& ideal) {
  auto h = ideal.heights();
  int best = ideal.pure_x();
  for (std::size_t x = 0; x < h.size(); ++x)
    best = std::max(best, static_cast<int>(x) + h[x]);
  return best;
}

/// Column index map over monomials of total degree < K, optionally
/// restricted to members of a given ideal.
struct ColumnSpace {
  int K = 0;
  std::vector<std::int32_t> index;  // (x * K + y) -> column or -1
  std::size_t cols = 0;

  ColumnSpace(int K_, const MonomialIdeal2* restrict_to) : K(K_), index(K_ * K_, -1) {
    for (int deg = 0; deg < K; ++deg) {
      for (int x = deg; x >= 0; --x) {
        int y = deg - x;
        if (restrict_to != nullptr && !restrict_to->contains(x, y)) continue;
        index[x * K + y] = static_cast<std::int32_t>(cols++);
      }
    }
  }
  std::int32_t at(int x, int y) const {
    if (x >= K || y >= K || x + y >= K) return -1;
    return index[x * K + y];
  }
};

/// Feeds every truncated row m * h (over monomials m with the product
/// meeting the column space) into the echelon; stops early at full rank
/// when allowed. Every term below the truncation degree must land on a
/// column: a miss would break the support containment the certificate
/// rests on.
void insert_truncated_products(FpEchelon& ech, const ColumnSpace& cs,
                               const std::vector<SparsePoly>& gens, std::uint64_t p,
                               bool stop_when_full) {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> row;
  for (int mdeg = 0; mdeg < cs.K; ++mdeg) {
    for (const auto& h : gens) {
      if (h.ord + mdeg >= cs.K) continue;
      for (int mx = mdeg; mx >= 0; --mx) {
        int my = mdeg - mx;
        row.clear();
        for (const auto& [mono, c] : h.terms) {
          int tx = mono.first + mx, ty = mono.second + my;
          std::int32_t col = cs.at(tx, ty);
          if (col < 0) {
            if (tx + ty < cs.K)
              throw InternalCheckError("span term escaped the restricted column space");
            continue;
          }
          row.emplace_back(static_cast<std::uint32_t>(col),
                           static_cast<std::uint64_t>(c) % p);
        }
        if (!row.empty()) ech.insert(row);
        if (stop_when_full && ech.full()) return;
      }
    }
  }
}

/// Certified check that (f, g) * I^r equals I^(r+1).
///
/// Columns are the monomials of I^(r+1) below K0, where K0 is the least
/// degree with m^K0 inside m * I^(r+1). Every truncated row of the span
/// lies in that column space by construction, and rank over GF(p) never
/// exceeds the rank over Q, so a full modular rank certifies that the
/// span covers every column exactly; Nakayama then removes the
/// truncation.
bool reduction_identity_holds(const MonomialIdeal2& I, const SparsePoly& f,
                              const SparsePoly& g, int r) {
  MonomialIdeal2 target = I.power(r + 1);
  MonomialIdeal2 m = MonomialIdeal2::make({{1, 0}, {0, 1}});
  int K0 = containment_degree(m.product(target));
  ColumnSpace cs(K0, &target);
  if (cs.cols == 0) return true;

  std::vector<SparsePoly> span_gens;
  if (r == 0) {
    span_gens = {f, g};
  } else {
    MonomialIdeal2 Ir = I.power(r);
    for (const auto& u : Ir.generators()) {
      for (const SparsePoly* base : {&f, &g}) {
        SparsePoly shifted = *base;
        for (auto& [mono, c] : shifted.terms) {
          mono.first += u.first;
          mono.second += u.second;
        }
        shifted.ord += u.first + u.second;
        span_gens.push_back(std::move(shifted));
      }
    }
  }
  FpEchelon ech(kPrimes[0], cs.cols);
  insert_truncated_products(ech, cs, span_gens, kPrimes[0], /*stop_when_full=*/true);
  return ech.full();
}

/// lambda(T/(f,g)) through the truncation m^K inside I^(r+1) (already
/// certified to lie in (f,g)). The modular count can only overestimate
/// the true colength, so agreement with the multiplicity from below pins
/// it exactly.
long long ci_colength_modular(const MonomialIdeal2& I, const SparsePoly& f,
                              const SparsePoly& g, int r) {
  MonomialIdeal2 inside = I.power(r + 1);
  int K = containment_degree(inside);
  ColumnSpace cs(K, nullptr);
  long long result = -1;
  for (std::uint64_t p : kPrimes) {
    FpEchelon ech(p, cs.cols);
    insert_truncated_products(ech, cs, {f, g}, p, /*stop_when_full=*/false);
    long long lam = static_cast<long long>(cs.cols) - static_cast<long long>(ech.rank());
    if (result == -1) result = lam;
    if (lam != result) return -1;  // prime artifacts disagree; caller retries
  }
  return result;
}

}  // namespace

ReductionResult minimal_reduction(const MonomialIdeal2& ideal, std::uint64_t seed) {
  const int kRetryBudget = 8;
  const int kMaxR = 8;
  long long e0 = multiplicity(ideal);
  std::mt19937_64 rng(seed);
  auto draw_coeffs = [&]() {
    std::vector<long long> c(ideal.num_generators());
    for (auto& v : c) v = 1 + static_cast<long long>(rng() % 65536);
    return c;
  };
  std::string last_failure = "no attempt made";
  for (int attempt = 1; attempt <= kRetryBudget; ++attempt) {
    ReductionResult res;
    res.attempts = attempt;
    res.f_coeffs = draw_coeffs();
    res.g_coeffs = draw_coeffs();
    SparsePoly f = combine(ideal.generators(), res.f_coeffs);
    SparsePoly g = combine(ideal.generators(), res.g_coeffs);

    int r_start = ideal.num_generators() <= 2 ? 0 : 1;
    for (int r = r_start; r <= kMaxR; ++r) {
      if (!reduction_identity_holds(ideal, f, g, r)) continue;
      res.r = r;
      break;
    }
    if (res.r < 0) {
      last_failure = "no r <= " + std::to_string(kMaxR) +
                     " with I^(r+1) = (f,g) I^r for the drawn coefficients";
      continue;
    }
    res.ci_colength = ci_colength_modular(ideal, f, g, res.r);
    if (res.ci_colength != e0) {
      last_failure = "lambda(T/(f,g)) = " + std::to_string(res.ci_colength) +
                     " but the multiplicity is " + std::to_string(e0);
      continue;
    }
    return res;
  }
  throw ReductionFailureError("reduction search exhausted " +
                              std::to_string(kRetryBudget) + " attempts: " + last_failure);
}

Codim2Report colength_report(const MonomialIdeal2& ideal, std::uint64_t seed) {
  Codim2Report rep;
  Codim2Invariants inv = invariants(ideal);
  MonomialIdeal2 closure = integral_closure(ideal);
  rep.e0 = multiplicity(ideal);
  rep.lambda = inv.colength;
  rep.lambda_closure = inv.closure_colength;
  rep.ord = inv.ord;
  rep.ord_closure = closure.order();
  rep.mu = inv.mu;
  rep.mu_closure = closure.num_generators();
  rep.socle_dim = ideal.socle_dimension();
  if (rep.socle_dim != static_cast<long long>(rep.mu) - 1)
    throw InternalCheckError("socle dimension is not mu - 1");

  ReductionResult red = minimal_reduction(ideal, seed);
  rep.reduction_r = red.r;
  rep.ci_colength = red.ci_colength;

  rep.ineq_mult_ord = rep.e0 + rep.ord_closure <= 2 * rep.lambda_closure;
  rep.ineq_mult_socle = rep.e0 + static_cast<long long>(rep.mu) - 1 <= 2 * rep.lambda;
  rep.colength_within_socle_bound =
      red.ci_colength - rep.lambda <= rep.lambda - rep.socle_dim;
  rep.tree_single_node = base_point_tree(ideal).orders.size() == 1;
  rep.mult_ord_tight = rep.e0 + rep.ord_closure == 2 * rep.lambda_closure;
  if (rep.tree_single_node != rep.mult_ord_tight)
    throw InternalCheckError("single-node tree and multiplicity tightness disagree");
  return rep;
}

}  // namespace gorcol
