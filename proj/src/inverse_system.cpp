#include "gorcol/inverse_system.hpp"

#include <map>

#include "gorcol/errors.hpp"

namespace gorcol {

struct InverseSystem::Impl {
  QuotientView ambient;
  int top = -1;
  std::size_t dim = 0;
  std::vector<Echelon> duals;  // per dual degree 0..top
  mutable std::mutex mu;
  mutable std::map<std::pair<std::size_t, int>, std::unique_ptr<DenseMatrix>> contractions;
  std::vector<DualElement> gens;
};

InverseSystem InverseSystem::make(const QuotientView& ambient) {
  if (ambient.truncated())
    throw TruncationError("inverse system requires an Artinian quotient");
  auto impl = std::make_shared<Impl>();
  impl->ambient = ambient;
  const PolyRing& ring = *ambient.ring();
  const IdealHandle& I = ambient.ideal();
  impl->top = ambient.hilbert().empty() ? -1 : ambient.max_degree();
  for (int j = 0; j <= impl->top; ++j) {
    const Echelon& slice = I.slice(j);
    DenseMatrix rows(0, ring.dim(j), ring.field());
    for (std::size_t r = 0; r < slice.rank(); ++r) rows.append_row(slice.mat.row(r));
    auto kern = kernel_basis(rows);
    EchelonBuilder b(ring.field(), ring.dim(j));
    for (auto& v : kern) b.insert(std::move(v));
    Echelon e = b.to_echelon();
    if (e.rank() != ambient.h(j))
      throw InternalCheckError("dual slice dimension does not match the Hilbert function");
    impl->dim += e.rank();
    impl->duals.push_back(std::move(e));
  }
  if (impl->dim != ambient.length())
    throw InternalCheckError("inverse system dimension differs from the quotient length");

  // module generators: strip everything reachable by contraction from above
  InverseSystem sys;
  sys.impl_ = impl;
  for (int j = impl->top; j >= 0; --j) {
    if (sys.dim_at(j) == 0) continue;
    EchelonBuilder reach(ring.field(), ring.dim(j));
    for (std::size_t k = 0; k < ring.nvars(); ++k) {
      int above = j + ring.weight(k);
      if (above > impl->top) continue;
      const Echelon& up = impl->duals[above];
      for (std::size_t r = 0; r < up.rank() && !reach.full(); ++r)
        reach.insert(sys.contract_raw(above, up.mat.row(r), k));
    }
    const Echelon& here = impl->duals[j];
    for (std::size_t r = 0; r < here.rank(); ++r) {
      auto row = here.mat.row(r);
      if (reach.contains(row)) continue;
      auto rem = reach.remainder(row);
      // normalize the leading coefficient for a canonical generator
      for (auto& s : rem) {
        if (!s.is_zero()) {
          Scalar inv = s.inverse();
          for (auto& t : rem)
            if (!t.is_zero()) t = t * inv;
          break;
        }
      }
      impl->gens.push_back(DualElement{j, rem});
      reach.insert(std::move(rem));
    }
  }
  return sys;
}

const QuotientView& InverseSystem::ambient() const { return impl_->ambient; }
int InverseSystem::top_degree() const { return impl_->top; }
std::size_t InverseSystem::dim() const { return impl_->dim; }

std::size_t InverseSystem::dim_at(int j) const {
  if (j < 0 || j > impl_->top) return 0;
  return impl_->duals[j].rank();
}

const Echelon& InverseSystem::dual_basis(int j) const {
  if (j < 0 || j > impl_->top) throw DimensionError("dual degree out of range");
  return impl_->duals[j];
}

std::vector<Scalar> InverseSystem::contract_raw(int j, const std::vector<Scalar>& raw,
                                                std::size_t k) const {
  const PolyRing& ring = *impl_->ambient.ring();
  int to = j - ring.weight(k);
  if (to < 0) return {};
  const auto& basis = ring.basis(j);
  if (raw.size() != basis.size()) throw DimensionError("raw dual vector has wrong length");
  std::vector<Scalar> out(ring.dim(to), Scalar::zero(ring.field()));
  Monomial xk = ring.var(k);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (raw[c].is_zero()) continue;
    if (basis[c][k] < 1) continue;  // contraction kills this dual monomial
    out[ring.index_of(to, basis[c].quotient(xk))] += raw[c];
  }
  return out;
}

std::vector<Scalar> InverseSystem::express(int j, const std::vector<Scalar>& raw) const {
  const Echelon& e = dual_basis(j);
  std::vector<Scalar> coords;
  coords.reserve(e.rank());
  for (std::size_t r = 0; r < e.rank(); ++r) coords.push_back(raw[e.pivots[r]]);
  // verify raw = sum coords_r * row_r
  std::vector<Scalar> check = raw;
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t c = 0; c < check.size(); ++c)
      if (!e.mat.at(r, c).is_zero()) check[c] -= coords[r] * e.mat.at(r, c);
  for (const auto& s : check)
    if (!s.is_zero())
      throw InternalCheckError("vector does not lie in the inverse system slice");
  return coords;
}

const DenseMatrix& InverseSystem::contraction(std::size_t k, int j) const {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->contractions.find({k, j});
    if (it != impl_->contractions.end()) return *it->second;
  }
  const PolyRing& ring = *impl_->ambient.ring();
  int to = j - ring.weight(k);
  std::size_t target_dim = dim_at(to);
  const Echelon& src = dual_basis(j);
  auto m = std::make_unique<DenseMatrix>(target_dim, src.rank(), ring.field());
  for (std::size_t c = 0; c < src.rank(); ++c) {
    auto raw = contract_raw(j, src.mat.row(c), k);
    if (to < 0 || target_dim == 0) {
      for (const auto& s : raw)
        if (!s.is_zero())
          throw InternalCheckError("contraction left the inverse system");
      continue;
    }
    auto coords = express(to, raw);
    for (std::size_t r = 0; r < target_dim; ++r) m->at(r, c) = coords[r];
  }
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto [it, inserted] = impl_->contractions.emplace(std::make_pair(k, j), std::move(m));
  return *it->second;
}

const std::vector<InverseSystem::DualElement>& InverseSystem::module_generators() const {
  return impl_->gens;
}

struct HomBasis::Impl {
  QuotientView ambient;
  RingPtr ring;
  std::vector<Map> maps;
};

HomBasis HomBasis::make(const InverseSystem& omega) {
  auto impl = std::make_shared<Impl>();
  impl->ambient = omega.ambient();
  impl->ring = omega.ambient().ring();
  const PolyRing& ring = *impl->ring;
  const QuotientView& R = omega.ambient();
  const int top = omega.top_degree();

  for (int e = 0; e <= 2 * top; ++e) {
    // unknown layout: one block per dual degree j with omega_j and R_{e-j}
    // both nonzero
    std::vector<int> offset(top + 1, -1);
    std::size_t total = 0;
    for (int j = 0; j <= top; ++j) {
      int rd = e - j;
      if (omega.dim_at(j) == 0 || rd < 0 || rd > top || R.h(rd) == 0) continue;
      offset[j] = static_cast<int>(total);
      total += omega.dim_at(j) * R.h(rd);
    }
    if (total == 0) continue;

    // commutation constraints phi(x_k . w) = x_k phi(w), one block of rows
    // per (j, k) with a nonzero target
    std::vector<std::vector<Scalar>> rows;
    for (int j = 0; j <= top; ++j) {
      if (omega.dim_at(j) == 0) continue;
      for (std::size_t k = 0; k < ring.nvars(); ++k) {
        int jj = j - ring.weight(k);     // dual degree of x_k . w
        int t = e - jj;                  // R-degree of both sides
        if (t < 0 || t > top || R.h(t) == 0) continue;
        std::size_t ht = R.h(t);
        const DenseMatrix* ctr = nullptr;
        if (jj >= 0 && omega.dim_at(jj) > 0) ctr = &omega.contraction(k, j);
        const DenseMatrix* mult = nullptr;
        int rd = e - j;
        if (offset[j] >= 0) mult = &R.var_mult(k, rd);
        if (ctr == nullptr && mult == nullptr) continue;
        for (std::size_t w = 0; w < omega.dim_at(j); ++w) {
          for (std::size_t r = 0; r < ht; ++r) {
            std::vector<Scalar> row(total, Scalar::zero(ring.field()));
            bool nonzero = false;
            if (ctr != nullptr && offset[jj] >= 0) {
              for (std::size_t wp = 0; wp < omega.dim_at(jj); ++wp) {
                const Scalar& c = ctr->at(wp, w);
                if (c.is_zero()) continue;
                row[offset[jj] + wp * ht + r] += c;
                nonzero = true;
              }
            }
            if (mult != nullptr) {
              std::size_t hsrc = R.h(rd);
              for (std::size_t c = 0; c < hsrc; ++c) {
                const Scalar& m = mult->at(r, c);
                if (m.is_zero()) continue;
                row[offset[j] + w * hsrc + c] -= m;
                nonzero = true;
              }
            }
            if (nonzero) rows.push_back(std::move(row));
          }
        }
      }
    }
    DenseMatrix M = DenseMatrix::from_rows(ring.field(), total, rows);
    auto kern = kernel_basis(M);
    for (const auto& v : kern) {
      Map map;
      map.degree = e;
      map.blocks.reserve(top + 1);
      for (int j = 0; j <= top; ++j) {
        std::size_t rd_h = (offset[j] >= 0) ? R.h(e - j) : 0;
        DenseMatrix block(omega.dim_at(j), rd_h, ring.field());
        if (offset[j] >= 0) {
          for (std::size_t w = 0; w < omega.dim_at(j); ++w)
            for (std::size_t c = 0; c < rd_h; ++c)
              block.at(w, c) = v[offset[j] + w * rd_h + c];
        }
        map.blocks.push_back(std::move(block));
      }
      impl->maps.push_back(std::move(map));
    }
  }
  HomBasis h;
  h.impl_ = std::move(impl);
  return h;
}

const std::vector<HomBasis::Map>& HomBasis::maps() const { return impl_->maps; }
std::size_t HomBasis::dim() const { return impl_->maps.size(); }

Polynomial HomBasis::apply(const InverseSystem& omega, const Map& map,
                           const InverseSystem::DualElement& w) const {
  const QuotientView& R = impl_->ambient;
  const PolyRing& ring = *impl_->ring;
  int j = w.degree;
  int rd = map.degree - j;
  Polynomial out(impl_->ring);
  if (rd < 0 || j < 0 || j >= static_cast<int>(map.blocks.size())) return out;
  const DenseMatrix& block = map.blocks[j];
  if (block.cols() == 0) return out;
  auto coords = omega.express(j, w.raw);
  std::vector<Scalar> img(block.cols(), Scalar::zero(ring.field()));
  for (std::size_t ww = 0; ww < block.rows(); ++ww) {
    if (coords[ww].is_zero()) continue;
    for (std::size_t c = 0; c < block.cols(); ++c) img[c] += coords[ww] * block.at(ww, c);
  }
  const auto& std_mons = R.std_monomials(rd);
  for (std::size_t c = 0; c < img.size(); ++c) {
    if (!img[c].is_zero())
      out = out + Polynomial::monomial(impl_->ring, std_mons[c], img[c]);
  }
  return out;
}

IdealHandle trace_ideal(const QuotientView& ambient) {
  const IdealHandle& I = ambient.ideal();
  if (ambient.truncated()) throw TruncationError("trace ideal requires an Artinian quotient");
  if (ambient.hilbert().empty()) return minimalize(I, I.degree_bound());  // zero ring
  InverseSystem omega = InverseSystem::make(ambient);
  HomBasis hom = HomBasis::make(omega);
  std::vector<Polynomial> gens = I.generators();
  for (const auto& map : hom.maps()) {
    for (const auto& w : omega.module_generators()) {
      Polynomial img = hom.apply(omega, map, w);
      if (!img.is_zero()) gens.push_back(std::move(img));
    }
  }
  IdealHandle raw = IdealHandle::make(ambient.ring(), std::move(gens), I.degree_bound());
  return minimalize(raw, I.degree_bound());
}

bool is_gorenstein(const QuotientView& ambient) {
  return socle(ambient.ideal()).dim == 1;
}

bool is_compressed(const QuotientView& ambient) {
  if (ambient.truncated()) throw TruncationError("compressed check requires Artinian quotient");
  if (ambient.hilbert().empty()) return false;
  const PolyRing& ring = *ambient.ring();
  int t = ambient.max_degree();
  for (int i = 0; i <= t; ++i) {
    std::size_t cap = std::min(ring.dim(i), ring.dim(t - i));
    if (ambient.h(i) != cap) return false;
  }
  return true;
}

}  // namespace gorcol
