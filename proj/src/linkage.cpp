#include "gorcol/linkage.hpp"

#include <numeric>

#include "gorcol/errors.hpp"

namespace gorcol {

namespace {

void require_rationals(const Field& f, const char* what) {
  if (f.is_prime_field())
    throw HypothesisError(std::string(what) + " is asserted over characteristic zero only");
}

bool contained_in(const IdealHandle& inner, const IdealHandle& outer) {
  for (const auto& g : inner.generators()) {
    int deg = *g.homogeneous_wdeg();
    IdealHandle probe = outer.degree_bound() >= deg ? outer : outer.with_bound(deg);
    if (!membership(g, probe)) return false;
  }
  return true;
}

}  // namespace

LinkStep make_link(const IdealHandle& C, const IdealHandle& B) {
  if (!C.ring()->same_ring(*B.ring()))
    throw RingMismatchError("link ideals live in different rings");
  if (!contained_in(C, B))
    throw HypothesisError("the Gorenstein ideal is not contained in the source");
  SocleInfo soc = socle(C);
  if (soc.dim != 1)
    throw HypothesisError("link ideal is not Gorenstein: socle dimension " +
                          std::to_string(soc.dim));
  LinkStep step;
  step.source = B;
  step.gorenstein_link = C;
  step.certified_gorenstein = true;
  int bound = std::max(C.degree_bound(), B.degree_bound());
  step.target = colon(C, B, bound);
  if (is_unit_ideal(step.target)) {
    // terminal link: (C : C) = T, double linking back is vacuous
    step.double_link_contains_source = true;
    step.double_link_equals_source = true;
    return step;
  }
  IdealHandle back = colon(C, step.target, bound);
  step.double_link_contains_source = contained_in(B, back);
  if (!step.double_link_contains_source)
    throw InternalCheckError("double link (C : (C : B)) lost the source ideal");
  try {
    step.double_link_equals_source = ideal_equal(B, back);
  } catch (const TruncationError&) {
    step.double_link_equals_source = false;  // not certifiable within the bound
  }
  return step;
}

bool verify_p2(const std::vector<int>& n_tuple, const Polynomial& f, int n) {
  const RingPtr& ring = f.ring();
  if (ring->nvars() != n_tuple.size())
    throw DimensionError("exponent tuple does not match the ring");
  if (n < 1) throw HypothesisError("colon power must be positive");
  auto sdeg = f.homogeneous_wdeg();
  if (!sdeg) throw InhomogeneousError("the annihilated element must be homogeneous");
  if (f.is_zero()) throw HypothesisError("the annihilated element must be nonzero");
  int s = *sdeg;
  int t = 0;
  for (int ni : n_tuple) {
    if (ni < 1) throw HypothesisError("pure powers must be positive");
    t += ni - 1;
  }
  if (s + n > t + 1) throw HypothesisError("exponent out of range: s + n > t + 1");

  int bound = t + n + 2;
  IdealHandle ci = pure_power_ideal(ring, n_tuple, bound);
  IdealHandle c = s == 0 ? ci : colon(ci, principal_ideal(f, bound), bound);
  IdealHandle lhs = colon(c, power_of_maximal(ring, n, bound), bound);
  IdealHandle rhs = ideal_sum(power_of_maximal(ring, (t + 1) - (s + n), bound), c);
  return ideal_equal(lhs, rhs);
}

PowerLinkResult power_link_exponent(std::size_t d, int n, int s, const Field& field) {
  require_rationals(field, "the power-link exponent identity");
  if (s < (static_cast<int>(d) - 2) * (n - 1) - 1)
    throw HypothesisError("s below (d-2)(n-1) - 1; identity not asserted there");
  PowerLinkResult res;
  res.witness = witness_ideal(d, n, s, field);
  const RingPtr& ring = res.witness.ideal.ring();
  int bound = res.witness.ideal.degree_bound();
  IdealHandle lhs = colon(res.witness.ideal, power_of_maximal(ring, n, bound), bound);
  res.rhs_exponent = std::max(0, (static_cast<int>(d) - 1) * (n - 1) - s);
  res.verified = ideal_equal(lhs, power_of_maximal(ring, res.rhs_exponent, bound));
  return res;
}

std::vector<LinkStep> chain_to_ci(std::size_t d, int n, const Field& field) {
  require_rationals(field, "the descending Gorenstein chain");
  if (d < 1 || n < 1) throw HypothesisError("chain requires d >= 1 and n >= 1");
  auto ring = PolyRing::make(d, field);
  std::vector<LinkStep> chain;
  for (int i = n; i >= 2; --i) {
    int s = std::max(0, (static_cast<int>(d) - 2) * (i - 1));
    WitnessResult w = witness_ideal(ring, i, s);
    int bound = w.ideal.degree_bound();
    LinkStep step = make_link(w.ideal, power_of_maximal(ring, i, bound));
    if (!ideal_equal(step.target, power_of_maximal(ring, i - 1, bound)))
      throw InternalCheckError("chain step did not land on the previous power");
    chain.push_back(std::move(step));
  }
  return chain;
}

SopContext make_sop_context(std::vector<int> exponents, const Field& field) {
  if (exponents.empty()) throw HypothesisError("empty system of parameters");
  for (int a : exponents)
    if (a < 1)
      throw HypothesisError("not a system of parameters: every exponent must be positive");
  SopContext ctx;
  ctx.exponents = std::move(exponents);
  ctx.ring = PolyRing::make(ctx.exponents.size(), field);
  ctx.rank_e = 1;
  int top = 0;  // Max(T/(f_1..f_d)) = sum (a_i - 1)
  for (int a : ctx.exponents) {
    ctx.rank_e *= static_cast<std::size_t>(a);
    top += a - 1;
  }
  IdealHandle f = pure_power_ideal(ctx.ring, ctx.exponents, top + 2);
  if (quotient_view(f).length() != ctx.rank_e)
    throw InternalCheckError("free rank of the parameter extension is off");
  return ctx;
}

namespace {

/// Y_i -> X_i^{a_i}, coefficientwise; the image is homogeneous for the
/// weights w_i = lcm(a)/a_i.
Polynomial substitute_powers(const RingPtr& target, const Polynomial& p,
                             const std::vector<int>& a) {
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(m.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] *= a[i];
    out = out + Polynomial::monomial(target, Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace

SopReport sop_verify(const SopContext& ctx, int n, int s) {
  require_rationals(ctx.ring->field(), "the parameter-power certification");
  if (n < 1) throw HypothesisError("power must be positive");
  if (s < 0) throw HypothesisError("witness exponent must be nonnegative");
  const std::vector<int>& a = ctx.exponents;
  const std::size_t d = a.size();
  const Field& field = ctx.ring->field();
  SopReport rep;
  rep.e = ctx.rank_e;

  int amax = *std::max_element(a.begin(), a.end());
  int sum_a = std::accumulate(a.begin(), a.end(), 0);
  int bound = (sum_a - static_cast<int>(d)) + (n - 1) * amax + amax + 2;

  // (i) length scaling under the free extension
  IdealHandle dparam = pure_power_ideal(ctx.ring, a, bound);
  auto tprime = PolyRing::make(d, field);
  rep.length_scaling = true;
  for (int k = 1; k <= n; ++k) {
    std::size_t lk = quotient_view(ideal_power(dparam, k)).length();
    std::size_t lpk = quotient_view(power_of_maximal(tprime, k, default_bound(d, k))).length();
    rep.lambda_power.push_back(lk);
    rep.lambda_prime.push_back(lpk);
    if (lk != rep.e * lpk) rep.length_scaling = false;
  }

  // (ii) witness base change, computed in the weighted grading that makes
  // every f_i = X_i^{a_i} homogeneous
  int L = 1;
  for (int ai : a) L = std::lcm(L, ai);
  std::vector<int> weights(d);
  for (std::size_t i = 0; i < d; ++i) weights[i] = L / a[i];
  auto wring = PolyRing::make(d, field, weights);
  int bound_w = L * (static_cast<int>(d) * (n - 1) - s) + static_cast<int>(d) * L + 2 * L;
  bound_w = std::max(bound_w, (s + 2) * L);  // keep l^s representable even when s degenerates

  std::vector<int> fn(d);
  for (std::size_t i = 0; i < d; ++i) fn[i] = a[i] * n;
  IdealHandle cif = pure_power_ideal(wring, fn, bound_w);
  IdealHandle cf = cif;
  if (s > 0) {
    Polynomial lf(wring);
    for (std::size_t i = 0; i < d; ++i)
      lf = lf + Polynomial::monomial(wring, wring->var(i, a[i]));
    Polynomial lfs = lf.pow(static_cast<unsigned>(s));
    if (membership(lfs, cif))
      throw DegenerateWitnessError("parameter witness degenerates: l^s in the intersection");
    cf = colon(cif, principal_ideal(lfs, bound_w), bound_w);
  }

  WitnessResult wprime = witness_ideal(d, n, s, field);
  std::vector<Polynomial> expanded;
  for (const auto& g : wprime.ideal.generators())
    expanded.push_back(substitute_powers(wring, g, a));
  IdealHandle expanded_ideal = IdealHandle::make(wring, std::move(expanded), bound_w);
  rep.witness_base_change = ideal_equal(cf, expanded_ideal);
  rep.witness_gorenstein = socle(cf).dim == 1;

  std::vector<Polynomial> dn_w;
  IdealHandle dn_std = ideal_power(dparam, n);
  for (const auto& g : dn_std.generators()) {
    Polynomial lifted(wring);
    for (const auto& [m, c] : g.terms())
      lifted = lifted + Polynomial::monomial(wring, m, c);
    dn_w.push_back(std::move(lifted));
  }
  IdealHandle dn_weighted = IdealHandle::make(wring, std::move(dn_w), bound_w);
  rep.witness_inside_power = true;
  for (const auto& g : cf.generators()) {
    if (!membership(g, dn_weighted)) {
      rep.witness_inside_power = false;
      break;
    }
  }

  // (iii) trace ideal of T/d^n is d^(n-1)
  IdealHandle dn = ideal_power(dparam, n);
  QuotientView R = quotient_view(dn);
  IdealHandle trace = trace_ideal(R);
  rep.trace_is_previous_power = ideal_equal(trace, ideal_power(dparam, n - 1));

  rep.g_lower = quotient_view(trace).length();
  rep.g_upper = quotient_view(cf).length() - R.length();
  rep.g_certified = rep.g_lower == rep.g_upper;
  return rep;
}

}  // namespace gorcol
