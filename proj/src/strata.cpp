#include "commvar/strata.hpp"

#include "commvar/error.hpp"

#include <algorithm>

namespace commvar::strata {

using exactlin::rank;

namespace {

void require_short_grading(const SymmetricPairModel& model) {
  if (!model.has_short_grading()) throw ParameterError("model has no short grading (need AIII_gl or DIII)");
}

bool all_commute(const std::vector<RatMat>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!liealg::bracket(basis[i], basis[j]).is_zero()) return false;
  return true;
}

Dim span_dim(const std::vector<RatMat>& mats) {
  if (mats.empty()) return 0;
  exactlin::RowSpace rs(mats.front().rows() * mats.front().cols());
  for (const auto& x : mats) rs.insert(x.entries());
  return rs.dim();
}

RatMat skew_unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMat x(n, n);
  x(i, j) = 1;
  x(j, i) = -1;
  return x;
}

}  // namespace

GradedPair assemble_pair(Family family, int n, int m, const RatMat& X, const RatMat& Y, const RatMat& Z,
                         const RatMat& U) {
  if (family == Family::BDI) throw ParameterError("graded pairs need a short grading");
  const std::size_t a = static_cast<std::size_t>(n);
  const std::size_t b = static_cast<std::size_t>(family == Family::DIII ? n : m);
  for (const RatMat* low : {&X, &Z})
    if (low->rows() != b || low->cols() != a) throw ParameterError("assemble_pair: g(1) blocks must be b x a");
  for (const RatMat* up : {&Y, &U})
    if (up->rows() != a || up->cols() != b) throw ParameterError("assemble_pair: g(-1) blocks must be a x b");
  GradedPair p;
  p.family = family;
  p.n = n;
  p.m = static_cast<int>(b);
  p.X = X;
  p.Y = Y;
  p.Z = Z;
  p.U = U;
  p.xi = RatMat(a + b, a + b);
  p.eta = RatMat(a + b, a + b);
  p.xi.set_block(a, 0, X);
  p.xi.set_block(0, a, Y);
  p.eta.set_block(a, 0, Z);
  p.eta.set_block(0, a, U);
  return p;
}

GradedPair make_pair(const SymmetricPairModel& model, const RatMat& xi, const RatMat& eta) {
  require_short_grading(model);
  if (!model.in_g1(xi) || !model.in_g1(eta)) throw ParameterError("make_pair: elements must lie in g1");
  const std::size_t a = model.a_dim(), b = model.ambient_dim() - a;
  return assemble_pair(model.family(), model.n(), model.m(), xi.block(a, 0, b, a), xi.block(0, a, a, b),
                       eta.block(a, 0, b, a), eta.block(0, a, a, b));
}

RatMat D1(const GradedPair& p) { return exactlin::hstack(p.X, p.Z); }

RatMat D2(const GradedPair& p) {
  if (p.family != Family::AIII_gl) throw ParameterError("D2 is defined for AIII_gl only");
  return exactlin::hstack(p.Y.transpose(), p.U.transpose());
}

StratumReport rank_sum_check(const GradedPair& p) {
  if (p.family != Family::AIII_gl || p.n > p.m) throw ParameterError("rank_sum_check: need AIII_gl with n <= m");
  StratumReport r;
  r.rkD1 = rank(D1(p));
  r.rkD2 = rank(D2(p));
  r.q = static_cast<int>(r.rkD1);
  r.commutes = liealg::bracket(p.xi, p.eta).is_zero();
  r.inequality_holds = r.commutes && r.rkD1 + r.rkD2 <= static_cast<Dim>(2 * p.n);
  return r;
}

int q_max(int n, int m) { return std::min(2 * n, m); }
int q_min(int n, int m) { return 2 * n - q_max(n, m); }

Dim lower_bound_components(int n, int m) {
  if (n < 1 || n > m) throw ParameterError("lower_bound_components: need 1 <= n <= m");
  return static_cast<Dim>(2 * q_max(n, m) - 2 * n + 1);
}

GradedPair witness_AIII(int n, int m, int q) {
  if (n < 1 || n > m) throw ParameterError("witness_AIII: need 1 <= n <= m");
  if (q < q_min(n, m) || q > q_max(n, m)) throw ParameterError("witness_AIII: q out of range");
  if (q < n) {
    // Transposition swaps the roles of D1 and D2.
    const GradedPair w = witness_AIII(n, m, 2 * n - q);
    return assemble_pair(Family::AIII_gl, n, m, w.Y.transpose(), w.X.transpose(), w.U.transpose(),
                         w.Z.transpose());
  }
  const std::size_t nn = static_cast<std::size_t>(n), mm = static_cast<std::size_t>(m);
  const std::size_t extra = static_cast<std::size_t>(q - n);
  RatMat X(mm, nn), Z(mm, nn), Y(nn, mm), U(nn, mm);
  for (std::size_t i = 0; i < nn; ++i) X(i, i) = 1;
  for (std::size_t i = 0; i < extra; ++i) Z(nn + i, i) = 1;
  for (std::size_t i = extra; i < nn; ++i) Y(i, i) = 1;
  return assemble_pair(Family::AIII_gl, n, m, X, Y, Z, U);
}

GradedPair witness_DIII(int n) {
  if (n < 3 || n % 2 == 0) throw ParameterError("witness_DIII: need odd n >= 3");
  const std::size_t k = static_cast<std::size_t>(n);
  RatMat X(k, k), Z(k, k);
  for (std::size_t i = 0; i + 1 < k; i += 2) {
    X += skew_unit(k, i, i + 1);
    Z += skew_unit(k, i + 1, i + 2);
  }
  return assemble_pair(Family::DIII, n, n, X, RatMat(k, k), Z, RatMat(k, k));
}

GradingProjections grading_projections(const SymmetricPairModel& model) {
  require_short_grading(model);
  GradingProjections out;
  out.g_minus1 = model.g_minus1_basis();
  out.g0 = model.g0_basis();
  out.g_plus1 = model.g_plus1_basis();
  const std::size_t N = model.ambient_dim(), a = model.a_dim();
  for (const auto& c : model.cartan_basis()) {
    RatMat lower(N, N), upper(N, N);
    lower.set_block(a, 0, c.block(a, 0, N - a, a));
    upper.set_block(0, a, c.block(0, a, a, N - a));
    out.c_plus1.push_back(std::move(lower));
    out.c_minus1.push_back(std::move(upper));
  }
  out.dim_c_plus1 = span_dim(out.c_plus1);
  out.dim_c_minus1 = span_dim(out.c_minus1);
  out.g_plus1_abelian = all_commute(out.g_plus1);
  out.g_minus1_abelian = all_commute(out.g_minus1);
  return out;
}

GradedPair sample_cartan_pair(const SymmetricPairModel& model, Rng& rng) {
  const auto g = liealg::random_G0_element(model, rng);
  const RatMat t = liealg::random_cartan_element(model, rng);
  const RatMat h = liealg::random_cartan_element(model, rng);
  return make_pair(model, liealg::conjugate(g, t), liealg::conjugate(g, h));
}

HeartReport heart_violation_report(Family family, int n, int m, std::size_t samples, Rng& rng) {
  HeartReport r;
  r.samples = samples;
  r.invariant = "rk D1 = rk(X|Z)";
  if (family == Family::AIII_gl && n != m) {
    const int lo = std::min(n, m), hi = std::max(n, m);  // (gl_{n+m}, gl_n + gl_m) is symmetric in n, m
    const auto model = liealg::build_model(Family::AIII_gl, lo, hi);
    for (std::size_t s = 0; s < samples; ++s)
      r.sampled_max = std::max(r.sampled_max, rank(D1(sample_cartan_pair(model, rng))));
    r.bound = static_cast<Dim>(lo);
    const std::size_t a = static_cast<std::size_t>(lo), b = static_cast<std::size_t>(hi);
    RatMat X(b, a), Z(b, a);
    for (std::size_t i = 0; i < a; ++i) X(i, i) = 1;
    for (std::size_t i = 0; i < a && a + i < b; ++i) Z(a + i, i) = 1;
    const auto w = assemble_pair(Family::AIII_gl, lo, hi, X, RatMat(a, b), Z, RatMat(a, b));
    r.witness_value = rank(D1(w));
    r.component_lower_bound = lower_bound_components(lo, hi);
    r.justification =
        "rk D1 is G0-invariant and lower semicontinuous, so the bound on c x c extends to the closure of "
        "G0 (c x c); the witness lies in g(1) x g(1) outside it";
  } else if (family == Family::DIII && n >= 3 && n % 2 == 1) {
    const auto model = liealg::build_model(Family::DIII, n);
    for (std::size_t s = 0; s < samples; ++s)
      r.sampled_max = std::max(r.sampled_max, rank(D1(sample_cartan_pair(model, rng))));
    r.bound = static_cast<Dim>(n - 1);
    r.witness_value = rank(D1(witness_DIII(n)));
    r.component_lower_bound = 3;
    r.justification =
        "for odd n every element of c has a kernel, so rk D1 < n on G0 (c x c) and its closure; the witness "
        "in g(1) x g(1) reaches n";
  } else {
    r.justification = "no separating rank invariant is known for this pair";
    return r;
  }
  if (r.sampled_max <= r.bound && r.witness_value > r.bound) r.verdict = Verdict::Violated;
  return r;
}

}  // namespace commvar::strata
