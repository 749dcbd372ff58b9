#include "commvar/liealg.hpp"

#include "commvar/error.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace commvar::liealg {

using exactlin::RatVec;

std::string to_string(Family f) {
  switch (f) {
    case Family::BDI: return "BDI";
    case Family::AIII_gl: return "AIII_gl";
    case Family::DIII: return "DIII";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s == "BDI") return Family::BDI;
  if (s == "AIII" || s == "AIII_GL") return Family::AIII_gl;
  if (s == "DIII") return Family::DIII;
  throw ParameterError("unknown family '" + name + "' (expected BDI, AIII or DIII)");
}

// --- CoordinateMap ----------------------------------------------------------

CoordinateMap::CoordinateMap(const std::vector<RatMat>& basis) : basis_(basis) {
  if (basis_.empty()) return;
  const std::size_t width = basis_.front().entries().size();
  std::vector<RatVec> rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.push_back(b.entries());
  RatMat r = RatMat::from_rows(rows, width);
  positions_ = exactlin::rref(r);
  if (positions_.size() != basis_.size())
    throw ConstructionError("CoordinateMap: basis is linearly dependent");
  const std::size_t d = basis_.size();
  RatMat m(d, d);
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t i = 0; i < d; ++i) m(row, i) = basis_[i].entries()[positions_[row]];
  inv_ = *exactlin::inverse(m);
}

RatVec CoordinateMap::coordinates(const RatMat& x) const {
  RatVec v(positions_.size());
  for (std::size_t r = 0; r < positions_.size(); ++r) v[r] = x.entries()[positions_[r]];
  RatVec c = inv_ * v;
  RatMat rebuilt(x.rows(), x.cols());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) rebuilt += c[i] * basis_[i];
  if (!(rebuilt == x)) throw ParameterError("element lies outside the span of the basis");
  return c;
}

bool CoordinateMap::contains(const RatMat& x) const {
  try {
    coordinates(x);
    return true;
  } catch (const ParameterError&) {
    return false;
  }
}

// --- model construction -----------------------------------------------------

namespace {

using Position = std::pair<std::size_t, std::size_t>;

RatMat unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMat e(n, n);
  e(i, j) = 1;
  return e;
}

/// Basis of {x supported on `support` : x^t J + J x = 0} (no constraint when J is absent).
std::vector<RatMat> basis_on_support(std::size_t n, const std::vector<Position>& support,
                                     const std::optional<RatMat>& form) {
  std::vector<RatMat> out;
  if (!form) {
    for (auto [i, j] : support) out.push_back(unit(n, i, j));
    return out;
  }
  const RatMat& J = *form;
  RatMat constraints(n * n, support.size());
  for (std::size_t k = 0; k < support.size(); ++k) {
    const auto [i, j] = support[k];
    for (std::size_t c = 0; c < n; ++c) constraints(j * n + c, k) += J(i, c);
    for (std::size_t r = 0; r < n; ++r) constraints(r * n + j, k) += J(r, i);
  }
  for (const auto& v : exactlin::kernel_basis(constraints)) {
    RatMat x(n, n);
    for (std::size_t k = 0; k < support.size(); ++k) x(support[k].first, support[k].second) = v[k];
    out.push_back(std::move(x));
  }
  return out;
}

enum class Region { Diagonal, LowerLeft, UpperRight };

std::vector<Position> region(std::size_t n, std::size_t split, Region which) {
  std::vector<Position> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool ia = i < split, ja = j < split;
      const bool keep = (which == Region::Diagonal && ia == ja) ||
                        (which == Region::LowerLeft && !ia && ja) ||
                        (which == Region::UpperRight && ia && !ja);
      if (keep) out.emplace_back(i, j);
    }
  return out;
}

RatMat sign_matrix(std::size_t n, std::size_t split, long first, long second) {
  RatMat a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = i < split ? first : second;
  return a;
}

}  // namespace

void SymmetricPairModel::finish() {
  g_ = g0_;
  g_.insert(g_.end(), g1_.begin(), g1_.end());
  coords_ = CoordinateMap(g_);
}

SymmetricPairModel build_model(Family family, int n, int m) {
  SymmetricPairModel model;
  model.family_ = family;
  model.n_ = n;
  model.m_ = m;
  switch (family) {
    case Family::BDI:
    case Family::AIII_gl: {
      if (n < 1 || m < 1) throw ParameterError("build_model: need n, m >= 1");
      const std::size_t N = static_cast<std::size_t>(n + m);
      model.ambient_ = N;
      model.a_dim_ = static_cast<std::size_t>(n);
      model.sigma_ = sign_matrix(N, n, -1, 1);
      if (family == Family::BDI) model.form_ = RatMat::identity(N);
      model.g0_ = basis_on_support(N, region(N, n, Region::Diagonal), model.form_);
      const std::size_t r = static_cast<std::size_t>(std::min(n, m));
      if (family == Family::BDI) {
        model.g1_ = basis_on_support(N, region(N, n, Region::LowerLeft), std::nullopt);
        // Off-diagonal skew elements are determined by their lower-left block.
        for (auto& x : model.g1_) x -= x.transpose();
        for (std::size_t i = 0; i < r; ++i)
          model.cartan_.push_back(unit(N, i, n + i) - unit(N, n + i, i));
      } else {
        model.g_plus1_ = basis_on_support(N, region(N, n, Region::LowerLeft), std::nullopt);
        model.g_minus1_ = basis_on_support(N, region(N, n, Region::UpperRight), std::nullopt);
        model.g1_ = model.g_minus1_;
        model.g1_.insert(model.g1_.end(), model.g_plus1_.begin(), model.g_plus1_.end());
        for (std::size_t i = 0; i < r; ++i)
          model.cartan_.push_back(unit(N, i, n + i) + unit(N, n + i, i));
      }
      break;
    }
    case Family::DIII: {
      if (n < 2) throw ParameterError("build_model: DIII needs n >= 2");
      model.m_ = n;
      const std::size_t k = static_cast<std::size_t>(n);
      const std::size_t N = 2 * k;
      model.ambient_ = N;
      model.a_dim_ = k;
      model.sigma_ = sign_matrix(N, k, 1, -1);
      RatMat J(N, N);
      for (std::size_t i = 0; i < k; ++i) {
        J(i, k + i) = 1;
        J(k + i, i) = 1;
      }
      model.form_ = J;
      model.g0_ = basis_on_support(N, region(N, k, Region::Diagonal), J);
      model.g_plus1_ = basis_on_support(N, region(N, k, Region::LowerLeft), J);
      model.g_minus1_ = basis_on_support(N, region(N, k, Region::UpperRight), J);
      model.g1_ = model.g_minus1_;
      model.g1_.insert(model.g1_.end(), model.g_plus1_.begin(), model.g_plus1_.end());
      // [[0,X],[X,0]] with X skew and supported on the anti-diagonal.
      for (std::size_t i = 0; 2 * (i + 1) <= k; ++i) {
        const std::size_t j = k - 1 - i;
        RatMat x(N, N);
        x(i, k + j) = 1;
        x(j, k + i) = -1;
        x(k + i, j) = 1;
        x(k + j, i) = -1;
        model.cartan_.push_back(std::move(x));
      }
      break;
    }
  }
  model.finish();
  return model;
}

SymmetricPairModel build_bdi_with_form(int n, int m, const RatMat& form) {
  if (n < 1 || m < 1) throw ParameterError("build_bdi_with_form: need n, m >= 1");
  const std::size_t N = static_cast<std::size_t>(n + m);
  if (form.rows() != N || form.cols() != N || !(form == form.transpose()))
    throw ParameterError("build_bdi_with_form: form must be a symmetric (n+m)x(n+m) matrix");
  if (!form.block(0, n, n, m).is_zero())
    throw ParameterError("build_bdi_with_form: form must be block diagonal on V_a + V_b");
  if (exactlin::rank(form) != N) throw ParameterError("build_bdi_with_form: form is degenerate");
  SymmetricPairModel model;
  model.family_ = Family::BDI;
  model.n_ = n;
  model.m_ = m;
  model.ambient_ = N;
  model.a_dim_ = static_cast<std::size_t>(n);
  model.sigma_ = sign_matrix(N, n, -1, 1);
  model.form_ = form;
  model.g0_ = basis_on_support(N, region(N, n, Region::Diagonal), form);
  auto off = region(N, n, Region::LowerLeft);
  const auto upper = region(N, n, Region::UpperRight);
  off.insert(off.end(), upper.begin(), upper.end());
  model.g1_ = basis_on_support(N, off, form);
  model.finish();
  return model;
}

bool SymmetricPairModel::in_g(const RatMat& x) const {
  return x.rows() == ambient_ && x.cols() == ambient_ && coords_.contains(x);
}

bool SymmetricPairModel::in_g0(const RatMat& x) const {
  return in_g(x) && sigma_ * x == x * sigma_;
}

bool SymmetricPairModel::in_g1(const RatMat& x) const {
  return in_g(x) && sigma_ * x == -(x * sigma_);
}

RatMat SymmetricPairModel::ad_matrix(const RatMat& x) const {
  std::vector<RatVec> cols;
  cols.reserve(g_.size());
  for (const auto& b : g_) cols.push_back(coords_.coordinates(bracket(x, b)));
  return RatMat::from_columns(cols, g_.size());
}

std::string SymmetricPairModel::label() const {
  if (family_ == Family::DIII) return "DIII(" + std::to_string(n_) + ")";
  return to_string(family_) + "(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
}

// --- operations -------------------------------------------------------------

RatMat bracket(const RatMat& x, const RatMat& y) { return exactlin::commutator(x, y); }

CentralizerDims centralizer_dims(const SymmetricPairModel& model, const RatMat& x) {
  const RatMat ad = model.ad_matrix(x);
  const std::size_t d0 = model.g0_basis().size();
  const std::size_t d1 = model.g1_basis().size();
  const std::size_t d = d0 + d1;
  CentralizerDims out;
  out.g0x = d0 - exactlin::rank(ad.block(0, 0, d, d0));
  out.g1x = d1 - exactlin::rank(ad.block(0, d0, d, d1));
  return out;
}

Dim centralizer_dim(const SymmetricPairModel& model, const RatMat& x) {
  const RatMat ad = model.ad_matrix(x);
  return ad.cols() - exactlin::rank(ad);
}

Dim centralizer_pair_dim(const SymmetricPairModel& model, const RatMat& x, const RatMat& y) {
  const RatMat stacked = exactlin::vstack(model.ad_matrix(x), model.ad_matrix(y));
  return stacked.cols() - exactlin::rank(stacked);
}

bool check_z2(const SymmetricPairModel& model, const RatMat& x) {
  const auto dims = centralizer_dims(model, x);
  const long lhs = static_cast<long>(dims.g1x) - static_cast<long>(dims.g0x);
  const long rhs =
      static_cast<long>(model.g1_basis().size()) - static_cast<long>(model.g0_basis().size());
  return lhs == rhs;
}

bool is_nilpotent(const RatMat& x) {
  return exactlin::power(x, static_cast<unsigned>(x.rows())).is_zero();
}

bool is_semisimple(const RatMat& x) {
  const auto p = exactlin::minimal_polynomial(x);
  return exactlin::RatPoly::gcd(p, p.derivative()).degree() == 0;
}

GroupElement random_G0_element(const SymmetricPairModel& model, Rng& rng) {
  const std::size_t N = model.ambient_dim();
  constexpr int kMaxTries = 32;
  if (model.family() == Family::AIII_gl) {
    const std::size_t a = model.a_dim();
    auto random_invertible = [&](std::size_t k) {
      for (int t = 0; t < kMaxTries; ++t) {
        RatMat b(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) b(i, j) = rng.uniform(-2, 2);
        if (exactlin::rank(b) == k) return b;
      }
      throw ConstructionError("random_G0_element: no invertible block found");
    };
    const RatMat g = exactlin::block_diagonal({random_invertible(a), random_invertible(N - a)});
    return {g, *exactlin::inverse(g)};
  }
  const RatMat id = RatMat::identity(N);
  for (int t = 0; t < kMaxTries; ++t) {
    const RatMat s = rng.combination(model.g0_basis(), N);
    auto inv = exactlin::inverse(id + s);
    if (!inv) continue;  // degenerate Cayley parameter
    const RatMat g = (id - s) * *inv;
    return {g, *exactlin::inverse(g)};
  }
  throw ConstructionError("random_G0_element: Cayley transform kept degenerating");
}

RatMat conjugate(const GroupElement& g, const RatMat& x) { return g.g * x * g.g_inv; }

RatMat sample_G0_conjugate(const SymmetricPairModel& model, const RatMat& x, Rng& rng) {
  return conjugate(random_G0_element(model, rng), x);
}

RatMat random_g1_element(const SymmetricPairModel& model, Rng& rng) {
  return rng.combination(model.g1_basis(), model.ambient_dim());
}

RatMat random_cartan_element(const SymmetricPairModel& model, Rng& rng) {
  return rng.combination(model.cartan_basis(), model.ambient_dim());
}

namespace {
Dim dim_so(long p) { return p <= 0 ? 0 : static_cast<Dim>(p * (p - 1) / 2); }
}  // namespace

SubpairReport subpair_dims_at(const SymmetricPairModel& model, const RatMat& h) {
  if (model.family() != Family::BDI) throw ParameterError("subpair_dims_at: model must be BDI");
  if (!model.in_g1(h)) throw ParameterError("subpair_dims_at: h is not in g1");
  if (!is_semisimple(h)) throw ParameterError("subpair_dims_at: h is not semisimple");

  const std::size_t N = model.ambient_dim();
  const std::size_t z = N - exactlin::rank(h);
  const auto p = exactlin::charpoly(h);
  // p(t) = t^z q(t^2); the roots of q are the squared nonzero eigenvalues.
  RatVec q;
  for (std::size_t i = z; i <= N; i += 2) q.push_back(p.coeff(i));
  for (std::size_t i = z + 1; i <= N; i += 2)
    if (sgn(p.coeff(i)) != 0) throw ConstructionError("subpair_dims_at: charpoly is not even");

  SubpairReport rep;
  const auto parts = exactlin::squarefree_decomposition(exactlin::RatPoly(q));
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (long c = 0; c < parts[j].degree(); ++c) rep.multiplicities.push_back(j + 1);
  std::sort(rep.multiplicities.rbegin(), rep.multiplicities.rend());
  for (auto k : rep.multiplicities) rep.k += k;

  const long n = model.n(), m = model.m(), k = static_cast<long>(rep.k);
  Dim gh = dim_so(n + m - 2 * k), g0h = dim_so(n - k) + dim_so(m - k);
  for (auto ki : rep.multiplicities) {
    gh += ki * ki;
    g0h += dim_so(static_cast<long>(ki));
  }
  rep.predicted = {g0h, gh - g0h};
  rep.computed = centralizer_dims(model, h);
  rep.match = rep.predicted.g0x == rep.computed.g0x && rep.predicted.g1x == rep.computed.g1x;
  return rep;
}

}  // namespace commvar::liealg
