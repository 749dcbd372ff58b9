#include "commvar/spinor.hpp"

#include "commvar/error.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace commvar::spinor {

using exactlin::RowSpace;

namespace {

constexpr std::size_t kFock = 32;

/// Sign (-1)^{#elements of mask below bit i}.
long sign_below(unsigned mask, std::size_t i) {
  return std::popcount(mask & ((1u << i) - 1u)) % 2 == 0 ? 1 : -1;
}

/// Clifford action of the V basis vector k on the full exterior algebra.
RatMat clifford(std::size_t k) {
  RatMat c(kFock, kFock);
  const std::size_t i = k % SpinModel::kRank;
  const unsigned bit = 1u << i;
  for (unsigned s = 0; s < kFock; ++s) {
    if (k < SpinModel::kRank) {
      if (!(s & bit)) c(s | bit, s) = sign_below(s, i);
    } else {
      if (s & bit) c(s & ~bit, s) = sign_below(s, i);
    }
  }
  return c;
}

std::string monomial_label(unsigned mask) {
  if (mask == 0) return "1";
  std::string s;
  for (std::size_t i = 0; i < SpinModel::kRank; ++i)
    if (mask & (1u << i)) s += "e" + std::to_string(i + 1);
  return s;
}

/// Sparse entries (k, i, j, c) of B, both orders of (i, j).
struct Entry {
  std::size_t k, i, j;
  Rat c;
};

std::vector<Entry> sparse(const QuarticInvariant& inv) {
  std::vector<Entry> out;
  for (std::size_t k = 0; k < inv.components.size(); ++k) {
    const RatMat& b = inv.components[k];
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(i, j)) != 0) out.push_back({k, i, j, b(i, j)});
  }
  return out;
}

RatVec eval_B(const std::vector<Entry>& b, const RatVec& u, const RatVec& v) {
  RatVec out(SpinModel::kVDim);
  for (const auto& e : b)
    if (sgn(u[e.i]) != 0 && sgn(v[e.j]) != 0) out[e.k] += e.c * u[e.i] * v[e.j];
  return out;
}

Rat pairing(const RatMat& metric, const RatVec& x, const RatVec& y) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(metric(i, j)) != 0) s += x[i] * metric(i, j) * y[j];
  }
  return s;
}

std::vector<Rat> v_weight(std::size_t k) {
  std::vector<Rat> w(SpinModel::kRank);
  w[k % SpinModel::kRank] = k < SpinModel::kRank ? -1 : 1;
  return w;
}

std::vector<Rat> add(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  std::vector<Rat> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

}  // namespace

std::size_t SpinModel::index_of(unsigned mask) const {
  const auto it = std::find(monomials.begin(), monomials.end(), mask);
  if (it == monomials.end()) throw ParameterError("monomial is not in the half-spin space");
  return static_cast<std::size_t>(it - monomials.begin());
}

SpinModel build_spin_model() {
  SpinModel s;
  for (int deg : {0, 2, 4})
    for (unsigned mask = 0; mask < kFock; ++mask)
      if (std::popcount(mask) == deg) s.monomials.push_back(mask);
  for (unsigned mask : s.monomials) {
    s.labels.push_back(monomial_label(mask));
    std::vector<Rat> w(SpinModel::kRank);
    for (std::size_t i = 0; i < SpinModel::kRank; ++i) w[i] = Rat((mask & (1u << i)) ? -1 : 1, 2);
    s.weights.push_back(std::move(w));
  }

  constexpr std::size_t n = SpinModel::kVDim, r = SpinModel::kRank;
  s.metric = RatMat(n, n);
  for (std::size_t i = 0; i < r; ++i) s.metric(i, r + i) = s.metric(r + i, i) = 1;

  std::vector<RatMat> cl;
  for (std::size_t k = 0; k < n; ++k) cl.push_back(clifford(k));
  const std::size_t d = s.monomials.size();
  auto restrict = [&](const RatMat& full) {
    RatMat out(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) out(a, b) = full(s.monomials[a], s.monomials[b]);
    return out;
  };
  auto spin = [&](std::size_t u, std::size_t v) {
    // rho(M_{u,v}) = uv - (u,v)/2 = (uv - vu)/2 in the Clifford algebra
    return restrict(Rat(1, 2) * (cl[u] * cl[v] - cl[v] * cl[u]));
  };
  auto on_V = [&](std::size_t u, std::size_t v) {
    RatMat m(n, n);  // M_{u,v}(w) = (v,w)u - (u,w)v
    for (std::size_t w = 0; w < n; ++w) {
      m(u, w) += s.metric(v, w);
      m(v, w) -= s.metric(u, w);
    }
    return m;
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      s.generator_pairs.emplace_back(u, v);
      s.action_V.push_back(on_V(u, v));
      s.action_Delta.push_back(spin(u, v));
    }
  for (std::size_t i = 0; i < r; ++i) s.cartan_Delta.push_back(spin(r + i, i));
  return s;
}

bool so10_relations_hold(const SpinModel& s) {
  const std::size_t g = s.action_V.size(), n = SpinModel::kVDim;
  std::vector<RatVec> cols;
  for (const auto& m : s.action_V) cols.push_back(m.entries());
  const RatMat G = RatMat::from_columns(cols, n * n);
  const auto left = exactlin::inverse(G.transpose() * G);
  if (!left) return false;
  const RatMat L = *left * G.transpose();
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = a + 1; b < g; ++b) {
      const RatMat br = exactlin::commutator(s.action_V[a], s.action_V[b]);
      const RatVec c = L * br.entries();
      if (!(G * c == br.entries())) return false;
      RatMat rho(s.dim(), s.dim());
      for (std::size_t k = 0; k < g; ++k)
        if (sgn(c[k]) != 0) rho += c[k] * s.action_Delta[k];
      if (!(exactlin::commutator(s.action_Delta[a], s.action_Delta[b]) == rho)) return false;
    }
  return true;
}

QuarticInvariant equivariant_projection(const SpinModel& s) {
  const std::size_t d = s.dim(), n = SpinModel::kVDim;
  // Torus equivariance forces B_k(i,j) = 0 unless wt_i + wt_j = wt(V_k), so only
  // those coefficients are unknowns.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> unknown;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> order;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j)
        if (add(s.weights[i], s.weights[j]) == v_weight(k)) {
          unknown[{k, i, j}] = order.size();
          order.emplace_back(k, i, j);
        }
  const std::size_t u = order.size();
  auto idx = [&](std::size_t k, std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    const auto it = unknown.find({k, std::min(i, j), std::max(i, j)});
    if (it == unknown.end()) return std::nullopt;
    return it->second;
  };

  // x.B(e_i,e_j) - B(x e_i, e_j) - B(e_i, x e_j) = 0
  RowSpace eqs(u);
  for (std::size_t g = 0; g < s.action_V.size() && eqs.dim() + 1 < u; ++g) {
    const RatMat& XV = s.action_V[g];
    const RatMat& XD = s.action_Delta[g];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          RatVec row(u);
          bool any = false;
          for (std::size_t l = 0; l < n; ++l)
            if (sgn(XV(k, l)) != 0)
              if (auto x = idx(l, i, j)) row[*x] += XV(k, l), any = true;
          for (std::size_t p = 0; p < d; ++p) {
            if (sgn(XD(p, i)) != 0)
              if (auto x = idx(k, p, j)) row[*x] -= XD(p, i), any = true;
            if (sgn(XD(p, j)) != 0)
              if (auto x = idx(k, i, p)) row[*x] -= XD(p, j), any = true;
          }
          if (any && !exactlin::is_zero(row)) eqs.insert(row);
        }
  }
  const auto kernel = exactlin::kernel_basis(RatMat::from_rows(eqs.basis(), u));
  if (kernel.size() != 1)
    throw ConstructionError("equivariant_projection: solution space has dimension " +
                            std::to_string(kernel.size()));

  RatVec sol = kernel.front();
  const auto first = std::find_if(sol.begin(), sol.end(), [](const Rat& x) { return sgn(x) != 0; });
  const Rat lead = *first;
  for (auto& x : sol) x /= lead;

  QuarticInvariant inv;
  inv.unknowns = u;
  inv.components.assign(n, RatMat(d, d));
  for (std::size_t t = 0; t < u; ++t) {
    const auto [k, i, j] = order[t];
    inv.components[k](i, j) = sol[t];
    inv.components[k](j, i) = sol[t];
  }
  // The early stop above leaves equations unused; a full check settles the dimension.
  if (!equivariance_exact(s, inv)) throw ConstructionError("equivariant_projection: residual is nonzero");
  inv.solution_dim = 1;
  return inv;
}

RatVec apply_B(const QuarticInvariant& inv, const RatVec& u, const RatVec& v) {
  return eval_B(sparse(inv), u, v);
}

bool equivariance_exact(const SpinModel& s, const QuarticInvariant& inv) {
  const std::size_t n = SpinModel::kVDim;
  for (std::size_t g = 0; g < s.action_V.size(); ++g) {
    const RatMat& XD = s.action_Delta[g];
    for (std::size_t k = 0; k < n; ++k) {
      RatMat lhs(s.dim(), s.dim());
      for (std::size_t l = 0; l < n; ++l)
        if (sgn(s.action_V[g](k, l)) != 0) lhs += s.action_V[g](k, l) * inv.components[l];
      lhs -= XD.transpose() * inv.components[k] + inv.components[k] * XD;
      if (!lhs.is_zero()) return false;
    }
  }
  return true;
}

Rat quartic_invariant_value(const SpinModel& s, const QuarticInvariant& inv, const RatVec& u, const RatVec& v) {
  const auto b = sparse(inv);
  return pairing(s.metric, eval_B(b, u, u), eval_B(b, v, v));
}

CartanC1 cartan_c1(const SpinModel& s) {
  std::vector<Rat> top(SpinModel::kRank, Rat(1, 2)), other(SpinModel::kRank, Rat(-1, 2));
  other[0] = Rat(1, 2);
  CartanC1 c;
  for (const auto& target : {top, other}) {
    const auto it = std::find(s.weights.begin(), s.weights.end(), target);
    if (it == s.weights.end()) throw ConstructionError("cartan_c1: weight not found");
    RatVec v(s.dim());
    v[static_cast<std::size_t>(it - s.weights.begin())] = 1;
    c.basis.push_back(std::move(v));
    c.weights.push_back(target);
  }
  return c;
}

std::optional<std::vector<Rat>> halfspace_check(const std::vector<std::vector<Rat>>& weights) {
  if (weights.empty()) return std::vector<Rat>{};
  const std::size_t m = weights.size(), r = weights.front().size();
  // <w, p - q> - s + a = 1 with p, q, s, a >= 0; minimize sum a.
  const std::size_t cols = 2 * r + 2 * m;
  std::vector<RatVec> T(m, RatVec(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      T[i][j] = weights[i][j];
      T[i][r + j] = -weights[i][j];
    }
    T[i][2 * r + i] = -1;
    T[i][2 * r + m + i] = 1;
    T[i][cols] = 1;
    basis[i] = 2 * r + m + i;
  }
  auto reduced_cost = [&](std::size_t j) {
    // cost of artificials is 1, all others 0
    Rat c = j >= 2 * r + m ? 1 : 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= 2 * r + m) c -= T[i][j];
    return c;
  };
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(reduced_cost(j)) < 0) {
        enter = j;  // Bland: first improving column
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(T[i][enter]) > 0) {
        const Rat ratio = T[i][cols] / T[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    if (leave == m) break;  // unbounded in phase one cannot happen; stop defensively
    const Rat piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i)
      if (i != leave && sgn(T[i][enter]) != 0) T[i] = exactlin::add_scaled(std::move(T[i]), T[leave], -T[i][enter]);
    basis[leave] = enter;
  }
  std::vector<Rat> mu(r);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= 2 * r + m && sgn(T[i][cols]) != 0) return std::nullopt;
    if (basis[i] < r) mu[basis[i]] += T[i][cols];
    else if (basis[i] < 2 * r) mu[basis[i] - r] -= T[i][cols];
  }
  for (const auto& w : weights) {
    Rat dot = 0;
    for (std::size_t j = 0; j < r; ++j) dot += w[j] * mu[j];
    if (sgn(dot) <= 0) return std::nullopt;
  }
  return mu;
}

std::optional<WitnessPair> find_witness(const SpinModel& s, const QuarticInvariant& inv) {
  const auto b = sparse(inv);
  struct Cand {
    RatVec u, Bu;
    std::string label;
  };
  std::vector<Cand> cands;
  const std::size_t d = s.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      RatVec u(d);
      u[i] += 1;
      if (j != i) u[j] += 1;
      RatVec Bu = eval_B(b, u, u);
      if (exactlin::is_zero(Bu)) continue;
      cands.push_back({std::move(u), std::move(Bu), i == j ? s.labels[i] : s.labels[i] + " + " + s.labels[j]});
    }
  for (const auto& x : cands)
    for (const auto& y : cands) {
      const Rat val = pairing(s.metric, x.Bu, y.Bu);
      if (sgn(val) != 0) return WitnessPair{x.u, y.u, x.label, y.label, val};
    }
  return std::nullopt;
}

InvarianceReport infinitesimal_invariance(const SpinModel& s, const QuarticInvariant& inv, Rng& rng) {
  const auto b = sparse(inv);
  const std::size_t d = s.dim();
  InvarianceReport rep;
  rep.all_zero = true;
  auto random_vec = [&] {
    RatVec v(d);
    for (auto& x : v) x = rng.small_rat();
    return v;
  };
  for (const auto& X : s.action_Delta) {
    ++rep.generators;
    const RatVec u1 = random_vec(), u2 = random_vec(), v1 = random_vec(), v2 = random_vec();
    for (long s1 = 0; s1 <= 2; ++s1)
      for (long s2 = 0; s2 <= 2; ++s2)
        for (long t1 = 0; t1 <= 2; ++t1)
          for (long t2 = 0; t2 <= 2; ++t2) {
            RatVec u(d), v(d);
            for (std::size_t i = 0; i < d; ++i) {
              u[i] = s1 * u1[i] + s2 * u2[i];
              v[i] = t1 * v1[i] + t2 * v2[i];
            }
            const RatVec xu = X * u, xv = X * v;
            // d/dt I(u + t xu, v + t xv) at t = 0, halved
            const Rat deriv = pairing(s.metric, eval_B(b, xu, u), eval_B(b, v, v)) +
                              pairing(s.metric, eval_B(b, u, u), eval_B(b, xv, v));
            ++rep.points;
            if (sgn(deriv) != 0) rep.all_zero = false;
          }
  }
  return rep;
}

HeartE6Report heart_violation_E6(const SpinModel& s) {
  HeartE6Report r;
  const QuarticInvariant inv = equivariant_projection(s);
  r.solution_dim = inv.solution_dim;
  const CartanC1 c1 = cartan_c1(s);
  r.c1_dim = c1.basis.size();
  const std::size_t d = s.dim();
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 2; ++c)
        for (long e = 0; e <= 2; ++e) {
          RatVec u(d), v(d);
          for (std::size_t i = 0; i < d; ++i) {
            u[i] = a * c1.basis[0][i] + b * c1.basis[1][i];
            v[i] = c * c1.basis[0][i] + e * c1.basis[1][i];
          }
          ++r.grid_points;
          if (sgn(quartic_invariant_value(s, inv, u, v)) != 0) ++r.grid_nonzero;
        }
  r.witness = find_witness(s, inv);
  r.halfspace = halfspace_check(c1.weights);
  r.violated = r.solution_dim == 1 && r.grid_nonzero == 0 && r.witness.has_value() && r.halfspace.has_value();
  return r;
}

}  // namespace commvar::spinor
