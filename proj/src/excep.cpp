#include "commvar/excep.hpp"

#include "commvar/error.hpp"

#include <array>
#include <deque>
#include <set>

namespace commvar::excep {

using exactlin::RatVec;
using exactlin::RowSpace;

namespace {

struct Term {
  long coef;
  int i, j;  // E_{ij}, zero-based
};

const std::map<std::string, std::vector<Term>>& generator_terms() {
  static const std::map<std::string, std::vector<Term>> t = {
      {"e_alpha", {{1, 0, 1}}},
      {"e_beta", {{1, 1, 2}}},
      {"e_alpha_beta", {{1, 0, 2}}},
      {"f_alpha", {{1, 1, 0}}},
      {"f_beta", {{1, 2, 1}}},
      {"f_alpha_beta", {{1, 2, 0}}},
      {"h_alpha", {{1, 0, 0}, {-1, 1, 1}}},
      {"h_beta", {{1, 1, 1}, {-1, 2, 2}}},
  };
  return t;
}

/// Weight shift of each generator in (h_alpha, h_beta) coordinates.
Weight shift(const std::string& g) {
  static const std::map<std::string, Weight> s = {
      {"e_alpha", {2, -1}},   {"e_beta", {-1, 2}},   {"e_alpha_beta", {1, 1}},  {"f_alpha", {-2, 1}},
      {"f_beta", {1, -2}},    {"f_alpha_beta", {-1, -1}}, {"h_alpha", {0, 0}}, {"h_beta", {0, 0}},
  };
  return s.at(g);
}

Weight operator+(Weight x, Weight y) { return {x.first + y.first, x.second + y.second}; }

/// Coordinates of a traceless 3x3 matrix in the generator basis.
RatVec sl3_coordinates(const RatMat& x) {
  std::vector<RatVec> cols;
  for (const auto& g : generator_names()) cols.push_back(generator_matrix(g).entries());
  const auto c = exactlin::solve(RatMat::from_columns(cols, 9), x.entries());
  if (!c) throw ParameterError("sl3_coordinates: matrix is not traceless");
  return *c;
}

RatMat rho_of(const WeightModule& m, const RatVec& coords) {
  RatMat out(m.dim, m.dim);
  const auto& names = generator_names();
  for (std::size_t k = 0; k < names.size(); ++k)
    if (sgn(coords[k]) != 0) out += coords[k] * m.act(names[k]);
  return out;
}

/// Sym^a(V) (x) Sym^b(V*) with monomial basis x^alpha y^beta.
class PolySpace {
public:
  using Exps = std::array<int, 6>;

  PolySpace(int a, int b) {
    for (int i = a; i >= 0; --i)
      for (int j = a - i; j >= 0; --j)
        for (int k = b; k >= 0; --k)
          for (int l = b - k; l >= 0; --l) {
            const Exps e{i, j, a - i - j, k, l, b - k - l};
            index_[e] = exps_.size();
            exps_.push_back(e);
          }
  }

  std::size_t size() const { return exps_.size(); }
  const Exps& exps(std::size_t k) const { return exps_[k]; }
  std::size_t index(const Exps& e) const { return index_.at(e); }

  static Weight weight(const Exps& e) {
    return {(e[0] - e[1]) - (e[3] - e[4]), (e[1] - e[2]) - (e[4] - e[5])};
  }

  /// E_ij acts as x_i d/dx_j - y_j d/dy_i.
  RatVec apply(const std::string& g, const RatVec& v) const {
    RatVec out(size());
    for (std::size_t k = 0; k < size(); ++k) {
      if (sgn(v[k]) == 0) continue;
      for (const auto& t : generator_terms().at(g)) {
        Exps e = exps_[k];
        if (e[t.j] > 0) {
          const long c = e[t.j];
          --e[t.j];
          ++e[t.i];
          out[index(e)] += v[k] * (t.coef * c);
        }
        e = exps_[k];
        if (e[3 + t.i] > 0) {
          const long c = e[3 + t.i];
          --e[3 + t.i];
          ++e[3 + t.j];
          out[index(e)] -= v[k] * (t.coef * c);
        }
      }
    }
    return out;
  }

  std::string label(const RatVec& v) const {
    for (std::size_t k = 0; k < size(); ++k)
      if (sgn(v[k]) != 0) {
        std::string s;
        const char* names[6] = {"x1", "x2", "x3", "y1", "y2", "y3"};
        for (int i = 0; i < 6; ++i)
          if (exps_[k][i]) s += std::string(names[i]) + (exps_[k][i] > 1 ? "^" + std::to_string(exps_[k][i]) : "");
        return s.empty() ? "1" : s;
      }
    return "0";
  }

private:
  std::vector<Exps> exps_;
  std::map<Exps, std::size_t> index_;
};

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {"e_alpha", "e_beta", "e_alpha_beta", "h_alpha",
                                                 "h_beta",  "f_alpha", "f_beta",       "f_alpha_beta"};
  return names;
}

RatMat generator_matrix(const std::string& name) {
  const auto it = generator_terms().find(name);
  if (it == generator_terms().end()) throw ParameterError("unknown sl3 generator '" + name + "'");
  RatMat x(3, 3);
  for (const auto& t : it->second) x(t.i, t.j) += t.coef;
  return x;
}

const RatMat& WeightModule::act(const std::string& generator) const {
  const auto it = action.find(generator);
  if (it == action.end()) throw ParameterError("unknown sl3 generator '" + generator + "'");
  return it->second;
}

Dim weyl_dimension(int a, int b) {
  return static_cast<Dim>((a + 1) * (b + 1) * (a + b + 2) / 2);
}

WeightModule irrep(int a, int b) {
  if (a < 0 || b < 0) throw ParameterError("irrep: highest weight must be dominant");
  const PolySpace P(a, b);
  RatVec top(P.size());
  top[P.index({a, 0, 0, 0, 0, b})] = 1;

  std::map<Weight, RowSpace> spaces;
  std::vector<Weight> order;
  std::deque<std::pair<RatVec, Weight>> queue;
  const Weight hw{a, b};
  spaces.emplace(hw, RowSpace(P.size()));
  spaces.at(hw).insert(top);
  order.push_back(hw);
  queue.emplace_back(top, hw);
  while (!queue.empty()) {
    auto [v, w] = std::move(queue.front());
    queue.pop_front();
    for (const char* f : {"f_alpha", "f_beta"}) {
      RatVec u = P.apply(f, v);
      if (exactlin::is_zero(u)) continue;
      const Weight w2 = w + shift(f);
      auto it = spaces.find(w2);
      if (it == spaces.end()) {
        it = spaces.emplace(w2, RowSpace(P.size())).first;
        order.push_back(w2);
      }
      if (it->second.insert(u)) queue.emplace_back(std::move(u), w2);
    }
  }

  WeightModule m;
  m.highest_weight = {a, b};
  std::map<Weight, std::size_t> offset;
  for (const auto& w : order) {
    offset[w] = m.dim;
    for (const auto& v : spaces.at(w).basis()) {
      m.weights.push_back(w);
      m.basis_labels.push_back(P.label(v));
      ++m.dim;
    }
  }
  if (m.dim != weyl_dimension(a, b)) throw ConstructionError("irrep: dimension differs from the Weyl formula");

  for (const auto& g : generator_names()) {
    RatMat act(m.dim, m.dim);
    std::size_t col = 0;
    for (const auto& w : order)
      for (const auto& v : spaces.at(w).basis()) {
        const RatVec u = P.apply(g, v);
        if (!exactlin::is_zero(u)) {
          const Weight w2 = w + shift(g);
          const auto it = spaces.find(w2);
          if (it == spaces.end()) throw ConstructionError("irrep: module not closed under " + g);
          const auto c = it->second.coordinates(u);
          if (!c) throw ConstructionError("irrep: module not closed under " + g);
          for (std::size_t r = 0; r < c->size(); ++r) act(offset[w2] + r, col) = (*c)[r];
        }
        ++col;
      }
    m.action.emplace(g, std::move(act));
  }
  return m;
}

WeightModule adjoint_module() {
  WeightModule m;
  m.highest_weight = {1, 1};
  const auto& names = generator_names();
  m.dim = names.size();
  for (const auto& n : names) {
    m.basis_labels.push_back(n);
    m.weights.push_back(shift(n));
  }
  for (const auto& g : names) {
    std::vector<RatVec> cols;
    for (const auto& b : names)
      cols.push_back(sl3_coordinates(exactlin::commutator(generator_matrix(g), generator_matrix(b))));
    m.action.emplace(g, RatMat::from_columns(cols, m.dim));
  }
  return m;
}

WeightModule direct_sum(const std::vector<WeightModule>& parts) {
  WeightModule m;
  if (!parts.empty()) m.highest_weight = parts.front().highest_weight;
  for (const auto& p : parts) {
    m.dim += p.dim;
    m.basis_labels.insert(m.basis_labels.end(), p.basis_labels.begin(), p.basis_labels.end());
    m.weights.insert(m.weights.end(), p.weights.begin(), p.weights.end());
  }
  for (const auto& g : generator_names()) {
    std::vector<RatMat> blocks;
    for (const auto& p : parts) blocks.push_back(p.act(g));
    m.action.emplace(g, exactlin::block_diagonal(blocks));
  }
  return m;
}

bool relations_hold(const WeightModule& m) {
  const auto& names = generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const RatVec c = sl3_coordinates(exactlin::commutator(generator_matrix(names[i]), generator_matrix(names[j])));
      if (!(exactlin::commutator(m.act(names[i]), m.act(names[j])) == rho_of(m, c))) return false;
    }
  return true;
}

bool weyl_symmetric(const WeightModule& m) {
  std::map<Weight, Dim> mult;
  for (const auto& w : m.weights) ++mult[w];
  auto get = [&](Weight w) {
    const auto it = mult.find(w);
    return it == mult.end() ? Dim{0} : it->second;
  };
  for (const auto& [w, k] : mult) {
    const Weight s1{-w.first, w.first + w.second};
    const Weight s2{w.first + w.second, -w.second};
    if (get(s1) != k || get(s2) != k) return false;
  }
  return true;
}

namespace {

/// Basis of {T : T rho_x(g) = rho_y(g) T for the generators of sl3}, as y.dim x x.dim matrices.
std::vector<RatMat> intertwiners(const WeightModule& x, const WeightModule& y) {
  const std::size_t dx = x.dim, dy = y.dim;
  std::vector<RatVec> rows;
  for (const char* g : {"e_alpha", "e_beta", "f_alpha", "f_beta"}) {
    const RatMat& A = x.act(g);
    const RatMat& B = y.act(g);
    for (std::size_t i = 0; i < dy; ++i)
      for (std::size_t k = 0; k < dx; ++k) {
        RatVec row(dx * dy);
        for (std::size_t j = 0; j < dx; ++j) row[i * dx + j] += A(j, k);
        for (std::size_t l = 0; l < dy; ++l) row[l * dx + k] -= B(i, l);
        if (!exactlin::is_zero(row)) rows.push_back(std::move(row));
      }
  }
  std::vector<RatMat> out;
  for (const auto& v : exactlin::kernel_basis(RatMat::from_rows(rows, dx * dy))) {
    RatMat t(dy, dx);
    for (std::size_t i = 0; i < dy; ++i)
      for (std::size_t j = 0; j < dx; ++j) t(i, j) = v[i * dx + j];
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

Dim intertwiner_dim(const WeightModule& x, const WeightModule& y) { return intertwiners(x, y).size(); }

bool isomorphic(const WeightModule& x, const WeightModule& y) {
  if (x.dim != y.dim) return false;
  for (const auto& t : intertwiners(x, y))
    if (exactlin::rank(t) == x.dim) return true;
  return false;
}

Dim joint_kernel_dim(const WeightModule& m, const std::vector<std::string>& ops) {
  if (ops.empty()) return m.dim;
  std::vector<RatMat> parts;
  for (const auto& o : ops) parts.push_back(m.act(o));
  return m.dim - exactlin::rank(exactlin::vstack(parts));
}

std::string to_string(PairChoice c) {
  return c == PairChoice::AlphaAlphaBeta ? "alpha,alpha+beta" : "beta,alpha+beta";
}

PairChoice parse_pair_choice(const std::string& s) {
  if (s == "1" || s == "alpha,alpha+beta" || s == "alpha") return PairChoice::AlphaAlphaBeta;
  if (s == "2" || s == "beta,alpha+beta" || s == "beta") return PairChoice::BetaAlphaBeta;
  throw ParameterError("unknown pair choice '" + s + "' (use alpha or beta)");
}

std::pair<std::string, std::string> pair_generators(PairChoice c) {
  return {c == PairChoice::AlphaAlphaBeta ? "e_alpha" : "e_beta", "e_alpha_beta"};
}

WeightModule e7_as_a2_module() { return direct_sum({irrep(1, 1), irrep(4, 4)}); }

E7Report pn_pair_check_E7(PairChoice c) {
  const auto [e1, e2] = pair_generators(c);
  E7Report r;
  const WeightModule adj = irrep(1, 1), big = irrep(4, 4);
  r.kernel_adjoint = joint_kernel_dim(adj, {e1, e2});
  r.kernel_44 = joint_kernel_dim(big, {e1, e2});
  const WeightModule e7 = direct_sum({adj, big});
  r.module_dim = e7.dim;
  r.total = joint_kernel_dim(e7, {e1, e2});
  return r;
}

E8Report e8_centralizer_dim(PairChoice c) {
  const auto [e1, e2] = pair_generators(c);
  E8Report r;
  r.e7 = pn_pair_check_E7(c);
  const WeightModule x = irrep(6, 0), y = irrep(0, 6);
  r.kernel_60 = joint_kernel_dim(x, {e1, e2});
  r.kernel_06 = joint_kernel_dim(y, {e1, e2});
  r.per_copy_of_V = joint_kernel_dim(direct_sum({x, y}), {e1, e2});
  r.total = r.e7.total + 2 * r.per_copy_of_V + r.trivial_copies;
  r.threshold = ExceptionalConstants::kE8CartanCentralizer;
  return r;
}

GradingReport grading_integrality_check(PairChoice c) {
  const auto [e1, e2] = pair_generators(c);
  // Root of E_ij on diag(d1,d2,d3) is d_i - d_j.
  auto root_row = [](const std::string& g) {
    const auto& t = generator_terms().at(g).front();
    RatVec row(3);
    row[t.i] += 1;
    row[t.j] -= 1;
    return row;
  };
  const RatMat sys = RatMat::from_rows({root_row(e1), root_row(e2), RatVec{1, 1, 1}}, 3);
  auto solve_h = [&](long v1, long v2) {
    const auto d = exactlin::solve(sys, RatVec{v1, v2, 0});
    if (!d) throw ConstructionError("grading_integrality_check: Cartan solve failed");
    RatMat h(3, 3);
    for (int i = 0; i < 3; ++i) h(i, i) = (*d)[i];
    return h;
  };
  GradingReport r;
  r.h1 = solve_h(1, 0);
  r.h2 = solve_h(0, 1);
  const RatMat E1 = generator_matrix(e1), E2 = generator_matrix(e2);
  using exactlin::commutator;
  r.dual_to_pair = commutator(r.h1, E1) == E1 && commutator(r.h1, E2).is_zero() &&
                   commutator(r.h2, E1).is_zero() && commutator(r.h2, E2) == E2;

  const WeightModule m = e7_as_a2_module();
  r.integral = true;
  for (const RatMat* h : {&r.h1, &r.h2}) {
    // h = d1 h_alpha - d3 h_beta
    const RatMat act = (*h)(0, 0) * m.act("h_alpha") - (*h)(2, 2) * m.act("h_beta");
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) {
        const Rat& x = act(i, j);
        if (i != j ? sgn(x) != 0 : x.get_den() != 1) r.integral = false;
      }
  }
  return r;
}

Verdict reducibility_verdict() {
  Verdict v;
  v.e8_computed = e8_centralizer_dim(PairChoice::AlphaAlphaBeta).total;
  v.e8_reducible = v.e8_computed < v.e8_threshold;
  v.e7_computed = pn_pair_check_E7(PairChoice::AlphaAlphaBeta).total;
  v.e7_reducible = v.e7_computed < v.e7_centralizer;
  return v;
}

}  // namespace commvar::excep
