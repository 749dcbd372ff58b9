#include "commvar/nilpotent.hpp"

#include "commvar/error.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <sstream>

namespace commvar::nilpotent {

using exactlin::RatVec;
using exactlin::rank;
using liealg::bracket;

// --- signed Jordan types ----------------------------------------------------

namespace {

Dim a_symbols(const JordanString& s) {
  return static_cast<Dim>(s.start == StartType::A ? (s.length + 1) / 2 : s.length / 2);
}

char start_char(StartType s) { return s == StartType::A ? 'a' : 'b'; }

}  // namespace

SignedJordanType SignedJordanType::parse(const std::string& text) {
  static const std::regex part_re(R"(\s*(\d+)\s*([abAB])\s*)");
  std::vector<JordanString> strings;
  std::istringstream is(text);
  std::string token;
  auto read = [&](const std::string& s) {
    std::smatch mt;
    if (!std::regex_match(s, mt, part_re)) throw ParameterError("bad Jordan string '" + s + "'");
    JordanString js;
    js.length = std::stoi(mt[1]);
    if (js.length < 1) throw ParameterError("Jordan strings have positive length");
    js.start = (mt[2] == "a" || mt[2] == "A") ? StartType::A : StartType::B;
    return js;
  };
  while (std::getline(is, token, ',')) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      JordanString js = read(token);
      js.partner = strings.size();
      strings.push_back(js);
    } else {
      JordanString x = read(token.substr(0, colon)), y = read(token.substr(colon + 1));
      x.partner = strings.size() + 1;
      y.partner = strings.size();
      strings.push_back(x);
      strings.push_back(y);
    }
  }
  if (strings.empty()) throw ParameterError("empty signed Jordan type");
  return SignedJordanType(std::move(strings));
}

std::string SignedJordanType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < strings_.size(); ++i) {
    const auto& s = strings_[i];
    if (s.partner < i) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(s.length) + start_char(s.start);
    if (s.partner != i) {
      const auto& p = strings_[s.partner];
      out += ':' + std::to_string(p.length) + start_char(p.start);
    }
  }
  return out;
}

Dim SignedJordanType::count_a() const {
  Dim c = 0;
  for (const auto& s : strings_) c += a_symbols(s);
  return c;
}

Dim SignedJordanType::count_b() const {
  Dim c = 0;
  for (const auto& s : strings_) c += static_cast<Dim>(s.length) - a_symbols(s);
  return c;
}

std::vector<int> SignedJordanType::lengths() const {
  std::vector<int> out;
  for (const auto& s : strings_) out.push_back(s.length);
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool validate_type(const SignedJordanType& jt, int n, int m) {
  const auto& ss = jt.strings();
  if (ss.empty()) return false;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const auto& s = ss[i];
    if (s.length < 1 || s.partner >= ss.size() || ss[s.partner].partner != i) return false;
    if (s.length % 2 == 1) {
      if (s.partner != i) return false;
    } else {
      if (s.partner == i) return false;
      const auto& p = ss[s.partner];
      if (p.length != s.length || p.start == s.start) return false;
    }
  }
  return jt.count_a() == static_cast<Dim>(n) && jt.count_b() == static_cast<Dim>(m);
}

bool is_even_nilpotent(const SignedJordanType& jt) {
  const auto& ss = jt.strings();
  return std::all_of(ss.begin(), ss.end(), [&](const JordanString& s) {
    return s.length % 2 == ss.front().length % 2;
  });
}

bool sigma_distinguished_necessary(const SignedJordanType& jt) {
  const auto& ss = jt.strings();
  return std::all_of(ss.begin(), ss.end(), [](const JordanString& s) { return s.length % 2 == 1; });
}

std::vector<SignedJordanType> enumerate_types(int n, int m) {
  struct Kind {
    int length;
    bool pair;
    StartType start;
    int ca, cb;
  };
  std::vector<Kind> kinds;
  for (int d = n + m; d >= 1; --d) {
    if (d % 2 == 1) {
      kinds.push_back({d, false, StartType::A, (d + 1) / 2, d / 2});
      kinds.push_back({d, false, StartType::B, d / 2, (d + 1) / 2});
    } else {
      kinds.push_back({d, true, StartType::A, d, d});
    }
  }
  std::vector<SignedJordanType> out;
  std::vector<int> mult(kinds.size(), 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int ra, int rb) {
    if (ra == 0 && rb == 0) {
      std::vector<JordanString> ss;
      for (std::size_t i = 0; i < k; ++i)
        for (int c = 0; c < mult[i]; ++c) {
          const auto& kd = kinds[i];
          if (kd.pair) {
            const std::size_t at = ss.size();
            ss.push_back({kd.length, StartType::A, at + 1});
            ss.push_back({kd.length, StartType::B, at});
          } else {
            ss.push_back({kd.length, kd.start, ss.size()});
          }
        }
      out.emplace_back(std::move(ss));
      return;
    }
    if (k == kinds.size()) return;
    const auto& kd = kinds[k];
    for (int c = 0; c * kd.ca <= ra && c * kd.cb <= rb; ++c) {
      mult[k] = c;
      rec(k + 1, ra - c * kd.ca, rb - c * kd.cb);
    }
    mult[k] = 0;
  };
  if (n >= 0 && m >= 0) rec(0, n, m);
  return out;
}

// --- realization --------------------------------------------------------------

NilpotentRealization build_nilpotent(int n, int m, const SignedJordanType& jt) {
  if (!validate_type(jt, n, m)) throw ParameterError("build_nilpotent: invalid signed Jordan type for (n,m)");
  const auto& ss = jt.strings();
  const std::size_t N = static_cast<std::size_t>(n + m);

  // Jordan basis vector (string, position) -> coordinate; a-type vectors come first.
  std::vector<std::vector<std::size_t>> index(ss.size());
  std::size_t next_a = 0, next_b = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (int t = 0; t < ss[i].length; ++t) {
      const bool is_a = (ss[i].start == StartType::A) == (t % 2 == 0);
      index[i].push_back(is_a ? next_a++ : next_b++);
    }

  RatMat form(N, N), e(N, N);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const int d = ss[i].length;
    for (int t = 0; t + 1 < d; ++t) e(index[i][t + 1], index[i][t]) = 1;
    const std::size_t j = ss[i].partner;
    if (j == i) {
      for (int s = 0; s < d; ++s) form(index[i][s], index[i][d - 1 - s]) = s % 2 == 0 ? 1 : -1;
    } else if (ss[i].start == StartType::A) {
      for (int s = 0; s < d; ++s) {
        const long sign = s % 2 == 0 ? 1 : -1;
        form(index[i][s], index[j][d - 1 - s]) = sign;
        form(index[j][d - 1 - s], index[i][s]) = sign;
      }
    }
  }
  NilpotentRealization r{liealg::build_bdi_with_form(n, m, form), std::move(e)};
  if (!r.model.in_g1(r.e)) throw ConstructionError("build_nilpotent: e is not in g1");
  return r;
}

std::vector<int> jordan_block_sizes(const RatMat& e) {
  const std::size_t N = e.rows();
  std::vector<Dim> r{N};
  RatMat p = RatMat::identity(N);
  while (r.back() > 0) {
    p = p * e;
    const Dim rk = rank(p);
    if (rk == r.back()) throw ParameterError("jordan_block_sizes: matrix is not nilpotent");
    r.push_back(rk);
  }
  std::vector<int> sizes;
  for (std::size_t k = 1; k < r.size(); ++k) {
    const Dim at_least_k = r[k - 1] - r[k];
    const Dim at_least_k1 = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
    for (Dim c = 0; c < at_least_k - at_least_k1; ++c) sizes.push_back(static_cast<int>(k));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

bool signed_ranks_match(const NilpotentRealization& r, const SignedJordanType& jt) {
  const std::size_t N = r.e.rows(), a = r.model.a_dim();
  RatMat p = RatMat::identity(N);
  for (std::size_t k = 0; k <= N; ++k) {
    Dim predicted_a = 0, predicted_b = 0;
    for (const auto& s : jt.strings())
      for (int t = 0; t + static_cast<int>(k) < s.length; ++t) {
        const bool is_a = (s.start == StartType::A) == (t % 2 == 0);
        ++(is_a ? predicted_a : predicted_b);
      }
    if (rank(p.block(0, 0, N, a)) != predicted_a || rank(p.block(0, a, N, N - a)) != predicted_b) return false;
    p = p * r.e;
  }
  return true;
}

// --- sl2-triples ----------------------------------------------------------------

namespace {

RatMat combine(const std::vector<RatMat>& basis, const RatVec& c, std::size_t N) {
  RatMat x(N, N);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(c[i]) != 0) x += c[i] * basis[i];
  return x;
}

}  // namespace

NormalTriple normal_sl2_triple(const SymmetricPairModel& model, const RatMat& e) {
  const std::size_t N = model.ambient_dim();
  if (e.is_zero()) return {e, RatMat(N, N), RatMat(N, N)};
  if (!model.in_g1(e) || !liealg::is_nilpotent(e))
    throw ParameterError("normal_sl2_triple: e must be a nilpotent element of g1");
  const auto& g1 = model.g1_basis();

  // h = [e,z] with z in g1 and [h,e] = 2e.
  std::vector<RatVec> cols;
  for (const auto& b : g1) cols.push_back(bracket(bracket(e, b), e).entries());
  const auto z = exactlin::solve(RatMat::from_columns(cols, N * N), (Rat(2) * e).entries());
  if (!z) throw ConstructionError("normal_sl2_triple: no characteristic h found");
  const RatMat h = bracket(e, combine(g1, *z, N));

  // f in g1 with [e,f] = h and [h,f] = -2f.
  cols.clear();
  for (const auto& b : g1) {
    RatVec col = bracket(e, b).entries();
    const RatVec second = (bracket(h, b) + Rat(2) * b).entries();
    col.insert(col.end(), second.begin(), second.end());
    cols.push_back(std::move(col));
  }
  RatVec rhs = h.entries();
  rhs.resize(2 * N * N);
  const auto f = exactlin::solve(RatMat::from_columns(cols, 2 * N * N), rhs);
  if (!f) throw ConstructionError("normal_sl2_triple: no f found");
  return {e, h, combine(g1, *f, N)};
}

bool triple_relations_hold(const SymmetricPairModel& model, const NormalTriple& t) {
  return model.in_g1(t.e) && model.in_g1(t.f) && model.in_g0(t.h) && bracket(t.h, t.e) == Rat(2) * t.e &&
         bracket(t.h, t.f) == Rat(-2) * t.f && bracket(t.e, t.f) == t.h;
}

bool AdSpectrum::all_even() const {
  return std::all_of(eigen.begin(), eigen.end(), [](const auto& p) { return p.first % 2 == 0; });
}

AdSpectrum ad_spectrum(const SymmetricPairModel& model, const RatMat& h) {
  const RatMat ad = model.ad_matrix(h);
  const std::size_t d = ad.rows();
  const long bound = 2 * static_cast<long>(model.ambient_dim());
  AdSpectrum s;
  Dim total = 0;
  for (long r = -bound; r <= bound && total < d; ++r) {
    const Dim k = d - rank(ad - Rat(r) * RatMat::identity(d));
    if (k) s.eigen.emplace_back(r, k);
    total += k;
  }
  s.integral_diagonalizable = total == d;
  return s;
}

DegenerationReport degeneration_check(const SymmetricPairModel& model, const NormalTriple& triple,
                                      const std::vector<long>& t_values) {
  DegenerationReport rep;
  const auto ce = liealg::centralizer_dims(model, triple.e);
  rep.dim_g_e = ce.total();
  rep.dim_g0_e = ce.g0x;
  rep.dim_g_h = liealg::centralizer_dim(model, triple.h);
  rep.all_match = true;
  for (long t : t_values) {
    DegenerationRow row;
    row.t = t;
    const RatMat et = triple.e - Rat(t * t) * triple.f;
    row.semisimple = liealg::is_semisimple(et);
    row.nilpotent = liealg::is_nilpotent(et);
    const auto c = liealg::centralizer_dims(model, et);
    row.dim_g_et = c.total();
    row.dim_g0_et = c.g0x;
    const bool ok = t == 0 ? row.nilpotent
                           : row.semisimple && row.dim_g_et == rep.dim_g_h && rep.dim_g_h == rep.dim_g_e &&
                                 row.dim_g0_et == rep.dim_g0_e;
    rep.all_match = rep.all_match && ok;
    rep.rows.push_back(row);
  }
  return rep;
}

// --- distinguished test ---------------------------------------------------------

std::string to_string(Distinguished d) {
  switch (d) {
    case Distinguished::Distinguished: return "distinguished";
    case Distinguished::NotDistinguished: return "not_distinguished";
    case Distinguished::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  // C(n,k), saturating at cap + 1.
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::size_t>(r);
}

}  // namespace

DistinguishedReport sigma_distinguished_test(const SymmetricPairModel& model, const RatMat& e,
                                             std::size_t samples, Rng& rng, std::size_t max_grid_points) {
  const std::size_t N = model.ambient_dim();
  const auto& g1 = model.g1_basis();
  DistinguishedReport rep;

  std::vector<RatVec> cols;
  for (const auto& b : g1) cols.push_back(bracket(e, b).entries());
  std::vector<RatMat> g1e;
  for (const auto& k : exactlin::kernel_basis(RatMat::from_columns(cols, N * N))) g1e.push_back(combine(g1, k, N));
  rep.dim_g1e = g1e.size();

  exactlin::RowSpace derived(N * N);
  const auto& g = model.g_basis();
  for (std::size_t i = 0; i < g.size() && derived.dim() < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) derived.insert(bracket(g[i], g[j]).entries());

  // g_{1,e} ∩ [g,g] through the kernel of (K | -D).
  std::vector<RatMat> meet;
  if (derived.dim() == g.size()) {
    meet = g1e;
  } else if (derived.dim() > 0 && !g1e.empty()) {
    cols.clear();
    for (const auto& k : g1e) cols.push_back(k.entries());
    for (const auto& d : derived.basis()) {
      RatVec neg = d;
      for (auto& x : neg) x = -x;
      cols.push_back(std::move(neg));
    }
    exactlin::RowSpace rs(N * N);
    for (const auto& v : exactlin::kernel_basis(RatMat::from_columns(cols, N * N))) {
      const RatMat x = combine(g1e, RatVec(v.begin(), v.begin() + static_cast<long>(g1e.size())), N);
      if (rs.insert(x.entries())) meet.push_back(x);
    }
  }
  rep.dim_intersection = meet.size();
  if (meet.empty()) {
    rep.verdict = Distinguished::Distinguished;
    rep.justification = "g_{1,e} meets [g,g] only in 0";
    return rep;
  }

  auto found = [&](const RatMat& x, const std::string& how) {
    rep.verdict = Distinguished::NotDistinguished;
    rep.certificate = x;
    rep.justification = how +
                        " gives a non-nilpotent x in g_{1,e} ∩ [g,g]; its semisimple part is a polynomial in x, "
                        "so it is a nonzero semisimple element of g_{1,e} ∩ [g,g]";
    return rep;
  };
  for (const auto& x : meet)
    if (!liealg::is_nilpotent(x)) return found(x, "a basis element");
  for (std::size_t s = 0; s < samples; ++s) {
    const RatMat x = rng.combination(meet, N);
    if (!liealg::is_nilpotent(x)) return found(x, "a random sample");
  }

  // Each charpoly coefficient has degree <= N in the coordinates on `meet`;
  // {t in Z_{>=0}^d : |t| <= N} is unisolvent for that degree.
  const std::size_t d = meet.size();
  const std::size_t points = binomial_capped(d + N, N, max_grid_points);
  if (points > max_grid_points) {
    rep.verdict = Distinguished::Inconclusive;
    rep.justification = "interpolation grid exceeds the point budget";
    return rep;
  }
  std::vector<long> t(d, 0);
  std::function<bool(std::size_t, long)> walk = [&](std::size_t i, long left) {
    if (i == d) {
      ++rep.grid_points;
      RatMat x(N, N);
      for (std::size_t j = 0; j < d; ++j)
        if (t[j]) x += Rat(t[j]) * meet[j];
      if (!liealg::is_nilpotent(x)) {
        found(x, "an interpolation grid point");
        return false;
      }
      return true;
    }
    for (long v = 0; v <= left; ++v) {
      t[i] = v;
      if (!walk(i + 1, left - v)) return false;
    }
    t[i] = 0;
    return true;
  };
  if (!walk(0, static_cast<long>(N))) return rep;
  rep.verdict = Distinguished::Distinguished;
  rep.justification =
      "every point of a unisolvent grid for degree <= N is nilpotent, so all charpoly coefficients vanish "
      "identically on g_{1,e} ∩ [g,g]";
  return rep;
}

}  // namespace commvar::nilpotent
