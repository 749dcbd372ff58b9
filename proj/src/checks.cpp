#include "commvar/checks.hpp"

#include "commvar/error.hpp"
#include "commvar/excep.hpp"
#include "commvar/liealg.hpp"
#include "commvar/nilpotent.hpp"
#include "commvar/satake.hpp"
#include "commvar/spinor.hpp"
#include "commvar/strata.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace commvar {

using json = nlohmann::json;
using exactlin::Dim;
using exactlin::Rat;
using exactlin::RatMat;
using liealg::Family;

// --- Params -------------------------------------------------------------------

long Params::get_int(const std::string& key, long fallback) const {
  const auto it = ints_.find(key);
  const long v = it == ints_.end() ? fallback : it->second;
  used_[key] = v;
  return v;
}

std::optional<long> Params::find_int(const std::string& key) const {
  const auto it = ints_.find(key);
  if (it == ints_.end()) return std::nullopt;
  used_[key] = it->second;
  return it->second;
}

long Params::require_int(const std::string& key) const {
  const auto v = find_int(key);
  if (!v) throw UsageError("missing required option --" + key);
  return *v;
}

std::string Params::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = strings_.find(key);
  const std::string v = it == strings_.end() ? fallback : it->second;
  used_[key] = v;
  return v;
}

std::string Params::require_string(const std::string& key) const {
  const auto it = strings_.find(key);
  if (it == strings_.end()) throw UsageError("missing required option --" + key);
  used_[key] = it->second;
  return it->second;
}

bool Params::flag(const std::string& key) const {
  const bool v = flags_.count(key) > 0;
  if (v) used_[key] = true;
  return v;
}

namespace {

// Statement names used as claim sources.
namespace src {
constexpr const char* kRank = "exact rank over Q (two independent eliminations)";
constexpr const char* kModel = "matrix model of the symmetric pair";
constexpr const char* kZ2 = "centraliser identity dim g_{1,x} - dim g_{0,x} = dim g1 - dim g0";
constexpr const char* kCartan = "Cartan subspace: abelian, semisimple elements";
constexpr const char* kAdInvariance = "centraliser dimensions are G0-invariant";
constexpr const char* kSubpair = "centraliser of semisimple h in BDI is a sum of (gl_k, so_k) and a smaller BDI pair";
constexpr const char* kSatakeRank = "rank of a symmetric pair = white nodes - arrows";
constexpr const char* kSubdiagram = "subdiagrams by removing white nodes or arrow pairs";
constexpr const char* kSevenPairs = "connected subdiagrams of the E6/(sl6+sl2) Satake diagram: seven pairs";
constexpr const char* kCatalog = "Satake diagram catalog";
constexpr const char* kLowerBound = "lower bound 2min(2n,m)-2n+1 on irreducible components for (gl_{n+m}, gl_n+gl_m)";
constexpr const char* kFOne = "F(1,m) = 3 for m >= 2";
constexpr const char* kFEqual = "F(n,n) = 1";
constexpr const char* kRankSum = "rk D1 + rk D2 <= 2n on the commuting variety";
constexpr const char* kCartanBound = "rk D(xi,eta) <= n on G0-conjugates of c x c";
constexpr const char* kStrata = "explicit points of each stratum P_q";
constexpr const char* kDIII = "odd n: rk D1 < n on G0(c x c) but rk(X|Z) = n occurs in g(1) x g(1)";
constexpr const char* kHeart = "failure of the condition on G0(c(1) x c(1)) forces at least three components";
constexpr const char* kGrading = "short grading g(-1) + g(0) + g(1) and dim c(1) = dim c(-1) = dim c";
constexpr const char* kAb = "ab-diagram classification of nilpotents in g1 for BDI";
constexpr const char* kEven = "sigma-distinguished nilpotents have odd strings only, hence are even";
constexpr const char* kTriple = "normal sl2-triple with h in g0 and f in g1";
constexpr const char* kDegeneration = "e(t) = e - t^2 f: semisimple with the same centraliser dimensions";
constexpr const char* kDistinguished = "sigma-distinguished: g_{1,e} has no semisimple elements of [g,g]";
constexpr const char* kWeyl = "Weyl dimension formula for A2";
constexpr const char* kE7 = "principal nilpotent pair of A2 stays principal in E7: dim g_{e1,e2} = 7";
constexpr const char* kE8 = "E8 centraliser dim 7 + 2(7+1) + 3 = 26";
constexpr const char* kE8Threshold = "centraliser of a generic Cartan pair in E8 has dim 28 + 4 = 32";
constexpr const char* kPnGrading = "integral bi-grading with [h_i, e_j] = delta_ij e_j";
constexpr const char* kE7Data = "E7 case: dim g0 = 69 and [s,s] of type 3A1";
constexpr const char* kReducible = "dim g_{xi,eta} < dim s forces reducibility";
constexpr const char* kSpin = "half-spin representation of so10";
constexpr const char* kQuartic = "S^2 of a half-spin module contains the vector module once";
constexpr const char* kC1 = "c(1) spanned by weight vectors of weights pi5 and (e1-e2-e3-e4-e5)/2";
constexpr const char* kHalfspace = "weights of c(1) lie in an open halfspace";
constexpr const char* kE6Heart = "degree-4 invariant vanishes on c(1) x c(1) but not on g(1) x g(1)";
}  // namespace src

json rat_json(const Rat& r) { return r.get_den() == 1 ? json(r.get_num().get_si()) : json(r.get_str()); }

json rat_vec_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_json(x));
  return out;
}

Family family_param(const Params& p, const std::string& fallback) {
  return liealg::parse_family(p.get_string("family", fallback));
}

/// (n, m) of a model from the parameters, with family defaults.
liealg::SymmetricPairModel model_param(const Params& p, Family f, long n_def, long m_def) {
  const long n = p.get_int("n", n_def);
  const long m = f == Family::DIII ? n : p.get_int("m", m_def);
  return liealg::build_model(f, static_cast<int>(n), static_cast<int>(m));
}

std::size_t samples_param(const Params& p) {
  const long s = p.get_int("samples", kDefaultSamples);
  if (s < 0) throw UsageError("--samples must be non-negative");
  return static_cast<std::size_t>(s);
}

// --- exactlin -------------------------------------------------------------------

Report exactlin_rank_agreement(const Params& p) {
  Report r("exactlin rank-agreement", p.seed());
  const std::size_t samples = samples_param(p);
  const long max_size = p.get_int("n", 12);
  if (max_size < 1) throw UsageError("--n must be positive");
  Rng rng(p.seed());
  std::size_t agree = 0, transpose_ok = 0, nullity_ok = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, max_size));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, max_size));
    const auto inner = static_cast<std::size_t>(rng.uniform(1, max_size));
    // Product of random factors, so deficient ranks occur.
    RatMat a(rows, inner), b(inner, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < inner; ++j) a(i, j) = rng.small_rat(4, 3);
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = rng.small_rat(4, 3);
    const RatMat m = a * b;
    const Dim rk = exactlin::rank(m);
    agree += rk == exactlin::rank_gauss(m);
    transpose_ok += rk == exactlin::rank(m.transpose());
    nullity_ok += rk + exactlin::kernel_basis(m).size() == cols;
  }
  r.check("bareiss_equals_gauss", src::kRank, samples, agree);
  r.check("rank_equals_transpose_rank", src::kRank, samples, transpose_ok);
  r.check("rank_plus_nullity", src::kRank, samples, nullity_ok);
  return r;
}

// --- liealg -----------------------------------------------------------------------

Report liealg_model(const Params& p) {
  Report r("liealg model", p.seed());
  const Family f = family_param(p, "BDI");
  const auto model = model_param(p, f, 2, 3);
  const long n = model.n(), m = model.m();
  Dim e0 = 0, e1 = 0, ec = 0;
  switch (f) {
    case Family::BDI: e0 = n * (n - 1) / 2 + m * (m - 1) / 2, e1 = n * m, ec = std::min(n, m); break;
    case Family::AIII_gl: e0 = n * n + m * m, e1 = 2 * n * m, ec = std::min(n, m); break;
    case Family::DIII: e0 = n * n, e1 = n * (n - 1), ec = n / 2; break;
  }
  r.check("dim_g0", src::kModel, e0, model.g0_basis().size());
  r.check("dim_g1", src::kModel, e1, model.g1_basis().size());
  r.check("dim_c", src::kModel, ec, model.cartan_basis().size());

  const RatMat& A = model.sigma_matrix();
  const auto A_inv = *exactlin::inverse(A);
  bool fixed = true, negated = true, form_ok = true;
  for (const auto& x : model.g0_basis()) fixed = fixed && A * x * A_inv == x;
  for (const auto& x : model.g1_basis()) negated = negated && A * x * A_inv == -x;
  if (model.form())
    for (const auto& x : model.g_basis())
      form_ok = form_ok && (x.transpose() * *model.form() + *model.form() * x).is_zero();
  r.check("g0_fixed_by_sigma", src::kModel, true, fixed);
  r.check("g1_negated_by_sigma", src::kModel, true, negated);
  r.check("form_preserved", src::kModel, true, form_ok);

  exactlin::RowSpace span(model.ambient_dim() * model.ambient_dim());
  for (const auto& x : model.g_basis()) span.insert(x.entries());
  r.check("dim_g_equals_dim_g0_plus_dim_g1", src::kModel, e0 + e1, span.dim());

  bool abelian = true, semisimple = true, in_g1 = true;
  const auto& c = model.cartan_basis();
  for (std::size_t i = 0; i < c.size(); ++i) {
    semisimple = semisimple && liealg::is_semisimple(c[i]);
    in_g1 = in_g1 && model.in_g1(c[i]);
    for (std::size_t j = i + 1; j < c.size(); ++j) abelian = abelian && liealg::bracket(c[i], c[j]).is_zero();
  }
  Rng rng(p.seed());
  for (int s = 0; s < 20; ++s) semisimple = semisimple && liealg::is_semisimple(liealg::random_cartan_element(model, rng));
  r.check("cartan_in_g1", src::kCartan, true, in_g1);
  r.check("cartan_abelian", src::kCartan, true, abelian);
  r.check("cartan_semisimple", src::kCartan, true, semisimple);
  return r;
}

Report liealg_z2(const Params& p) {
  Report r("liealg z2", p.seed());
  const auto model = model_param(p, family_param(p, "BDI"), 3, 4);
  const std::size_t samples = samples_param(p);
  Rng rng(p.seed());
  std::size_t ok = 0;
  for (std::size_t s = 0; s < samples; ++s) ok += liealg::check_z2(model, liealg::random_g1_element(model, rng));
  r.check("z2_at_zero", src::kZ2, true, liealg::check_z2(model, RatMat(model.ambient_dim(), model.ambient_dim())));
  r.check("z2_random_samples", src::kZ2, samples, ok);
  r.data()["dim_g1_minus_dim_g0"] =
      static_cast<long>(model.g1_basis().size()) - static_cast<long>(model.g0_basis().size());
  return r;
}

Report liealg_conjugation(const Params& p) {
  Report r("liealg conjugation", p.seed());
  const auto model = model_param(p, family_param(p, "BDI"), 2, 3);
  const std::size_t samples = samples_param(p);
  Rng rng(p.seed());
  std::size_t same = 0, eigenspace = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const RatMat x = rng.combination(model.g1_basis(), model.ambient_dim());
    const RatMat y = liealg::sample_G0_conjugate(model, x, rng);
    const auto a = liealg::centralizer_dims(model, x), b = liealg::centralizer_dims(model, y);
    same += a.g0x == b.g0x && a.g1x == b.g1x;
    eigenspace += model.in_g1(y);
  }
  r.check("centralizer_dims_invariant", src::kAdInvariance, samples, same);
  r.check("conjugate_stays_in_g1", src::kAdInvariance, samples, eigenspace);
  return r;
}

Report liealg_subpair(const Params& p) {
  Report r("liealg subpair", p.seed());
  const auto model = model_param(p, Family::BDI, 2, 3);
  const std::size_t samples = samples_param(p);
  Rng rng(p.seed());
  std::vector<RatMat> hs{RatMat(model.ambient_dim(), model.ambient_dim())};
  RatMat equal(model.ambient_dim(), model.ambient_dim());
  for (const auto& c : model.cartan_basis()) equal += c;
  hs.push_back(equal);
  if (!model.cartan_basis().empty()) hs.push_back(model.cartan_basis().front());
  for (std::size_t s = 0; s < samples; ++s) hs.push_back(liealg::random_cartan_element(model, rng));
  std::size_t match = 0;
  json seen = json::array();
  for (const auto& h : hs) {
    const auto rep = liealg::subpair_dims_at(model, h);
    match += rep.match;
    if (seen.size() < 3) seen.push_back({{"multiplicities", rep.multiplicities}, {"dim_g_h", rep.computed.total()},
                                         {"dim_g0_h", rep.computed.g0x}});
  }
  r.check("subpair_dims_match", src::kSubpair, hs.size(), match);
  r.data()["first_cases"] = seen;
  return r;
}

// --- satake -------------------------------------------------------------------------

const satake::Catalog& catalog_param(const Params& p, satake::Catalog& holder) {
  if (!p.has("catalog")) return satake::Catalog::builtin();
  holder = satake::Catalog::load(p.require_string("catalog"));
  return holder;
}

Report satake_catalog(const Params& p) {
  Report r("satake catalog", p.seed());
  satake::Catalog holder;
  const auto& cat = catalog_param(p, holder);
  const std::string label = p.require_string("pair");
  const auto d = cat.get(label);
  r.check("record_round_trip", src::kCatalog, true, satake::SatakeDiagram::from_record(d.to_record()) == d);
  const auto id = cat.identify(d);
  r.check("identified", src::kCatalog, true, id.has_value());
  if (const auto er = cat.expected_rank(label)) r.check("rank", src::kSatakeRank, *er, satake::rank(d));
  r.data()["record"] = d.to_record();
  r.data()["dynkin_type"] = d.dynkin_type();
  r.data()["identified_as"] = id ? json(*id) : json(nullptr);
  return r;
}

Report satake_rank(const Params& p) {
  Report r("satake rank", p.seed());
  satake::Catalog holder;
  const auto& cat = catalog_param(p, holder);
  const std::string label = p.require_string("pair");
  const auto d = cat.get(label);
  const auto er = cat.expected_rank(label);
  if (!er) throw UsageError("no rank is recorded for '" + label + "'");
  r.check("rank", src::kSatakeRank, *er, satake::rank(d));
  r.data()["white_nodes"] = d.white_count();
  r.data()["arrows"] = d.arrow_count();
  return r;
}

Report satake_subdiagrams(const Params& p) {
  Report r("satake subdiagrams", p.seed());
  satake::Catalog holder;
  const auto& cat = catalog_param(p, holder);
  const std::string label = p.require_string("pair");
  const auto d = cat.get(label);
  const auto all = satake::all_subdiagrams(d);
  std::set<std::string> keys;
  for (const auto& s : all) keys.insert(s.canonical_form());
  bool closed = true, drops = true;
  for (const auto& s : all)
    for (const auto& t : satake::subdiagram_step(s)) {
      closed = closed && keys.count(t.canonical_form());
      drops = drops && satake::rank(t) + 1 == satake::rank(s);
    }
  r.check("closed_under_step", src::kSubdiagram, true, closed);
  r.check("rank_drops_by_one_per_step", src::kSubdiagram, true, drops);
  r.data()["all_classes"] = all.size();

  if (p.flag("connected")) {
    const auto conn = satake::connected_proper_subdiagrams(d);
    json labels = json::array();
    std::vector<std::string> names;
    for (const auto& s : conn) {
      const auto id = cat.identify(s);
      names.push_back(id ? *id : "unidentified:" + s.to_record());
    }
    std::sort(names.begin(), names.end());
    for (const auto& n : names) labels.push_back(n);
    if (satake::normalize_label(label) == satake::normalize_label("E6/(sl6+sl2)")) {
      std::vector<std::string> expected{"sl(6)/(sl(3)+sl(3)+t1)", "so(8)/(so(5)+so(3))", "sl(3)+sl(3)/sl(3)",
                                        "sl(4)/(sl(2)+sl(2)+t1)", "sl(2)+sl(2)/sl(2)",  "sl(3)/so(3)",
                                        "sl(2)/so(2)"};
      std::sort(expected.begin(), expected.end());
      r.check("connected_proper_classes", src::kSevenPairs, 7, conn.size());
      r.check("identified_pairs", src::kSevenPairs, expected, names);
    } else {
      r.data()["connected_proper_classes"] = conn.size();
      r.data()["identified_pairs"] = labels;
    }
  }
  return r;
}

Report satake_bdi_rank(const Params& p) {
  Report r("satake bdi-rank", p.seed());
  const long max = p.get_int("n", 6);
  std::size_t total = 0, ok = 0;
  for (int n = 1; n <= max; ++n)
    for (int m = 1; m <= max; ++m) {
      if (n + m < 3) continue;  // so2 is a torus; no Satake diagram
      ++total;
      const Dim dr = satake::rank(satake::family_BDI(n, m));
      const Dim cr = liealg::build_model(Family::BDI, n, m).cartan_basis().size();
      ok += dr == static_cast<Dim>(std::min(n, m)) && cr == dr;
    }
  r.check("bdi_diagram_rank_equals_min_and_cartan_dim", src::kSatakeRank, total, ok);
  return r;
}

// --- strata ---------------------------------------------------------------------

std::pair<int, int> nm_param(const Params& p, long n_def, long m_def) {
  const long n = p.get_int("n", n_def), m = p.get_int("m", m_def);
  if (n < 1 || n > m) throw UsageError("need 1 <= n <= m");
  return {static_cast<int>(n), static_cast<int>(m)};
}

Report strata_lower_bound(const Params& p) {
  Report r("strata lower-bound", p.seed());
  const auto [n, m] = nm_param(p, 1, 2);
  const Dim F = strata::lower_bound_components(n, m);
  const char* source = n == 1 && m >= 2 ? src::kFOne : n == m ? src::kFEqual : src::kLowerBound;
  const long expected = n == 1 && m >= 2 ? 3 : n == m ? 1 : 2 * std::min(2 * n, m) - 2 * n + 1;
  r.check("F", source, expected, F);
  std::size_t separated = 0;
  json strata_list = json::array();
  for (int q = strata::q_min(n, m); q <= strata::q_max(n, m); ++q) {
    const auto rep = strata::rank_sum_check(strata::witness_AIII(n, m, q));
    const bool ok = rep.commutes && rep.rkD1 == static_cast<Dim>(q) && rep.rkD2 == static_cast<Dim>(2 * n - q);
    separated += ok;
    strata_list.push_back({{"q", q}, {"rkD1", rep.rkD1}, {"rkD2", rep.rkD2}, {"commutes", rep.commutes}});
  }
  r.check("separated_strata", src::kStrata, F, separated);
  r.data()["strata"] = strata_list;
  return r;
}

Report strata_witness(const Params& p) {
  Report r("strata witness", p.seed());
  const auto [n, m] = nm_param(p, 2, 4);
  const int q = static_cast<int>(p.get_int("q", n));
  const auto w = strata::witness_AIII(n, m, q);
  const auto rep = strata::rank_sum_check(w);
  r.check("commutes", src::kStrata, true, rep.commutes);
  r.check("rk_D1", src::kStrata, q, rep.rkD1);
  r.check("rk_D2", src::kStrata, 2 * n - q, rep.rkD2);
  r.check("rank_sum_bound", src::kRankSum, true, rep.inequality_holds);
  r.data()["X"] = w.X.to_string();
  r.data()["Y"] = w.Y.to_string();
  r.data()["Z"] = w.Z.to_string();
  r.data()["U"] = w.U.to_string();
  return r;
}

Report strata_rank_sum(const Params& p) {
  Report r("strata rank-sum", p.seed());
  const auto [n, m] = nm_param(p, 2, 4);
  const std::size_t samples = samples_param(p);
  const auto model = liealg::build_model(Family::AIII_gl, n, m);
  Rng rng(p.seed());
  std::size_t violations = 0, total = 0, invariant = 0, bounded = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto rep = strata::rank_sum_check(strata::sample_cartan_pair(model, rng));
    violations += !rep.inequality_holds;
    bounded += rep.rkD1 <= static_cast<Dim>(n) && rep.rkD2 <= static_cast<Dim>(n);
    ++total;
  }
  std::size_t witnesses = 0;
  for (int q = strata::q_min(n, m); q <= strata::q_max(n, m); ++q) {
    const auto w = strata::witness_AIII(n, m, q);
    const auto g = liealg::random_G0_element(model, rng);
    const auto moved = strata::make_pair(model, liealg::conjugate(g, w.xi), liealg::conjugate(g, w.eta));
    const auto a = strata::rank_sum_check(w), b = strata::rank_sum_check(moved);
    invariant += a.rkD1 == b.rkD1 && a.rkD2 == b.rkD2;
    violations += !a.inequality_holds + !b.inequality_holds;
    total += 2;
    ++witnesses;
  }
  r.check("rank_sum_violations", src::kRankSum, 0, violations);
  r.check("cartan_samples_within_n", src::kCartanBound, samples, bounded);
  r.check("ranks_invariant_under_G0", src::kAdInvariance, witnesses, invariant);
  r.data()["pairs_tested"] = total;
  return r;
}

Report strata_diii(const Params& p) {
  Report r("strata diii", p.seed());
  const long n = p.get_int("n", 3);
  if (n < 3 || n % 2 == 0) throw UsageError("need odd n >= 3");
  const std::size_t samples = samples_param(p);
  const auto w = strata::witness_DIII(static_cast<int>(n));
  const auto model = liealg::build_model(Family::DIII, static_cast<int>(n));
  r.check("witness_in_g1", src::kDIII, true, model.in_g1(w.xi) && model.in_g1(w.eta));
  r.check("witness_commutes", src::kDIII, true, liealg::bracket(w.xi, w.eta).is_zero());
  r.check("rank_X", src::kDIII, n - 1, exactlin::rank(w.X));
  r.check("rank_Z", src::kDIII, n - 1, exactlin::rank(w.Z));
  r.check("rank_D1_witness", src::kDIII, n, exactlin::rank(strata::D1(w)));
  Rng rng(p.seed());
  Dim worst = 0;
  for (std::size_t s = 0; s < samples; ++s)
    worst = std::max(worst, exactlin::rank(strata::D1(strata::sample_cartan_pair(model, rng))));
  r.check("cartan_samples_below_n", src::kDIII, true, worst <= static_cast<Dim>(n - 1));
  r.data()["max_rank_D1_on_samples"] = worst;
  return r;
}

Report strata_heart(const Params& p) {
  Report r("strata heart", p.seed());
  const Family f = family_param(p, "AIII_gl");
  const long n = p.get_int("n", 1);
  const long m = f == Family::DIII ? n : p.get_int("m", 2);
  const std::size_t samples = samples_param(p);
  Rng rng(p.seed());
  const auto rep = strata::heart_violation_report(f, static_cast<int>(n), static_cast<int>(m), samples, rng);
  const bool aiii = f == Family::AIII_gl && n != m && n >= 1 && m >= 1;
  const bool diii = f == Family::DIII && n >= 3 && n % 2 == 1;
  const std::string verdict = rep.verdict == strata::Verdict::Violated ? "violated" : "inconclusive";
  r.check("verdict", src::kHeart, aiii || diii ? "violated" : "inconclusive", verdict);
  if (aiii || diii) {
    const long lo = std::min(n, m), hi = std::max(n, m);
    r.check("bound_on_cartan_pairs", src::kHeart, aiii ? lo : n - 1, rep.bound);
    r.check("samples_within_bound", src::kHeart, true, rep.sampled_max <= rep.bound);
    r.check("witness_value", src::kHeart, aiii ? std::min(2 * lo, hi) : n, rep.witness_value);
    r.check("component_lower_bound", aiii ? src::kLowerBound : src::kHeart,
            aiii ? 2 * std::min(2 * lo, hi) - 2 * lo + 1 : 3, rep.component_lower_bound);
  }
  r.data()["invariant"] = rep.invariant;
  r.data()["justification"] = rep.justification;
  return r;
}

Report strata_projections(const Params& p) {
  Report r("strata projections", p.seed());
  const Family f = family_param(p, "AIII_gl");
  if (f == Family::BDI) throw UsageError("projections need AIII_gl or DIII");
  const auto model = model_param(p, f, 2, 3);
  const auto g = strata::grading_projections(model);
  const long n = model.n(), m = model.m();
  const Dim dg1 = f == Family::AIII_gl ? n * m : n * (n - 1) / 2;
  r.check("dim_g_plus1", src::kGrading, dg1, g.g_plus1.size());
  r.check("dim_g_minus1", src::kGrading, dg1, g.g_minus1.size());
  r.check("dim_c_plus1", src::kGrading, model.cartan_basis().size(), g.dim_c_plus1);
  r.check("dim_c_minus1", src::kGrading, model.cartan_basis().size(), g.dim_c_minus1);
  r.check("g_plus1_abelian", src::kGrading, true, g.g_plus1_abelian);
  r.check("g_minus1_abelian", src::kGrading, true, g.g_minus1_abelian);
  return r;
}

// --- nilpotent ------------------------------------------------------------------

struct TypeOutcome {
  bool built = false, in_g1 = false, nilpotent = false, jordan = false, signed_ok = false;
  bool triple = false, spectrum = false, parity_consistent = false;
  bool even = false, degeneration = false;
  nilpotent::Distinguished verdict = nilpotent::Distinguished::Inconclusive;
  bool verdict_consistent = false;
  bool implication = false;  // necessary => even
};

TypeOutcome examine_type(int n, int m, const nilpotent::SignedJordanType& jt, std::size_t samples, Rng& rng) {
  using namespace nilpotent;
  TypeOutcome o;
  o.even = is_even_nilpotent(jt);
  o.implication = !sigma_distinguished_necessary(jt) || o.even;
  const auto real = build_nilpotent(n, m, jt);
  o.built = true;
  o.in_g1 = real.model.in_g1(real.e);
  o.nilpotent = liealg::is_nilpotent(real.e);
  o.jordan = jordan_block_sizes(real.e) == jt.lengths();
  o.signed_ok = signed_ranks_match(real, jt);
  const auto t = normal_sl2_triple(real.model, real.e);
  o.triple = triple_relations_hold(real.model, t);
  const auto spec = ad_spectrum(real.model, t.h);
  o.spectrum = spec.integral_diagonalizable;
  o.parity_consistent = spec.all_even() == o.even;
  if (o.even) o.degeneration = degeneration_check(real.model, t, {0, 1, 2, 3}).all_match;
  const auto d = sigma_distinguished_test(real.model, real.e, samples, rng);
  o.verdict = d.verdict;
  o.verdict_consistent = d.verdict != Distinguished::Distinguished || sigma_distinguished_necessary(jt);
  return o;
}

Report nilpotent_type(const Params& p) {
  Report r("nilpotent type", p.seed());
  const long n = p.get_int("n", 2), m = p.get_int("m", 1);
  if (n < 1 || m < 1) throw UsageError("need n, m >= 1");
  const auto jt = nilpotent::SignedJordanType::parse(p.require_string("jt"));
  if (!nilpotent::validate_type(jt, static_cast<int>(n), static_cast<int>(m)))
    throw UsageError("'" + jt.to_string() + "' is not a signed Jordan type for BDI(" + std::to_string(n) + "," +
                     std::to_string(m) + ")");
  r.data()["type"] = jt.to_string();
  r.data()["even"] = nilpotent::is_even_nilpotent(jt);
  r.data()["all_strings_odd"] = nilpotent::sigma_distinguished_necessary(jt);
  Rng rng(p.seed());
  const auto o = examine_type(static_cast<int>(n), static_cast<int>(m), jt, samples_param(p), rng);
  r.check("e_in_g1", src::kAb, true, o.in_g1);
  r.check("e_nilpotent", src::kAb, true, o.nilpotent);
  r.check("jordan_blocks_match", src::kAb, true, o.jordan);
  r.check("signed_ranks_match", src::kAb, true, o.signed_ok);
  r.check("normal_triple", src::kTriple, true, o.triple);
  r.check("ad_h_integral_diagonalizable", src::kTriple, true, o.spectrum);
  r.check("evenness_matches_ad_h", src::kTriple, true, o.parity_consistent);
  r.check("odd_strings_imply_even", src::kEven, true, o.implication);
  if (o.even) r.check("degeneration", src::kDegeneration, true, o.degeneration);
  if (o.verdict == nilpotent::Distinguished::Inconclusive)
    r.inconclusive("distinguished_verdict", src::kDistinguished, "definite", "inconclusive");
  else
    r.check("distinguished_consistent", src::kDistinguished, true, o.verdict_consistent);
  r.data()["distinguished"] = nilpotent::to_string(o.verdict);
  return r;
}

Report nilpotent_classify(const Params& p) {
  Report r("nilpotent classify", p.seed());
  std::vector<std::pair<int, int>> pairs;
  const auto n_opt = p.find_int("n");
  const auto m_opt = p.find_int("m");
  if (n_opt || m_opt) {
    if (!n_opt || !m_opt || *n_opt < 1 || *m_opt < 1) throw UsageError("give both --n and --m (>= 1)");
    pairs.emplace_back(static_cast<int>(*n_opt), static_cast<int>(*m_opt));
  } else {
    const long max = p.get_int("max", 7);
    for (int n = 1; n < max; ++n)
      for (int m = 1; n + m <= max; ++m) pairs.emplace_back(n, m);
  }
  const std::size_t samples = samples_param(p);
  Rng rng(p.seed());
  std::size_t total = 0, built = 0, members = 0, implication = 0, triples = 0, spectra = 0, parity = 0;
  std::size_t even = 0, degeneration = 0, definite = 0, consistent = 0, distinguished = 0;
  for (auto [n, m] : pairs)
    for (const auto& jt : nilpotent::enumerate_types(n, m)) {
      ++total;
      const auto o = examine_type(n, m, jt, samples, rng);
      built += o.built;
      members += o.in_g1 && o.nilpotent && o.jordan && o.signed_ok;
      implication += o.implication;
      triples += o.triple;
      spectra += o.spectrum;
      parity += o.parity_consistent;
      even += o.even;
      degeneration += o.even && o.degeneration;
      definite += o.verdict != nilpotent::Distinguished::Inconclusive;
      consistent += o.verdict_consistent;
      distinguished += o.verdict == nilpotent::Distinguished::Distinguished;
    }
  r.check("odd_strings_imply_even", src::kEven, total, implication);
  r.check("realizations_valid", src::kAb, total, members);
  r.check("normal_triples", src::kTriple, total, triples);
  r.check("ad_h_integral_diagonalizable", src::kTriple, total, spectra);
  r.check("evenness_matches_ad_h", src::kTriple, total, parity);
  r.check("degeneration_for_even_types", src::kDegeneration, even, degeneration);
  r.check("definite_verdicts", src::kDistinguished, total, definite);
  r.check("verdicts_consistent_with_odd_strings", src::kEven, total, consistent);
  r.data()["types"] = total;
  r.data()["even_types"] = even;
  r.data()["distinguished"] = distinguished;
  json ps = json::array();
  for (auto [n, m] : pairs) ps.push_back({n, m});
  r.data()["pairs"] = ps;
  return r;
}

// --- excep ----------------------------------------------------------------------

std::vector<excep::PairChoice> pair_choices(const Params& p) {
  const std::string s = p.get_string("pair", "both");
  if (s == "both") return {excep::PairChoice::AlphaAlphaBeta, excep::PairChoice::BetaAlphaBeta};
  return {excep::parse_pair_choice(s)};
}

Report excep_modules(const Params& p) {
  Report r("excep modules", p.seed());
  const auto m60 = excep::irrep(6, 0), m44 = excep::irrep(4, 4), m11 = excep::irrep(1, 1), m10 = excep::irrep(1, 0);
  r.check("dim_irrep_1_0", src::kWeyl, 3, m10.dim);
  r.check("dim_irrep_6_0", src::kWeyl, excep::weyl_dimension(6, 0), m60.dim);
  r.check("dim_irrep_4_4", src::kWeyl, excep::weyl_dimension(4, 4), m44.dim);
  r.check("dim_e7_as_a2_module", src::kE7, 133, m11.dim + m44.dim);
  bool rel = true, weyl = true;
  for (const auto* m : {&m10, &m11, &m60, &m44}) {
    rel = rel && excep::relations_hold(*m);
    weyl = weyl && excep::weyl_symmetric(*m);
  }
  r.check("sl3_relations", src::kWeyl, true, rel);
  r.check("weight_multiplicities_weyl_symmetric", src::kWeyl, true, weyl);
  r.check("irrep_1_1_is_adjoint", src::kWeyl, true, excep::isomorphic(m11, excep::adjoint_module()));
  return r;
}

Report excep_e7(const Params& p) {
  Report r("excep e7", p.seed());
  for (auto c : pair_choices(p)) {
    const auto rep = excep::pn_pair_check_E7(c);
    const std::string tag = c == excep::PairChoice::AlphaAlphaBeta ? "alpha" : "beta";
    r.check("module_dim[" + tag + "]", src::kE7, 133, rep.module_dim);
    r.check("kernel_adjoint[" + tag + "]", src::kE7, 2, rep.kernel_adjoint);
    r.check("joint_kernel[" + tag + "]", src::kE7, excep::ExceptionalConstants::kRankE7, rep.total);
    r.data()["kernel_irrep_4_4[" + tag + "]"] = rep.kernel_44;
  }
  return r;
}

Report excep_e8(const Params& p) {
  Report r("excep e8", p.seed());
  for (auto c : pair_choices(p)) {
    const auto rep = excep::e8_centralizer_dim(c);
    const bool first = c == excep::PairChoice::AlphaAlphaBeta;
    const std::string tag = first ? "alpha" : "beta";
    r.check("e7_joint_kernel[" + tag + "]", src::kE7, 7, rep.e7.total);
    r.check("kernel_irrep_6_0[" + tag + "]", src::kE8, first ? 1 : 7, rep.kernel_60);
    r.check("kernel_irrep_0_6[" + tag + "]", src::kE8, first ? 7 : 1, rep.kernel_06);
    r.check("per_copy_of_V[" + tag + "]", src::kE8, 8, rep.per_copy_of_V);
    r.check("e8_joint_kernel[" + tag + "]", src::kE8, 26, rep.total);
    r.check("threshold[" + tag + "]", src::kE8Threshold, 32, rep.threshold);
  }
  return r;
}

Report excep_grading(const Params& p) {
  Report r("excep grading", p.seed());
  for (auto c : pair_choices(p)) {
    const auto rep = excep::grading_integrality_check(c);
    const std::string tag = c == excep::PairChoice::AlphaAlphaBeta ? "alpha" : "beta";
    r.check("h_dual_to_pair[" + tag + "]", src::kPnGrading, true, rep.dual_to_pair);
    r.check("integral_on_e7[" + tag + "]", src::kPnGrading, true, rep.integral);
    json h1 = json::array(), h2 = json::array();
    for (int i = 0; i < 3; ++i) {
      h1.push_back(rat_json(rep.h1(i, i)));
      h2.push_back(rat_json(rep.h2(i, i)));
    }
    r.data()["h1[" + tag + "]"] = h1;
    r.data()["h2[" + tag + "]"] = h2;
  }
  return r;
}

Report excep_verdict(const Params& p) {
  Report r("excep verdict", p.seed());
  const auto v = excep::reducibility_verdict();
  using K = excep::ExceptionalConstants;
  r.check("e8.computed", src::kE8, 26, v.e8_computed);
  r.check("e8.threshold", src::kE8Threshold, 32, v.e8_threshold);
  r.check("e8.reducible", src::kReducible, true, v.e8_reducible);
  r.check("e7.computed", src::kE7, 7, v.e7_computed);
  r.check("e7.dim_g0", src::kE7Data, 69, v.e7_dim_g0);
  r.check("e7.centralizer_dim", src::kE7Data, 13, v.e7_centralizer);
  r.check("e7.reducible", src::kReducible, true, v.e7_reducible);
  r.data()["e7.derived_centralizer_type"] = K::kE7DerivedCentralizer;
  r.data()["note"] = "32, 69 and 3A1 are recorded constants; the D4 centraliser is not recomputed";
  return r;
}

// --- spinor ---------------------------------------------------------------------

Report spinor_model(const Params& p) {
  Report r("spinor model", p.seed());
  const auto s = spinor::build_spin_model();
  r.check("dim_delta", src::kSpin, 16, s.dim());
  r.check("generators", src::kSpin, 45, s.action_Delta.size());
  r.check("so10_relations", src::kSpin, true, spinor::so10_relations_hold(s));
  std::set<std::vector<Rat>> distinct(s.weights.begin(), s.weights.end());
  r.check("distinct_weights", src::kSpin, 16, distinct.size());
  bool even_minus = true;
  for (const auto& w : s.weights) {
    int minus = 0;
    for (const auto& x : w) minus += sgn(x) < 0;
    even_minus = even_minus && minus % 2 == 0;
  }
  r.check("even_number_of_minus_signs", src::kSpin, true, even_minus);
  r.check("highest_weight_pi5", src::kSpin, rat_vec_json(std::vector<Rat>(5, Rat(1, 2))),
          rat_vec_json(s.weights[s.index_of(0)]));
  bool cartan_diag = true;
  for (std::size_t i = 0; i < s.cartan_Delta.size(); ++i)
    for (std::size_t a = 0; a < s.dim(); ++a)
      cartan_diag = cartan_diag && s.cartan_Delta[i](a, a) == s.weights[a][i];
  r.check("cartan_acts_by_weights", src::kSpin, true, cartan_diag);
  return r;
}

Report spinor_projection(const Params& p) {
  Report r("spinor projection", p.seed());
  const auto s = spinor::build_spin_model();
  const auto inv = spinor::equivariant_projection(s);
  r.check("solution_dim", src::kQuartic, 1, inv.solution_dim);
  r.check("equivariance_residual_zero", src::kQuartic, true, spinor::equivariance_exact(s, inv));
  const auto w = spinor::find_witness(s, inv);
  r.check("nonzero_invariant_value", src::kE6Heart, true, w.has_value());
  r.check("invariant_at_zero", src::kE6Heart, 0,
          rat_json(spinor::quartic_invariant_value(s, inv, exactlin::RatVec(s.dim()), w ? w->v : exactlin::RatVec(s.dim()))));
  r.data()["unknowns_after_weight_elimination"] = inv.unknowns;
  if (w) {
    r.data()["witness_u"] = w->u_label;
    r.data()["witness_v"] = w->v_label;
    r.data()["witness_value"] = rat_json(w->value);
  }
  return r;
}

Report spinor_c1(const Params& p) {
  Report r("spinor c1", p.seed());
  const auto s = spinor::build_spin_model();
  const auto c = spinor::cartan_c1(s);
  r.check("dim_c1", src::kC1, 2, c.basis.size());
  const auto mu = spinor::halfspace_check(c.weights);
  r.check("halfspace_certificate", src::kHalfspace, true, mu.has_value());
  r.check("first_coordinates_positive", src::kHalfspace, true,
          std::all_of(c.weights.begin(), c.weights.end(), [](const auto& w) { return sgn(w[0]) > 0; }));
  r.check("full_weight_set_not_in_halfspace", src::kHalfspace, false, spinor::halfspace_check(s.weights).has_value());
  json ws = json::array();
  for (const auto& w : c.weights) ws.push_back(rat_vec_json(w));
  r.data()["weights"] = ws;
  if (mu) r.data()["mu"] = rat_vec_json(*mu);
  return r;
}

Report spinor_heart(const Params& p) {
  Report r("spinor heart", p.seed());
  const auto s = spinor::build_spin_model();
  const auto h = spinor::heart_violation_E6(s);
  r.check("solution_dim", src::kQuartic, 1, h.solution_dim);
  r.check("c1_dim", src::kC1, 2, h.c1_dim);
  r.check("grid_points", src::kE6Heart, 81, h.grid_points);
  r.check("grid_nonzero_values", src::kE6Heart, 0, h.grid_nonzero);
  r.check("witness_nonzero", src::kE6Heart, true, h.witness.has_value());
  r.check("halfspace_certificate", src::kHalfspace, true, h.halfspace.has_value());
  r.check("condition_violated", src::kHeart, true, h.violated);
  r.check("component_lower_bound", src::kHeart, 3, h.violated ? 3 : 1);
  if (h.witness) {
    r.data()["witness_u"] = h.witness->u_label;
    r.data()["witness_v"] = h.witness->v_label;
    r.data()["witness_value"] = rat_json(h.witness->value);
  }
  r.data()["note"] = "one half-spin copy is used; the condition for g(1) holds iff it holds for g(-1)";
  return r;
}

Report spinor_invariance(const Params& p) {
  Report r("spinor invariance", p.seed());
  const auto s = spinor::build_spin_model();
  const auto inv = spinor::equivariant_projection(s);
  Rng rng(p.seed());
  const auto rep = spinor::infinitesimal_invariance(s, inv, rng);
  r.check("generators", src::kQuartic, 45, rep.generators);
  r.check("derivative_vanishes", src::kQuartic, true, rep.all_zero);
  r.data()["grid_points"] = rep.points;
  return r;
}

using Handler = std::function<Report(const Params&)>;

struct Entry {
  CheckInfo info;
  Handler run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"exactlin", "rank-agreement", "Bareiss and Gauss ranks agree on random matrices"}, exactlin_rank_agreement},
      {{"liealg", "model", "dimensions and invariants of a matrix model"}, liealg_model},
      {{"liealg", "z2", "centraliser identity on random elements of g1"}, liealg_z2},
      {{"liealg", "conjugation", "centraliser dimensions under G0-conjugation"}, liealg_conjugation},
      {{"liealg", "subpair", "centralisers of semisimple elements of BDI"}, liealg_subpair},
      {{"satake", "catalog", "look up a diagram by label"}, satake_catalog},
      {{"satake", "rank", "rank formula for a catalog diagram"}, satake_rank},
      {{"satake", "subdiagrams", "subdiagram closure (--connected for connected classes)"}, satake_subdiagrams},
      {{"satake", "bdi-rank", "BDI diagram ranks against Cartan dimensions"}, satake_bdi_rank},
      {{"strata", "lower-bound", "component lower bound F(n,m) with separating witnesses"}, strata_lower_bound},
      {{"strata", "witness", "stratum witness for (n,m,q)"}, strata_witness},
      {{"strata", "rank-sum", "rank-sum inequality on sampled commuting pairs"}, strata_rank_sum},
      {{"strata", "diii", "DIII(n) rank separation for odd n"}, strata_diii},
      {{"strata", "heart", "separating invariant against a g(1) x g(1) witness"}, strata_heart},
      {{"strata", "projections", "short-grading pieces and c(+-1)"}, strata_projections},
      {{"nilpotent", "type", "checks for one signed Jordan type"}, nilpotent_type},
      {{"nilpotent", "classify", "checks over all signed Jordan types"}, nilpotent_classify},
      {{"excep", "modules", "sl3-modules used for E7 and E8"}, excep_modules},
      {{"excep", "e7", "joint kernel of the A2 pair on E7"}, excep_e7},
      {{"excep", "e8", "joint kernel of the A2 pair on E8"}, excep_e8},
      {{"excep", "grading", "integral bi-grading of the pair"}, excep_grading},
      {{"excep", "verdict", "reducibility verdicts for E7 and E8"}, excep_verdict},
      {{"spinor", "model", "half-spin representation of so10"}, spinor_model},
      {{"spinor", "projection", "equivariant map S^2(Delta) -> V"}, spinor_projection},
      {{"spinor", "c1", "c(1) weights and halfspace certificate"}, spinor_c1},
      {{"spinor", "heart", "quartic invariant separates c(1) x c(1) from g(1) x g(1)"}, spinor_heart},
      {{"spinor", "invariance", "infinitesimal invariance of the quartic"}, spinor_invariance},
  };
  return r;
}

}  // namespace

const std::vector<CheckInfo>& available_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

Report run_check(const std::string& module, const std::string& check, const Params& params) {
  for (const auto& e : registry())
    if (e.info.module == module && e.info.check == check) {
      try {
        Report r = e.run(params);
        r.params() = params.used();
        return r;
      } catch (const ParameterError& err) {
        throw UsageError(err.what());
      }
    }
  throw UsageError("unknown check '" + module + " " + check + "'");
}

}  // namespace commvar
