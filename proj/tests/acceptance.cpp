// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "commvar/excep.hpp"
#include "commvar/liealg.hpp"
#include "commvar/nilpotent.hpp"
#include "commvar/satake.hpp"
#include "commvar/spinor.hpp"
#include "commvar/strata.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>

using namespace commvar;
using exactlin::Dim;
using exactlin::RatMat;
using liealg::Family;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion_1(Outcome& o) {
  const auto t0 = Clock::now();
  for (auto c : {excep::PairChoice::AlphaAlphaBeta, excep::PairChoice::BetaAlphaBeta}) {
    const auto e7 = excep::pn_pair_check_E7(c);
    o.require(e7.module_dim == 133, "E7 module dim 133");
    o.require(e7.total == 7, "E7 joint kernel 7");
    const auto e8 = excep::e8_centralizer_dim(c);
    o.require(e8.total == 26, "E8 joint kernel 26");
    o.require(std::multiset<Dim>{e8.kernel_60, e8.kernel_06} == std::multiset<Dim>{1, 7}, "summand kernels {1,7}");
    o.require(e8.threshold == 32, "threshold 32");
    o.detail << excep::to_string(c) << ": e7=" << e7.total << " e8=" << e8.total << " (" << e8.kernel_60 << ","
             << e8.kernel_06 << "); ";
  }
  const double s = seconds_since(t0);
  o.require(s < 60.0, "runtime under 60 s");
  o.detail << "time " << s << " s";
}

void criterion_2(Outcome& o) {
  const auto m60 = excep::irrep(6, 0), m44 = excep::irrep(4, 4), m11 = excep::irrep(1, 1);
  o.require(m60.dim == 28 && long(m60.dim) == oracle::weyl_dim_a2(6, 0), "dim irrep(6,0) = 28");
  o.require(m44.dim == 125 && long(m44.dim) == oracle::weyl_dim_a2(4, 4), "dim irrep(4,4) = 125");
  o.require(m11.dim + m44.dim == 133, "8 + 125 = 133");
  o.detail << m60.dim << ", " << m44.dim << ", " << m11.dim << "+" << m44.dim << "=" << m11.dim + m44.dim;
}

void criterion_3(Outcome& o) {
  const auto& cat = satake::Catalog::builtin();
  const auto conn = satake::connected_proper_subdiagrams(cat.get("E6/(sl6+sl2)"));
  o.require(conn.size() == 7, "seven classes");
  std::vector<std::string> names;
  for (const auto& d : conn) names.push_back(cat.identify(d).value_or("?"));
  std::sort(names.begin(), names.end());
  std::vector<std::string> expected{"sl(6)/(sl(3)+sl(3)+t1)", "so(8)/(so(5)+so(3))", "sl(3)+sl(3)/sl(3)",
                                    "sl(4)/(sl(2)+sl(2)+t1)", "sl(2)+sl(2)/sl(2)",  "sl(3)/so(3)", "sl(2)/so(2)"};
  std::sort(expected.begin(), expected.end());
  o.require(names == expected, "identified labels");
  o.detail << conn.size() << " classes";
}

const std::vector<std::pair<int, int>> kStrataShapes = {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 6}};

void criterion_4(Outcome& o) {
  const auto t0 = Clock::now();
  Rng rng(4);
  for (auto [n, m] : kStrataShapes) {
    long legal = 0;
    for (int q = strata::q_min(n, m); q <= strata::q_max(n, m); ++q) {
      const auto w = strata::witness_AIII(n, m, q);
      o.require(liealg::bracket(w.xi, w.eta).is_zero(), "witness commutes");
      o.require(oracle::rank(strata::D1(w)) == std::size_t(q), "rk D1 = q");
      o.require(oracle::rank(strata::D2(w)) == std::size_t(2 * n - q), "rk D2 = 2n - q");
      ++legal;
    }
    o.require(legal == oracle::strata_count(n, m) && Dim(legal) == strata::lower_bound_components(n, m),
              "legal q count equals F");
    const auto model = liealg::build_model(Family::AIII_gl, n, m);
    for (int k = 0; k < 100; ++k) {
      const auto p = strata::sample_cartan_pair(model, rng);
      o.require(oracle::rank(strata::D1(p)) <= std::size_t(n), "rk D1 <= n on c x c");
      o.require(oracle::rank(strata::D2(p)) <= std::size_t(n), "rk D2 <= n on c x c");
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 30.0, "runtime under 30 s");
  o.detail << kStrataShapes.size() << " shapes, time " << s << " s";
}

void criterion_5(Outcome& o) {
  Rng rng(5);
  std::size_t tested = 0;
  while (tested < 500)
    for (auto [n, m] : kStrataShapes) {
      if (tested >= 500) break;
      const auto model = liealg::build_model(Family::AIII_gl, n, m);
      strata::GradedPair p;
      if (tested % 2 == 0) {
        p = strata::sample_cartan_pair(model, rng);
      } else {
        const int q = int(rng.uniform(strata::q_min(n, m), strata::q_max(n, m)));
        const auto w = strata::witness_AIII(n, m, q);
        const auto g = liealg::random_G0_element(model, rng);
        p = strata::make_pair(model, liealg::conjugate(g, w.xi), liealg::conjugate(g, w.eta));
      }
      o.require(liealg::bracket(p.xi, p.eta).is_zero(), "pair commutes");
      o.require(oracle::rank(strata::D1(p)) + oracle::rank(strata::D2(p)) <= std::size_t(2 * n), "rk sum <= 2n");
      ++tested;
    }
  o.detail << tested << " pairs";
}

void criterion_6(Outcome& o) {
  Rng rng(6);
  for (int n : {3, 5}) {
    const auto w = strata::witness_DIII(n);
    const auto model = liealg::build_model(Family::DIII, n);
    o.require(model.in_g1(w.xi) && model.in_g1(w.eta) && liealg::bracket(w.xi, w.eta).is_zero(), "witness valid");
    o.require(oracle::rank(strata::D1(w)) == std::size_t(n), "witness rank n");
    std::size_t worst = 0;
    for (int k = 0; k < 100; ++k) worst = std::max(worst, oracle::rank(strata::D1(strata::sample_cartan_pair(model, rng))));
    o.require(worst <= std::size_t(n - 1), "samples <= n-1");
    o.detail << "n=" << n << " max sample " << worst << "; ";
  }
}

void criterion_7(Outcome& o) {
  const auto t0 = Clock::now();
  const auto s = spinor::build_spin_model();
  const auto h = spinor::heart_violation_E6(s);
  o.require(h.solution_dim == 1, "solution space dim 1");
  o.require(h.grid_points == 81 && h.grid_nonzero == 0, "81-point grid all zero");
  o.require(h.witness && h.witness->value != 0, "nonzero witness");
  o.require(h.halfspace.has_value(), "halfspace certificate");
  const double secs = seconds_since(t0);
  o.require(secs < 120.0, "runtime under 120 s");
  o.detail << "witness " << (h.witness ? h.witness->value.get_str() : "none") << ", time " << secs << " s";
}

void criterion_8(Outcome& o) {
  Rng rng(8);
  struct S {
    Family f;
    int n, m;
  };
  for (const S& s : {S{Family::BDI, 2, 3}, S{Family::BDI, 3, 4}, S{Family::AIII_gl, 2, 4}, S{Family::DIII, 3, 3}}) {
    const auto model = liealg::build_model(s.f, s.n, s.m);
    const long d1 = long(model.g1_basis().size()), d0 = long(model.g0_basis().size());
    for (int k = 0; k < 50; ++k) {
      const RatMat x = liealg::random_g1_element(model, rng);
      const long gx = long(oracle::commutant_dim(model, x, false)), g0x = long(oracle::commutant_dim(model, x, true));
      o.require((gx - g0x) - g0x == d1 - d0, "z2 identity (oracle)");
      o.require(liealg::check_z2(model, x), "z2 identity (library)");
    }
  }
  o.detail << "4 models x 50 samples";
}

void criterion_9(Outcome& o) {
  Rng rng(9);
  std::size_t types = 0, even = 0, definite = 0;
  for (int n = 1; n < 7; ++n)
    for (int m = 1; n + m <= 7; ++m)
      for (const auto& jt : nilpotent::enumerate_types(n, m)) {
        ++types;
        const bool is_even = nilpotent::is_even_nilpotent(jt);
        o.require(!nilpotent::sigma_distinguished_necessary(jt) || is_even, "all-odd implies same parity");
        const auto r = nilpotent::build_nilpotent(n, m, jt);
        o.require(r.model.in_g1(r.e) && liealg::is_nilpotent(r.e), "realization in g1 and nilpotent");
        o.require(nilpotent::jordan_block_sizes(r.e) == jt.lengths(), "Jordan blocks");
        o.require(nilpotent::signed_ranks_match(r, jt), "signed structure");
        const auto t = nilpotent::normal_sl2_triple(r.model, r.e);
        o.require(nilpotent::triple_relations_hold(r.model, t), "normal triple");
        if (is_even) {
          ++even;
          o.require(nilpotent::degeneration_check(r.model, t, {1, 2, 3}).all_match, "degeneration");
        }
        const auto v = nilpotent::sigma_distinguished_test(r.model, r.e, 20, rng).verdict;
        definite += v != nilpotent::Distinguished::Inconclusive;
        o.require(v != nilpotent::Distinguished::Distinguished || nilpotent::sigma_distinguished_necessary(jt),
                  "distinguished verdict consistent");
      }
  o.detail << types << " types, " << even << " even, " << definite << " definite verdicts";
}

void criterion_10(Outcome& o) {
  Rng rng(10);
  struct S {
    Family f;
    int n, m;
  };
  const std::vector<S> shapes{{Family::BDI, 2, 3}, {Family::BDI, 1, 3}, {Family::AIII_gl, 2, 2},
                              {Family::AIII_gl, 1, 3}, {Family::DIII, 3, 3}, {Family::DIII, 4, 4}};
  std::vector<nilpotent::NilpotentRealization> nil;
  for (const char* jt : {"3a", "3a,1b", "2a:2b", "3a,1b,1b", "1a,3b"}) {
    const auto t = nilpotent::SignedJordanType::parse(jt);
    nil.push_back(nilpotent::build_nilpotent(int(t.count_a()), int(t.count_b()), t));
  }
  std::size_t done = 0;
  for (int k = 0; done < 200; ++k) {
    const S& s = shapes[k % shapes.size()];
    std::optional<liealg::SymmetricPairModel> holder;
    const liealg::SymmetricPairModel* model = nullptr;
    RatMat x;
    if (k % 4 == 3) {
      const auto& r = nil[k % nil.size()];
      model = &r.model;
      x = r.e;
      x *= rng.small_rat();
    } else {
      holder = liealg::build_model(s.f, s.n, s.m);
      model = &*holder;
      const auto N = model->ambient_dim();
      if (k % 4 == 0) {
        x = rng.combination(model->g_basis(), N);
      } else if (k % 4 == 1) {
        x = liealg::random_g1_element(*model, rng);
      } else {
        // 0/1 coefficients on the Cartan basis give repeated eigenvalues.
        x = RatMat(N, N);
        for (const auto& c : model->cartan_basis())
          if (rng.uniform(0, 1)) x += c;
      }
    }
    const auto full = oracle::commutant_dim(*model, x, false);
    const auto d = liealg::centralizer_dims(*model, x);
    o.require(liealg::centralizer_dim(*model, x) == full, "dim g_x");
    o.require(d.g0x == oracle::commutant_dim(*model, x, true), "dim g0_x");
    if (k % 4 != 0) o.require(d.total() == full, "dim g0_x + dim g1_x for x in g1");
    ++done;
  }
  o.detail << done << " elements";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"E7 joint kernel 7 for both pairs; E8 26 with summands {1,7}, threshold 32", criterion_1},
      {"irrep(6,0)=28, irrep(4,4)=125, 8+125=133", criterion_2},
      {"E6/(sl6+sl2): 7 connected proper classes, identified", criterion_3},
      {"AIII witnesses, legal strata count = F, c x c ranks <= n", criterion_4},
      {"rank-sum inequality on 500 commuting pairs", criterion_5},
      {"DIII n=3,5: witness rank n, c x c samples <= n-1", criterion_6},
      {"spinor quartic: dim 1, grid zero, witness, halfspace", criterion_7},
      {"z2 identity on four models, 50 samples each", criterion_8},
      {"signed Jordan types with n+m <= 7", criterion_9},
      {"centraliser dims against brute-force commutant, 200 elements", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.ok;
    std::printf("%s %zu: %s  [%s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
