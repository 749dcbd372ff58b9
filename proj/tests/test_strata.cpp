#include "commvar/error.hpp"
#include "commvar/liealg.hpp"
#include "commvar/strata.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace commvar;
using namespace commvar::strata;
using exactlin::RatMat;
using liealg::Family;

TEST_CASE("rank of D at the origin") {
  const auto p = assemble_pair(Family::AIII_gl, 2, 3, RatMat(3, 2), RatMat(2, 3), RatMat(3, 2), RatMat(2, 3));
  CHECK(oracle::rank(D1(p)) == 0);
  const auto r = rank_sum_check(p);
  CHECK(r.commutes);
  CHECK(r.rkD1 + r.rkD2 == 0);
  CHECK(r.inequality_holds);
}

TEST_CASE("explicit witness for (2,4,3)") {
  const RatMat X{{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  RatMat Z(4, 2);
  Z(2, 0) = 1;
  RatMat Y(2, 4);
  Y(1, 1) = 1;
  const RatMat U(2, 4);
  // XU = ZY and YZ = UX.
  CHECK(X * U == Z * Y);
  CHECK(Y * Z == U * X);
  const auto p = assemble_pair(Family::AIII_gl, 2, 4, X, Y, Z, U);
  const auto r = rank_sum_check(p);
  CHECK(r.commutes);
  CHECK(r.rkD1 == 3);
  CHECK(r.rkD2 == 1);

  const auto w = witness_AIII(2, 4, 3);
  const auto rw = rank_sum_check(w);
  CHECK(rw.commutes);
  CHECK(oracle::rank(D1(w)) == 3);
  CHECK(oracle::rank(D2(w)) == 1);
}

TEST_CASE("witnesses separate every stratum") {
  for (int n = 1; n <= 6; ++n)
    for (int m = n; m <= 6; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      long count = 0;
      for (int q = q_min(n, m); q <= q_max(n, m); ++q) {
        const auto w = witness_AIII(n, m, q);
        REQUIRE(liealg::bracket(w.xi, w.eta).is_zero());
        REQUIRE(oracle::rank(D1(w)) == std::size_t(q));
        REQUIRE(oracle::rank(D2(w)) == std::size_t(2 * n - q));
        ++count;
      }
      CHECK(count == oracle::strata_count(n, m));
      CHECK(Dim(count) == lower_bound_components(n, m));
    }
  CHECK_THROWS_AS(witness_AIII(2, 4, 5), ParameterError);
}

TEST_CASE("lower bound values") {
  for (int m = 2; m <= 8; ++m) CHECK(lower_bound_components(1, m) == 3);
  for (int n = 1; n <= 6; ++n) CHECK(lower_bound_components(n, n) == 1);
  CHECK(lower_bound_components(2, 4) == 5);
  CHECK_THROWS_AS(lower_bound_components(3, 2), ParameterError);
}

TEST_CASE("rank sum on conjugated Cartan pairs") {
  Rng rng(41);
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}, {3, 5}}) {
    const auto model = liealg::build_model(Family::AIII_gl, n, m);
    for (int k = 0; k < 25; ++k) {
      const auto p = sample_cartan_pair(model, rng);
      const auto r = rank_sum_check(p);
      REQUIRE(r.commutes);
      REQUIRE(r.rkD1 <= Dim(n));
      REQUIRE(r.rkD2 <= Dim(n));
      REQUIRE(r.inequality_holds);
      REQUIRE(r.rkD1 == oracle::rank(D1(p)));
    }
  }
}

TEST_CASE("D ranks are G0-invariant") {
  Rng rng(43);
  const auto model = liealg::build_model(Family::AIII_gl, 2, 4);
  for (int q = q_min(2, 4); q <= q_max(2, 4); ++q) {
    const auto w = witness_AIII(2, 4, q);
    for (int k = 0; k < 5; ++k) {
      const auto g = liealg::random_G0_element(model, rng);
      const auto moved = make_pair(model, liealg::conjugate(g, w.xi), liealg::conjugate(g, w.eta));
      CHECK(oracle::rank(D1(moved)) == oracle::rank(D1(w)));
      CHECK(oracle::rank(D2(moved)) == oracle::rank(D2(w)));
    }
  }
}

TEST_CASE("DIII witness") {
  const auto w = witness_DIII(3);
  const RatMat X{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  const RatMat Z{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}};
  CHECK(w.X == X);
  CHECK(w.Z == Z);
  CHECK(oracle::rank(D1(w)) == 3);
  for (int n : {3, 5, 7}) {
    const auto v = witness_DIII(n);
    const auto model = liealg::build_model(Family::DIII, n);
    CHECK(model.in_g1(v.xi));
    CHECK(liealg::bracket(v.xi, v.eta).is_zero());
    CHECK(oracle::rank(v.X) == std::size_t(n - 1));
    CHECK(oracle::rank(D1(v)) == std::size_t(n));
  }
  CHECK_THROWS_AS(witness_DIII(4), ParameterError);

  Rng rng(47);
  const auto model = liealg::build_model(Family::DIII, 3);
  for (int k = 0; k < 30; ++k) REQUIRE(oracle::rank(D1(sample_cartan_pair(model, rng))) <= 2);
}

TEST_CASE("short grading") {
  for (const auto& [f, n, m] : std::vector<std::tuple<Family, int, int>>{
           {Family::AIII_gl, 2, 3}, {Family::AIII_gl, 1, 4}, {Family::DIII, 3, 3}, {Family::DIII, 4, 4}}) {
    const auto model = liealg::build_model(f, n, m);
    const auto g = grading_projections(model);
    for (const auto& x : g.g_plus1)
      for (const auto& y : g.g_plus1) REQUIRE(liealg::bracket(x, y).is_zero());
    CHECK(g.g_plus1_abelian);
    CHECK(g.g_minus1_abelian);
    CHECK(g.dim_c_plus1 == model.cartan_basis().size());
    CHECK(g.dim_c_minus1 == model.cartan_basis().size());
    CHECK(g.g_plus1.size() + g.g_minus1.size() == model.g1_basis().size());
  }
  CHECK_THROWS_AS(grading_projections(liealg::build_model(Family::BDI, 2, 3)), ParameterError);
}

TEST_CASE("separating invariant reports") {
  Rng rng(53);
  const auto a12 = heart_violation_report(Family::AIII_gl, 1, 2, 20, rng);
  CHECK(a12.verdict == Verdict::Violated);
  CHECK(a12.component_lower_bound == 3);
  CHECK(a12.sampled_max <= a12.bound);
  CHECK(a12.witness_value > a12.bound);

  const auto d3 = heart_violation_report(Family::DIII, 3, 3, 20, rng);
  CHECK(d3.verdict == Verdict::Violated);
  CHECK(d3.component_lower_bound >= 3);
  CHECK(d3.bound == 2);
  CHECK(d3.witness_value == 3);

  CHECK(heart_violation_report(Family::AIII_gl, 2, 2, 20, rng).verdict == Verdict::Inconclusive);
  CHECK(heart_violation_report(Family::DIII, 4, 4, 20, rng).verdict == Verdict::Inconclusive);
}
