#include "commvar/spinor.hpp"

#include <doctest.h>

#include <set>

using namespace commvar;
using namespace commvar::spinor;

namespace {

const SpinModel& model() {
  static const SpinModel s = build_spin_model();
  return s;
}

const QuarticInvariant& invariant() {
  static const QuarticInvariant q = equivariant_projection(model());
  return q;
}

}  // namespace

TEST_CASE("half-spin model") {
  const auto& s = model();
  CHECK(s.dim() == 16);
  CHECK(s.action_Delta.size() == 45);
  CHECK(s.action_V.size() == 45);
  CHECK(so10_relations_hold(s));
  const auto& vac = s.weights[s.index_of(0)];
  for (const auto& x : vac) CHECK(abs(x) == Rat(1, 2));
  std::set<std::vector<Rat>> distinct(s.weights.begin(), s.weights.end());
  CHECK(distinct.size() == 16);
  // The generators preserve the split form on V.
  for (const auto& x : s.action_V) REQUIRE((x.transpose() * s.metric + s.metric * x).is_zero());
}

TEST_CASE("equivariant projection") {
  const auto& inv = invariant();
  CHECK(inv.solution_dim == 1);
  CHECK(inv.components.size() == 10);
  CHECK(equivariance_exact(model(), inv));
  for (const auto& c : inv.components) CHECK(c == c.transpose());
}

TEST_CASE("quartic invariant values") {
  const auto& s = model();
  const auto& inv = invariant();
  const RatVec zero(16);
  RatVec v(16);
  v[3] = 1;
  v[7] = Rat(-2, 3);
  CHECK(quartic_invariant_value(s, inv, zero, v) == 0);
  const auto w = find_witness(s, inv);
  REQUIRE(w);
  CHECK(w->value != 0);
  CHECK(quartic_invariant_value(s, inv, w->u, w->v) == w->value);
  // Homogeneous of degree 2 in each argument.
  RatVec u2 = w->u;
  for (auto& x : u2) x *= 3;
  CHECK(quartic_invariant_value(s, inv, u2, w->v) == 9 * w->value);

  Rng rng(3);
  const auto r = infinitesimal_invariance(s, inv, rng);
  CHECK(r.generators == 45);
  CHECK(r.all_zero);
}

TEST_CASE("c(1) and the halfspace condition") {
  const auto& s = model();
  const auto c = cartan_c1(s);
  CHECK(c.basis.size() == 2);
  for (const auto& w : c.weights) CHECK(w[0] == Rat(1, 2));
  const auto mu = halfspace_check(c.weights);
  REQUIRE(mu);
  for (const auto& w : c.weights) {
    Rat dot = 0;
    for (std::size_t i = 0; i < w.size(); ++i) dot += (*mu)[i] * w[i];
    CHECK(dot > 0);
  }
  const std::vector<Rat> w{Rat(1), Rat(-2), Rat(0)};
  CHECK_FALSE(halfspace_check({w, {Rat(-1), Rat(2), Rat(0)}}));
  CHECK_FALSE(halfspace_check(s.weights));
  CHECK(halfspace_check({{Rat(0), Rat(1)}, {Rat(1), Rat(1)}}));
}

TEST_CASE("E6 separating invariant") {
  const auto h = heart_violation_E6(model());
  CHECK(h.solution_dim == 1);
  CHECK(h.c1_dim == 2);
  CHECK(h.grid_points == 81);
  CHECK(h.grid_nonzero == 0);
  REQUIRE(h.witness);
  CHECK(h.witness->value != 0);
  CHECK(h.halfspace);
  CHECK(h.violated);
}
