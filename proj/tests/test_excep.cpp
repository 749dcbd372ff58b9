#include "commvar/error.hpp"
#include "commvar/excep.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace commvar;
using namespace commvar::excep;

namespace {

const std::pair<std::string, std::string> kAlpha{"e_alpha", "e_alpha_beta"};
const std::pair<std::string, std::string> kBeta{"e_beta", "e_alpha_beta"};

Dim kernel(const WeightModule& m, const std::pair<std::string, std::string>& ops) {
  return joint_kernel_dim(m, {ops.first, ops.second});
}

/// Joint kernel computed by stacking the two action matrices.
std::size_t kernel_oracle(const WeightModule& m, const std::pair<std::string, std::string>& ops) {
  auto rows = oracle::rows_of(m.act(ops.first));
  for (auto& r : oracle::rows_of(m.act(ops.second))) rows.push_back(r);
  return m.dim - oracle::rank(rows);
}

}  // namespace

TEST_CASE("dimensions of irreducible modules") {
  CHECK(irrep(1, 0).dim == 3);
  CHECK(irrep(0, 1).dim == 3);
  CHECK(irrep(6, 0).dim == 28);
  CHECK(irrep(4, 4).dim == 125);
  CHECK(irrep(1, 1).dim + irrep(4, 4).dim == 133);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      CHECK(Dim(oracle::weyl_dim_a2(a, b)) == weyl_dimension(a, b));
      CHECK(irrep(a, b).dim == Dim(oracle::weyl_dim_a2(a, b)));
    }
}

TEST_CASE("module structure") {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {6, 0}, {0, 6}, {4, 4}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto m = irrep(a, b);
    CHECK(relations_hold(m));
    CHECK(weyl_symmetric(m));
    CHECK(m.highest_weight == std::make_pair(a, b));
  }
  CHECK(isomorphic(irrep(1, 1), adjoint_module()));
  CHECK_FALSE(isomorphic(irrep(2, 0), irrep(0, 2)));
  CHECK(intertwiner_dim(irrep(2, 1), irrep(2, 1)) == 1);
  CHECK(intertwiner_dim(irrep(2, 1), irrep(1, 2)) == 0);
  const auto e7 = e7_as_a2_module();
  CHECK(e7.dim == 133);
  CHECK(relations_hold(e7));
}

TEST_CASE("joint kernels of the principal pair") {
  CHECK(kernel(adjoint_module(), kAlpha) == 2);
  CHECK(kernel(irrep(6, 0), kAlpha) == 1);
  CHECK(kernel(irrep(0, 6), kAlpha) == 7);
  CHECK(kernel(irrep(6, 0), kBeta) == 7);
  CHECK(kernel(irrep(0, 6), kBeta) == 1);
  const auto v = direct_sum({irrep(6, 0), irrep(0, 6)});
  CHECK(kernel(v, kAlpha) == 8);
  CHECK(kernel(v, kBeta) == 8);
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {6, 0}, {0, 6}, {4, 4}, {3, 2}}) {
    const auto m = irrep(a, b);
    CHECK(kernel(m, kAlpha) == kernel_oracle(m, kAlpha));
    CHECK(kernel(m, kBeta) == kernel_oracle(m, kBeta));
  }
}

TEST_CASE("E7 and E8") {
  for (auto c : {PairChoice::AlphaAlphaBeta, PairChoice::BetaAlphaBeta}) {
    const auto e7 = pn_pair_check_E7(c);
    CHECK(e7.module_dim == 133);
    CHECK(e7.kernel_adjoint == 2);
    CHECK(e7.total == 7);
    const auto e8 = e8_centralizer_dim(c);
    CHECK(e8.total == 26);
    CHECK(e8.per_copy_of_V == 8);
    CHECK(e8.threshold == 32);
    CHECK(e8.total == e8.e7.total + 2 * e8.per_copy_of_V + e8.trivial_copies);
    CHECK(std::multiset<Dim>{e8.kernel_60, e8.kernel_06} == std::multiset<Dim>{1, 7});
  }
  CHECK(e8_centralizer_dim(PairChoice::AlphaAlphaBeta).kernel_60 == 1);
  CHECK(e8_centralizer_dim(PairChoice::BetaAlphaBeta).kernel_60 == 7);
}

TEST_CASE("pair choice parsing") {
  CHECK(parse_pair_choice("alpha") == PairChoice::AlphaAlphaBeta);
  CHECK(parse_pair_choice("2") == PairChoice::BetaAlphaBeta);
  CHECK(pair_generators(PairChoice::BetaAlphaBeta) == kBeta);
  CHECK_THROWS_AS(parse_pair_choice("gamma"), ParameterError);
}

TEST_CASE("integral grading") {
  const auto g = grading_integrality_check(PairChoice::AlphaAlphaBeta);
  CHECK(g.integral);
  CHECK(g.dual_to_pair);
  // [h1, e1] = e1 and [h1, e2] = 0, read off from the matrices.
  const auto h1 = g.h1, e1 = generator_matrix("e_alpha"), e2 = generator_matrix("e_alpha_beta");
  CHECK(h1 * e1 - e1 * h1 == e1);
  CHECK((h1 * e2 - e2 * h1).is_zero());
  CHECK(grading_integrality_check(PairChoice::BetaAlphaBeta).integral);
}

TEST_CASE("reducibility verdict") {
  const auto v = reducibility_verdict();
  CHECK(v.e8_computed == 26);
  CHECK(v.e8_threshold == 32);
  CHECK(v.e8_reducible);
  CHECK(v.e7_computed == 7);
  CHECK(v.e7_dim_g0 == 69);
  CHECK(v.e7_centralizer == 13);
  CHECK(v.e7_reducible);
}
