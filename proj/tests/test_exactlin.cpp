#include "commvar/exactlin.hpp"
#include "commvar/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace commvar;
using namespace commvar::exactlin;

namespace {

RatMat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  RatMat a(rows, inner), b(inner, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < inner; ++j) a(i, j) = rng.small_rat(5, 4);
  for (std::size_t i = 0; i < inner; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = rng.small_rat(5, 4);
  return a * b;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
  CHECK(rank(RatMat(3, 3)) == 0);
  for (std::size_t n : {1u, 4u, 9u}) CHECK(rank(RatMat::identity(n)) == n);
  const RatMat m{{1, 2}, {2, 4}};
  CHECK(rank(m) == 1);
  CHECK(rank(m) == oracle::rank(m));
  CHECK(rank_gauss(m) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(RatMat::identity(4)).empty());
  CHECK(kernel_basis(RatMat(2, 3)).size() == 3);
  const RatMat m{{1, 1, 0}};
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(is_zero(m * v));
}

TEST_CASE("solve") {
  const RatVec b{Rat(1, 2), Rat(-3), Rat(7)};
  const auto x = solve(RatMat::identity(3), b);
  REQUIRE(x);
  CHECK(*x == b);
  const auto y = solve(RatMat{{1, 1}}, RatVec{Rat(0)});
  REQUIRE(y);
  CHECK((*y)[0] + (*y)[1] == 0);
  CHECK_FALSE(solve(RatMat{{1}, {1}}, RatVec{Rat(0), Rat(1)}));
}

TEST_CASE("inverse and rref") {
  const RatMat m{{2, 1}, {1, 1}};
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == RatMat::identity(2));
  CHECK_FALSE(inverse(RatMat{{1, 2}, {2, 4}}));
  RatMat r{{0, 2, 4}, {1, 1, 1}};
  CHECK(rref(r) == std::vector<std::size_t>{0, 1});
  CHECK(r == RatMat{{1, 0, -1}, {0, 1, 2}});
}

TEST_CASE("row space coordinates") {
  RowSpace s(3);
  CHECK(s.insert({Rat(1), Rat(2), Rat(3)}));
  CHECK(s.insert({Rat(0), Rat(1), Rat(1)}));
  CHECK_FALSE(s.insert({Rat(1), Rat(3), Rat(4)}));
  CHECK(s.dim() == 2);
  const RatVec v{Rat(2), Rat(5), Rat(7)};
  const auto c = s.coordinates(v);
  REQUIRE(c);
  RatVec back(3);
  for (std::size_t i = 0; i < c->size(); ++i) back = add_scaled(back, s.basis()[i], (*c)[i]);
  CHECK(back == v);
  CHECK_FALSE(s.coordinates({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("polynomials") {
  const RatMat m{{0, 1}, {-2, 3}};  // eigenvalues 1, 2
  const auto p = charpoly(m);
  CHECK(p == RatPoly({Rat(2), Rat(-3), Rat(1)}));
  CHECK(p.eval(m).is_zero());
  CHECK(minimal_polynomial(RatMat::identity(3)) == RatPoly({Rat(-1), Rat(1)}));
  const RatPoly sq = RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(2), Rat(1)});
  const auto d = squarefree_decomposition(sq);
  REQUIRE(d.size() >= 2);
  CHECK(d[0].monic() == RatPoly({Rat(2), Rat(1)}));
  CHECK(d[1].monic() == RatPoly({Rat(-1), Rat(1)}));
}

TEST_CASE("rank properties on 500 random matrices up to 30x30") {
  Rng rng(7);
  for (int s = 0; s < 500; ++s) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 30));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 30));
    const auto inner = static_cast<std::size_t>(rng.uniform(1, 30));
    const RatMat m = random_matrix(rng, rows, cols, inner);
    const Dim r = rank(m);
    REQUIRE(r == rank_gauss(m));
    REQUIRE(r == oracle::rank(m));
    REQUIRE(r == rank(m.transpose()));
    REQUIRE(r + kernel_basis(m).size() == cols);
  }
}
