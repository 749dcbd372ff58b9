#include "commvar/error.hpp"
#include "commvar/liealg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace commvar;
using namespace commvar::liealg;
using exactlin::Rat;
using exactlin::RatMat;

namespace {

struct Shape {
  Family family;
  int n, m;
};

const std::vector<Shape> kShapes = {{Family::BDI, 2, 3}, {Family::BDI, 3, 4}, {Family::BDI, 1, 2},
                                    {Family::AIII_gl, 2, 2}, {Family::AIII_gl, 1, 3}, {Family::AIII_gl, 2, 4},
                                    {Family::DIII, 3, 3}, {Family::DIII, 4, 4}};

RatMat unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMat e(n, n);
  e(i, j) = 1;
  return e;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("BDI") == Family::BDI);
  CHECK(parse_family("AIII_gl") == Family::AIII_gl);
  CHECK(parse_family("DIII") == Family::DIII);
  CHECK_THROWS_AS(parse_family("E6"), ParameterError);
}

TEST_CASE("model dimensions") {
  const auto bdi = build_model(Family::BDI, 2, 3);
  CHECK(bdi.g0_basis().size() == 4);
  CHECK(bdi.g1_basis().size() == 6);
  CHECK(bdi.cartan_basis().size() == 2);
  for (int n = 1; n <= 3; ++n)
    for (int m = n; m <= 4; ++m) CHECK(build_model(Family::AIII_gl, n, m).cartan_basis().size() == std::size_t(n));
  for (int n = 2; n <= 6; ++n) {
    const auto d = build_model(Family::DIII, n);
    CHECK(d.cartan_basis().size() == std::size_t(n / 2));
    CHECK(d.g0_basis().size() == std::size_t(n * n));
    CHECK(d.g1_basis().size() == std::size_t(n * (n - 1)));
  }
  CHECK_THROWS_AS(build_model(Family::BDI, 0, 3), ParameterError);
}

TEST_CASE("eigenspace decomposition and cartan subspace") {
  Rng rng(11);
  for (const auto& s : kShapes) {
    CAPTURE(to_string(s.family));
    CAPTURE(s.n);
    const auto model = build_model(s.family, s.n, s.m);
    CHECK(model.g_basis().size() == model.g0_basis().size() + model.g1_basis().size());
    oracle::Rows rows;
    for (const auto& x : model.g_basis()) rows.push_back(x.entries());
    CHECK(oracle::rank(rows) == model.g_basis().size());
    for (const auto& x : model.g0_basis()) CHECK(model.in_g0(x));
    for (const auto& x : model.g1_basis()) CHECK(model.in_g1(x));
    const auto& c = model.cartan_basis();
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(model.in_g1(c[i]));
      CHECK(is_semisimple(c[i]));
      for (std::size_t j = 0; j < c.size(); ++j) CHECK(bracket(c[i], c[j]).is_zero());
    }
    for (int k = 0; k < 20; ++k) CHECK(is_semisimple(random_cartan_element(model, rng)));
  }
}

TEST_CASE("bracket identities") {
  const auto model = build_model(Family::BDI, 2, 3);
  Rng rng(3);
  const auto n = model.ambient_dim();
  for (int t = 0; t < 100; ++t) {
    const RatMat x = rng.combination(model.g_basis(), n);
    const RatMat y = rng.combination(model.g_basis(), n);
    const RatMat z = rng.combination(model.g_basis(), n);
    REQUIRE(bracket(x, x).is_zero());
    RatMat j = bracket(x, bracket(y, z));
    j += bracket(y, bracket(z, x));
    j += bracket(z, bracket(x, y));
    REQUIRE(j.is_zero());
  }
}

TEST_CASE("centraliser dimensions") {
  const auto bdi = build_model(Family::BDI, 2, 3);
  const auto zero = centralizer_dims(bdi, RatMat(5, 5));
  CHECK(zero.g0x == 4);
  CHECK(zero.g1x == 6);

  const auto a22 = build_model(Family::AIII_gl, 2, 2);
  RatMat h = a22.cartan_basis()[0];
  h *= Rat(2);
  h += a22.cartan_basis()[1];
  CHECK(centralizer_dims(a22, h).g1x == 2);

  Rng rng(5);
  const RatMat y = random_g1_element(bdi, rng);
  CHECK(centralizer_pair_dim(bdi, y, y) == centralizer_dim(bdi, y));
  CHECK(centralizer_pair_dim(bdi, RatMat(5, 5), y) == centralizer_dim(bdi, y));
  const RatMat t = random_cartan_element(bdi, rng), u = random_cartan_element(bdi, rng);
  CHECK(centralizer_pair_dim(bdi, t, u) == oracle::commutant_dim(bdi, bdi.cartan_basis(), false));
}

TEST_CASE("centraliser dimensions agree with the commutant oracle") {
  Rng rng(17);
  for (const auto& s : kShapes) {
    const auto model = build_model(s.family, s.n, s.m);
    for (int k = 0; k < 6; ++k) {
      RatMat x = k % 3 == 0   ? random_cartan_element(model, rng)
                 : k % 3 == 1 ? random_g1_element(model, rng)
                              : rng.combination(model.g_basis(), model.ambient_dim());
      const auto full = oracle::commutant_dim(model, x, false);
      const auto d = centralizer_dims(model, x);
      CHECK(centralizer_dim(model, x) == full);
      CHECK(d.g0x == oracle::commutant_dim(model, x, true));
      // g_x splits along g0 + g1 only for homogeneous x.
      if (k % 3 != 2) CHECK(d.total() == full);
    }
  }
}

TEST_CASE("z2 identity") {
  Rng rng(23);
  for (const auto& s : std::vector<Shape>{{Family::BDI, 3, 4}, {Family::DIII, 3, 3}, {Family::BDI, 2, 3}}) {
    const auto model = build_model(s.family, s.n, s.m);
    CHECK(check_z2(model, RatMat(model.ambient_dim(), model.ambient_dim())));
    for (int k = 0; k < 50; ++k) REQUIRE(check_z2(model, random_g1_element(model, rng)));
  }
}

TEST_CASE("nilpotent and semisimple predicates") {
  RatMat upper(3, 3);
  upper(0, 1) = 2;
  upper(1, 2) = Rat(-1, 3);
  upper(0, 2) = 5;
  CHECK(is_nilpotent(upper));
  CHECK_FALSE(is_semisimple(upper));
  // h + e with [h, e] = 2e has distinct eigenvalues, so it is semisimple.
  RatMat he = unit(2, 0, 1);
  he(0, 0) = 1;
  he(1, 1) = -1;
  CHECK(is_semisimple(he));
  CHECK_FALSE(is_nilpotent(he));
  // Commuting nonzero semisimple and nilpotent parts.
  RatMat mixed = unit(3, 0, 1);
  mixed(0, 0) = 1;
  mixed(1, 1) = 1;
  CHECK_FALSE(is_semisimple(mixed));
  CHECK_FALSE(is_nilpotent(mixed));
}

TEST_CASE("G0 conjugation") {
  Rng rng(29);
  for (const auto& s : kShapes) {
    const auto model = build_model(s.family, s.n, s.m);
    const auto N = model.ambient_dim();
    const GroupElement id{RatMat::identity(N), RatMat::identity(N)};
    const RatMat x = rng.combination(model.g1_basis(), N);
    CHECK(conjugate(id, x) == x);
    for (int k = 0; k < 20; ++k) {
      const auto g = random_G0_element(model, rng);
      REQUIRE(g.g * g.g_inv == RatMat::identity(N));
      const RatMat y = conjugate(g, x);
      REQUIRE(model.in_g1(y));
      const auto a = centralizer_dims(model, x), b = centralizer_dims(model, y);
      REQUIRE(a.g0x == b.g0x);
      REQUIRE(a.g1x == b.g1x);
    }
  }
}

TEST_CASE("sub-symmetric pairs of BDI") {
  const auto bdi23 = build_model(Family::BDI, 2, 3);
  CHECK(subpair_dims_at(bdi23, RatMat(5, 5)).match);

  const RatMat h = bdi23.cartan_basis()[0];
  const auto r = subpair_dims_at(bdi23, h);
  CHECK(r.match);
  CHECK(r.computed.total() == 4);
  CHECK(r.computed.g0x == 1);
  CHECK(r.computed.total() == oracle::commutant_dim(bdi23, h, false));

  const auto bdi33 = build_model(Family::BDI, 3, 3);
  RatMat g(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    RatMat c = bdi33.cartan_basis()[i];
    c *= Rat(long(i) + 1);
    g += c;
  }
  const auto r3 = subpair_dims_at(bdi33, g);
  CHECK(r3.match);
  CHECK(r3.computed.total() == 3);

  Rng rng(31);
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}, {3, 4}}) {
    const auto model = build_model(Family::BDI, n, m);
    RatMat equal(model.ambient_dim(), model.ambient_dim());
    for (const auto& c : model.cartan_basis()) equal += c;
    CHECK(subpair_dims_at(model, equal).match);
    for (int k = 0; k < 10; ++k) REQUIRE(subpair_dims_at(model, random_cartan_element(model, rng)).match);
  }
}
