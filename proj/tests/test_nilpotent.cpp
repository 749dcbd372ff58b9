#include "commvar/error.hpp"
#include "commvar/nilpotent.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace commvar;
using namespace commvar::nilpotent;
using exactlin::RatMat;

namespace {

SignedJordanType jt(const char* s) { return SignedJordanType::parse(s); }

}  // namespace

TEST_CASE("text form") {
  const auto t = jt("3a,1b,2a:2b");
  REQUIRE(t.strings().size() == 4);
  CHECK(t.count_a() == 4);  // aba, b, ab, ba
  CHECK(t.count_b() == 4);
  CHECK(SignedJordanType::parse(t.to_string()).to_string() == t.to_string());
  CHECK(t.lengths() == std::vector<int>{3, 2, 2, 1});
  CHECK_THROWS_AS(jt("3c"), ParameterError);
  CHECK_THROWS_AS(jt(""), ParameterError);
  CHECK_THROWS_AS(jt("2a:2b:2a"), ParameterError);
}

TEST_CASE("validity") {
  CHECK(validate_type(jt("3a"), 2, 1));
  CHECK_FALSE(validate_type(jt("2a:2a"), 2, 2));
  CHECK(validate_type(jt("2a:2b"), 2, 2));
  CHECK_FALSE(validate_type(jt("2a"), 1, 1));
  CHECK_FALSE(validate_type(jt("3a"), 1, 2));
}

TEST_CASE("parity predicates") {
  CHECK(is_even_nilpotent(jt("3a,1b")));
  CHECK(is_even_nilpotent(jt("2a:2b")));
  CHECK_FALSE(is_even_nilpotent(jt("3a,2a:2b")));
  CHECK(sigma_distinguished_necessary(jt("3a,1b")));
  CHECK_FALSE(sigma_distinguished_necessary(jt("2a:2b")));
  CHECK(sigma_distinguished_necessary(jt("1a")));
}

TEST_CASE("enumeration") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m + n <= 6; ++m) {
      const auto types = enumerate_types(n, m);
      std::set<std::string> seen;
      for (const auto& t : types) {
        REQUIRE(validate_type(t, n, m));
        REQUIRE(seen.insert(t.to_string()).second);
      }
    }
  // BDI(1,1): a lone even string cannot be paired, so only e = 0.
  CHECK(enumerate_types(1, 1).size() == 1);
  // BDI(2,1): 1a1a1b and 3a.
  CHECK(enumerate_types(2, 1).size() == 2);
}

TEST_CASE("realizations") {
  const auto zero = build_nilpotent(2, 1, jt("1a,1a,1b"));
  CHECK(zero.e.is_zero());

  const auto r = build_nilpotent(2, 1, jt("3a"));
  const RatMat& e = r.e;
  const auto& J = *r.model.form();
  const RatMat& A = r.model.sigma_matrix();
  CHECK((e.transpose() * J + J * e).is_zero());
  CHECK(A * e * *exactlin::inverse(A) == -e);
  CHECK(exactlin::power(e, 3).is_zero());
  CHECK(jordan_block_sizes(e) == std::vector<int>{3});

  const auto p = build_nilpotent(2, 2, jt("2a:2b"));
  CHECK((p.e * p.e).is_zero());
  CHECK(oracle::rank(p.e) == 2);

  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m + n <= 6; ++m)
      for (const auto& t : enumerate_types(n, m)) {
        CAPTURE(t.to_string());
        const auto x = build_nilpotent(n, m, t);
        REQUIRE(x.model.in_g1(x.e));
        REQUIRE(liealg::is_nilpotent(x.e));
        REQUIRE(jordan_block_sizes(x.e) == t.lengths());
        REQUIRE(signed_ranks_match(x, t));
      }
  CHECK_THROWS_AS(build_nilpotent(2, 2, jt("2a:2a")), ParameterError);
}

TEST_CASE("normal triples") {
  const auto r = build_nilpotent(2, 1, jt("3a"));
  const auto t = normal_sl2_triple(r.model, r.e);
  CHECK(triple_relations_hold(r.model, t));
  CHECK(r.model.in_g0(t.h));
  CHECK(r.model.in_g1(t.f));
  // ad h on V: eigenvalues 2, 0, -2.
  const auto cp = exactlin::charpoly(t.h);
  CHECK(cp == exactlin::RatPoly({0, -4, 0, 1}));
  const auto spec = ad_spectrum(r.model, t.h);
  CHECK(spec.integral_diagonalizable);
  CHECK(spec.all_even());

  const auto z = normal_sl2_triple(r.model, RatMat(3, 3));
  CHECK(z.h.is_zero());
  CHECK(z.f.is_zero());
}

TEST_CASE("degeneration of even nilpotents") {
  const auto r = build_nilpotent(2, 1, jt("3a"));
  const auto t = normal_sl2_triple(r.model, r.e);
  const auto d = degeneration_check(r.model, t, {0, 1, 2, 3});
  CHECK(d.all_match);
  REQUIRE(d.rows.size() == 4);
  CHECK(d.rows[0].nilpotent);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(d.rows[i].semisimple);
    CHECK(d.rows[i].dim_g_et == d.dim_g_e);
    CHECK(d.rows[i].dim_g_et == d.dim_g_h);
    CHECK(d.rows[i].dim_g0_et == d.dim_g0_e);
  }
  // Oracle cross-check of one centraliser along the family.
  RatMat et = t.f;
  et *= exactlin::Rat(-4);
  et += t.e;
  CHECK(oracle::commutant_dim(r.model, et, false) == d.dim_g_h);

  for (const char* s : {"3a,1b,1b", "3a,1a,1b", "1a,1a,1b,1b,1b", "2a:2b,1b"}) {
    const auto type = jt(s);
    const int n = int(type.count_a()), m = int(type.count_b());
    if (!is_even_nilpotent(type)) continue;
    const auto x = build_nilpotent(n, m, type);
    CHECK(degeneration_check(x.model, normal_sl2_triple(x.model, x.e), {1, 2, 3}).all_match);
  }
}

TEST_CASE("sigma-distinguished test") {
  Rng rng(61);
  const auto z = build_nilpotent(2, 2, jt("1a,1a,1b,1b"));
  CHECK(sigma_distinguished_test(z.model, z.e, 20, rng).verdict == Distinguished::NotDistinguished);
  const auto p = build_nilpotent(2, 2, jt("2a:2b"));
  const auto dp = sigma_distinguished_test(p.model, p.e, 20, rng);
  CHECK(dp.verdict == Distinguished::NotDistinguished);
  CHECK_FALSE(liealg::is_nilpotent(dp.certificate));
  const auto s = build_nilpotent(2, 1, jt("3a"));
  CHECK(sigma_distinguished_test(s.model, s.e, 20, rng).verdict == Distinguished::Distinguished);

  for (int n = 1; n < 7; ++n)
    for (int m = 1; n + m <= 7; ++m)
      for (const auto& t : enumerate_types(n, m)) {
        CAPTURE(t.to_string());
        REQUIRE((!sigma_distinguished_necessary(t) || is_even_nilpotent(t)));
        const auto x = build_nilpotent(n, m, t);
        const auto v = sigma_distinguished_test(x.model, x.e, 20, rng).verdict;
        if (v == Distinguished::Distinguished) REQUIRE(sigma_distinguished_necessary(t));
      }
}
