#ifndef COMMVAR_STRATA_HPP
#define COMMVAR_STRATA_HPP

#include "commvar/liealg.hpp"

#include <string>
#include <vector>

namespace commvar::strata {

using exactlin::Dim;
using exactlin::RatMat;
using liealg::Family;
using liealg::SymmetricPairModel;

/// Two elements of g1 split into blocks xi = [[0,Y],[X,0]], eta = [[0,U],[Z,0]].
/// X, Z sit in g(1) (lower left), Y, U in g(-1) (upper right).
struct GradedPair {
  Family family = Family::AIII_gl;
  int n = 0;
  int m = 0;
  RatMat xi, eta;
  RatMat X, Y, Z, U;
};

/// Splits (xi, eta) along the model's V_a + V_b decomposition. The model must
/// carry a short grading and both elements must lie in g1.
GradedPair make_pair(const SymmetricPairModel& model, const RatMat& xi, const RatMat& eta);
/// Builds xi and eta from blocks.
GradedPair assemble_pair(Family family, int n, int m, const RatMat& X, const RatMat& Y, const RatMat& Z,
                         const RatMat& U);

/// (X | Z)
RatMat D1(const GradedPair& p);
/// (Y^t | U^t); AIII_gl only.
RatMat D2(const GradedPair& p);

struct StratumReport {
  int q = 0;  // rk D1, the stratum index
  Dim rkD1 = 0;
  Dim rkD2 = 0;
  bool commutes = false;
  bool inequality_holds = false;  // meaningful only when commutes
};

/// rk D1 + rk D2 <= 2n for a commuting pair in AIII_gl(n,m) with n <= m.
StratumReport rank_sum_check(const GradedPair& p);

/// Legal stratum indices for AIII_gl(n,m), n <= m.
int q_min(int n, int m);
int q_max(int n, int m);

/// Commuting pair with rk D1 = q and rk D2 = 2n - q.
GradedPair witness_AIII(int n, int m, int q);

/// F(n,m) = 2 min(2n,m) - 2n + 1.
Dim lower_bound_components(int n, int m);

/// Pair in g(1) x g(1) of DIII(n), n odd: rank n-1 blocks with rk(X|Z) = n.
GradedPair witness_DIII(int n);

struct GradingProjections {
  std::vector<RatMat> g_minus1, g0, g_plus1;
  std::vector<RatMat> c_plus1, c_minus1;  // spanning sets (images of the Cartan basis)
  Dim dim_c_plus1 = 0;
  Dim dim_c_minus1 = 0;
  bool g_plus1_abelian = false;
  bool g_minus1_abelian = false;
};

GradingProjections grading_projections(const SymmetricPairModel& model);

/// Commuting pair (Ad(g) t, Ad(g) h) with t, h random in c and g random in G0.
GradedPair sample_cartan_pair(const SymmetricPairModel& model, Rng& rng);

enum class Verdict { Violated, Inconclusive };

struct HeartReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string invariant;      // the separating rank function
  Dim bound = 0;              // proven bound on G0 (c x c)
  Dim sampled_max = 0;        // largest value seen over the samples
  std::size_t samples = 0;
  Dim witness_value = 0;      // value at a point of g(1) x g(1)
  Dim component_lower_bound = 0;
  std::string justification;
};

/// For AIII_gl(n,m), n != m, and DIII(n), n odd >= 3: compares rk D1 on
/// sampled G0-conjugates of c x c with a witness in g(1) x g(1).
HeartReport heart_violation_report(Family family, int n, int m, std::size_t samples, Rng& rng);

}  // namespace commvar::strata

#endif  // COMMVAR_STRATA_HPP
