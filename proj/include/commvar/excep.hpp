#ifndef COMMVAR_EXCEP_HPP
#define COMMVAR_EXCEP_HPP

#include "commvar/exactlin.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace commvar::excep {

using exactlin::Dim;
using exactlin::Rat;
using exactlin::RatMat;

/// Generator names of sl3 in its defining realization:
/// e_alpha = E12, e_beta = E23, e_alpha_beta = E13, f_alpha = E21,
/// f_beta = E32, f_alpha_beta = E31, h_alpha = E11 - E22, h_beta = E22 - E33.
const std::vector<std::string>& generator_names();
/// 3x3 matrix of a named generator.
RatMat generator_matrix(const std::string& name);

using Weight = std::pair<long, long>;  // (h_alpha, h_beta) eigenvalues

/// Finite-dimensional sl3-module with a weight basis.
struct WeightModule {
  Dim dim = 0;
  std::pair<int, int> highest_weight{0, 0};
  std::vector<std::string> basis_labels;
  std::vector<Weight> weights;  // weight of each basis vector
  std::map<std::string, RatMat> action;

  const RatMat& act(const std::string& generator) const;
};

/// Irreducible module of highest weight a*pi1 + b*pi2, generated from
/// x1^a y3^b inside Sym^a(V) (x) Sym^b(V*) by lowering operators.
WeightModule irrep(int a, int b);
/// Adjoint module, from structure constants of sl3.
WeightModule adjoint_module();
WeightModule direct_sum(const std::vector<WeightModule>& parts);

/// (a+1)(b+1)(a+b+2)/2
Dim weyl_dimension(int a, int b);

/// Checks [rho(x), rho(y)] = rho([x,y]) for all pairs of generators.
bool relations_hold(const WeightModule& m);
/// Weight multiplicities are invariant under the Weyl group.
bool weyl_symmetric(const WeightModule& m);
/// Dimension of the space of module maps between two modules.
Dim intertwiner_dim(const WeightModule& x, const WeightModule& y);
/// True iff some module map x -> y is invertible (x, y irreducible).
bool isomorphic(const WeightModule& x, const WeightModule& y);

Dim joint_kernel_dim(const WeightModule& m, const std::vector<std::string>& ops);

enum class PairChoice { AlphaAlphaBeta, BetaAlphaBeta };
std::string to_string(PairChoice c);
PairChoice parse_pair_choice(const std::string& s);
/// (e1, e2) generator names for a pair choice.
std::pair<std::string, std::string> pair_generators(PairChoice c);

/// E7 restricted to the A2: irrep(1,1) + irrep(4,4).
WeightModule e7_as_a2_module();

struct E7Report {
  Dim module_dim = 0;
  Dim kernel_adjoint = 0;
  Dim kernel_44 = 0;
  Dim total = 0;
};
E7Report pn_pair_check_E7(PairChoice c);

struct E8Report {
  E7Report e7;
  Dim kernel_60 = 0;
  Dim kernel_06 = 0;
  Dim per_copy_of_V = 0;
  Dim trivial_copies = 3;
  Dim total = 0;
  Dim threshold = 0;
};
E8Report e8_centralizer_dim(PairChoice c);

struct GradingReport {
  RatMat h1, h2;  // 3x3 diagonal elements of the Cartan
  bool integral = false;
  bool dual_to_pair = false;  // [h_i, e_j] = delta_ij e_j on the adjoint module
};
GradingReport grading_integrality_check(PairChoice c);

/// Constants used by the reducibility argument; not computed here.
struct ExceptionalConstants {
  static constexpr Dim kE8CartanCentralizer = 32;  // 28 + 4, semisimple part D4
  static constexpr Dim kE7DimG0 = 69;
  static constexpr const char* kE7DerivedCentralizer = "3A1";
  static constexpr Dim kE7PairRank = 4;
  static constexpr Dim kE7CentralizerDim = 3 * 3 + kE7PairRank;  // dim s = dim 3A1 + rank
  static constexpr Dim kRankE7 = 7;
};

struct Verdict {
  Dim e8_computed = 0;
  Dim e8_threshold = ExceptionalConstants::kE8CartanCentralizer;
  bool e8_reducible = false;
  Dim e7_computed = 0;
  Dim e7_centralizer = ExceptionalConstants::kE7CentralizerDim;
  Dim e7_dim_g0 = ExceptionalConstants::kE7DimG0;
  bool e7_reducible = false;
};
Verdict reducibility_verdict();

}  // namespace commvar::excep

#endif  // COMMVAR_EXCEP_HPP
