#ifndef COMMVAR_SPINOR_HPP
#define COMMVAR_SPINOR_HPP

#include "commvar/exactlin.hpp"
#include "commvar/random.hpp"

#include <optional>
#include <string>
#include <vector>

namespace commvar::spinor {

using exactlin::Dim;
using exactlin::Rat;
using exactlin::RatMat;
using exactlin::RatVec;

/// V = k^10 with basis e_1..e_5, f_1..f_5 (coordinates 0..4 and 5..9) and
/// (e_i, f_j) = delta_ij. Delta is the even part of the exterior algebra of
/// W = span(e_i); Clifford action: e_i by wedge, f_i by contraction.
struct SpinModel {
  static constexpr std::size_t kVDim = 10;
  static constexpr std::size_t kRank = 5;

  std::vector<unsigned> monomials;        // subsets of {0..4} as bitmasks, even size
  std::vector<std::string> labels;        // "1", "e1e2", ...
  std::vector<std::vector<Rat>> weights;  // epsilon coordinates
  RatMat metric;                          // Gram matrix on V
  std::vector<std::pair<std::size_t, std::size_t>> generator_pairs;  // (u,v) basis indices, u < v
  std::vector<RatMat> action_V;           // M_{u,v} on V, 10x10
  std::vector<RatMat> action_Delta;       // on Delta, 16x16
  std::vector<RatMat> cartan_Delta;       // h_i = M_{f_i,e_i} on Delta

  std::size_t dim() const { return monomials.size(); }
  std::size_t index_of(unsigned mask) const;
};

SpinModel build_spin_model();

/// Checks [rho(X), rho(Y)] = rho([X,Y]) for all generator pairs, with [X,Y]
/// resolved in the span of the generators on V.
bool so10_relations_hold(const SpinModel& s);

/// Symmetric bilinear B : Delta x Delta -> V, stored as one 16x16 matrix per
/// coordinate of V.
struct QuarticInvariant {
  std::vector<RatMat> components;
  Dim solution_dim = 0;
  std::size_t unknowns = 0;  // after weight elimination
};

/// Solves the equivariance system; throws ConstructionError unless the
/// solution space is one-dimensional. Normalized so the first nonzero
/// coefficient is 1.
QuarticInvariant equivariant_projection(const SpinModel& s);

RatVec apply_B(const QuarticInvariant& inv, const RatVec& u, const RatVec& v);
/// Largest |x.B(u,v) - B(xu,v) - B(u,xv)| entry over all generators and basis pairs is 0.
bool equivariance_exact(const SpinModel& s, const QuarticInvariant& inv);

/// I(u,v) = <B(u,u), B(v,v)>.
Rat quartic_invariant_value(const SpinModel& s, const QuarticInvariant& inv, const RatVec& u, const RatVec& v);

/// Span of the weight vectors with weights pi5 and (e1 - e2 - e3 - e4 - e5)/2.
struct CartanC1 {
  std::vector<RatVec> basis;
  std::vector<std::vector<Rat>> weights;
};
CartanC1 cartan_c1(const SpinModel& s);

/// mu with <mu, w> > 0 for every w, by exact phase-one simplex; nullopt if none.
std::optional<std::vector<Rat>> halfspace_check(const std::vector<std::vector<Rat>>& weights);

struct WitnessPair {
  RatVec u, v;
  std::string u_label, v_label;
  Rat value;
};
/// First pair (u, v), each a sum of two basis monomials, with I(u,v) != 0.
std::optional<WitnessPair> find_witness(const SpinModel& s, const QuarticInvariant& inv);

struct InvarianceReport {
  std::size_t generators = 0;
  std::size_t points = 0;
  bool all_zero = false;
};
/// For each generator x, the derivative I(xu, v)-terms vanish on a {0,1,2}^4
/// grid over random two-dimensional subspaces for u and for v.
InvarianceReport infinitesimal_invariance(const SpinModel& s, const QuarticInvariant& inv, Rng& rng);

struct HeartE6Report {
  Dim solution_dim = 0;
  std::size_t grid_points = 0;
  std::size_t grid_nonzero = 0;
  std::optional<WitnessPair> witness;
  std::optional<std::vector<Rat>> halfspace;
  Dim c1_dim = 0;
  bool violated = false;
};
HeartE6Report heart_violation_E6(const SpinModel& s);

}  // namespace commvar::spinor

#endif  // COMMVAR_SPINOR_HPP
