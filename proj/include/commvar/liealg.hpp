#ifndef COMMVAR_LIEALG_HPP
#define COMMVAR_LIEALG_HPP

#include "commvar/exactlin.hpp"
#include "commvar/random.hpp"

#include <optional>
#include <string>
#include <vector>

namespace commvar::liealg {

using exactlin::Dim;
using exactlin::Rat;
using exactlin::RatMat;

enum class Family { BDI, AIII_gl, DIII };

std::string to_string(Family f);
/// Accepts "BDI", "AIII", "AIII_gl", "DIII" (case-insensitive).
Family parse_family(const std::string& name);

/// Coordinates with respect to a fixed basis of matrices, through a set of
/// entry positions on which the basis is invertible.
class CoordinateMap {
public:
  CoordinateMap() = default;
  explicit CoordinateMap(const std::vector<RatMat>& basis);

  /// Coordinates of x; throws if x is outside the span.
  exactlin::RatVec coordinates(const RatMat& x) const;
  bool contains(const RatMat& x) const;
  Dim dim() const { return basis_.size(); }

private:
  std::vector<RatMat> basis_;
  std::vector<std::size_t> positions_;
  RatMat inv_;
};

/// Matrix realization of a symmetric pair (g, g0) with involution
/// x -> A x A^{-1}. The ambient space is V = V_a + V_b, V_a spanned by the
/// first `a_dim` coordinates. g0 commutes with A, g1 anticommutes.
class SymmetricPairModel {
public:
  Family family() const { return family_; }
  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t a_dim() const { return a_dim_; }

  /// Symmetric form J with g = {x : x^t J + J x = 0}; empty for gl.
  const std::optional<RatMat>& form() const { return form_; }
  const RatMat& sigma_matrix() const { return sigma_; }

  /// g0 basis followed by g1 basis.
  const std::vector<RatMat>& g_basis() const { return g_; }
  const std::vector<RatMat>& g0_basis() const { return g0_; }
  const std::vector<RatMat>& g1_basis() const { return g1_; }
  const std::vector<RatMat>& cartan_basis() const { return cartan_; }
  bool has_cartan() const { return !cartan_.empty(); }

  /// Short-grading pieces: g(1) lives in the lower-left block, g(-1) in the
  /// upper-right block. Empty for BDI.
  const std::vector<RatMat>& g_plus1_basis() const { return g_plus1_; }
  const std::vector<RatMat>& g_minus1_basis() const { return g_minus1_; }
  bool has_short_grading() const { return !g_plus1_.empty() || !g_minus1_.empty(); }

  bool in_g(const RatMat& x) const;
  bool in_g0(const RatMat& x) const;
  bool in_g1(const RatMat& x) const;

  exactlin::RatVec coordinates(const RatMat& x) const { return coords_.coordinates(x); }
  /// ad(x) on g, in the coordinates of g_basis().
  RatMat ad_matrix(const RatMat& x) const;

  std::string label() const;

  friend SymmetricPairModel build_model(Family, int, int);
  friend SymmetricPairModel build_bdi_with_form(int, int, const RatMat&);

private:
  void finish();

  Family family_ = Family::BDI;
  int n_ = 0;
  int m_ = 0;
  std::size_t ambient_ = 0;
  std::size_t a_dim_ = 0;
  std::optional<RatMat> form_;
  RatMat sigma_;
  std::vector<RatMat> g_, g0_, g1_, cartan_, g_plus1_, g_minus1_;
  CoordinateMap coords_;
};

/// BDI(n,m) = (so_{n+m}, so_n + so_m) with J = I; AIII_gl(n,m) =
/// (gl_{n+m}, gl_n + gl_m); DIII(n) = (so_{2n}, gl_n) with the split form
/// [[0,I],[I,0]] (m ignored).
SymmetricPairModel build_model(Family family, int n, int m = 0);

/// BDI(n,m) with an arbitrary nondegenerate symmetric form that is block
/// diagonal with respect to V_a + V_b. No Cartan subspace is attached.
SymmetricPairModel build_bdi_with_form(int n, int m, const RatMat& form);

RatMat bracket(const RatMat& x, const RatMat& y);

struct CentralizerDims {
  Dim g0x = 0;
  Dim g1x = 0;
  Dim total() const { return g0x + g1x; }
};

/// Kernels of ad(x) restricted to g0 and g1. Their sum is dim g_x when x
/// lies in g0 or g1.
CentralizerDims centralizer_dims(const SymmetricPairModel& model, const RatMat& x);
Dim centralizer_dim(const SymmetricPairModel& model, const RatMat& x);
/// dim g_x ∩ g_y.
Dim centralizer_pair_dim(const SymmetricPairModel& model, const RatMat& x, const RatMat& y);

/// dim g_{1,x} - dim g_{0,x} == dim g1 - dim g0.
bool check_z2(const SymmetricPairModel& model, const RatMat& x);

bool is_nilpotent(const RatMat& x);
/// Squarefree minimal polynomial.
bool is_semisimple(const RatMat& x);

struct GroupElement {
  RatMat g;
  RatMat g_inv;
};

/// Pseudo-random rational element of G0: block-diagonal invertible for
/// AIII_gl, Cayley transform (I - S)(I + S)^{-1} of a random S in g0 otherwise.
GroupElement random_G0_element(const SymmetricPairModel& model, Rng& rng);
RatMat conjugate(const GroupElement& g, const RatMat& x);
RatMat sample_G0_conjugate(const SymmetricPairModel& model, const RatMat& x, Rng& rng);

RatMat random_g1_element(const SymmetricPairModel& model, Rng& rng);
RatMat random_cartan_element(const SymmetricPairModel& model, Rng& rng);

struct SubpairReport {
  std::vector<Dim> multiplicities;  // k_1..k_r, sorted descending
  Dim k = 0;
  CentralizerDims computed;
  CentralizerDims predicted;
  bool match = false;
};

/// Compares centraliser dimensions of a semisimple h in g1 (BDI) with the
/// sub-symmetric pair (+_i (gl_{k_i}, so_{k_i})) + (so_{n+m-2k}, so_{n-k} + so_{m-k}).
SubpairReport subpair_dims_at(const SymmetricPairModel& model, const RatMat& h);

}  // namespace commvar::liealg

#endif  // COMMVAR_LIEALG_HPP
