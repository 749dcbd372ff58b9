#ifndef COMMVAR_NILPOTENT_HPP
#define COMMVAR_NILPOTENT_HPP

#include "commvar/liealg.hpp"

#include <string>
#include <vector>

namespace commvar::nilpotent {

using exactlin::Dim;
using exactlin::Rat;
using exactlin::RatMat;
using liealg::SymmetricPairModel;

enum class StartType { A, B };

/// One Jordan string; symbols alternate along it starting from `start`.
struct JordanString {
  int length = 1;
  StartType start = StartType::A;
  std::size_t partner = 0;  // index of the paired string; itself when self-paired
};

/// ab-diagram of a nilpotent in g1 for BDI. Text form "3a,1b,2a:2b", where
/// ":" joins two strings paired with each other.
class SignedJordanType {
public:
  SignedJordanType() = default;
  explicit SignedJordanType(std::vector<JordanString> strings) : strings_(std::move(strings)) {}

  static SignedJordanType parse(const std::string& text);
  std::string to_string() const;

  const std::vector<JordanString>& strings() const { return strings_; }
  /// Number of a-symbols and b-symbols.
  Dim count_a() const;
  Dim count_b() const;
  /// Jordan block sizes, descending.
  std::vector<int> lengths() const;

private:
  std::vector<JordanString> strings_;
};

/// Symbol counts match (n,m); odd strings are self-paired; even strings are
/// paired with an even string of the same length and opposite start.
bool validate_type(const SignedJordanType& jt, int n, int m);
/// All string lengths have the same parity.
bool is_even_nilpotent(const SignedJordanType& jt);
/// All string lengths are odd.
bool sigma_distinguished_necessary(const SignedJordanType& jt);

/// Every valid type for (n,m), each once, in a fixed order.
std::vector<SignedJordanType> enumerate_types(int n, int m);

/// A model of BDI(n,m) whose form is adapted to jt, and e in its g1.
/// The form is the Gram matrix of a Jordan basis of the normal form, so e
/// has rational entries (the definite form J = I admits no rational nilpotents).
struct NilpotentRealization {
  SymmetricPairModel model;
  RatMat e;
};

NilpotentRealization build_nilpotent(int n, int m, const SignedJordanType& jt);

/// Jordan block sizes of a nilpotent matrix, descending.
std::vector<int> jordan_block_sizes(const RatMat& e);
/// Checks the signed structure: rank of e^k on V_a against the count
/// predicted by jt, for every k.
bool signed_ranks_match(const NilpotentRealization& r, const SignedJordanType& jt);

struct NormalTriple {
  RatMat e, h, f;
};

/// Normal sl2-triple with h in g0 and f in g1 by two linear solves.
/// e = 0 gives the zero triple. Throws ConstructionError if a solve fails.
NormalTriple normal_sl2_triple(const SymmetricPairModel& model, const RatMat& e);

bool triple_relations_hold(const SymmetricPairModel& model, const NormalTriple& t);

struct AdSpectrum {
  bool integral_diagonalizable = false;
  std::vector<std::pair<long, Dim>> eigen;  // (eigenvalue, multiplicity), ascending
  bool all_even() const;
};

/// Eigenvalues of ad h on g, when ad h is diagonalizable over Z.
AdSpectrum ad_spectrum(const SymmetricPairModel& model, const RatMat& h);

struct DegenerationRow {
  long t = 0;
  bool semisimple = false;
  bool nilpotent = false;
  Dim dim_g_et = 0;
  Dim dim_g0_et = 0;
};

struct DegenerationReport {
  Dim dim_g_e = 0;
  Dim dim_g_h = 0;
  Dim dim_g0_e = 0;
  std::vector<DegenerationRow> rows;
  bool all_match = false;
};

/// e(t) = e - t^2 f for each t: semisimple with dim g_{e(t)} = dim g_h = dim g_e
/// and dim g_{0,e(t)} = dim g_{0,e} when t != 0; e(0) = e is nilpotent.
DegenerationReport degeneration_check(const SymmetricPairModel& model, const NormalTriple& triple,
                                      const std::vector<long>& t_values);

enum class Distinguished { Distinguished, NotDistinguished, Inconclusive };
std::string to_string(Distinguished d);

struct DistinguishedReport {
  Distinguished verdict = Distinguished::Inconclusive;
  Dim dim_g1e = 0;
  Dim dim_intersection = 0;  // dim g_{1,e} ∩ [g,g]
  std::size_t grid_points = 0;
  std::string justification;
  RatMat certificate;  // a non-nilpotent element of g_{1,e} ∩ [g,g], when found
};

/// Decides whether g_{1,e} ∩ [g,g] contains a nonzero semisimple element.
DistinguishedReport sigma_distinguished_test(const SymmetricPairModel& model, const RatMat& e,
                                             std::size_t samples, Rng& rng,
                                             std::size_t max_grid_points = 200000);

}  // namespace commvar::nilpotent

#endif  // COMMVAR_NILPOTENT_HPP
