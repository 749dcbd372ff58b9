#ifndef COMMVAR_RANDOM_HPP
#define COMMVAR_RANDOM_HPP

#include "commvar/exactlin.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace commvar {

/// Seeded source of small rationals. mt19937_64 output is specified by the
/// standard, and the reductions below avoid std distributions so sequences
/// match across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  exactlin::Rat small_rat(long num_bound = 3, long den_bound = 3) {
    exactlin::Rat r(uniform(-num_bound, num_bound), uniform(1, den_bound));
    r.canonicalize();
    return r;
  }

  /// Random combination of the given matrices with small rational coefficients.
  exactlin::RatMat combination(const std::vector<exactlin::RatMat>& basis, std::size_t n,
                               long num_bound = 3, long den_bound = 3) {
    exactlin::RatMat acc(n, n);
    for (const auto& b : basis) {
      const auto c = small_rat(num_bound, den_bound);
      if (sgn(c) != 0) acc += c * b;
    }
    return acc;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace commvar

#endif  // COMMVAR_RANDOM_HPP
