#ifndef COMMVAR_CHECKS_HPP
#define COMMVAR_CHECKS_HPP

#include "commvar/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace commvar {

/// Unknown module/check, or a parameter that cannot be used.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Named parameters of one check invocation. Reads are recorded so the
/// report lists exactly the parameters that influenced it.
class Params {
public:
  void set_int(const std::string& key, long value) { ints_[key] = value; }
  void set_string(const std::string& key, std::string value) { strings_[key] = std::move(value); }
  void set_flag(const std::string& key) { flags_.insert(key); }

  bool has(const std::string& key) const { return ints_.count(key) || strings_.count(key); }
  long get_int(const std::string& key, long fallback) const;
  long require_int(const std::string& key) const;
  std::optional<long> find_int(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::string require_string(const std::string& key) const;
  bool flag(const std::string& key) const;

  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t s) { seed_ = s; }

  const nlohmann::json& used() const { return used_; }

private:
  std::map<std::string, long> ints_;
  std::map<std::string, std::string> strings_;
  std::set<std::string> flags_;
  std::uint64_t seed_ = 0;
  mutable nlohmann::json used_ = nlohmann::json::object();
};

constexpr long kDefaultSamples = 50;

struct CheckInfo {
  std::string module;
  std::string check;
  std::string summary;
};
const std::vector<CheckInfo>& available_checks();

/// Runs one check. Throws UsageError for unknown names or bad parameters.
Report run_check(const std::string& module, const std::string& check, const Params& params);

}  // namespace commvar

#endif  // COMMVAR_CHECKS_HPP
