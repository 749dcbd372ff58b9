#ifndef COMMVAR_REPORT_HPP
#define COMMVAR_REPORT_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace commvar {

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct Claim {
  std::string name;
  std::string source;  // the statement being checked
  nlohmann::json expected;
  nlohmann::json computed;
  Status status = Status::Fail;
};

/// One verification run: a list of claims plus the parameters that produced it.
class Report {
public:
  Report(std::string command, std::uint64_t seed);

  const std::string& command() const { return command_; }
  std::uint64_t seed() const { return seed_; }
  nlohmann::json& params() { return params_; }
  const nlohmann::json& params() const { return params_; }
  /// Computed values that carry no expectation of their own.
  nlohmann::json& data() { return data_; }

  /// Passes iff expected == computed.
  Claim& check(const std::string& name, const std::string& source, nlohmann::json expected, nlohmann::json computed);
  Claim& inconclusive(const std::string& name, const std::string& source, nlohmann::json expected,
                      nlohmann::json computed);

  const std::vector<Claim>& claims() const { return claims_; }
  std::size_t failed_count() const;
  std::size_t inconclusive_count() const;

  /// Left null unless set, so output stays byte-identical across runs.
  void set_elapsed_ms(std::optional<std::int64_t> ms) { elapsed_ms_ = ms; }

  nlohmann::json to_json() const;
  std::string json_text() const;
  std::string text() const;

private:
  std::string command_;
  std::uint64_t seed_;
  nlohmann::json params_ = nlohmann::json::object();
  nlohmann::json data_ = nlohmann::json::object();
  std::vector<Claim> claims_;
  std::optional<std::int64_t> elapsed_ms_;
};

}  // namespace commvar

#endif  // COMMVAR_REPORT_HPP
