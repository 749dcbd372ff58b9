#include "commvar/report.hpp"

#include <algorithm>
#include <sstream>

namespace commvar {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "fail";
}

Report::Report(std::string command, std::uint64_t seed) : command_(std::move(command)), seed_(seed) {}

Claim& Report::check(const std::string& name, const std::string& source, nlohmann::json expected,
                     nlohmann::json computed) {
  const Status st = expected == computed ? Status::Pass : Status::Fail;
  claims_.push_back({name, source, std::move(expected), std::move(computed), st});
  return claims_.back();
}

Claim& Report::inconclusive(const std::string& name, const std::string& source, nlohmann::json expected,
                            nlohmann::json computed) {
  claims_.push_back({name, source, std::move(expected), std::move(computed), Status::Inconclusive});
  return claims_.back();
}

std::size_t Report::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(claims_.begin(), claims_.end(), [](const Claim& c) { return c.status == Status::Fail; }));
}

std::size_t Report::inconclusive_count() const {
  return static_cast<std::size_t>(std::count_if(
      claims_.begin(), claims_.end(), [](const Claim& c) { return c.status == Status::Inconclusive; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = "commvar-report/1";
  j["command"] = command_;
  j["params"] = params_;
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : claims_)
    claims.push_back({{"name", c.name},
                      {"paper_source", c.source},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"status", to_string(c.status)}});
  j["claims"] = std::move(claims);
  if (!data_.empty()) j["data"] = data_;
  j["seed"] = seed_;
  j["elapsed_ms"] = elapsed_ms_ ? nlohmann::json(*elapsed_ms_) : nlohmann::json(nullptr);
  return j;
}

std::string Report::json_text() const { return to_json().dump(2) + "\n"; }

std::string Report::text() const {
  std::ostringstream os;
  os << command_ << "  (seed " << seed_ << ")\n";
  if (!params_.empty()) os << "params: " << params_.dump() << "\n";
  std::size_t w = 4;
  for (const auto& c : claims_) w = std::max(w, c.name.size());
  for (const auto& c : claims_) {
    const std::string st = to_string(c.status);
    os << "  [" << st << "]" << std::string(13 - st.size(), ' ') << c.name << std::string(w - c.name.size() + 2, ' ')
       << "expected " << c.expected.dump() << ", computed " << c.computed.dump() << "\n";
  }
  const std::size_t failed = failed_count();
  os << claims_.size() << " claims, " << claims_.size() - failed - inconclusive_count() << " passed, " << failed
     << " failed";
  if (inconclusive_count()) os << ", " << inconclusive_count() << " inconclusive";
  os << "\n";
  return os.str();
}

}  // namespace commvar
