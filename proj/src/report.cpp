#include "albert/report.hpp"

#include <chrono>
#include <ctime>

namespace albert {

json Check::to_json() const {
  json j = {
      {"name", name},
      {"paper_anchor", anchor},
      {"trials", std::to_string(trials)},
      {"passed", ok()},
      {"passed_trials", std::to_string(passed)},
  };
  if (witness) j["witness"] = *witness;
  if (!details.empty()) j["details"] = details;
  return j;
}

bool Report::ok() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

void Report::append(std::vector<Check> more) {
  for (auto& c : more) checks.push_back(std::move(c));
}

json Report::to_json(const std::string& timestamp) const {
  json list = json::array();
  for (const auto& c : checks) list.push_back(c.to_json());
  return {
      {"schema", kReportSchema},
      {"command", command},
      {"timestamp", timestamp},
      {"config", environment},
      {"verdict", ok() ? "PASS" : "FAIL"},
      {"checks", list},
  };
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace albert
