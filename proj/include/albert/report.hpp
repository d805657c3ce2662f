#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "albert/element.hpp"

namespace albert {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "albert-kit/1";

// Outcome of one named identity or property, checked over `trials` samples.
// A failing check always carries the first failing sample as its witness.
struct Check {
  std::string name;
  std::string anchor;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::optional<json> witness;
  json details = json::object();

  bool ok() const { return trials > 0 && passed == trials; }
  json to_json() const;
};

struct Report {
  std::string command;
  json environment = json::object();
  std::vector<Check> checks;

  bool ok() const;
  void append(std::vector<Check> more);
  // Stable rendering: keys sorted, every number an exact string. The
  // timestamp is the only field that differs between identical runs.
  json to_json(const std::string& timestamp) const;
};

// Exact rendering helpers for witnesses.
inline json to_json(const Scalar& x) { return x.to_string(); }
inline json to_json(const JordanElement& x) { return x.render(); }

std::string utc_timestamp();

}  // namespace albert
