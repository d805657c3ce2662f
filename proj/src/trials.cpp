#include "albert/trials.hpp"

#include <vector>

namespace albert {
namespace {

std::optional<json> guarded(const TrialBody& body, std::uint64_t i, std::uint64_t seed,
                            std::uint64_t stream) {
  Rng rng = Rng::for_trial(seed, stream, i);
  try {
    return body(i, rng);
  } catch (const std::exception& e) {
    return json{{"error", e.what()}};
  }
}

}  // namespace

std::uint64_t stream_id(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Check run_trials(std::string name, std::string anchor, std::uint64_t count, std::uint64_t seed,
                 const TrialBody& body, Execution exec) {
  const std::uint64_t stream = stream_id(name);
  std::vector<std::optional<json>> results(count);
  if (exec == Execution::Parallel) {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i)
      results[i] = guarded(body, static_cast<std::uint64_t>(i), seed, stream);
  } else {
    for (std::uint64_t i = 0; i < count; ++i) results[i] = guarded(body, i, seed, stream);
  }

  Check check{std::move(name), std::move(anchor), count, 0, std::nullopt, json::object()};
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!results[i]) {
      ++check.passed;
    } else if (!check.witness) {
      json w = std::move(*results[i]);
      w["trial"] = std::to_string(i);
      check.witness = std::move(w);
    }
  }
  return check;
}

}  // namespace albert
