#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "albert/report.hpp"
#include "albert/rng.hpp"

namespace albert {

enum class Execution { Serial, Parallel };

// One sampled trial. Returns nullopt on success or a witness describing the
// failing inputs. Exceptions thrown by the body count as failures.
using TrialBody = std::function<std::optional<json>(std::uint64_t index, Rng& rng)>;

// Runs trials 0..count-1, each with Rng::for_trial(seed, stream, i). The
// Serial path is the reference; the Parallel path (OpenMP) must produce the
// identical Check, witness included, whatever the thread schedule.
Check run_trials(std::string name, std::string anchor, std::uint64_t count, std::uint64_t seed,
                 const TrialBody& body, Execution exec = Execution::Parallel);

// FNV-1a, used to give every named check its own random stream.
std::uint64_t stream_id(const std::string& name);

}  // namespace albert
