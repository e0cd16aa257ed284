#pragma once

#include <cstdint>

namespace goodhart::streams {

// Fixed fork purposes so a replicate's stream splits identically across
// runs: attacker draws never perturb environment or victim draws, which
// is what makes zero-budget runs bit-identical to unattacked baselines.
inline constexpr std::uint64_t kEnvironment = 0;
inline constexpr std::uint64_t kAgents = 1;
inline constexpr std::uint64_t kAttacker = 2;
inline constexpr std::uint64_t kSelection = 3;

} // namespace goodhart::streams
