#pragma once

#include <cstdint>

// Every numeric default used by the lab and the command line front end.
namespace signbound::defaults {

inline constexpr std::uint64_t kSeed = 0;

// Largest n tried by alpha_lower_bound, per family.
inline constexpr std::int64_t kNMax1d = 64;
inline constexpr std::int64_t kNMax2d = 16;
inline constexpr std::int64_t kNMax3d = 8;
inline constexpr std::int64_t kNMaxBlock = 48;

inline constexpr std::uint64_t kNodeBudget = 10'000'000;

inline constexpr std::int64_t kTrials = 200;
inline constexpr std::int64_t kRestarts = 32;
inline constexpr std::int64_t kSteps = 2000;

inline constexpr std::int64_t kLatticeExp = 8;
inline constexpr std::int64_t kBlockSamples = 2048;
inline constexpr double kRefineTol = 1e-10;

// A trial is a violation when its margin is below
// -(kToleranceFactor * resolution_error + kMarginFloor).
inline constexpr double kToleranceFactor = 10.0;
inline constexpr double kMarginFloor = 1e-12;

// Coefficient search step schedule.
inline constexpr double kStepStart = 0.3;
inline constexpr double kStepDecay = 0.8;
inline constexpr int kStepPatience = 50;
inline constexpr double kStepFloor = 1e-4;

inline constexpr int kDegenerateRetries = 10;

inline constexpr unsigned kThreads = 1;

}  // namespace signbound::defaults
