#pragma once

namespace qbg {

// Library-wide tolerances. One knob each; tests pin behavior against these.
inline constexpr double kNormTol = 1e-12;  // distribution normalization / no-signaling
inline constexpr double kGainTol = 1e-9;   // equilibrium deviation-gain verdicts
inline constexpr double kLpTol = 1e-9;     // LP feasibility / optimality

inline constexpr double kEpsilonMin = 0.0;
inline constexpr double kEpsilonMax = 0.75;

}  // namespace qbg
