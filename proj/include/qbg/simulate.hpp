#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "qbg/correlated.hpp"
#include "qbg/game.hpp"
#include "qbg/quantum.hpp"
#include "qbg/rng.hpp"

namespace qbg {

/// What the adviser hands out before each round.
struct ClassicalAdvice {
  CorrelatedStrategy strategy;
};
struct PrBoxAdvice {};
struct QuantumAdvice {
  TwoQubitState state;
  PlayerMeasurements alice;
  PlayerMeasurements bob;
};
struct RawCorrelationAdvice {
  Correlation correlation;
};

class AdviceSource {
 public:
  using Payload =
      std::variant<ClassicalAdvice, PrBoxAdvice, QuantumAdvice, RawCorrelationAdvice>;

  explicit AdviceSource(Payload payload);

  static AdviceSource classical(const CorrelatedStrategy& p);
  static AdviceSource pr_box();
  static AdviceSource quantum_q_star();
  static AdviceSource raw(const Correlation& corr);

  /// Expected payoffs in the given game, computed from the source's exact
  /// conditional distribution.
  PayoffPair analytic_payoffs(const UtilityTable& game) const;

  const Correlation& conditional() const { return conditional_; }
  bool is_classical() const;
  const Payload& payload() const { return payload_; }

  /// Classical advice for one round: the recommendation pair, committed
  /// before the round's types exist. Consumes one variate for classical
  /// sources, none otherwise.
  std::optional<PureProfile> draw_advice(Xoshiro256& rng) const;

  /// Action for the round: deterministic application of classical advice,
  /// or a sample from the box/state conditional for the given joint type.
  JointAction respond(const std::optional<PureProfile>& advice, JointType x,
                      Xoshiro256& rng) const;

 private:
  Payload payload_;
  Correlation conditional_;
};

/// draw_advice + respond rolled together: the per-round sampling path.
JointAction sample_action(const AdviceSource& source, JointType x, Xoshiro256& rng);

struct RunReport {
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  PayoffPair empirical;
  PayoffPair analytic;
  PayoffPair abs_error;
};

/// Plays `rounds` rounds. Stream order per round is fixed as part of the
/// reproducibility contract: classical advice variate first (the adviser
/// commits before types exist), then the two type bits, then the action
/// variate for nondeterministic sources.
RunReport run(const UtilityTable& game, const AdviceSource& source,
              std::uint64_t rounds, std::uint64_t seed);

/// Joint (type, action) frequency table from a fresh run; cell [x][y] counts.
std::array<std::array<std::uint64_t, 4>, 4> joint_counts(const AdviceSource& source,
                                                         std::uint64_t rounds,
                                                         std::uint64_t seed);

/// Survival function of the chi-square distribution (regularized upper
/// incomplete gamma Q(df/2, x/2)).
double chi_square_sf(double x, double df);

/// Pearson chi-square p-value of the sampled joint (type, action) counts
/// against the source's analytic 16-cell distribution (uniform type prior).
double distribution_fidelity_pvalue(const AdviceSource& source,
                                    std::uint64_t rounds, std::uint64_t seed);

}  // namespace qbg
