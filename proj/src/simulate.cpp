#include "qbg/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "qbg/nosignaling.hpp"

namespace qbg {

AdviceSource::AdviceSource(Payload payload)
    : payload_(std::move(payload)),
      conditional_([this]() -> Correlation {
        if (const auto* c = std::get_if<ClassicalAdvice>(&payload_)) {
          return induced_correlation(c->strategy);
        }
        if (std::holds_alternative<PrBoxAdvice>(payload_)) {
          return ns_vertices()[16].correlation;  // canonical PR box
        }
        if (const auto* q = std::get_if<QuantumAdvice>(&payload_)) {
          return born_correlation(q->state, q->alice, q->bob);
        }
        return std::get<RawCorrelationAdvice>(payload_).correlation;
      }()) {}

AdviceSource AdviceSource::classical(const CorrelatedStrategy& p) {
  return AdviceSource(ClassicalAdvice{p});
}
AdviceSource AdviceSource::pr_box() { return AdviceSource(PrBoxAdvice{}); }
AdviceSource AdviceSource::quantum_q_star() {
  const QStarSetup setup = q_star_setup();
  return AdviceSource(QuantumAdvice{setup.state, setup.alice, setup.bob});
}
AdviceSource AdviceSource::raw(const Correlation& corr) {
  return AdviceSource(RawCorrelationAdvice{corr});
}

bool AdviceSource::is_classical() const {
  return std::holds_alternative<ClassicalAdvice>(payload_);
}

PayoffPair AdviceSource::analytic_payoffs(const UtilityTable& game) const {
  return average_payoffs(game, conditional_);
}

std::optional<PureProfile> AdviceSource::draw_advice(Xoshiro256& rng) const {
  const auto* c = std::get_if<ClassicalAdvice>(&payload_);
  if (c == nullptr) return std::nullopt;
  // CDF inversion over the 16 recommendation pairs in flat order.
  const double u = rng.uniform();
  double acc = 0.0;
  for (int k = 0; k < 16; ++k) {
    acc += c->strategy.at(k / 4, k % 4);
    if (u < acc) {
      return PureProfile{kAllPureStrategies[k / 4], kAllPureStrategies[k % 4]};
    }
  }
  return PureProfile{PureStrategy::Flip, PureStrategy::Flip};  // u ~ 1 edge
}

JointAction AdviceSource::respond(const std::optional<PureProfile>& advice,
                                  JointType x, Xoshiro256& rng) const {
  if (is_classical()) {
    if (!advice.has_value()) {
      throw std::invalid_argument("classical source needs the round's advice");
    }
    return {apply_strategy(advice->alice, x.alice),
            apply_strategy(advice->bob, x.bob)};
  }
  const double u = rng.uniform();
  double acc = 0.0;
  for (int y = 0; y < 4; ++y) {
    acc += conditional_.at(x.index(), y);
    if (u < acc) return JointAction::from_index(y);
  }
  return JointAction::from_index(3);
}

JointAction sample_action(const AdviceSource& source, JointType x, Xoshiro256& rng) {
  return source.respond(source.draw_advice(rng), x, rng);
}

RunReport run(const UtilityTable& game, const AdviceSource& source,
              std::uint64_t rounds, std::uint64_t seed) {
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  Xoshiro256 rng(seed);
  double sum_alice = 0.0, sum_bob = 0.0;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    const auto advice = source.draw_advice(rng);  // before the types exist
    const JointType x{rng.bit(), rng.bit()};
    const JointAction y = source.respond(advice, x, rng);
    sum_alice += game.alice(x, y);
    sum_bob += game.bob(x, y);
  }
  RunReport report;
  report.rounds = rounds;
  report.seed = seed;
  report.empirical = {sum_alice / static_cast<double>(rounds),
                      sum_bob / static_cast<double>(rounds)};
  report.analytic = source.analytic_payoffs(game);
  report.abs_error = {std::abs(report.empirical.alice - report.analytic.alice),
                      std::abs(report.empirical.bob - report.analytic.bob)};
  return report;
}

std::array<std::array<std::uint64_t, 4>, 4> joint_counts(const AdviceSource& source,
                                                         std::uint64_t rounds,
                                                         std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::array<std::array<std::uint64_t, 4>, 4> counts{};
  for (std::uint64_t r = 0; r < rounds; ++r) {
    const auto advice = source.draw_advice(rng);
    const JointType x{rng.bit(), rng.bit()};
    const JointAction y = source.respond(advice, x, rng);
    ++counts[x.index()][y.index()];
  }
  return counts;
}

namespace {

// Regularized incomplete gamma, lower series and upper continued fraction
// (Numerical Recipes style). Accurate enough for p-value thresholds here.
double lower_gamma_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 500; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double upper_gamma_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double chi_square_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  const double a = 0.5 * df;
  const double half_x = 0.5 * x;
  if (half_x < a + 1.0) return 1.0 - lower_gamma_series(a, half_x);
  return upper_gamma_cf(a, half_x);
}

double distribution_fidelity_pvalue(const AdviceSource& source,
                                    std::uint64_t rounds, std::uint64_t seed) {
  const auto counts = joint_counts(source, rounds, seed);
  const auto& cond = source.conditional();
  double stat = 0.0;
  int cells = 0;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      const double expected = 0.25 * cond.at(x, y) * static_cast<double>(rounds);
      const double observed = static_cast<double>(counts[x][y]);
      if (expected < 1e-9) {
        if (observed > 0) return 0.0;  // sampled an impossible cell
        continue;
      }
      stat += (observed - expected) * (observed - expected) / expected;
      ++cells;
    }
  }
  if (cells <= 1) return 1.0;
  return chi_square_sf(stat, static_cast<double>(cells - 1));
}

}  // namespace qbg
