#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbg/correlated.hpp"
#include "qbg/game.hpp"
#include "qbg/game_io.hpp"
#include "qbg/nosignaling.hpp"
#include "qbg/quantum.hpp"
#include "qbg/scan.hpp"
#include "qbg/simulate.hpp"
#include "qbg/strategies.hpp"

namespace qbg::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) { return format_double(v); }

std::string pair_str(const PayoffPair& p) {
  return "(" + fmt(p.alice) + ", " + fmt(p.bob) + ")";
}

json pair_json(const PayoffPair& p) { return json{{"alice", p.alice}, {"bob", p.bob}}; }

json report_json(const EquilibriumReport& r) {
  json j{{"is_equilibrium", r.is_equilibrium},
         {"alice_gain", r.alice_gain},
         {"bob_gain", r.bob_gain}};
  if (r.best_alice_deviation) j["best_alice_deviation"] = *r.best_alice_deviation;
  if (r.best_bob_deviation) j["best_bob_deviation"] = *r.best_bob_deviation;
  return j;
}

void print_report(std::ostream& out, const EquilibriumReport& r) {
  out << "equilibrium: " << (r.is_equilibrium ? "yes" : "no") << "\n";
  out << "best deviation gain: alice " << fmt(r.alice_gain) << ", bob "
      << fmt(r.bob_gain) << "\n";
  if (r.best_alice_deviation) {
    out << "alice's witnessing deviation: " << *r.best_alice_deviation << "\n";
  }
  if (r.best_bob_deviation) {
    out << "bob's witnessing deviation: " << *r.best_bob_deviation << "\n";
  }
}

int cmd_table(double eps, std::ostream& out) {
  out << game_to_json(build_game(Epsilon(eps))).dump(2) << "\n";
  return kExitOk;
}

int cmd_equilibria(std::optional<double> eps, const std::string& game_file,
                   bool as_json, std::ostream& out) {
  UtilityTable game = game_file.empty() ? build_game(Epsilon(eps.value()))
                                        : load_game_file(game_file);
  const PayoffTable table = profile_payoff_table(game);
  const auto equilibria = enumerate_pure_nash(game);

  if (as_json) {
    json eq = json::array();
    for (const PureProfile& p : equilibria) {
      const auto& pay = table[static_cast<int>(p.alice)][static_cast<int>(p.bob)];
      eq.push_back(json{{"alice", strategy_name(p.alice)},
                        {"bob", strategy_name(p.bob)},
                        {"payoffs", pair_json(pay)}});
    }
    json tbl = json::array();
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      for (int j = 0; j < 4; ++j) row.push_back(pair_json(table[i][j]));
      tbl.push_back(row);
    }
    json j{{"equilibria", eq}, {"payoff_table", tbl}};
    if (eps) j["epsilon"] = *eps;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "pure-strategy equilibria";
  if (eps) out << " at epsilon = " << fmt(*eps);
  out << ":\n";
  for (const PureProfile& p : equilibria) {
    const auto& pay = table[static_cast<int>(p.alice)][static_cast<int>(p.bob)];
    out << "  " << profile_name(p) << "  payoffs " << pair_str(pay) << "\n";
  }
  out << "payoff table (alice, bob):\n";
  out << std::left << std::setw(6) << "";
  for (int j = 0; j < 4; ++j) {
    out << std::setw(22) << strategy_name(kAllPureStrategies[j]);
  }
  out << "\n";
  for (int i = 0; i < 4; ++i) {
    out << std::setw(6) << strategy_name(kAllPureStrategies[i]);
    for (int j = 0; j < 4; ++j) {
      std::ostringstream cell;
      cell << "(" << fmt(table[i][j].alice) << ", " << fmt(table[i][j].bob) << ")";
      out << std::setw(22) << cell.str();
    }
    out << "\n";
  }
  return kExitOk;
}

int cmd_bound(double eps_value, bool as_json, std::ostream& out) {
  const Epsilon eps(eps_value);
  const UtilityTable game = build_game(eps);
  const CeBounds bounds = classical_payoff_bounds(eps);
  const CeOptimum max_a = max_ce_payoff(game, Player::Alice);
  const CeOptimum max_b = max_ce_payoff(game, Player::Bob);
  const bool s3_applicable = eps_value >= 0.25 && eps_value <= 0.5;
  double s3_weight = 0.0;
  bool s3_excluded = false;
  if (s3_applicable) {
    s3_weight = max_bob_s3_weight(game);
    s3_excluded = lemma1_check(eps);
  }

  const char* regime = bounds.regime == EpsRegime::Low   ? "low"
                       : bounds.regime == EpsRegime::Mid ? "mid"
                                                         : "high";
  if (as_json) {
    json j{{"epsilon", eps_value},
           {"regime", regime},
           {"bound_alice", bounds.alice_bound},
           {"bound_bob", bounds.bob_bound},
           {"ce_lp_alice", max_a.value},
           {"ce_lp_bob", max_b.value}};
    if (s3_applicable) {
      j["bob_s3_weight_max"] = s3_weight;
      j["bob_s3_excluded"] = s3_excluded;
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "epsilon = " << fmt(eps_value) << " (regime " << regime << ")\n";
  out << "closed-form ceilings: alice " << fmt(bounds.alice_bound) << ", bob "
      << fmt(bounds.bob_bound) << "\n";
  out << "ce lp maxima:         alice " << fmt(max_a.value) << ", bob "
      << fmt(max_b.value) << "\n";
  if (s3_applicable) {
    out << "bob-S3 weight over ce (lp max): " << fmt(s3_weight)
        << (s3_excluded ? "  (S3 excluded)" : "  (S3 reachable)") << "\n";
  } else {
    out << "bob-S3 exclusion check applies to 0.25 <= epsilon <= 0.5 only\n";
  }
  return kExitOk;
}

int cmd_certify(const std::string& advice, double eps_value, bool as_json,
                std::ostream& out) {
  const Epsilon eps(eps_value);
  if (advice == "pr") {
    const EquilibriumReport report = verify_pr_nash(eps);
    const PayoffPair pay = pr_star_payoffs(eps);
    if (as_json) {
      json j{{"advice", "pr"},
             {"epsilon", eps_value},
             {"payoffs", pair_json(pay)},
             {"report", report_json(report)}};
      out << j.dump(2) << "\n";
    } else {
      out << "pr-box strategy at epsilon = " << fmt(eps_value) << "\n";
      out << "payoffs: " << pair_str(pay) << "\n";
      print_report(out, report);
    }
    return report.is_equilibrium ? kExitOk : kExitNegativeVerdict;
  }

  // quantum
  const PayoffPair pay = q_star_payoffs(eps);
  const BestResponse alice_best = best_response_max(Player::Alice, eps);
  const BestResponse bob_best = best_response_max(Player::Bob, eps);
  const BestResponse alice_num = numerical_best_response(Player::Alice, eps);
  const BestResponse bob_num = numerical_best_response(Player::Bob, eps);
  const bool equilibrium = alice_best.value <= pay.alice + kGainTol &&
                           bob_best.value <= pay.bob + kGainTol;
  const bool window = inside_theorem2_window(eps);

  if (as_json) {
    json j{{"advice", "quantum"},
           {"epsilon", eps_value},
           {"payoffs", pair_json(pay)},
           {"best_response_alice", alice_best.value},
           {"best_response_bob", bob_best.value},
           {"best_response_alice_numeric", alice_num.value},
           {"best_response_bob_numeric", bob_num.value},
           {"is_equilibrium", equilibrium},
           {"in_advantage_window", window}};
    out << j.dump(2) << "\n";
  } else {
    out << "quantum strategy at epsilon = " << fmt(eps_value) << "\n";
    out << "payoffs: " << pair_str(pay) << "\n";
    out << "best-response maxima: alice " << fmt(alice_best.value) << " (numeric "
        << fmt(alice_num.value) << "), bob " << fmt(bob_best.value) << " (numeric "
        << fmt(bob_num.value) << ")\n";
    out << "equilibrium: " << (equilibrium ? "yes" : "no") << "\n";
    out << "inside the strong-advantage window: " << (window ? "yes" : "no") << "\n";
  }
  return equilibrium ? kExitOk : kExitNegativeVerdict;
}

int cmd_vertices(std::ostream& out) {
  json list = json::array();
  for (const NsVertex& v : ns_vertices()) {
    list.push_back(json{
        {"kind", v.kind == NsVertex::Kind::LocalDeterministic ? "local" : "pr"},
        {"index", v.index},
        {"name", v.name()},
        {"p", correlation_to_json(v.correlation)}});
  }
  out << list.dump(2) << "\n";
  return kExitOk;
}

int cmd_simulate(double eps_value, const std::string& advice, std::uint64_t rounds,
                 std::uint64_t seed, const std::string& strategy_file, bool as_json,
                 std::ostream& out) {
  const Epsilon eps(eps_value);
  const UtilityTable game = build_game(eps);

  std::optional<AdviceSource> source;
  if (advice == "classical") {
    if (!strategy_file.empty()) {
      source = AdviceSource::classical(load_strategy_file(strategy_file));
    } else {
      // Default: point mass on the first equilibrium of the current range.
      const auto equilibria = enumerate_pure_nash(eps);
      source = AdviceSource::classical(
          CorrelatedStrategy::point_mass(equilibria.front()));
    }
  } else if (advice == "pr") {
    source = AdviceSource::pr_box();
  } else {
    source = AdviceSource::quantum_q_star();
  }

  const RunReport report = run(game, *source, rounds, seed);
  if (as_json) {
    json j{{"epsilon", eps_value},
           {"advice", advice},
           {"rounds", report.rounds},
           {"seed", report.seed},
           {"empirical", pair_json(report.empirical)},
           {"analytic", pair_json(report.analytic)},
           {"abs_error", pair_json(report.abs_error)}};
    out << j.dump(2) << "\n";
  } else {
    out << "simulated " << report.rounds << " rounds (seed " << report.seed
        << ", advice " << advice << ", epsilon " << fmt(eps_value) << ")\n";
    out << "empirical payoffs: " << pair_str(report.empirical) << "\n";
    out << "analytic payoffs:  " << pair_str(report.analytic) << "\n";
    out << "abs error:         " << pair_str(report.abs_error) << "\n";
  }
  return kExitOk;
}

int cmd_scan(double from, double to, double step, const std::string& out_path,
             const std::string& format, std::ostream& out, std::ostream& err) {
  if (!(from >= 0.0 && from < to && to <= kEpsilonMax && step > 0.0)) {
    err << "scan range must satisfy 0 <= from < to <= 0.75 with step > 0\n";
    return kExitUsage;
  }
  const std::vector<ScanRow> rows = compute_scan(from, to, step);
  std::ofstream file(out_path);
  if (!file) {
    err << "cannot open " << out_path << " for writing\n";
    return kExitIo;
  }
  if (format == "csv") {
    write_scan_csv(rows, file);
  } else {
    file << scan_to_json(rows).dump(2) << "\n";
  }
  file.flush();
  if (!file) {
    err << "write to " << out_path << " failed\n";
    return kExitIo;
  }
  out << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"analysis and simulation of a one-parameter family of two-player "
               "Bayesian games under classical, PR-box, and quantum advice"};
  app.require_subcommand(1);

  double eps = 0.0;
  bool as_json = false;

  auto* table = app.add_subcommand("table", "emit the game's utility table as JSON");
  table->add_option("--epsilon", eps, "family parameter in [0, 0.75]")->required();

  auto* equilibria =
      app.add_subcommand("equilibria", "pure equilibria and the profile payoff table");
  std::string eq_class = "pure";
  std::string game_file;
  std::optional<double> eq_eps;
  equilibria->add_option("--epsilon", eq_eps, "family parameter in [0, 0.75]");
  equilibria->add_option("--class", eq_class, "equilibrium class (pure)")
      ->check(CLI::IsMember({"pure"}));
  equilibria->add_option("--game-file", game_file, "JSON game file instead of --epsilon");
  equilibria->add_flag("--json", as_json, "machine-readable output");

  auto* bound = app.add_subcommand(
      "bound", "classical payoff ceilings, CE LP maxima, and the S3-exclusion check");
  bound->add_option("--epsilon", eps, "family parameter in [0, 0.75]")->required();
  bound->add_flag("--json", as_json, "machine-readable output");

  auto* certify =
      app.add_subcommand("certify", "equilibrium certificate for a nonlocal strategy");
  std::string advice = "pr";
  certify->add_option("--advice", advice, "advice kind")
      ->check(CLI::IsMember({"pr", "quantum"}))
      ->required();
  certify->add_option("--epsilon", eps, "family parameter in [0, 0.75]")->required();
  certify->add_flag("--json", as_json, "machine-readable output");

  auto* vertices =
      app.add_subcommand("vertices", "dump the 24 no-signaling vertices as JSON");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo round play");
  std::string sim_advice = "classical";
  std::string strategy_file;
  std::uint64_t rounds = 1000000;
  std::uint64_t seed = 42;
  simulate->add_option("--epsilon", eps, "family parameter in [0, 0.75]")->required();
  simulate->add_option("--advice", sim_advice, "advice kind")
      ->check(CLI::IsMember({"classical", "pr", "quantum"}))
      ->required();
  simulate->add_option("--rounds", rounds, "number of rounds")->required();
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--strategy-file", strategy_file,
                       "JSON recommendation matrix for classical advice");
  simulate->add_flag("--json", as_json, "machine-readable output");

  auto* scan = app.add_subcommand("scan", "per-epsilon summary over a grid");
  double from = 0.0, to = kEpsilonMax, step = 0.01;
  std::string out_path, format = "csv";
  scan->add_option("--from", from, "grid start")->required();
  scan->add_option("--to", to, "grid end")->required();
  scan->add_option("--step", step, "grid step")->required();
  scan->add_option("--out", out_path, "output file")->required();
  scan->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(eps, out);
    if (equilibria->parsed()) {
      if (!eq_eps && game_file.empty()) {
        err << "equilibria needs --epsilon or --game-file\n";
        return kExitUsage;
      }
      return cmd_equilibria(eq_eps, game_file, as_json, out);
    }
    if (bound->parsed()) return cmd_bound(eps, as_json, out);
    if (certify->parsed()) return cmd_certify(advice, eps, as_json, out);
    if (vertices->parsed()) return cmd_vertices(out);
    if (simulate->parsed()) {
      return cmd_simulate(eps, sim_advice, rounds, seed, strategy_file, as_json, out);
    }
    if (scan->parsed()) return cmd_scan(from, to, step, out_path, format, out, err);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace qbg::cli
