#include "qbg/scan.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qbg/correlated.hpp"
#include "qbg/nosignaling.hpp"
#include "qbg/quantum.hpp"
#include "qbg/strategies.hpp"

namespace qbg {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ScanRow compute_scan_row(Epsilon eps) {
  ScanRow row;
  row.epsilon = eps.value;

  const UtilityTable game = build_game(eps);
  const PayoffTable table = profile_payoff_table(game);
  const auto equilibria = enumerate_pure_nash(game);
  row.pure_alice_max = -1.0;
  row.pure_bob_max = -1.0;
  for (const PureProfile& profile : equilibria) {
    const PayoffPair& pay =
        table[static_cast<int>(profile.alice)][static_cast<int>(profile.bob)];
    row.pure_alice_max = std::max(row.pure_alice_max, pay.alice);
    row.pure_bob_max = std::max(row.pure_bob_max, pay.bob);
  }

  const CeBounds bounds = classical_payoff_bounds(eps);
  row.bound_alice_eq5 = bounds.alice_bound;
  row.bound_bob_eq6 = bounds.bob_bound;
  row.ce_alice_lp = max_ce_payoff(game, Player::Alice).value;
  row.ce_bob_lp = max_ce_payoff(game, Player::Bob).value;

  const PayoffPair pr = pr_star_payoffs(eps);
  row.pr_alice = pr.alice;
  row.pr_bob = pr.bob;
  row.pr_nash = verify_pr_nash(eps).is_equilibrium;

  const PayoffPair q = q_star_payoffs(eps);
  row.q_alice = q.alice;
  row.q_bob = q.bob;
  // Equilibrium iff the analytic best response tops out at the strategy's
  // own payoff; certify runs the numerical cross-check as well.
  row.q_nash =
      analytic_best_response(Player::Alice, eps).value <= q.alice + kGainTol &&
      analytic_best_response(Player::Bob, eps).value <= q.bob + kGainTol;
  row.in_theorem2_window = inside_theorem2_window(eps);
  return row;
}

std::vector<double> scan_grid(double from, double to, double step) {
  if (!(step > 0.0) || !(from < to)) {
    throw std::invalid_argument("scan grid requires from < to and step > 0");
  }
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(count + 1);
  for (long k = 0; k <= count; ++k) grid.push_back(from + step * k);
  return grid;
}

std::vector<ScanRow> compute_scan(double from, double to, double step) {
  std::vector<ScanRow> rows;
  for (double e : scan_grid(from, to, step)) rows.push_back(compute_scan_row(Epsilon(e)));
  return rows;
}

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
  out << kScanCsvHeader << "\n";
  for (const ScanRow& r : rows) {
    out << format_double(r.epsilon) << ',' << format_double(r.pure_alice_max) << ','
        << format_double(r.pure_bob_max) << ',' << format_double(r.bound_alice_eq5)
        << ',' << format_double(r.bound_bob_eq6) << ',' << format_double(r.ce_alice_lp)
        << ',' << format_double(r.ce_bob_lp) << ',' << format_double(r.pr_alice) << ','
        << format_double(r.pr_bob) << ',' << (r.pr_nash ? 1 : 0) << ','
        << format_double(r.q_alice) << ',' << format_double(r.q_bob) << ','
        << (r.q_nash ? 1 : 0) << ',' << (r.in_theorem2_window ? 1 : 0) << "\n";
  }
}

std::vector<ScanRow> parse_scan_csv(std::istream& in) {
  std::vector<ScanRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string field;
    std::vector<std::string> values;
    while (std::getline(fields, field, ',')) values.push_back(field);
    if (values.size() != 14) {
      throw std::invalid_argument("scan CSV row with " +
                                  std::to_string(values.size()) + " fields");
    }
    ScanRow r;
    r.epsilon = std::stod(values[0]);
    r.pure_alice_max = std::stod(values[1]);
    r.pure_bob_max = std::stod(values[2]);
    r.bound_alice_eq5 = std::stod(values[3]);
    r.bound_bob_eq6 = std::stod(values[4]);
    r.ce_alice_lp = std::stod(values[5]);
    r.ce_bob_lp = std::stod(values[6]);
    r.pr_alice = std::stod(values[7]);
    r.pr_bob = std::stod(values[8]);
    r.pr_nash = values[9] == "1";
    r.q_alice = std::stod(values[10]);
    r.q_bob = std::stod(values[11]);
    r.q_nash = values[12] == "1";
    r.in_theorem2_window = values[13] == "1";
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json scan_to_json(const std::vector<ScanRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ScanRow& r : rows) {
    out.push_back(nlohmann::json{{"epsilon", r.epsilon},
                                 {"pure_alice_max", r.pure_alice_max},
                                 {"pure_bob_max", r.pure_bob_max},
                                 {"bound_alice_eq5", r.bound_alice_eq5},
                                 {"bound_bob_eq6", r.bound_bob_eq6},
                                 {"ce_alice_lp", r.ce_alice_lp},
                                 {"ce_bob_lp", r.ce_bob_lp},
                                 {"pr_alice", r.pr_alice},
                                 {"pr_bob", r.pr_bob},
                                 {"pr_nash", r.pr_nash},
                                 {"q_alice", r.q_alice},
                                 {"q_bob", r.q_bob},
                                 {"q_nash", r.q_nash},
                                 {"in_theorem2_window", r.in_theorem2_window}});
  }
  return out;
}

}  // namespace qbg
