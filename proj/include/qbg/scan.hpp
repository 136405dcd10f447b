#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbg/game.hpp"

namespace qbg {

/// One grid point of the per-epsilon summary. Field order matches the CSV
/// column order exactly.
struct ScanRow {
  double epsilon = 0.0;
  double pure_alice_max = 0.0;  // best equilibrium payoff per player
  double pure_bob_max = 0.0;
  double bound_alice_eq5 = 0.0;  // closed-form classical ceilings
  double bound_bob_eq6 = 0.0;
  double ce_alice_lp = 0.0;  // LP maxima over the CE polytope
  double ce_bob_lp = 0.0;
  double pr_alice = 0.0;
  double pr_bob = 0.0;
  bool pr_nash = false;
  double q_alice = 0.0;
  double q_bob = 0.0;
  bool q_nash = false;
  bool in_theorem2_window = false;

  bool operator==(const ScanRow&) const = default;
};

inline constexpr const char* kScanCsvHeader =
    "# qbg-scan v1: epsilon,pure_alice_max,pure_bob_max,bound_alice_eq5,"
    "bound_bob_eq6,ce_alice_lp,ce_bob_lp,pr_alice,pr_bob,pr_nash,q_alice,"
    "q_bob,q_nash,in_theorem2_window";

ScanRow compute_scan_row(Epsilon eps);

/// Grid from `from` to `to` inclusive with the given step (last point kept
/// when it lands within 1e-9·step of `to`).
std::vector<double> scan_grid(double from, double to, double step);

std::vector<ScanRow> compute_scan(double from, double to, double step);

/// Numbers are printed with 12 significant digits; parse→emit is idempotent.
void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out);
std::vector<ScanRow> parse_scan_csv(std::istream& in);

nlohmann::json scan_to_json(const std::vector<ScanRow>& rows);

/// %.12g formatting used for every floating-point value the tools print.
std::string format_double(double v);

}  // namespace qbg
