#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "qbg/game_io.hpp"
#include "qbg/scan.hpp"

using namespace qbg;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("qbg_cli_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("table emits the wire-format game") {
  const CliResult r = invoke({"table", "--epsilon", "0.0"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["players"] == 2);
  CHECK(j["types"] == json::array({2, 2}));
  CHECK(j["u_A"][0][0] == 1.0);
  CHECK(j["u_A"][3][1] == 0.75);
  CHECK(j["u_B"][0][0] == 0.5);
  // Round-trips through the loader.
  CHECK_NOTHROW(game_from_json(j));
}

TEST_CASE("equilibria lists the range sets") {
  const CliResult r = invoke({"equilibria", "--epsilon", "0.1", "--class", "pure"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("(S1,S3)") != std::string::npos);
  CHECK(r.out.find("(S3,S4)") != std::string::npos);
  CHECK(r.out.find("(S4,S2)") != std::string::npos);
  CHECK(r.out.find("(S1,S1)") == std::string::npos);

  const CliResult rj =
      invoke({"equilibria", "--epsilon", "0.1", "--json"});
  const json j = json::parse(rj.out);
  CHECK(j["equilibria"].size() == 3);
  CHECK(j["payoff_table"].size() == 4);
}

TEST_CASE("equilibria accepts a game file") {
  TempDir tmp;
  const auto path = tmp.path / "game.json";
  {
    std::ofstream f(path);
    f << game_to_json(build_game(0.7)).dump();
  }
  const CliResult r = invoke({"equilibria", "--game-file", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("(S1,S1)") != std::string::npos);
  CHECK(r.out.find("(S2,S4)") != std::string::npos);
  CHECK(r.out.find("(S4,S3)") != std::string::npos);

  const CliResult missing = invoke({"equilibria"});
  CHECK(missing.code == cli::kExitUsage);
}

TEST_CASE("bound reports ceilings, lp maxima, and the s3 verdict") {
  const CliResult r = invoke({"bound", "--epsilon", "0.4", "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["bound_alice"].get<double>() == doctest::Approx(0.4875));
  CHECK(j["bound_bob"].get<double>() == doctest::Approx(0.7875));
  CHECK(j["ce_lp_alice"].get<double>() == doctest::Approx(2973.0 / 6128.0));
  CHECK(j["bob_s3_excluded"] == false);
  CHECK(j["bob_s3_weight_max"].get<double>() == doctest::Approx(380.0 / 383.0));

  const CliResult out_of_range = invoke({"bound", "--epsilon", "0.1", "--json"});
  const json j2 = json::parse(out_of_range.out);
  CHECK(!j2.contains("bob_s3_excluded"));
}

TEST_CASE("certify exit codes encode the verdict") {
  CHECK(invoke({"certify", "--advice", "pr", "--epsilon", "0.5"}).code ==
        cli::kExitOk);
  CHECK(invoke({"certify", "--advice", "pr", "--epsilon", "0.7"}).code ==
        cli::kExitNegativeVerdict);

  const CliResult q = invoke({"certify", "--advice", "quantum", "--epsilon",
                              "0.4", "--json"});
  REQUIRE(q.code == cli::kExitOk);
  const json j = json::parse(q.out);
  CHECK(j["is_equilibrium"] == true);
  CHECK(j["in_advantage_window"] == true);
  CHECK(j["best_response_alice"].get<double>() ==
        doctest::Approx(0.469454364826).epsilon(1e-9));
}

TEST_CASE("vertices dump") {
  const CliResult r = invoke({"vertices"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 24);
  CHECK(j[16]["kind"] == "pr");
  CHECK(j[16]["p"][0][0].get<double>() == 0.5);
  CHECK(j[0]["kind"] == "local");
}

TEST_CASE("simulate with explicit strategy file") {
  TempDir tmp;
  const auto path = tmp.path / "strategy.json";
  {
    std::ofstream f(path);
    f << R"({"p": [[0,0,1,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})";
  }
  const CliResult r =
      invoke({"simulate", "--epsilon", "0.0", "--advice", "classical", "--rounds",
              "200000", "--seed", "7", "--strategy-file", path.string(), "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["analytic"]["alice"].get<double>() == doctest::Approx(11.0 / 16.0));
  CHECK(j["abs_error"]["alice"].get<double>() < 5e-3);

  const CliResult again =
      invoke({"simulate", "--epsilon", "0.0", "--advice", "classical", "--rounds",
              "200000", "--seed", "7", "--strategy-file", path.string(), "--json"});
  CHECK(json::parse(again.out)["empirical"]["alice"] == j["empirical"]["alice"]);
}

TEST_CASE("simulate quantum and pr defaults") {
  const CliResult q = invoke({"simulate", "--epsilon", "0.4", "--advice", "quantum",
                              "--rounds", "100000", "--seed", "3", "--json"});
  REQUIRE(q.code == cli::kExitOk);
  CHECK(json::parse(q.out)["analytic"]["bob"].get<double>() ==
        doctest::Approx(0.810876).epsilon(1e-5));

  const CliResult pr = invoke({"simulate", "--epsilon", "0.0", "--advice", "pr",
                               "--rounds", "100000", "--seed", "3", "--json"});
  CHECK(json::parse(pr.out)["analytic"]["alice"].get<double>() ==
        doctest::Approx(0.75));
}

TEST_CASE("scan writes parseable csv and validates its range") {
  TempDir tmp;
  const auto path = tmp.path / "scan.csv";
  const CliResult r = invoke({"scan", "--from", "0", "--to", "0.75", "--step",
                              "0.05", "--out", path.string(), "--format", "csv"});
  REQUIRE(r.code == cli::kExitOk);
  std::ifstream in(path);
  const auto rows = parse_scan_csv(in);
  CHECK(rows.size() == 16);
  CHECK(rows.back().epsilon == doctest::Approx(0.75));

  CHECK(invoke({"scan", "--from", "0.5", "--to", "0.2", "--step", "0.01", "--out",
                path.string()})
            .code == cli::kExitUsage);
  CHECK(invoke({"scan", "--from", "0", "--to", "0.75", "--step", "0.05", "--out",
                (tmp.path / "no_such_dir" / "x.csv").string()})
            .code == cli::kExitIo);
}

TEST_CASE("usage errors") {
  CHECK(invoke({"bogus"}).code == cli::kExitUsage);
  CHECK(invoke({"table"}).code == cli::kExitUsage);              // missing option
  CHECK(invoke({"table", "--epsilon", "0.9"}).code == cli::kExitUsage);
  CHECK(invoke({"certify", "--advice", "carrier-pigeon", "--epsilon", "0.1"}).code ==
        cli::kExitUsage);
}
