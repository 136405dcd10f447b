#include "qbg/game_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qbg {

namespace {

nlohmann::json matrix_to_json(const std::array<std::array<double, 4>, 4>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    rows.push_back(nlohmann::json(row));
  }
  return rows;
}

std::array<std::array<double, 4>, 4> matrix_from_json(const nlohmann::json& j,
                                                      const char* name) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument(std::string(name) + " must be a 4x4 array");
  }
  std::array<std::array<double, 4>, 4> m{};
  for (int r = 0; r < 4; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != 4) {
      throw std::invalid_argument(std::string(name) + " must be a 4x4 array");
    }
    for (int c = 0; c < 4; ++c) m[r][c] = row[c].get<double>();
  }
  return m;
}

}  // namespace

nlohmann::json game_to_json(const UtilityTable& game) {
  return nlohmann::json{{"players", 2},
                        {"types", {2, 2}},
                        {"actions", {2, 2}},
                        {"u_A", matrix_to_json(game.alice_matrix())},
                        {"u_B", matrix_to_json(game.bob_matrix())}};
}

UtilityTable game_from_json(const nlohmann::json& j) {
  if (j.value("players", 0) != 2) {
    throw std::invalid_argument("game file must declare \"players\": 2");
  }
  for (const char* key : {"types", "actions"}) {
    const auto arr = j.value(key, nlohmann::json::array());
    if (arr != nlohmann::json::array({2, 2})) {
      throw std::invalid_argument(std::string("game file must declare \"") + key +
                                  "\": [2,2]");
    }
  }
  return UtilityTable(matrix_from_json(j.at("u_A"), "u_A"),
                      matrix_from_json(j.at("u_B"), "u_B"));
}

nlohmann::json strategy_to_json(const CorrelatedStrategy& strategy) {
  return nlohmann::json{{"p", matrix_to_json(strategy.matrix())}};
}

CorrelatedStrategy strategy_from_json(const nlohmann::json& j) {
  return CorrelatedStrategy(matrix_from_json(j.at("p"), "p"));
}

nlohmann::json correlation_to_json(const Correlation& corr) {
  return matrix_to_json(corr.matrix());
}

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

UtilityTable load_game_file(const std::string& path) {
  return game_from_json(parse_file(path));
}

CorrelatedStrategy load_strategy_file(const std::string& path) {
  return strategy_from_json(parse_file(path));
}

}  // namespace qbg
