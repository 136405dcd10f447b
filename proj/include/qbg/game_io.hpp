#pragma once

#include <string>

#include <json.hpp>

#include "qbg/correlated.hpp"
#include "qbg/game.hpp"

namespace qbg {

/// Wire format: {"players":2, "types":[2,2], "actions":[2,2],
///  "u_A": 4×4 row-major [x_index][y_index] with x_index = 2·x_A + x_B and
///  y_index = 2·y_A + y_B, "u_B": same shape}.
nlohmann::json game_to_json(const UtilityTable& game);
UtilityTable game_from_json(const nlohmann::json& j);

/// {"p": 4×4 row-major recommendation matrix}.
nlohmann::json strategy_to_json(const CorrelatedStrategy& strategy);
CorrelatedStrategy strategy_from_json(const nlohmann::json& j);

nlohmann::json correlation_to_json(const Correlation& corr);

UtilityTable load_game_file(const std::string& path);
CorrelatedStrategy load_strategy_file(const std::string& path);

}  // namespace qbg
