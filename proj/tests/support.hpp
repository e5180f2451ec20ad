#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "metabel/knotio.hpp"

namespace testing_support {

inline nlohmann::json golden(const std::string& name) {
  std::ifstream f(std::string(METABEL_GOLDEN_DIR) + "/" + name + ".json");
  return nlohmann::json::parse(f);
}

inline std::string data_path(const std::string& name) { return std::string(METABEL_DATA_DIR) + "/" + name; }

inline metabel::GroupPresentation braid(const char* word) {
  return metabel::braid_to_presentation(metabel::parse_braid(word));
}

inline const char* const kTrefoil = "1 1 1";
inline const char* const kFigureEight = "1 -2 1 -2";
inline const char* const kCinquefoil = "1 1 1 1 1";
inline const char* const kThreeTwist = "1 1 1 2 -1 2";  // 5_2

}  // namespace testing_support
