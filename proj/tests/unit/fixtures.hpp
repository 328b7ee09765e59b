#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

inline const nlohmann::json& regression_fixtures() {
  static const nlohmann::json data = [] {
    std::ifstream in(INFOSCALE_FIXTURES_PATH);
    return nlohmann::json::parse(in);
  }();
  return data;
}
