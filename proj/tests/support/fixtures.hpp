#pragma once

#include "wulab/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace fixtures {

inline wulab::io::Json load(const std::string& name) {
  std::ifstream in(std::string(WULAB_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return wulab::io::Json::parse(in);
}

inline wulab::Drawing drawing(const std::string& name) { return wulab::io::drawing_from_json(load(name)); }

inline std::string text(const std::string& name) {
  std::ifstream in(std::string(WULAB_FIXTURE_DIR) + "/" + name);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace fixtures
