#pragma once

#include <array>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/gcore/globset.hpp"
#include "omega/gcore/ngraph.hpp"

namespace testing {

inline std::string fixture(const std::string& name) {
  const char* dir = std::getenv("OMEGA_FIXTURE_DIR");
  return std::string(dir ? dir : "fixtures") + "/" + name;
}

inline nlohmann::json load(const std::string& name) {
  std::ifstream in(fixture(name));
  return nlohmann::json::parse(in);
}

/// 1-globular set from object names and (edge, from, to) triples.
inline omega::gcore::GlobSet graph(const std::vector<std::string>& objs,
                                   const std::vector<std::array<std::string, 3>>& edges) {
  auto g = omega::gcore::GlobSet::empty(1);
  for (const auto& o : objs) g.addCell(0, o);
  for (const auto& e : edges) g.addCell(1, e[0], e[1], e[2]);
  return g;
}

inline omega::Term at(const std::string& s) { return omega::Term::atom(s); }

}  // namespace testing
