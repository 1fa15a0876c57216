#pragma once

#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vweb/diagram.hpp"
#include "vweb/generate.hpp"

namespace corpus {

inline vweb::Diagram gen(vweb::Family f, std::optional<unsigned> n = std::nullopt) {
  return vweb::generate({f, n});
}

inline vweb::Diagram load(const std::string& name) {
  std::ifstream in(std::string(VWEB_DATA_DIR) + "/" + name);
  return vweb::parse(std::string(std::istreambuf_iterator<char>(in), {}));
}

// Every plane diagram of the corpus: the generator families plus the data files.
inline std::vector<std::pair<std::string, vweb::Diagram>> all() {
  using vweb::Family;
  std::vector<std::pair<std::string, vweb::Diagram>> out;
  for (unsigned n = 1; n <= 3; ++n) out.emplace_back("unlink " + std::to_string(n), gen(Family::Unlink, n));
  out.emplace_back("theta", gen(Family::Theta));
  out.emplace_back("crossed_theta", gen(Family::CrossedTheta));
  out.emplace_back("kinked_unknot", gen(Family::KinkedUnknot));
  out.emplace_back("k4", gen(Family::K4));
  for (unsigned n = 3; n <= 6; ++n) out.emplace_back("prism " + std::to_string(n), gen(Family::Prism, n));
  out.emplace_back("dumbbell", gen(Family::Dumbbell));
  out.emplace_back("petersen", gen(Family::Petersen));
  out.emplace_back("bridged.vweb", load("bridged.vweb"));
  return out;
}

}  // namespace corpus
