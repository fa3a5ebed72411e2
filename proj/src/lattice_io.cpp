#include "omset/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace omset {

RawLattice readRawLattice(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  RawLattice raw;
  raw.n = j.at("n").get<int>();
  if (j.contains("names")) raw.names = j["names"].get<std::vector<std::string>>();
  raw.ortho = j.at("ortho").get<std::vector<int>>();
  for (const auto& pair : j.at("leq")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("leq entries must be [i,j] pairs");
    raw.leqPairs.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return raw;
}

RawLattice readRawLatticeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lattice file: " + path);
  return readRawLattice(in);
}

Logic readLogicFile(const std::string& path) {
  return Logic::fromRaw(readRawLatticeFile(path));
}

std::string writeLattice(const Logic& logic) {
  nlohmann::ordered_json j;
  j["n"] = logic.size();
  j["names"] = logic.names();
  auto leq = nlohmann::ordered_json::array();
  for (Elem a = 0; a < logic.size(); ++a)
    for (Elem b = 0; b < logic.size(); ++b)
      if (a != b && logic.le(a, b)) leq.push_back({a, b});
  j["leq"] = leq;
  auto ortho = nlohmann::ordered_json::array();
  for (Elem a = 0; a < logic.size(); ++a) ortho.push_back(logic.ocompl(a));
  j["ortho"] = ortho;
  return j.dump(2) + "\n";
}

}  // namespace omset
