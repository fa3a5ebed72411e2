#include "omset/report.hpp"

#include <sstream>

#include <json.hpp>

namespace omset {

std::string VerificationReport::toText() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (ok() ? "PASS" : "FAIL") << " (checked "
     << checked << ", failed " << failed << ")\n";
  for (const auto& [k, v] : params) os << "  param " << k << " = " << v << "\n";
  for (const std::string& n : notes) os << "  note: " << n << "\n";
  const size_t shown = witnesses.size() < 20 ? witnesses.size() : 20;
  for (size_t i = 0; i < shown; ++i) os << "  witness: " << witnesses[i] << "\n";
  if (witnesses.size() > shown)
    os << "  ... " << witnesses.size() - shown << " more witnesses\n";
  return os.str();
}

namespace {

nlohmann::ordered_json toJsonObj(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["checked"] = r.checked;
  j["failed"] = r.failed;
  j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace

std::string VerificationReport::toJson() const {
  return toJsonObj(*this).dump(2) + "\n";
}

std::string reportsToJson(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(toJsonObj(r));
  return arr.dump(2) + "\n";
}

std::string reportsToText(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += r.toText();
  return out;
}

}  // namespace omset
