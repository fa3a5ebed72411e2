#pragma once

#include <string>
#include <vector>

namespace omset {

// Line-oriented and machine-readable result of one verification suite.
// Witnesses carry enough context to re-run the failing instance.
struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;  // echoed config
  std::vector<std::string> notes;  // e.g. fragment-relative caveats
  long checked = 0;
  long failed = 0;
  std::vector<std::string> witnesses;

  bool ok() const { return failed == 0; }

  void addParam(std::string key, std::string value) {
    params.push_back({std::move(key), std::move(value)});
  }
  void merge(const VerificationReport& other) {
    checked += other.checked;
    failed += other.failed;
    witnesses.insert(witnesses.end(), other.witnesses.begin(),
                     other.witnesses.end());
  }

  std::string toText() const;
  std::string toJson() const;  // {suite, params, checked, failed, witnesses}
};

std::string reportsToJson(const std::vector<VerificationReport>& reports);
std::string reportsToText(const std::vector<VerificationReport>& reports);

}  // namespace omset
