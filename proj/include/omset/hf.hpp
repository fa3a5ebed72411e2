#pragma once

#include <compare>
#include <string>
#include <vector>

namespace omset {

// A hereditarily finite set in canonical form (children sorted, unique).
// Small value type; the brute-force oracle only ever touches a few dozen.
class Hf {
 public:
  Hf() = default;
  explicit Hf(std::vector<Hf> members);

  static Hf empty() { return Hf(); }
  // Parses literals like "{}", "{{}}", "{{},{{}}}".
  static Hf parse(const std::string& text);
  // The first n von Neumann naturals as HF sets (0 = {}, 1 = {0}, ...).
  static Hf natural(int n);

  const std::vector<Hf>& members() const { return members_; }
  bool contains(const Hf& x) const;
  bool subsetOf(const Hf& other) const;
  // Number of nodes in the membership tree (counting this set).
  int hereditarySize() const;

  // defined out of line: a defaulted comparison would instantiate
  // vector<Hf>'s comparison while Hf is still incomplete
  std::strong_ordering operator<=>(const Hf& other) const;
  bool operator==(const Hf& other) const;

  std::string toString() const;

 private:
  std::vector<Hf> members_;
};

// All HF sets of hereditary size <= maxHsize, in canonical order.
std::vector<Hf> hfUniverse(int maxHsize);

}  // namespace omset
