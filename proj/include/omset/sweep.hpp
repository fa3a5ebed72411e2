#pragma once

#include <string>
#include <vector>

namespace omset {

// Execution policy for the verification sweeps. Parallel runs use OpenMP;
// results are merged in index order, so both policies produce identical
// reports.
enum class Exec { Serial, Parallel };

inline Exec execFromString(const std::string& s) {
  if (s == "serial") return Exec::Serial;
  if (s == "omp" || s == "parallel") return Exec::Parallel;
  throw std::invalid_argument("exec policy must be 'serial' or 'omp'");
}

// Runs fn(i) for i in [0, count). fn must not throw.
template <typename Fn>
void forIndex(Exec mode, long count, Fn&& fn) {
  if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) fn(i);
  } else {
    for (long i = 0; i < count; ++i) fn(i);
  }
}

// Per-index result slots merged in order: deterministic regardless of the
// thread schedule.
template <typename Result, typename Fn>
std::vector<Result> mapIndex(Exec mode, long count, Fn&& fn) {
  std::vector<Result> out(count);
  forIndex(mode, count, [&](long i) { out[i] = fn(i); });
  return out;
}

}  // namespace omset
