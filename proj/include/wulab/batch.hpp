#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin with identical
// results; the serial versions are the reference used by the tests and the
// benchmark.

#include "wulab/drawing.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace wulab::batch {

/// Row-major table over (cycle, vertex): w_f(C, v), or nullopt when v lies on
/// C or f(v) lies on f(C).
std::vector<std::optional<long>> profile_values_serial(const Drawing& d, const std::vector<Cycle>& cycles);
std::vector<std::optional<long>> profile_values_parallel(const Drawing& d, const std::vector<Cycle>& cycles);

/// Seed for trial `index` of a run seeded with `seed` (splitmix64 of both).
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

struct TrialOutcome {
  bool pass = true;
  std::string detail;
};

struct TrialSummary {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<std::pair<std::size_t, std::string>> failures;  // sorted by trial index
  bool all_passed() const { return passed == trials; }
  friend bool operator==(const TrialSummary&, const TrialSummary&) = default;
};

namespace detail {

template <class F>
TrialOutcome run_one(F& f, std::size_t i, std::uint64_t seed) {
  try {
    return f(i, trial_seed(seed, i));
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

inline TrialSummary summarize(const std::vector<TrialOutcome>& out) {
  TrialSummary s;
  s.trials = out.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].pass) {
      ++s.passed;
    } else {
      s.failures.emplace_back(i, out[i].detail);
    }
  }
  return s;
}

}  // namespace detail

/// f(index, seed) -> TrialOutcome. Exceptions count as failures.
template <class F>
TrialSummary run_trials_serial(std::size_t count, std::uint64_t seed, F&& f) {
  std::vector<TrialOutcome> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = detail::run_one(f, i, seed);
  return detail::summarize(out);
}

template <class F>
TrialSummary run_trials_parallel(std::size_t count, std::uint64_t seed, F&& f) {
  std::vector<TrialOutcome> out(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = detail::run_one(f, static_cast<std::size_t>(i), seed);
  return detail::summarize(out);
}

}  // namespace wulab::batch
