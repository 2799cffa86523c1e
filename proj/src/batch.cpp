#include "wulab/batch.hpp"

#include "wulab/invariants.hpp"

namespace wulab::batch {

namespace {

std::optional<long> entry(const Drawing& d, const Cycle& c, const ClosedPolyline& line, std::size_t v) {
  if (c.contains(v)) return std::nullopt;
  if (find_segment_containing(line, d.placement(v))) return std::nullopt;
  return winding_number(line, d.placement(v));
}

}  // namespace

std::vector<std::optional<long>> profile_values_serial(const Drawing& d, const std::vector<Cycle>& cycles) {
  const std::size_t nv = d.graph().vertex_count();
  std::vector<std::optional<long>> out(cycles.size() * nv);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const ClosedPolyline line = restriction_to_cycle(d, cycles[c]);
    for (std::size_t v = 0; v < nv; ++v) out[c * nv + v] = entry(d, cycles[c], line, v);
  }
  return out;
}

std::vector<std::optional<long>> profile_values_parallel(const Drawing& d, const std::vector<Cycle>& cycles) {
  const std::size_t nv = d.graph().vertex_count();
  std::vector<ClosedPolyline> lines;
  lines.reserve(cycles.size());
  for (const auto& c : cycles) lines.push_back(restriction_to_cycle(d, c));
  std::vector<std::optional<long>> out(cycles.size() * nv);
  const long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < total; ++k) {
    const std::size_t c = static_cast<std::size_t>(k) / nv;
    const std::size_t v = static_cast<std::size_t>(k) % nv;
    out[k] = entry(d, cycles[c], lines[c], v);
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ static_cast<std::uint64_t>(index));
}

}  // namespace wulab::batch
