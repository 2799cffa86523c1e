#pragma once

// Fixture and randomized property runs behind `wulab check`.

#include "wulab/batch.hpp"
#include "wulab/constructions.hpp"
#include "wulab/space3.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wulab {

struct CheckReport {
  std::string check;
  std::uint64_t seed = 0;
  std::size_t fixtures = 0;  // cases 0 .. fixtures-1 are fixed, the rest random
  std::size_t trials = 0;
  batch::TrialSummary summary;
  std::vector<std::pair<std::string, std::string>> observations;
  bool pass() const { return summary.all_passed(); }
};

/// thm5.2 thm5.5a thm5.5b stmt5.7a rel6.4a rel6.5a radon vankampen
/// borsukulam stokes cgs identity3.1
std::vector<std::string> check_names();

/// Throws std::invalid_argument for an unknown check name.
CheckReport run_check(std::string_view name, std::size_t trials, std::uint64_t seed);

// Random instances used by the checks.

/// Centrally symmetric closed polyline around a random integer centre, with an
/// even number of vertices in [4, max_vertices]; the centre is off the curve.
std::pair<ClosedPolyline, Point2> random_symmetric_polyline(std::mt19937_64& rng, std::size_t max_vertices = 40);

/// Closed polyline L and polyline P with |L cap P| well defined (crossing_parity
/// accepts them) and endpoints of P off L.
std::pair<ClosedPolyline, Polyline> random_stokes_pair(std::mt19937_64& rng);

/// Integer point of [-50, 50]^3 configurations, resampled until generic.
SixConfig random_six_config(std::mt19937_64& rng);

/// Two disjoint closed polylines with 3..6 vertices each, resampled until disjoint.
std::pair<Cycle3, Cycle3> random_disjoint_cycles(std::mt19937_64& rng);

/// A point with small denominators off the image of d.
Point2 random_point_off_image(const Drawing& d, std::mt19937_64& rng);

}  // namespace wulab
