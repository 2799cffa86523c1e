#include "wulab/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wulab {

namespace {

using Case = std::function<batch::TrialOutcome(std::uint64_t)>;

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

batch::TrialOutcome outcome(bool pass, std::string detail) { return {pass, pass ? std::string() : std::move(detail)}; }

const StatementResult& statement(const TheoremReport& r, std::string_view id) {
  for (const auto& s : r.statements)
    if (s.id == id) return s;
  throw std::logic_error("report has no statement " + std::string(id));
}

batch::TrialOutcome statement_holds(const Drawing& d, std::string_view id) {
  const TheoremReport r = check_theorems(d);
  const StatementResult& s = statement(r, id);
  if (!r.applicable()) return {false, "not applicable: " + r.note};
  return outcome(s.pass, s.quantity + " = " + std::to_string(s.value) + ", expected " + s.expected);
}

std::vector<std::array<long, 4>> k4_tuples() {
  std::vector<std::array<long, 4>> out;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long e = -2; e <= 2; ++e)
          if (std::abs(-a + b - c + e) == 1) out.push_back({a, b, c, e});
  return out;
}

Drawing k4_walk(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Drawing base = uniform(rng, 0, 1) ? base_drawing("triangle_center_k4") : generate({"ae_k4_morozov", {}});
  return random_finger_walk(base, rng(), static_cast<std::size_t>(uniform(rng, 1, 4)));
}

Drawing k5m45_walk(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Drawing base = generate({"ae_k5m45_w123_5", {uniform(rng, -3, 3)}});
  return random_finger_walk(base, rng(), static_cast<std::size_t>(uniform(rng, 1, 4)));
}

Drawing k33_walk(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_finger_walk(base_drawing("k33_minus_11"), rng(), static_cast<std::size_t>(uniform(rng, 1, 4)));
}

struct Plan {
  std::vector<Case> fixtures;
  Case random;
  std::function<void(std::size_t, std::uint64_t, std::vector<long>&)> observe;
};

void k4_corpus(Plan& p, const std::string& id, bool check_profile) {
  for (const auto& n : k4_tuples()) {
    p.fixtures.push_back([n, id, check_profile](std::uint64_t) {
      const Drawing d = generate({"ae_k4_windings", {n[0], n[1], n[2], n[3]}});
      if (check_profile && k4_profile(d) != n) return batch::TrialOutcome{false, "profile differs from the target"};
      return statement_holds(d, id);
    });
  }
  p.fixtures.push_back([id](std::uint64_t) { return statement_holds(base_drawing("triangle_center_k4"), id); });
  p.fixtures.push_back([id](std::uint64_t) { return statement_holds(generate({"ae_k4_morozov", {}}), id); });
  p.random = [id](std::uint64_t s) { return statement_holds(k4_walk(s), id); };
}

void k5m45_corpus(Plan& p, const std::string& id) {
  for (long n = -5; n <= 5; ++n) {
    p.fixtures.push_back([n, id](std::uint64_t) { return statement_holds(generate({"ae_k5m45_w123_5", {n}}), id); });
  }
  p.fixtures.push_back([id](std::uint64_t) { return statement_holds(base_drawing("planar_k5_minus_45"), id); });
  if (id != "rel6.5a") {
    // The pentagon is not an almost embedding: the difference is 0 and the report must say so.
    p.fixtures.push_back([id](std::uint64_t) {
      const TheoremReport r = check_theorems(base_drawing("pentagon_k5_minus_45"));
      const StatementResult& s = statement(r, id);
      return outcome(!r.applicable() && s.value == 0, "pentagon not flagged or difference nonzero");
    });
  }
  p.random = [id](std::uint64_t s) { return statement_holds(k5m45_walk(s), id); };
}

Plan make_plan(std::string_view name) {
  Plan p;
  if (name == "thm5.2") {
    k4_corpus(p, "thm5.2", true);
  } else if (name == "rel6.4a") {
    k4_corpus(p, "rel6.4a", false);
  } else if (name == "thm5.5a" || name == "thm5.5b" || name == "rel6.5a") {
    k5m45_corpus(p, std::string(name));
  } else if (name == "stmt5.7a") {
    p.fixtures.push_back([](std::uint64_t) { return statement_holds(base_drawing("k33_minus_11"), "stmt5.7a"); });
    p.random = [](std::uint64_t s) { return statement_holds(k33_walk(s), "stmt5.7a"); };
  } else if (name == "radon") {
    p.random = [](std::uint64_t s) {
      const RadonCount r = radon_count(random_general_position_map(complete_graph(4), s));
      return outcome(r.parity().odd(), std::to_string(r.crossings) + " crossings + " +
                                           std::to_string(r.interior_vertices) + " interior vertices is even");
    };
  } else if (name == "vankampen") {
    p.random = [](std::uint64_t s) {
      const std::size_t n = van_kampen_crossings(random_general_position_map(complete_graph(5), s));
      return outcome(n % 2 == 1, std::to_string(n) + " non-adjacent crossings");
    };
  } else if (name == "identity3.1") {
    p.random = [](std::uint64_t s) {
      std::mt19937_64 rng(s);
      const Drawing d = random_general_position_map(complete_graph(4), rng());
      const long sum = k4_alternating_sum(d, random_point_off_image(d, rng));
      return outcome(sum == 0, "alternating sum " + std::to_string(sum));
    };
  } else if (name == "borsukulam") {
    p.random = [](std::uint64_t s) {
      std::mt19937_64 rng(s);
      const auto [line, center] = random_symmetric_polyline(rng);
      const int w = winding_number(line, center);
      return outcome(w % 2 != 0, "winding " + std::to_string(w));
    };
  } else if (name == "stokes") {
    p.random = [](std::uint64_t s) {
      std::mt19937_64 rng(s);
      const auto [l, path] = random_stokes_pair(rng);
      const int parity = crossing_parity(l, path);
      const int diff = winding_number(l, path.front()) - winding_number(l, path.back());
      return outcome(parity == ((diff % 2) + 2) % 2,
                     "parity " + std::to_string(parity) + ", winding difference " + std::to_string(diff));
    };
  } else if (name == "cgs") {
    p.random = [](std::uint64_t s) {
      std::mt19937_64 rng(s);
      const CgsReport r = cgs_report(random_six_config(rng));
      for (const auto& sp : r.splittings) {
        if (sp.linking < -1 || sp.linking > 1) return batch::TrialOutcome{false, sp.label() + " has |lk| > 1"};
      }
      return outcome(r.linked_pair_exists, "no linked pair");
    };
    p.observe = [](std::size_t i, std::uint64_t s, std::vector<long>& obs) {
      std::mt19937_64 rng(s);
      obs[i] = static_cast<long>(cgs_report(random_six_config(rng)).odd_pairs);
    };
  } else {
    throw std::invalid_argument("unknown check '" + std::string(name) + "'");
  }
  return p;
}

}  // namespace

std::vector<std::string> check_names() {
  return {"thm5.2",    "thm5.5a",   "thm5.5b",    "stmt5.7a", "rel6.4a", "rel6.5a",
          "radon",     "vankampen", "borsukulam", "stokes",   "cgs",     "identity3.1"};
}

CheckReport run_check(std::string_view name, std::size_t trials, std::uint64_t seed) {
  const Plan plan = make_plan(name);
  CheckReport report;
  report.check = std::string(name);
  report.seed = seed;
  report.fixtures = plan.fixtures.size();
  report.trials = trials;
  const std::size_t total = plan.fixtures.size() + trials;
  report.summary = batch::run_trials_parallel(total, seed, [&](std::size_t i, std::uint64_t s) {
    return i < plan.fixtures.size() ? plan.fixtures[i](s) : plan.random(s);
  });
  if (plan.observe) {
    std::vector<long> obs(total, -1);
    const long n = static_cast<long>(total);
#pragma omp parallel for schedule(dynamic)
    for (long i = static_cast<long>(plan.fixtures.size()); i < n; ++i) {
      try {
        plan.observe(static_cast<std::size_t>(i), batch::trial_seed(seed, static_cast<std::size_t>(i)), obs);
      } catch (const std::exception&) {
      }
    }
    std::map<long, std::size_t> hist;
    for (std::size_t i = plan.fixtures.size(); i < total; ++i)
      if (obs[i] >= 0) ++hist[obs[i]];
    std::string text;
    for (const auto& [k, c] : hist) text += (text.empty() ? "" : ", ") + std::to_string(k) + ": " + std::to_string(c);
    report.observations.emplace_back("odd pairs per configuration (count: configurations)", text);
  }
  return report;
}

std::pair<ClosedPolyline, Point2> random_symmetric_polyline(std::mt19937_64& rng, std::size_t max_vertices) {
  const long half_max = static_cast<long>(std::max<std::size_t>(max_vertices, 4) / 2);
  for (;;) {
    const Point2 c(uniform(rng, -100, 100), uniform(rng, -100, 100));
    const long k = uniform(rng, 2, half_max);
    std::vector<Point2> half;
    for (long i = 0; i < k; ++i) half.emplace_back(uniform(rng, -1000, 1000), uniform(rng, -1000, 1000));
    std::vector<Point2> pts;
    for (const auto& v : half) pts.push_back(c + v);
    for (const auto& v : half) pts.push_back(c - v);
    bool ok = true;
    for (std::size_t i = 0; i < pts.size(); ++i) ok = ok && !(pts[i] == pts[(i + 1) % pts.size()]);
    if (!ok) continue;
    ClosedPolyline line(std::move(pts));
    if (find_segment_containing(line, c)) continue;
    return {std::move(line), c};
  }
}

std::pair<ClosedPolyline, Polyline> random_stokes_pair(std::mt19937_64& rng) {
  auto pts = [&](long n) {
    std::vector<Point2> out;
    while (static_cast<long>(out.size()) < n) {
      Point2 p(uniform(rng, 0, 60), uniform(rng, 0, 60));
      if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    return out;
  };
  for (;;) {
    auto lv = pts(uniform(rng, 3, 12));
    if (lv.front() == lv.back()) continue;
    ClosedPolyline l(std::move(lv));
    Polyline p(pts(uniform(rng, 2, 6)));
    if (find_segment_containing(l, p.front()) || find_segment_containing(l, p.back())) continue;
    try {
      crossing_parity(l, p);
    } catch (const PreconditionError&) {
      continue;
    }
    return {std::move(l), std::move(p)};
  }
}

SixConfig random_six_config(std::mt19937_64& rng) {
  for (;;) {
    SixConfig c;
    for (auto& p : c.points) p = Point3(uniform(rng, -50, 50), uniform(rng, -50, 50), uniform(rng, -50, 50));
    try {
      validate_generic(c);
      return c;
    } catch (const DegenerateConfiguration&) {
    }
  }
}

std::pair<Cycle3, Cycle3> random_disjoint_cycles(std::mt19937_64& rng) {
  auto cycle = [&] {
    std::vector<Point3> pts;
    const long n = uniform(rng, 3, 6);
    while (static_cast<long>(pts.size()) < n) {
      Point3 p(uniform(rng, -20, 20), uniform(rng, -20, 20), uniform(rng, -20, 20));
      if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
    }
    return pts;
  };
  for (;;) {
    auto a = cycle();
    auto b = cycle();
    if (a.front() == a.back() || b.front() == b.back()) continue;
    Cycle3 ca(std::move(a));
    Cycle3 cb(std::move(b));
    if (cycles_disjoint(ca, cb)) return {std::move(ca), std::move(cb)};
  }
}

Point2 random_point_off_image(const Drawing& d, std::mt19937_64& rng) {
  for (;;) {
    const Point2 p(Rational(uniform(rng, -400, 400), 3), Rational(uniform(rng, -400, 400), 7));
    bool off = true;
    for (const auto& line : d.edge_lines()) off = off && !find_segment_containing(line, p);
    if (off) return p;
  }
}

}  // namespace wulab
