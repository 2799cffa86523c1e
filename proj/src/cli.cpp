#include "wulab/cli.hpp"

#include "wulab/json_io.hpp"
#include "wulab/service.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace wulab {

using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string pt(const Json& p) {
  if (p.is_null()) return "-";
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].get<std::string>();
  return s + ")";
}

std::string joined(const Json& arr, const char* sep) {
  std::string s;
  for (const auto& x : arr) s += (s.empty() ? "" : sep) + x.get<std::string>();
  return s;
}

void print_validate(const Json& j, std::ostream& out) {
  const Json& ae = j["almost_embedding"];
  out << "almost embedding: " << yes(ae["almost_embedding"].get<bool>()) << "\n";
  for (const auto& v : ae["violations"]) {
    const std::string kind = v["kind"];
    if (kind == "edges_intersect") {
      const Json& w = v["witness"];
      out << "  edges " << joined(v["edges"], " and ") << " intersect "
          << (w.contains("point") ? "at " + pt(w["point"])
                                  : "along " + pt(w["segment"][0]) + " - " + pt(w["segment"][1]))
          << "\n";
    } else if (kind == "vertex_on_edge") {
      out << "  vertex " << v["vertex"].get<std::string>() << " lies on edge " << v["edge"].get<std::string>()
          << " at " << pt(v["witness"]) << "\n";
    } else {
      out << "  vertices " << joined(v["vertices"], " and ") << " coincide at " << pt(v["witness"]) << "\n";
    }
  }
  const Json& gp = j["general_position"];
  out << "general position: " << yes(gp["general_position"].get<bool>()) << "\n";
  for (const auto& i : gp["issues"]) {
    out << "  " << i["kind"].get<std::string>();
    if (!i["edges"].empty()) out << " edges " << joined(i["edges"], ", ");
    if (!i["vertices"].empty()) out << " vertices " << joined(i["vertices"], ", ");
    out << " at " << pt(i["witness"]) << "\n";
  }
  out << "crossings: " << gp["crossings"].size() << "\n";
  for (const auto& c : gp["crossings"]) out << "  " << joined(c["edges"], " x ") << " at " << pt(c["at"]) << "\n";
}

void print_invariants(const Json& j, std::ostream& out) {
  const Json& p = j["profile"];
  out << "cycles: " << p["cycles"].size() << (p["truncated"].get<bool>() ? " (truncated)" : "") << "\n";
  for (const auto& e : p["entries"]) {
    out << "  w_f(" << e["cycle"].get<std::string>() << "," << e["vertex"].get<std::string>()
        << ") = " << e["winding"].get<long>() << "\n";
  }
  if (!j["wu"].empty()) out << "wu numbers:\n";
  for (const auto& [k, v] : j["wu"].items()) out << "  " << k << " = " << v.get<long>() << "\n";
  const Json& t = j["theorems"];
  out << "family: " << t["family"].get<std::string>() << ", almost embedding: " << yes(t["almost_embedding"].get<bool>())
      << "\n";
  for (const auto& s : t["statements"]) {
    out << "  " << s["id"].get<std::string>() << " " << (s["pass"].get<bool>() ? "pass" : "fail") << ": "
        << s["quantity"].get<std::string>() << " = " << s["value"].get<long>() << " (expected "
        << s["expected"].get<std::string>() << ")\n";
  }
  if (!t["note"].get<std::string>().empty()) out << "note: " << t["note"].get<std::string>() << "\n";
}

void print_check(const Json& j, std::ostream& out) {
  out << "check " << j["check"].get<std::string>() << ": " << j["passed"].get<std::size_t>() << "/"
      << j["cases"].get<std::size_t>() << " passed (" << j["fixtures"].get<std::size_t>() << " fixtures, "
      << j["trials"].get<std::size_t>() << " random, seed " << j["seed"].get<std::uint64_t>() << ")\n";
  for (const auto& f : j["failures"]) {
    out << "  case " << f["case"].get<std::size_t>() << ": " << f["detail"].get<std::string>() << "\n";
  }
  for (const auto& [k, v] : j["observations"].items()) out << "  observed " << k << ": " << v.get<std::string>() << "\n";
}

void print_explore(const Json& j, std::ostream& out) {
  out << "explore " << j["graph"].get<std::string>() << ": " << j["attempts"].get<std::size_t>() << " attempts, "
      << j["accepted"].get<std::size_t>() << " moves accepted, " << j["distinct_profiles"].get<std::size_t>()
      << " distinct profiles\n";
  std::size_t k = 0;
  for (const auto& p : j["profiles"]) {
    out << "  profile " << ++k << ":";
    for (const auto& e : p["entries"]) {
      if (e["winding"].get<long>() == 0) continue;
      out << " w_f(" << e["cycle"].get<std::string>() << "," << e["vertex"].get<std::string>()
          << ")=" << e["winding"].get<long>();
    }
    out << "\n";
  }
}

void print_lk3(const Json& j, std::ostream& out) {
  for (const auto& s : j["splittings"]) {
    out << s["splitting"].get<std::string>() << "  lk = " << s["linking"].get<long>() << "\n";
  }
  out << "linked pair exists: " << yes(j["linked_pair_exists"].get<bool>()) << "\n";
  out << "odd pairs: " << j["odd_pairs"].get<std::size_t>() << "\n";
}

std::uint64_t default_seed() {
  const char* env = std::getenv("WU_LAB_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::logic_error&) {
  }
  throw UsageError("WU_LAB_SEED must be a non-negative integer");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact winding numbers, almost embeddings and Wu invariants of graph drawings"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string file;
  std::vector<std::string> cycles;
  std::size_t cap = kDefaultCycleCap;
  std::string name;
  std::optional<long> n;
  std::optional<long> n1, n2, n3, n4;
  std::string out_path;
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
  std::size_t budget = 200;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string cors = "*";

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", json, "machine-readable output"); };

  auto* validate = app.add_subcommand("validate", "almost-embedding and general-position reports");
  validate->add_option("drawing", file, "drawing JSON file")->required();
  json_flag(validate);

  auto* invariants = app.add_subcommand("invariants", "invariant profile, Wu numbers, theorem checks");
  invariants->add_option("drawing", file, "drawing JSON file")->required();
  invariants->add_option("--cycles", cycles, "cycles such as 123 or \"1 2' 3 3'\"");
  invariants->add_option("--cap", cap, "maximum number of enumerated cycles");
  json_flag(invariants);

  auto* gen = app.add_subcommand("generate", "drawing from a construction family or a base drawing");
  gen->add_option("family", name, "family or base drawing name")->required();
  gen->add_option("--n", n, "parameter of one-parameter families");
  gen->add_option("--n1", n1);
  gen->add_option("--n2", n2);
  gen->add_option("--n3", n3);
  gen->add_option("--n4", n4);
  gen->add_option("--out", out_path, "write the drawing to this file");
  json_flag(gen);

  auto* check = app.add_subcommand("check", "fixture and randomized property runs");
  check->add_option("statement", name, "one of " + [] {
    std::string s;
    for (const auto& c : check_names()) s += (s.empty() ? "" : ", ") + c;
    return s;
  }())->required();
  check->add_option("--trials", trials, "random cases");
  check->add_option("--seed", seed, "seed (default WU_LAB_SEED or 0)");
  json_flag(check);

  auto* explore = app.add_subcommand("explore", "random finger-move walks recording invariant profiles");
  explore->add_option("graph", name, "cube, octahedron, k4 or k5m45")->required();
  explore->add_option("--budget", budget, "number of attempted moves");
  explore->add_option("--seed", seed, "seed (default WU_LAB_SEED or 0)");
  explore->add_option("--cap", cap, "maximum number of enumerated cycles");
  json_flag(explore);

  auto* lk3 = app.add_subcommand("lk3", "linking numbers of the ten triangle pairs of six points");
  lk3->add_option("config", file, "six-point JSON file")->required();
  json_flag(lk3);

  auto* serve_cmd = app.add_subcommand("serve", "HTTP API");
  serve_cmd->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--cors-origin", cors, "allowed CORS origin");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const Json& j, void (*human)(const Json&, std::ostream&)) {
    if (json) {
      out << j.dump(2) << "\n";
    } else {
      human(j, out);
    }
  };

  try {
    if (validate->parsed()) {
      const Json j = Service::validate(io::drawing_from_json(read_json_file(file)));
      emit(j, print_validate);
      return j["almost_embedding"]["almost_embedding"].get<bool>() ? 0 : 1;
    }
    if (invariants->parsed()) {
      const Drawing d = io::drawing_from_json(read_json_file(file));
      std::optional<std::vector<Cycle>> cs;
      if (!cycles.empty()) {
        cs.emplace();
        for (const auto& c : cycles) cs->push_back(parse_cycle(d.graph(), c));
      }
      const Json j = Json{{"profile", io::to_json(d, invariant_profile(d, cs, cap))},
                          {"wu", io::wu_to_json(applicable_wu_numbers(d))},
                          {"theorems", io::to_json(check_theorems(d))}};
      emit(j, print_invariants);
      return 0;
    }
    if (gen->parsed()) {
      Drawing d = [&] {
        const auto bases = base_drawing_names();
        if (std::find(bases.begin(), bases.end(), name) != bases.end()) return base_drawing(name);
        ExampleSpec spec{name, {}};
        const std::size_t arity = family_arity(name);
        if (arity == 1) {
          if (!n) throw UsageError(name + " needs --n");
          spec.params = {*n};
        } else if (arity == 4) {
          if (!n1 || !n2 || !n3 || !n4) throw UsageError(name + " needs --n1 --n2 --n3 --n4");
          spec.params = {*n1, *n2, *n3, *n4};
        }
        return generate(spec);
      }();
      const std::string text = io::drawing_to_json(d).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << text;
        if (json) {
          out << Json{{"family", name}, {"out", out_path}}.dump(2) << "\n";
        } else {
          out << "wrote " << out_path << "\n";
        }
      }
      return 0;
    }
    if (check->parsed()) {
      const auto names = check_names();
      if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown check '" + name + "'");
      const CheckReport r = run_check(name, trials, seed ? *seed : default_seed());
      emit(io::to_json(r), print_check);
      return r.pass() ? 0 : 1;
    }
    if (explore->parsed()) {
      const ExplorationResult r = explore_profiles(name, budget, seed ? *seed : default_seed(), cap);
      emit(io::to_json(r), print_explore);
      return 0;
    }
    if (lk3->parsed()) {
      const CgsReport r = cgs_report(io::six_config_from_json(read_json_file(file)));
      emit(io::to_json(r), print_lk3);
      return r.linked_pair_exists ? 0 : 1;
    }
    if (serve_cmd->parsed()) {
      Service service;
      err << "serving on http://" << host << ":" << port << "\n";
      return serve(service, host, port, cors) == 0 ? 0 : 2;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const io::SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    if (json) out << io::error_to_json(e).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wulab
