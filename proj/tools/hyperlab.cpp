// Command-line front end. Every command prints line-oriented JSON on stdout.
// Exit codes: 0 pass or vacuous, 1 counterexample, 2 input error, 3 engine bug.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlab/hyperlab.hpp"

namespace {

using hyperlab::json;
using namespace hyperlab;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitEngineBug = 3;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Counterexample: return kExitCounterexample;
    case Verdict::EngineBug: return kExitEngineBug;
    default: return kExitPass;
  }
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

Model load(const std::string& path) {
  std::vector<std::string> warnings;
  Model m = io::load_model(path, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return m;
}

PropertyContext load_context(const std::string& path, const Model& m) {
  PropertyContext ctx;
  if (path.empty()) return ctx;
  const json j = io::read_json_file(path);
  if (j.contains("hypermap")) {
    ctx.hyper_map = io::hyper_map_from_json(j, m);
  } else {
    ctx.point_map = io::point_map_from_json(j, m);
  }
  return ctx;
}

json trace_json(const FixedPoint& fp, const Model& m) {
  json trace = json::array();
  for (std::size_t k : fp.trace) trace.push_back(io::labels(m.member(k), m));
  return trace;
}

int cmd_build(const std::string& model_path, bool lower_vietoris) {
  const Model m = load(model_path);
  const HyperTopology h = lower_vietoris ? build_lower_vietoris(m, subbase_topology(m)) : build_lvt(m);
  json out = io::hypertopology_to_json(h, m);
  out["P_O"] = io::family_labels(extract_PO(h, m), m);
  out["induced_topology"] = io::topology_to_json(induced_topology(h, m));
  out["lower_vietoris_type"] = is_lower_vietoris_type(h, m);
  emit(out);
  return kExitPass;
}

int cmd_mclosure(const std::string& model_path, bool strict) {
  const Model m = load(model_path);
  const auto conv = strict ? EmptyConvention::StrictNonempty : EmptyConvention::EmptyIsCovered;
  const ClosureTrace trace = m_closure_trace(m.gen_family(), m, conv);
  json added = json::array();
  for (const ClosureStep& s : trace.steps) {
    json w = io::cover_witness_to_json(s.witness, m);
    w["round"] = s.round;
    added.push_back(w);
  }
  emit({{"closure", io::family_labels(trace.closure, m)},
        {"convention", strict ? "strict-nonempty" : "empty-is-covered"},
        {"added", added}});
  return kExitPass;
}

int cmd_fixpoint(const std::string& model_path, const std::string& map_path) {
  const Model m = load(model_path);
  const PropertyContext ctx = load_context(map_path, m);
  const HyperMap psi = ctx.hyper_map ? *ctx.hyper_map : closure_self_map(*ctx.point_map, m);
  const HyperTopology o = build_lvt(m);
  const bool continuous = maps_continuously(o.topology, o.topology, psi.table);
  json brute = json::array();
  for (std::size_t k : brute_force_fixed_points(psi)) brute.push_back(io::labels(m.member(k), m));
  json out{{"continuous", continuous}, {"brute_force_fixed_points", brute}};
  if (auto failed = fixed_point_hypothesis_failure(m)) {
    out["failed_hypothesis"] = *failed;
  } else {
    const FixedPoint fp = find_fixed_point(psi, m);
    out["fixed_point"] = io::labels(m.member(fp.member), m);
    out["trace"] = trace_json(fp, m);
  }
  emit(out);
  if (continuous && !out.contains("failed_hypothesis") && brute.empty()) return kExitEngineBug;
  return kExitPass;
}

int cmd_check(const std::string& prop, const std::string& model_path, const std::string& map_path) {
  const Model m = load(model_path);
  const Report r = run_property(prop, m, load_context(map_path, m));
  emit(r.to_json());
  return exit_code(r.verdict);
}

ModelBounds bounds_from(unsigned max_points, std::size_t max_family, std::optional<std::uint64_t> seed,
                        std::size_t count) {
  ModelBounds b;
  b.max_points = max_points;
  b.max_family = max_family;
  if (count > 0) {
    b.mode = EnumerationMode::Random;
    b.seed = seed.value_or(0);
    b.count = count;
  }
  return b;
}

int cmd_sweep(const std::string& prop, const ModelBounds& b) {
  std::vector<std::string> ids;
  if (prop == "all") {
    for (const Property& p : registry()) ids.push_back(p.id);
  } else {
    ids.push_back(find_property(prop).id);
  }
  int code = kExitPass;
  for (const std::string& id : ids) {
    const Report r = sweep(id, b);
    emit(r.to_json());
    code = std::max(code, exit_code(r.verdict));
  }
  return code;
}

int cmd_search(const std::string& prop, const std::string& drop, const ModelBounds& b) {
  const Report r = search_counterexample(prop, b, drop.empty() ? std::nullopt : std::optional<std::string>(drop));
  emit(r.to_json());
  return exit_code(r.verdict);
}

int input_error(const std::string& kind, const std::string& what) {
  emit({{"error", kind}, {"message", what}});
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite hyperspace laboratory"};
  app.require_subcommand(1);

  std::string model_path;
  std::string map_path;
  std::string prop;
  std::string drop;
  bool lower_vietoris = false;
  bool strict = false;
  unsigned max_points = 3;
  std::size_t max_family = kMaxMembers;
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;

  auto* build = app.add_subcommand("build", "Build the hypertopology generated by the model's subbase");
  build->add_option("--model", model_path, "Model JSON file")->required();
  build->add_flag("--lower-vietoris", lower_vietoris, "Use the lower Vietoris topology of the subbase topology");

  auto* mclosure = app.add_subcommand("mclosure", "Compute the M⁻-closure of the subbase");
  mclosure->add_option("--model", model_path, "Model JSON file")->required();
  mclosure->add_flag("--strict-nonempty", strict, "Do not treat ∅ as covered");

  auto* fixpoint = app.add_subcommand("fixpoint", "Find a fixed point of a self-map of M");
  fixpoint->add_option("--model", model_path, "Model JSON file")->required();
  fixpoint->add_option("--map", map_path, "Point map or hypermap JSON file")->required();

  auto* check = app.add_subcommand("check", "Check one property on one model");
  check->add_option("--prop", prop, "Property id")->required();
  check->add_option("--model", model_path, "Model JSON file")->required();
  check->add_option("--map", map_path, "Optional point map or hypermap JSON file");

  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--max-points", max_points, "Largest ground set")->capture_default_str();
    cmd->add_option("--max-family", max_family, "Largest member family")->capture_default_str();
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--count", count, "Random model count (switches to random mode)");
  };

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep properties over enumerated models");
  sweep_cmd->add_option("--prop", prop, "Property id or 'all'")->required();
  add_bounds(sweep_cmd);

  auto* search = app.add_subcommand("search", "Search for a counterexample, optionally dropping a hypothesis");
  search->add_option("--prop", prop, "Property id")->required();
  search->add_option("--drop-hypothesis", drop, "Name of the hypothesis to drop");
  add_bounds(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*build) return cmd_build(model_path, lower_vietoris);
    if (*mclosure) return cmd_mclosure(model_path, strict);
    if (*fixpoint) return cmd_fixpoint(model_path, map_path);
    if (*check) return cmd_check(prop, model_path, map_path);
    const ModelBounds b = bounds_from(max_points, max_family, seed, count);
    if (*sweep_cmd) return cmd_sweep(prop, b);
    if (*search) return cmd_search(prop, drop, b);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EngineBug) {
      emit({{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
      return kExitEngineBug;
    }
    return input_error(std::string(to_string(e.kind())), e.what());
  } catch (const json::exception& e) {
    return input_error("InvalidInput", e.what());
  }
  return kExitInput;
}
