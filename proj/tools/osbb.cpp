// Command-line front end: solve one instance or run a strategy-comparison
// batch that emits performance-profile data.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "osbb/compare.hpp"
#include "osbb/instance_json.hpp"
#include "osbb/mps.hpp"
#include "osbb/oracle.hpp"
#include "osbb/random_instance.hpp"
#include "osbb/search.hpp"

namespace {

using namespace osbb;

constexpr int kExitOptimal = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitLimit = 3;
constexpr int kExitDivergence = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw Error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

MilpProblem load_instance(const std::string& path) {
  std::string text = slurp(path);
  std::filesystem::path p(path);
  if (p.extension() == ".json") return problem_from_json(text);
  if (p.extension() == ".mps") return parse_mps(text);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return problem_from_json(text);
  return parse_mps(text);
}

// Shared solver-flag grammar, used verbatim by `solve` and by the
// per-configuration flag strings of `compare`.
struct SolverFlags {
  std::string strategy = "pseudodual";
  std::string max_dive_depth = "unlimited";
  std::string trim = "on";
  std::string bounding = "1";
  int split_threshold = 64;
  std::string dive_direction = "round";
  double time_limit = 0.0;  // 0 = none
  unsigned seed = 0;

  SolveConfig to_config() const {
    SolveConfig cfg;
    if (!strategy_from_string(strategy, &cfg.strategy))
      throw Error("unknown strategy '" + strategy + "'");
    if (max_dive_depth != "unlimited") {
      int depth = 0;
      try {
        depth = std::stoi(max_dive_depth);
      } catch (...) {
        throw Error("bad --max-dive-depth '" + max_dive_depth + "'");
      }
      if (depth < 0) throw Error("--max-dive-depth must be >= 0");
      cfg.max_dive_depth = depth;
    }
    if (trim == "on") cfg.trim = true;
    else if (trim == "off") cfg.trim = false;
    else throw Error("--trim expects on or off");
    if (bounding == "off") cfg.bounding = BoundingMethod::kOff;
    else if (bounding == "1") cfg.bounding = BoundingMethod::kReducedCostStep;
    else if (bounding == "2") cfg.bounding = BoundingMethod::kDualEvaluation;
    else if (bounding == "3") cfg.bounding = BoundingMethod::kResolve;
    else throw Error("--bounding expects off, 1, 2 or 3");
    if (split_threshold < 1) throw Error("--split-threshold must be >= 1");
    cfg.split_threshold = split_threshold;
    if (dive_direction == "round") cfg.dive_direction = DiveDirection::kRound;
    else if (dive_direction == "up") cfg.dive_direction = DiveDirection::kUp;
    else if (dive_direction == "down") cfg.dive_direction = DiveDirection::kDown;
    else throw Error("--dive-direction expects round, up or down");
    if (time_limit > 0.0) cfg.time_limit_sec = time_limit;
    cfg.seed = seed;
    return cfg;
  }
};

void add_solver_flags(CLI::App* app, SolverFlags* flags) {
  app->add_option("--strategy", flags->strategy,
                  "offshoot variable selection: bottom, top, pseudo, pseudodual")
      ->default_str("pseudodual");
  app->add_option("--max-dive-depth", flags->max_dive_depth,
                  "bound changes per dive; 0 degenerates to plain "
                  "branch-and-bound (default unlimited)");
  app->add_option("--trim", flags->trim, "trim dives: on or off")->default_str("on");
  app->add_option("--bounding", flags->bounding,
                  "top-bound strengthening after top branches: off, 1, 2, 3")
      ->default_str("1");
  app->add_option("--split-threshold", flags->split_threshold,
                  "split dives reaching twice this length")
      ->default_val(64);
  app->add_option("--dive-direction", flags->dive_direction,
                  "branch direction in dives: round, up, down")
      ->default_str("round");
  app->add_option("--time-limit", flags->time_limit, "wall-time limit in seconds");
  app->add_option("--seed", flags->seed, "seed recorded in run fingerprints");
}

SolveConfig config_from_flag_string(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  SolverFlags flags;
  for (size_t i = 0; i < tokens.size(); i += 2) {
    if (i + 1 >= tokens.size())
      throw Error("flag '" + tokens[i] + "' is missing a value");
    const std::string& key = tokens[i];
    const std::string& val = tokens[i + 1];
    if (key == "--strategy") flags.strategy = val;
    else if (key == "--max-dive-depth") flags.max_dive_depth = val;
    else if (key == "--trim") flags.trim = val;
    else if (key == "--bounding") flags.bounding = val;
    else if (key == "--split-threshold") flags.split_threshold = std::stoi(val);
    else if (key == "--dive-direction") flags.dive_direction = val;
    else if (key == "--time-limit") flags.time_limit = std::stod(val);
    else if (key == "--seed") flags.seed = static_cast<unsigned>(std::stoul(val));
    else throw Error("unknown flag '" + key + "' in config string");
  }
  return flags.to_config();
}

int run_solve(const std::string& path, const SolverFlags& flags,
              const std::string& trace_path, const std::string& record_path) {
  MilpProblem problem = load_instance(path);
  SolveConfig cfg = flags.to_config();

  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path);
    if (!trace.good()) throw Error("cannot write trace '" + trace_path + "'");
    cfg.event_sink = [&trace](const SearchEvent& e) {
      trace << event_to_json(e) << "\n";
    };
  }

  Search search(problem, cfg);
  SolveResult res = search.run();

  std::cout << "instance:      " << problem.name << "\n";
  std::cout << "status:        " << to_string(res.status) << "\n";
  if (res.incumbent_node >= 0) {
    std::cout << "objective:     " << res.objective << "\n";
    if (problem.converted_from_max)
      std::cout << "objective (original max sense): " << -res.objective << "\n";
    std::cout << "solution:     ";
    for (int i = 0; i < problem.num_vars(); ++i)
      std::cout << (i == 0 ? "" : " ") << problem.var_names[i] << "="
                << res.best_point[i];
    std::cout << "\n";
  }
  std::cout << "nodes:         " << res.stats.nodes << "\n";
  std::cout << "offshoots:     " << res.stats.offshoots << "\n";
  std::cout << "lp iterations: " << res.stats.lp_iterations << "\n";
  std::cout << "trims:         " << res.stats.trims << " (" << res.stats.trim_removed
            << " changes removed)\n";
  std::cout << "time:          " << res.stats.wall_time_sec << "s\n";

  if (!record_path.empty()) {
    RunRecord rec;
    rec.instance = problem.name;
    rec.config = config_fingerprint(cfg);
    rec.label = "solve";
    rec.status = to_string(res.status);
    rec.objective = res.incumbent_node >= 0
                        ? res.objective
                        : std::numeric_limits<double>::quiet_NaN();
    rec.nodes = res.stats.nodes;
    rec.offshoots = res.stats.offshoots;
    rec.lp_iterations = res.stats.lp_iterations;
    rec.wall_time_sec = res.stats.wall_time_sec;
    std::ofstream out(record_path);
    if (!out.good()) throw Error("cannot write record '" + record_path + "'");
    out << records_to_json({rec});
  }

  switch (res.status) {
    case SolveStatus::kOptimal: return kExitOptimal;
    case SolveStatus::kInfeasible: return kExitInfeasible;
    case SolveStatus::kLimit: return kExitLimit;
  }
  return kExitError;
}

struct GenSpec {
  int count = 0, vars = 0, rows = 0;
  std::uint64_t seed = 0;
};

GenSpec parse_gen(const std::string& text) {
  GenSpec g;
  if (std::sscanf(text.c_str(), "%d:%d:%d:%llu", &g.count, &g.vars, &g.rows,
                  reinterpret_cast<unsigned long long*>(&g.seed)) != 4)
    throw Error("--gen expects COUNT:VARS:ROWS:SEED");
  if (g.count < 1 || g.vars < 1 || g.rows < 0)
    throw Error("--gen values out of range");
  return g;
}

int run_compare_cmd(const std::vector<std::string>& paths,
                    const std::vector<std::string>& config_specs,
                    const std::vector<std::string>& gen_specs,
                    const std::string& metric_name, const std::string& out_path,
                    const std::string& records_path,
                    const std::string& replay_path, int jobs,
                    bool skip_oracle) {
  CompareMetric metric;
  if (metric_name == "time") metric = CompareMetric::kTime;
  else if (metric_name == "nodes") metric = CompareMetric::kNodes;
  else throw Error("--metric expects time or nodes");

  ProfileData profile;
  std::vector<RunRecord> records;
  int divergences = 0;
  std::vector<std::string> notes;

  if (!replay_path.empty()) {
    records = records_from_json(slurp(replay_path));
    profile = profile_from_records(records, metric);
  } else {
    std::vector<NamedConfig> configs;
    for (const std::string& spec : config_specs) {
      size_t eq = spec.find('=');
      if (eq == std::string::npos)
        throw Error("--config expects NAME=FLAGS, got '" + spec + "'");
      NamedConfig nc;
      nc.name = spec.substr(0, eq);
      nc.config = config_from_flag_string(spec.substr(eq + 1));
      configs.push_back(std::move(nc));
    }
    std::vector<MilpProblem> instances;
    for (const std::string& p : paths) instances.push_back(load_instance(p));
    for (const std::string& g : gen_specs) {
      GenSpec spec = parse_gen(g);
      for (int i = 0; i < spec.count; ++i)
        instances.push_back(generate_random(spec.seed + i, spec.vars, spec.rows));
    }
    CompareOptions opt;
    opt.metric = metric;
    opt.jobs = jobs;
    opt.oracle_check = !skip_oracle;
    CompareResult result = run_compare(instances, configs, opt);
    records = std::move(result.records);
    profile = std::move(result.profile);
    divergences = result.divergences;
    notes = std::move(result.notes);
  }

  for (const std::string& w : profile.warnings) std::cerr << "warning: " << w << "\n";
  for (const std::string& n : notes) std::cerr << "note: " << n << "\n";

  std::string csv = profile_csv(profile);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out.good()) throw Error("cannot write '" + out_path + "'");
    out << csv;
    std::cout << "profile written to " << out_path << " (" << profile.taus.size()
              << " breakpoints, " << profile.instances << " instances)\n";
  }
  std::cout << "config, solved, geometric-mean ratio\n";
  for (size_t k = 0; k < profile.labels.size(); ++k) {
    std::cout << profile.labels[k] << ", " << profile.solved[k] << "/"
              << profile.instances << ", " << profile.geometric_mean[k] << "\n";
  }

  if (!records_path.empty()) {
    std::ofstream out(records_path);
    if (!out.good()) throw Error("cannot write '" + records_path + "'");
    out << records_to_json(records);
  }
  if (divergences > 0) {
    std::cerr << "error: " << divergences << " objective divergences detected\n";
    return kExitDivergence;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"offshoot-based mixed-integer linear programming solver"};
  app.require_subcommand(1);

  // solve
  CLI::App* solve = app.add_subcommand("solve", "solve one instance (.mps or .json)");
  std::string instance_path, trace_path, record_path;
  SolverFlags flags;
  solve->add_option("instance", instance_path, "instance file")->required();
  add_solver_flags(solve, &flags);
  solve->add_option("--trace", trace_path, "write a JSONL event log (one line per LP)");
  solve->add_option("--record", record_path, "write the RunRecord JSON here");

  // compare
  CLI::App* compare =
      app.add_subcommand("compare", "run a config matrix and emit performance profiles");
  std::vector<std::string> paths, config_specs, gen_specs;
  std::string metric = "time", out_path, records_path, replay_path;
  int jobs = 1;
  bool skip_oracle = false;
  compare->add_option("instances", paths, "instance files");
  compare->add_option("--config", config_specs,
                      "NAME=FLAGS (repeat; at least two unless replaying)");
  compare->add_option("--gen", gen_specs,
                      "generate COUNT:VARS:ROWS:SEED random instances");
  compare->add_option("--metric", metric, "profile metric: time or nodes")
      ->default_str("time");
  compare->add_option("--out", out_path, "profile CSV path (default: stdout)");
  compare->add_option("--records", records_path, "write all RunRecords as JSON");
  compare->add_option("--replay", replay_path,
                      "rebuild the profile from saved records instead of solving");
  compare->add_option("--jobs", jobs, "parallel instances (each search single-threaded)")
      ->default_val(1);
  compare->add_flag("--no-oracle-check", skip_oracle,
                    "skip the embedded enumeration cross-check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(instance_path, flags, trace_path, record_path);
    return run_compare_cmd(paths, config_specs, gen_specs, metric, out_path,
                           records_path, replay_path, jobs, skip_oracle);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
