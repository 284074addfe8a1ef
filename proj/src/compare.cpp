#include "osbb/compare.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "osbb/oracle.hpp"

namespace osbb {

std::string config_fingerprint(const SolveConfig& c) {
  std::string s = "--strategy ";
  s += to_string(c.strategy);
  s += " --max-dive-depth ";
  s += c.max_dive_depth ? std::to_string(*c.max_dive_depth) : "unlimited";
  s += " --trim ";
  s += c.trim ? "on" : "off";
  s += " --bounding ";
  s += c.bounding == BoundingMethod::kOff
           ? "off"
           : std::to_string(static_cast<int>(c.bounding));
  s += " --split-threshold " + std::to_string(c.split_threshold);
  s += " --dive-direction ";
  switch (c.dive_direction) {
    case DiveDirection::kRound: s += "round"; break;
    case DiveDirection::kUp: s += "up"; break;
    case DiveDirection::kDown: s += "down"; break;
  }
  s += " --seed " + std::to_string(c.seed);
  return s;
}

namespace {

double metric_value(const RunRecord& r, CompareMetric metric) {
  if (metric == CompareMetric::kNodes) return static_cast<double>(r.nodes);
  return std::max(r.wall_time_sec, 1e-9);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

ProfileData profile_from_records(const std::vector<RunRecord>& records,
                                 CompareMetric metric) {
  ProfileData out;
  std::map<std::string, int> label_index;
  for (const RunRecord& r : records) {
    if (label_index.emplace(r.label, static_cast<int>(out.labels.size())).second)
      out.labels.push_back(r.label);
  }
  const int nconf = static_cast<int>(out.labels.size());

  // instance -> per-config record value (inf when unsolved or missing)
  std::map<std::string, std::vector<double>> table;
  for (const RunRecord& r : records) {
    auto [it, fresh] = table.emplace(r.instance, std::vector<double>(nconf, kInf));
    (void)fresh;
    if (r.solved()) it->second[label_index[r.label]] = metric_value(r, metric);
  }

  std::vector<std::vector<double>> ratios(nconf);
  std::vector<double> log_sum(nconf, 0.0);
  int common_solved = 0;
  out.solved.assign(nconf, 0);
  for (auto& [name, vals] : table) {
    double best = *std::min_element(vals.begin(), vals.end());
    if (!std::isfinite(best)) {
      out.warnings.push_back("instance '" + name + "' excluded: no config solved it");
      continue;
    }
    ++out.instances;
    bool all = true;
    for (int k = 0; k < nconf; ++k) {
      double ratio = vals[k] / best;
      ratios[k].push_back(ratio);
      if (std::isfinite(ratio)) ++out.solved[k];
      else all = false;
    }
    if (all) {
      ++common_solved;
      for (int k = 0; k < nconf; ++k) log_sum[k] += std::log(vals[k] / best);
    }
  }

  std::set<double> taus{1.0};
  for (const auto& rs : ratios)
    for (double r : rs)
      if (std::isfinite(r)) taus.insert(r);
  out.taus.assign(taus.begin(), taus.end());

  out.rho.assign(nconf, std::vector<double>(out.taus.size(), 0.0));
  for (int k = 0; k < nconf; ++k) {
    for (size_t t = 0; t < out.taus.size(); ++t) {
      int within = 0;
      for (double r : ratios[k])
        if (r <= out.taus[t] * (1.0 + 1e-12)) ++within;
      out.rho[k][t] = out.instances > 0
                          ? static_cast<double>(within) / out.instances
                          : 0.0;
    }
  }
  out.geometric_mean.assign(nconf, 0.0);
  for (int k = 0; k < nconf; ++k)
    out.geometric_mean[k] =
        common_solved > 0 ? std::exp(log_sum[k] / common_solved) : 1.0;
  return out;
}

std::string profile_csv(const ProfileData& profile) {
  std::string csv = "tau";
  for (const std::string& label : profile.labels) csv += "," + label;
  csv += "\n";
  for (size_t t = 0; t < profile.taus.size(); ++t) {
    csv += format_double(profile.taus[t]);
    for (size_t k = 0; k < profile.labels.size(); ++k)
      csv += "," + format_double(profile.rho[k][t]);
    csv += "\n";
  }
  return csv;
}

CompareResult run_compare(const std::vector<MilpProblem>& instances,
                          const std::vector<NamedConfig>& configs,
                          const CompareOptions& options) {
  if (configs.size() < 2)
    throw ContractViolation("run_compare needs at least two configurations");
  if (instances.empty())
    throw ContractViolation("run_compare needs at least one instance");

  // deterministic output order by instance name
  std::vector<int> order(instances.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instances[a].name < instances[b].name;
  });

  std::vector<std::vector<RunRecord>> per_instance(instances.size());
  std::atomic<int> cursor{0};
  std::atomic<int> divergences{0};
  std::mutex notes_mutex;
  std::vector<std::string> notes;

  auto work = [&]() {
    for (;;) {
      int slot = cursor.fetch_add(1);
      if (slot >= static_cast<int>(order.size())) return;
      const MilpProblem& p = instances[order[slot]];
      std::vector<RunRecord>& out = per_instance[slot];

      bool have_truth = false;
      OracleResult truth;
      if (options.oracle_check && !p.has_unbounded_integer()) {
        try {
          truth = enumerate_optimum(p);
          have_truth = true;
        } catch (const ContractViolation&) {
          // instance too large to enumerate; fall back to cross-checks
        }
      }

      for (const NamedConfig& nc : configs) {
        RunRecord rec;
        rec.instance = p.name;
        rec.label = nc.name;
        rec.config = config_fingerprint(nc.config);
        try {
          Search search(p, nc.config);
          SolveResult res = search.run();
          rec.status = to_string(res.status);
          rec.objective = res.status == SolveStatus::kOptimal
                              ? res.objective
                              : std::numeric_limits<double>::quiet_NaN();
          rec.nodes = res.stats.nodes;
          rec.offshoots = res.stats.offshoots;
          rec.lp_iterations = res.stats.lp_iterations;
          rec.wall_time_sec = res.stats.wall_time_sec;
          if (have_truth && res.status == SolveStatus::kOptimal) {
            if (!truth.feasible ||
                std::fabs(res.objective - truth.objective) > 1e-6) {
              ++divergences;
              std::lock_guard<std::mutex> lock(notes_mutex);
              notes.push_back("divergence on '" + p.name + "' config '" +
                              nc.name + "'");
            }
          } else if (have_truth && res.status == SolveStatus::kInfeasible &&
                     truth.feasible) {
            ++divergences;
            std::lock_guard<std::mutex> lock(notes_mutex);
            notes.push_back("false infeasibility on '" + p.name + "' config '" +
                            nc.name + "'");
          }
        } catch (const std::exception& e) {
          rec.status = "error";
          rec.objective = std::numeric_limits<double>::quiet_NaN();
          std::lock_guard<std::mutex> lock(notes_mutex);
          notes.push_back("error on '" + p.name + "' config '" + nc.name +
                          "': " + e.what());
        }
        out.push_back(std::move(rec));
      }

      // configs must agree with each other even when enumeration is not an
      // option (too many assignments)
      const RunRecord* reference = nullptr;
      for (const RunRecord& r : out) {
        if (!r.solved()) continue;
        if (!reference) {
          reference = &r;
          continue;
        }
        bool both_optimal = r.status == "optimal" && reference->status == "optimal";
        bool agree = r.status == reference->status &&
                     (!both_optimal ||
                      std::fabs(r.objective - reference->objective) <= 1e-6);
        if (!agree) {
          ++divergences;
          std::lock_guard<std::mutex> lock(notes_mutex);
          notes.push_back("divergence on '" + p.name + "': config '" +
                          reference->label + "' vs '" + r.label + "'");
        }
      }
    }
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  CompareResult result;
  for (auto& bundle : per_instance)
    for (RunRecord& r : bundle) result.records.push_back(std::move(r));
  result.profile = profile_from_records(result.records, options.metric);
  result.divergences = divergences.load();
  result.notes = std::move(notes);
  return result;
}

}  // namespace osbb
