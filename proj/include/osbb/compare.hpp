#pragma once

#include "osbb/run_record.hpp"
#include "osbb/search.hpp"

namespace osbb {

enum class CompareMetric : std::uint8_t { kTime, kNodes };

struct NamedConfig {
  std::string name;
  SolveConfig config;
};

// Canonical flag string used as the RunRecord config fingerprint.
std::string config_fingerprint(const SolveConfig& config);

// Performance profile: for each config, the fraction of instances whose
// ratio to the per-instance best stays within tau, sampled at every
// breakpoint ratio.
struct ProfileData {
  std::vector<std::string> labels;
  std::vector<double> taus;
  std::vector<std::vector<double>> rho;      // [config][tau point]
  std::vector<double> geometric_mean;        // over commonly solved instances
  std::vector<int> solved;                   // per config
  int instances = 0;                         // instances entering the profile
  std::vector<std::string> warnings;         // excluded instances etc.
};

ProfileData profile_from_records(const std::vector<RunRecord>& records,
                                 CompareMetric metric);

// CSV with header "tau,<config>,..." and one row per breakpoint. Byte-stable
// for identical inputs.
std::string profile_csv(const ProfileData& profile);

struct CompareOptions {
  CompareMetric metric = CompareMetric::kTime;
  int jobs = 1;
  bool oracle_check = true;  // cross-check objectives against enumeration
};

struct CompareResult {
  std::vector<RunRecord> records;
  ProfileData profile;
  int divergences = 0;  // objective disagreements (solver vs solver or oracle)
  std::vector<std::string> notes;
};

// Runs every config on every instance (instances in parallel when jobs > 1;
// each search stays single-threaded) and assembles the profile. Output order
// is deterministic by instance name.
CompareResult run_compare(const std::vector<MilpProblem>& instances,
                          const std::vector<NamedConfig>& configs,
                          const CompareOptions& options = {});

}  // namespace osbb
