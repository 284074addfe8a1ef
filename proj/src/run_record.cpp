#include "osbb/run_record.hpp"

#include <cmath>

#include "json.hpp"
#include "osbb/common.hpp"

namespace osbb {

using nlohmann::json;

namespace {

json record_to_json(const RunRecord& r) {
  json j;
  j["instance"] = r.instance;
  j["config"] = r.config;
  j["label"] = r.label;
  j["status"] = r.status;
  j["objective"] = std::isnan(r.objective) ? json() : json(r.objective);
  j["nodes"] = r.nodes;
  j["offshoots"] = r.offshoots;
  j["lp_iterations"] = r.lp_iterations;
  j["wall_time_sec"] = r.wall_time_sec;
  return j;
}

RunRecord record_from_json(const json& j) {
  RunRecord r;
  r.instance = j.at("instance").get<std::string>();
  r.config = j.at("config").get<std::string>();
  r.label = j.value("label", r.config);
  r.status = j.at("status").get<std::string>();
  r.objective = j.at("objective").is_null()
                    ? std::numeric_limits<double>::quiet_NaN()
                    : j.at("objective").get<double>();
  r.nodes = j.at("nodes").get<long>();
  r.offshoots = j.at("offshoots").get<long>();
  r.lp_iterations = j.at("lp_iterations").get<long>();
  r.wall_time_sec = j.at("wall_time_sec").get<double>();
  return r;
}

}  // namespace

std::string records_to_json(const std::vector<RunRecord>& records) {
  json arr = json::array();
  for (const RunRecord& r : records) arr.push_back(record_to_json(r));
  return arr.dump(2) + "\n";
}

std::vector<RunRecord> records_from_json(const std::string& text) {
  std::vector<RunRecord> out;
  try {
    json arr = json::parse(text);
    for (const json& j : arr) out.push_back(record_from_json(j));
  } catch (const json::exception& e) {
    throw Error(std::string("run records: ") + e.what());
  }
  return out;
}

}  // namespace osbb
