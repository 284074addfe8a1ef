#include "osbb/instance_json.hpp"

#include <map>

#include "json.hpp"

namespace osbb {

using nlohmann::json;

MilpProblem problem_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("instance JSON: ") + e.what());
  }
  try {
    MilpProblem p;
    p.name = doc.value("name", "unnamed");
    std::string sense = doc.value("sense", "min");
    if (sense != "min" && sense != "max")
      throw Error("instance JSON: sense must be 'min' or 'max'");

    std::map<std::string, int> index;
    for (const json& v : doc.at("vars")) {
      std::string name = v.at("name").get<std::string>();
      if (!index.emplace(name, p.num_vars()).second)
        throw Error("instance JSON: duplicate variable '" + name + "'");
      p.var_names.push_back(name);
      double lb = 0.0, ub = kInf;
      if (v.contains("lb")) lb = v["lb"].is_null() ? -kInf : v["lb"].get<double>();
      if (v.contains("ub")) ub = v["ub"].is_null() ? kInf : v["ub"].get<double>();
      p.lower.push_back(lb);
      p.upper.push_back(ub);
      p.integral.push_back(v.value("integral", false));
      p.objective.push_back(0.0);
    }

    const json& obj = doc.at("objective");
    if (obj.size() != p.objective.size())
      throw Error("instance JSON: objective length does not match vars");
    for (size_t i = 0; i < obj.size(); ++i) p.objective[i] = obj[i].get<double>();
    p.objective_offset = doc.value("objective_offset", 0.0);

    for (const json& r : doc.at("rows")) {
      ProblemRow row;
      std::string rs = r.at("sense").get<std::string>();
      if (rs == "<=") row.sense = RowSense::kLe;
      else if (rs == ">=") row.sense = RowSense::kGe;
      else if (rs == "=" || rs == "==") row.sense = RowSense::kEq;
      else throw Error("instance JSON: unknown row sense '" + rs + "'");
      row.rhs = r.at("rhs").get<double>();
      std::map<int, double> coefs;
      for (auto& [key, val] : r.at("coefs").items()) {
        auto it = index.find(key);
        if (it == index.end())
          throw Error("instance JSON: row references unknown variable '" + key + "'");
        if (!coefs.emplace(it->second, val.get<double>()).second)
          throw Error("instance JSON: duplicate coefficient for '" + key + "'");
      }
      row.coef.assign(coefs.begin(), coefs.end());
      p.rows.push_back(std::move(row));
    }

    if (sense == "max") {
      for (double& c : p.objective) c = -c;
      p.objective_offset = -p.objective_offset;
      p.converted_from_max = true;
    }
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw Error(std::string("instance JSON: ") + e.what());
  }
}

std::string problem_to_json(const MilpProblem& problem) {
  json doc;
  doc["name"] = problem.name;
  doc["sense"] = "min";  // problems are stored minimized
  doc["objective"] = problem.objective;
  if (problem.objective_offset != 0.0)
    doc["objective_offset"] = problem.objective_offset;
  json vars = json::array();
  for (int i = 0; i < problem.num_vars(); ++i) {
    json v;
    v["name"] = problem.var_names[i];
    v["lb"] = problem.lower[i] == -kInf ? json() : json(problem.lower[i]);
    v["ub"] = problem.upper[i] == kInf ? json() : json(problem.upper[i]);
    v["integral"] = static_cast<bool>(problem.integral[i]);
    vars.push_back(std::move(v));
  }
  doc["vars"] = std::move(vars);
  json rows = json::array();
  for (const ProblemRow& row : problem.rows) {
    json r;
    json coefs = json::object();
    for (auto [j, a] : row.coef) coefs[problem.var_names[j]] = a;
    r["coefs"] = std::move(coefs);
    r["sense"] = to_string(row.sense);
    r["rhs"] = row.rhs;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace osbb
