#include "osbb/mps.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace osbb {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_number(const std::string& tok, int line_no) {
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError("bad numeric value '" + tok + "'", line_no);
  return value;
}

struct ColumnData {
  std::string name;
  bool integral = false;
  double obj = 0.0;
  std::map<int, double> coefs;  // row index -> value
  double lb = 0.0, ub = kInf;
  bool lb_set = false, ub_set = false;
};

}  // namespace

MilpProblem parse_mps(const std::string& text) {
  enum Section { kNone, kName, kObjsense, kRows, kColumns, kRhs, kBounds, kDone };
  Section section = kNone;

  std::string problem_name = "unnamed";
  bool maximize = false;
  std::string obj_row_name;
  std::vector<std::string> row_names;
  std::vector<RowSense> row_senses;
  std::vector<double> row_rhs;
  std::map<std::string, int> row_index;
  std::vector<ColumnData> columns;
  std::map<std::string, int> col_index;
  double obj_offset = 0.0;
  bool in_integer_block = false;
  bool saw_endata = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    if (raw[0] == '*') continue;  // comment

    bool is_section_header = raw[0] != ' ' && raw[0] != '\t';
    std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;

    if (is_section_header) {
      std::string key = tok[0];
      std::transform(key.begin(), key.end(), key.begin(), ::toupper);
      if (key == "NAME") {
        if (tok.size() > 1) problem_name = tok[1];
        section = kName;
      } else if (key == "OBJSENSE") {
        section = kObjsense;
        if (tok.size() > 1) {
          std::string s = tok[1];
          std::transform(s.begin(), s.end(), s.begin(), ::toupper);
          maximize = s.rfind("MAX", 0) == 0;
        }
      } else if (key == "ROWS") {
        section = kRows;
      } else if (key == "COLUMNS") {
        section = kColumns;
      } else if (key == "RHS") {
        section = kRhs;
      } else if (key == "RANGES") {
        throw ParseError("RANGES section is not supported", line_no);
      } else if (key == "BOUNDS") {
        section = kBounds;
      } else if (key == "ENDATA") {
        saw_endata = true;
        section = kDone;
        break;
      } else {
        throw ParseError("unknown section '" + tok[0] + "'", line_no);
      }
      continue;
    }

    switch (section) {
      case kObjsense: {
        std::string s = tok[0];
        std::transform(s.begin(), s.end(), s.begin(), ::toupper);
        maximize = s.rfind("MAX", 0) == 0;
        break;
      }
      case kRows: {
        if (tok.size() != 2) throw ParseError("ROWS entry needs a type and a name", line_no);
        std::string type = tok[0];
        std::transform(type.begin(), type.end(), type.begin(), ::toupper);
        const std::string& name = tok[1];
        if (type == "N") {
          if (!obj_row_name.empty())
            throw ParseError("second objective row '" + name + "'", line_no);
          obj_row_name = name;
          break;
        }
        RowSense sense;
        if (type == "G") sense = RowSense::kGe;
        else if (type == "L") sense = RowSense::kLe;
        else if (type == "E") sense = RowSense::kEq;
        else throw ParseError("unknown row type '" + tok[0] + "'", line_no);
        if (row_index.count(name) || name == obj_row_name)
          throw ParseError("duplicate row '" + name + "'", line_no);
        row_index[name] = static_cast<int>(row_names.size());
        row_names.push_back(name);
        row_senses.push_back(sense);
        row_rhs.push_back(0.0);
        break;
      }
      case kColumns: {
        // marker lines toggle integrality
        if (tok.size() >= 3 && tok[1].find("MARKER") != std::string::npos) {
          const std::string& kind = tok[2];
          if (kind.find("INTORG") != std::string::npos) in_integer_block = true;
          else if (kind.find("INTEND") != std::string::npos) in_integer_block = false;
          else throw ParseError("unknown marker '" + kind + "'", line_no);
          break;
        }
        if (tok.size() < 3 || tok.size() % 2 == 0)
          throw ParseError("COLUMNS entry needs name plus row/value pairs", line_no);
        const std::string& cname = tok[0];
        auto it = col_index.find(cname);
        if (it == col_index.end()) {
          it = col_index.emplace(cname, static_cast<int>(columns.size())).first;
          columns.push_back({});
          columns.back().name = cname;
          columns.back().integral = in_integer_block;
        }
        ColumnData& col = columns[it->second];
        for (size_t t = 1; t + 1 < tok.size(); t += 2) {
          const std::string& rname = tok[t];
          double value = parse_number(tok[t + 1], line_no);
          if (rname == obj_row_name) {
            col.obj = value;
            continue;
          }
          auto rit = row_index.find(rname);
          if (rit == row_index.end())
            throw ParseError("unknown row '" + rname + "' in COLUMNS", line_no);
          if (!col.coefs.emplace(rit->second, value).second)
            throw ParseError("duplicate coefficient for column '" + cname +
                                 "' in row '" + rname + "'",
                             line_no);
        }
        break;
      }
      case kRhs: {
        if (tok.size() < 3 || tok.size() % 2 == 0)
          throw ParseError("RHS entry needs set name plus row/value pairs", line_no);
        for (size_t t = 1; t + 1 < tok.size(); t += 2) {
          const std::string& rname = tok[t];
          double value = parse_number(tok[t + 1], line_no);
          if (rname == obj_row_name) {
            obj_offset = -value;  // constant term convention
            continue;
          }
          auto rit = row_index.find(rname);
          if (rit == row_index.end())
            throw ParseError("unknown row '" + rname + "' in RHS", line_no);
          row_rhs[rit->second] = value;
        }
        break;
      }
      case kBounds: {
        if (tok.size() < 3) throw ParseError("BOUNDS entry too short", line_no);
        std::string type = tok[0];
        std::transform(type.begin(), type.end(), type.begin(), ::toupper);
        const std::string& cname = tok[2];
        auto cit = col_index.find(cname);
        if (cit == col_index.end())
          throw ParseError("unknown column '" + cname + "' in BOUNDS", line_no);
        ColumnData& col = columns[cit->second];
        bool needs_value = type == "UP" || type == "LO" || type == "FX" ||
                           type == "UI" || type == "LI";
        double value = 0.0;
        if (needs_value) {
          if (tok.size() < 4) throw ParseError("BOUNDS entry missing value", line_no);
          value = parse_number(tok[3], line_no);
        }
        if (type == "UP" || type == "UI") {
          col.ub = value;
          col.ub_set = true;
          if (type == "UI") col.integral = true;
        } else if (type == "LO" || type == "LI") {
          col.lb = value;
          col.lb_set = true;
          if (type == "LI") col.integral = true;
        } else if (type == "FX") {
          col.lb = col.ub = value;
          col.lb_set = col.ub_set = true;
        } else if (type == "BV") {
          col.lb = 0.0;
          col.ub = 1.0;
          col.lb_set = col.ub_set = true;
          col.integral = true;
        } else if (type == "MI") {
          col.lb = -kInf;
          col.lb_set = true;
        } else if (type == "PL") {
          col.ub = kInf;
          col.ub_set = true;
        } else {
          throw ParseError("unknown bound type '" + tok[0] + "'", line_no);
        }
        break;
      }
      case kName:
      case kNone:
      case kDone:
        throw ParseError("data outside of any section", line_no);
    }
  }

  if (!saw_endata) throw ParseError("missing ENDATA", line_no);
  if (columns.empty()) throw ParseError("empty problem: no columns", line_no);

  MilpProblem p;
  p.name = problem_name;
  for (const ColumnData& col : columns) {
    p.var_names.push_back(col.name);
    p.objective.push_back(maximize ? -col.obj : col.obj);
    p.lower.push_back(col.lb);
    p.upper.push_back(col.ub);
    p.integral.push_back(col.integral);
  }
  p.objective_offset = maximize ? -obj_offset : obj_offset;
  p.converted_from_max = maximize;
  for (size_t r = 0; r < row_names.size(); ++r) {
    ProblemRow row;
    row.sense = row_senses[r];
    row.rhs = row_rhs[r];
    for (size_t c = 0; c < columns.size(); ++c) {
      auto it = columns[c].coefs.find(static_cast<int>(r));
      if (it != columns[c].coefs.end())
        row.coef.push_back({static_cast<int>(c), it->second});
    }
    p.rows.push_back(std::move(row));
  }
  p.validate();
  return p;
}

}  // namespace osbb
