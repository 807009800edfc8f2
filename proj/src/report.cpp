#include "graphgeo/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graphgeo::cli {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "n/a";
  }
  return "n/a";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "n/a") return Verdict::NotApplicable;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  Json tables = Json::object();
  for (const auto& t : r.tables) tables[t.name] = Json{{"columns", t.columns}, {"rows", t.rows}};
  j["tables"] = tables;
  j["verdict"] = to_string(r.verdict);
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  for (const auto& [name, t] : j.at("tables").items()) {
    Table table;
    table.name = name;
    table.columns = t.at("columns").get<std::vector<std::string>>();
    for (const auto& row : t.at("rows")) table.rows.push_back(row.get<std::vector<Json>>());
    r.tables.push_back(std::move(table));
  }
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return r;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += cell(v[i]);
    }
    return out + ")";
  }
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.command;
  for (const auto& [key, value] : r.inputs.items()) out << "  " << key << "=" << cell(value);
  out << "\n";

  std::size_t width = 0;
  for (const auto& [key, value] : r.results.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : r.results.items())
    out << "  " << key << std::string(width - key.size(), ' ') << " : " << cell(value) << "\n";

  for (const auto& t : r.tables) {
    out << "\n" << t.name << "\n";
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = t.columns[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : t.rows) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) {
        line.push_back(cell(row[c]));
        w[c] = std::max(w[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      out << " ";
      for (std::size_t c = 0; c < line.size(); ++c)
        out << " " << line[c] << std::string(w[c] - line[c].size(), ' ') << (c + 1 < line.size() ? " |" : "");
      out << "\n";
    };
    emit(t.columns);
    std::size_t rule = 1;
    for (auto x : w) rule += x + 3;
    out << "  " << std::string(rule > 3 ? rule - 3 : 0, '-') << "\n";
    for (const auto& line : cells) emit(line);
  }
  out << "\nverdict: " << to_string(r.verdict) << "\n";
  return out.str();
}

}  // namespace graphgeo::cli
