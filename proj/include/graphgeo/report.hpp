#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace graphgeo::cli {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

/// Result of one CLI command. Rationals are carried as `p/q` strings,
/// integers as JSON numbers.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Table> tables;
  Verdict verdict = Verdict::NotApplicable;

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// Aligned plain-text rendering with the same content as the JSON form.
std::string render_text(const Report& r);

}  // namespace graphgeo::cli
