#pragma once

// Instance, trajectory and report serialization.
//
// Instance JSON:
//   {"d": 2, "n": 2,
//    "obstacles": [[o1...], [o2...]],
//    "start": [[x1...], ...], "goal": [[x1'...], ...]}
// A two-block form with "start_obstacles"/"goal_obstacles" in place of
// "obstacles" is also read; the blocks must agree bit for bit.
//
// Trajectory CSV: header t,o1_0..o1_{d-1},o2_0..,x1_0..,...,xn_{d-1}, then one
// row per sample, every number printed with 17 significant digits.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "paraplan/configspace.hpp"
#include "paraplan/error.hpp"
#include "paraplan/planner.hpp"
#include "paraplan/verifier.hpp"

namespace paraplan::io {

using nlohmann::json;

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline Point parse_point(const json& j, std::size_t d, const std::string& what) {
  if (!j.is_array()) throw PlanningError(ErrorKind::ParseError, what + " is not an array");
  if (j.size() != d) {
    throw PlanningError(ErrorKind::DimensionMismatch,
                        what + " has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(d));
  }
  Point p(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (!j[k].is_number()) throw PlanningError(ErrorKind::ParseError, what + " has a non-numeric coordinate");
    p[k] = j[k].get<double>();
  }
  return p;
}

inline std::vector<Point> parse_block(const json& j, std::size_t rows, std::size_t d, const std::string& what) {
  if (!j.is_array()) throw PlanningError(ErrorKind::ParseError, what + " is not an array");
  if (j.size() != rows) {
    throw PlanningError(ErrorKind::ParseError,
                        what + " has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  }
  std::vector<Point> out;
  for (std::size_t r = 0; r < rows; ++r) out.push_back(parse_point(j[r], d, what + "[" + std::to_string(r) + "]"));
  return out;
}

inline std::size_t parse_count(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
    throw PlanningError(ErrorKind::ParseError, std::string("missing or invalid \"") + key + "\"");
  }
  return j[key].get<std::size_t>();
}

inline json point_json(const Point& p) {
  json a = json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

}  // namespace detail

/// Parses and validates an instance. Throws PlanningError on malformed
/// input or when the query is not a valid fibered pair.
inline QueryPair parse_instance(const json& j) {
  if (!j.is_object()) throw PlanningError(ErrorKind::ParseError, "instance must be a JSON object");
  const std::size_t d = detail::parse_count(j, "d");
  const std::size_t n = detail::parse_count(j, "n");
  if (n < 1) throw PlanningError(ErrorKind::InvalidArgument, "need at least one robot");
  std::vector<Point> start_obs, goal_obs;
  if (j.contains("obstacles")) {
    start_obs = goal_obs = detail::parse_block(j["obstacles"], 2, d, "obstacles");
  } else if (j.contains("start_obstacles") && j.contains("goal_obstacles")) {
    start_obs = detail::parse_block(j["start_obstacles"], 2, d, "start_obstacles");
    goal_obs = detail::parse_block(j["goal_obstacles"], 2, d, "goal_obstacles");
  } else {
    throw PlanningError(ErrorKind::ParseError, "missing \"obstacles\"");
  }
  if (!j.contains("start") || !j.contains("goal")) throw PlanningError(ErrorKind::ParseError, "missing start or goal");
  QueryPair q{Configuration(start_obs[0], start_obs[1], detail::parse_block(j["start"], n, d, "start")),
              Configuration(goal_obs[0], goal_obs[1], detail::parse_block(j["goal"], n, d, "goal"))};
  validate_query_pair(q);
  return q;
}

inline QueryPair read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PlanningError(ErrorKind::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PlanningError(ErrorKind::ParseError, path + ": " + e.what());
  }
  return parse_instance(j);
}

inline json instance_json(const QueryPair& q) {
  json j;
  j["d"] = q.start.dim();
  j["n"] = q.start.robot_count();
  j["obstacles"] = json::array({detail::point_json(q.start.o1()), detail::point_json(q.start.o2())});
  json s = json::array(), g = json::array();
  for (std::size_t r = 0; r < q.start.robot_count(); ++r) {
    s.push_back(detail::point_json(q.start.robot(r)));
    g.push_back(detail::point_json(q.goal.robot(r)));
  }
  j["start"] = std::move(s);
  j["goal"] = std::move(g);
  return j;
}

inline std::vector<std::string> trajectory_columns(std::size_t d, std::size_t n) {
  std::vector<std::string> cols{"t"};
  for (std::size_t k = 0; k < n + 2; ++k) {
    const std::string base = point_label(k);
    for (std::size_t c = 0; c < d; ++c) cols.push_back(base + "_" + std::to_string(c));
  }
  return cols;
}

inline std::vector<double> trajectory_row(const Sample& s) {
  std::vector<double> row{s.t};
  for (const Point& p : s.configuration.points()) row.insert(row.end(), p.coords().begin(), p.coords().end());
  return row;
}

inline std::string trajectory_csv(const std::vector<Sample>& samples, std::size_t d, std::size_t n) {
  std::ostringstream os;
  const auto cols = trajectory_columns(d, n);
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << '\n';
  for (const Sample& s : samples) {
    const auto row = trajectory_row(s);
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_real(row[c]);
    os << '\n';
  }
  return os.str();
}

inline json region_json(const RegionIndex& r) { return json{{"i", r.i}, {"j", r.j}, {"ell", r.ell}}; }

inline json trajectory_json(const std::vector<Sample>& samples, std::size_t d, std::size_t n,
                            const std::optional<RegionIndex>& region) {
  json j;
  j["d"] = d;
  j["n"] = n;
  if (region) j["region"] = region_json(*region);
  j["columns"] = trajectory_columns(d, n);
  json rows = json::array();
  for (const Sample& s : samples) rows.push_back(trajectory_row(s));
  j["rows"] = std::move(rows);
  return j;
}

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

inline CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) out.push_back(cell);
    return out;
  };
  if (!std::getline(in, line)) throw PlanningError(ErrorKind::ParseError, "empty trajectory");
  table.columns = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const std::string& cell : split(line)) row.push_back(std::stod(cell));
    if (row.size() != table.columns.size()) throw PlanningError(ErrorKind::ParseError, "ragged trajectory row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline json histogram_json(const std::map<std::size_t, std::size_t>& h) {
  json j = json::object();
  for (const auto& [ell, c] : h) j[std::to_string(ell)] = c;
  return j;
}

inline json report_json(const VerificationReport& rep) {
  json j;
  j["instances"] = rep.instances;
  j["passed"] = rep.passed();
  json failures = json::array();
  for (const Failure& f : rep.failures) {
    failures.push_back({{"instance", f.instance},
                        {"property", f.property},
                        {"t", f.witness.t},
                        {"detail", f.witness.detail},
                        {"witness", instance_json(f.witness.query)}});
  }
  j["failures"] = std::move(failures);
  json stats;
  stats["min_separation"] = std::isfinite(rep.min_separation) ? json(rep.min_separation) : json(nullptr);
  stats["continuity_constant"] = rep.continuity_constant ? json(*rep.continuity_constant) : json(nullptr);
  stats["region_histogram"] = histogram_json(rep.region_histogram);
  j["stats"] = std::move(stats);
  return j;
}

}  // namespace paraplan::io
