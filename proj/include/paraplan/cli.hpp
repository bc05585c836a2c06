#pragma once

// Command-line front end: plan, classify, verify, random.
// Exit codes: 0 success, 1 property failure, 2 usage or validation error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paraplan/io.hpp"
#include "paraplan/paraplan.hpp"

namespace paraplan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

struct PlanArgs {
  std::string input;
  std::string output;
  std::size_t samples = 101;
  double proj_tol = kDefaultProjectionTol;
  std::string format = "csv";
};

struct ClassifyArgs {
  std::string input;
  double proj_tol = kDefaultProjectionTol;
};

struct VerifyArgs {
  std::size_t n = 2;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::size_t samples = 1000;
  double proj_tol = kDefaultProjectionTol;
  double min_sep = 1e-3;
  std::string format = "text";
  std::string output;
};

struct RandomArgs {
  std::size_t n = 2;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  double min_sep = 1e-3;
  double scale = 1.0;
  std::string family = "mixed";
  std::string output_dir;
};

inline std::string region_line(const RegionIndex& r) {
  return "i=" + std::to_string(r.i) + " j=" + std::to_string(r.j) + " ell=" + std::to_string(r.ell);
}

inline QueryFamily parse_family(const std::string& name) {
  static const std::map<std::string, QueryFamily> kFamilies{{"mixed", QueryFamily::Mixed},
                                                            {"uniform", QueryFamily::Uniform},
                                                            {"colinear", QueryFamily::Colinear},
                                                            {"swap", QueryFamily::Swap},
                                                            {"clustered", QueryFamily::Clustered}};
  const auto it = kFamilies.find(name);
  if (it == kFamilies.end()) throw PlanningError(ErrorKind::InvalidArgument, "unknown family " + name);
  return it->second;
}

inline int cmd_plan(const PlanArgs& a, std::ostream& out) {
  const QueryPair q = io::read_instance(a.input);
  const PlannedPath path = plan(q, a.proj_tol);
  const auto samples = sample(path, a.samples);
  std::ofstream file(a.output, std::ios::binary);
  if (!file) throw PlanningError(ErrorKind::InvalidArgument, "cannot write " + a.output);
  if (a.format == "json") {
    file << io::trajectory_json(samples, q.start.dim(), q.start.robot_count(), path.region()).dump(2) << '\n';
  } else {
    file << io::trajectory_csv(samples, q.start.dim(), q.start.robot_count());
  }
  out << region_line(*path.region()) << '\n';
  return kExitOk;
}

inline int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const QueryPair q = io::read_instance(a.input);
  out << region_line(classify(q, a.proj_tol)) << '\n';
  return kExitOk;
}

/// Everything the verify subcommand measures, for printing either way.
struct VerifySummary {
  VerificationReport report;
  RegionCensus census;
  BaselineComparison baseline;
};

inline VerifySummary run_verification(const VerifyArgs& a) {
  InstanceSpec spec{a.d, a.n, a.seed, a.count, 1.0, a.min_sep, QueryFamily::Mixed};
  validate_spec(spec);
  VerifyOptions opt;
  opt.samples = a.samples;
  opt.proj_tol = a.proj_tol;

  VerifySummary s;
  const auto queries = generate_queries(spec);
  s.report = verify_queries(queries, opt);

  s.census = verify_region_census(a.n, a.d, spec, true, a.proj_tol);
  if (!s.census.complete()) {
    s.report.failures.push_back({0, "region-census", {QueryPair{}, 0.0, "attainable labels differ from 4..2n+4"}});
  }

  InstanceSpec clustered = spec;
  clustered.family = QueryFamily::Clustered;
  s.report.merge(verify_semicontinuity(clustered, a.proj_tol / 100.0, a.proj_tol));

  const std::vector<QueryPair> probes(queries.begin(), queries.begin() + std::min<std::size_t>(queries.size(), 20));
  VerificationReport cont = verify_continuity(probes, {1e-6, 1e-7, 1e-8}, a.seed, a.samples, a.proj_tol);
  cont.instances = 0;  // already counted by the planner checks
  s.report.merge(cont);

  if (a.n >= 2) {
    Rng rng(a.seed);
    std::vector<QueryPair> swaps;
    for (std::size_t k = 0; k < std::min<std::size_t>(a.count, 100); ++k) swaps.push_back(swap_colinear_query(rng, a.d, a.n));
    s.baseline = compare_baseline(swaps, opt.separation_floor, a.proj_tol);
  }
  return s;
}

inline void print_summary(const VerifySummary& s, std::ostream& out) {
  const VerificationReport& r = s.report;
  out << "instances: " << r.instances << '\n';
  out << "failures: " << r.failures.size() << '\n';
  out << "min separation: " << io::format_real(r.min_separation) << '\n';
  if (r.continuity_constant) out << "continuity constant K: " << io::format_real(*r.continuity_constant) << '\n';
  out << "region histogram:";
  for (const auto& [ell, c] : r.region_histogram) out << ' ' << ell << ':' << c;
  out << '\n';
  const auto attained = s.census.attainable();
  out << "attainable regions: " << attained.size() << " (expected " << 2 * s.census.n + 1 << ") {";
  bool first = true;
  for (std::size_t ell : attained) {
    out << (first ? "" : ",") << ell;
    first = false;
  }
  out << "}\n";
  if (s.baseline.queries > 0) {
    out << "baseline swap queries: " << s.baseline.queries << ", straight-line collisions "
        << s.baseline.baseline_collisions << ", planner collisions " << s.baseline.plan_collisions << '\n';
  }
  for (const Failure& f : r.failures) {
    out << "FAIL instance " << f.instance << ' ' << f.property << " t=" << io::format_real(f.witness.t) << ": "
        << f.witness.detail << '\n';
  }
}

inline nlohmann::json summary_json(const VerifySummary& s) {
  nlohmann::json j = io::report_json(s.report);
  const std::set<std::size_t> labels = s.census.attainable();
  const std::vector<std::size_t> attained(labels.begin(), labels.end());
  j["census"] = {{"n", s.census.n},
                 {"expected_regions", 2 * s.census.n + 1},
                 {"attainable", attained},
                 {"histogram", io::histogram_json(s.census.histogram)},
                 {"complete", s.census.complete()}};
  j["baseline"] = {{"queries", s.baseline.queries},
                   {"straight_line_collisions", s.baseline.baseline_collisions},
                   {"planner_collisions", s.baseline.plan_collisions}};
  return j;
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const VerifySummary s = run_verification(a);
  if (a.format == "json") {
    const std::string text = summary_json(s).dump(2) + "\n";
    if (a.output.empty()) {
      out << text;
    } else {
      std::ofstream(a.output, std::ios::binary) << text;
      print_summary(s, out);
    }
  } else {
    print_summary(s, out);
  }
  return s.report.passed() ? kExitOk : kExitPropertyFailure;
}

inline int cmd_random(const RandomArgs& a, std::ostream& out) {
  InstanceSpec spec{a.d, a.n, a.seed, a.count, a.scale, a.min_sep, parse_family(a.family)};
  const auto queries = generate_queries(spec);
  std::filesystem::create_directories(a.output_dir);
  for (std::size_t k = 0; k < queries.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "instance_%04zu.json", k);
    std::ofstream file(std::filesystem::path(a.output_dir) / name, std::ios::binary);
    file << io::instance_json(queries[k]).dump(2) << '\n';
  }
  out << "wrote " << queries.size() << " instances to " << a.output_dir << '\n';
  return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Parametrised collision-free motion planning for n robots and two point obstacles"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "plan a path for an instance file and write the sampled trajectory");
  plan_cmd->add_option("input", plan_args.input, "instance JSON")->required();
  plan_cmd->add_option("-o,--output", plan_args.output, "trajectory file")->required();
  plan_cmd->add_option("--samples", plan_args.samples, "number of samples (>= 2)")->capture_default_str();
  plan_cmd->add_option("--proj-tol", plan_args.proj_tol, "projection equality tolerance")->capture_default_str();
  plan_cmd->add_option("--format", plan_args.format, "trajectory format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "print the region index of an instance");
  classify_cmd->add_option("input", classify_args.input, "instance JSON")->required();
  classify_cmd->add_option("--proj-tol", classify_args.proj_tol, "projection equality tolerance")
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the property checks on seeded random instances");
  verify_cmd->add_option("--n", verify_args.n, "robots")->capture_default_str();
  verify_cmd->add_option("--d", verify_args.d, "workspace dimension (even)")->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--count", verify_args.count, "query pairs")->capture_default_str();
  verify_cmd->add_option("--samples", verify_args.samples, "samples per path")->capture_default_str();
  verify_cmd->add_option("--proj-tol", verify_args.proj_tol, "projection equality tolerance")->capture_default_str();
  verify_cmd->add_option("--min-sep", verify_args.min_sep, "generation-time minimum separation")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify_args.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify_cmd->add_option("-o,--output", verify_args.output, "write the JSON report here instead of stdout");

  RandomArgs random_args;
  auto* random_cmd = app.add_subcommand("random", "write seeded random instance files");
  random_cmd->add_option("--n", random_args.n, "robots")->capture_default_str();
  random_cmd->add_option("--d", random_args.d, "workspace dimension (even)")->capture_default_str();
  random_cmd->add_option("--seed", random_args.seed, "random seed")->capture_default_str();
  random_cmd->add_option("--count", random_args.count, "number of instances")->capture_default_str();
  random_cmd->add_option("--min-sep", random_args.min_sep, "minimum separation")->capture_default_str();
  random_cmd->add_option("--scale", random_args.scale, "half-width of the sampling box")->capture_default_str();
  random_cmd->add_option("--family", random_args.family, "mixed, uniform, colinear, swap or clustered")
      ->capture_default_str();
  random_cmd->add_option("-o,--output", random_args.output_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*plan_cmd) return cmd_plan(plan_args, out);
    if (*classify_cmd) return cmd_classify(classify_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*random_cmd) return cmd_random(random_args, out);
  } catch (const PlanningError& e) {
    err << e.name() << '\n' << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace paraplan::cli
