#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "paraplan/cli.hpp"
#include "paraplan/io.hpp"

using namespace paraplan;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "paraplan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("paraplan_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

const char* kGeneric = R"({"d": 2, "n": 2, "obstacles": [[0, 0], [1, 0]],
  "start": [[0.3, 0.7], [2.1, -0.4]], "goal": [[-0.6, 0.2], [1.4, 1.3]]})";

}  // namespace

TEST_F(CliTest, PlanWritesCsvAndPrintsRegion) {
  const fs::path in = write("q.json", kGeneric);
  const fs::path out = dir_ / "traj.csv";
  const Result r = run({"plan", in.string(), "--samples", "101", "-o", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "i=4 j=4 ell=8\n");

  const io::CsvTable table = io::parse_csv(slurp(out));
  ASSERT_EQ(table.rows.size(), 101u);
  EXPECT_EQ(table.columns, (std::vector<std::string>{"t", "o1_0", "o1_1", "o2_0", "o2_1", "x1_0", "x1_1", "x2_0",
                                                     "x2_1"}));
  const QueryPair q = io::read_instance(in.string());
  const auto& first = table.rows.front();
  const auto& last = table.rows.back();
  EXPECT_EQ(first[0], 0.0);
  EXPECT_EQ(last[0], 1.0);
  std::size_t col = 1;
  for (std::size_t k = 0; k < q.start.point_count(); ++k) {
    for (std::size_t c = 0; c < 2; ++c, ++col) {
      EXPECT_NEAR(first[col], q.start.point(k)[c], 1e-9);
      EXPECT_NEAR(last[col], q.goal.point(k)[c], 1e-9);
    }
  }
  for (const auto& row : table.rows) {
    for (std::size_t c = 1; c <= 4; ++c) EXPECT_EQ(row[c], first[c]);
  }
}

TEST_F(CliTest, PlanJsonFormat) {
  const fs::path in = write("q.json", kGeneric);
  const fs::path out = dir_ / "traj.json";
  ASSERT_EQ(run({"plan", in.string(), "--samples", "7", "--format", "json", "-o", out.string()}).code, 0);
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["rows"].size(), 7u);
  EXPECT_EQ(j["region"]["ell"], 8);
  EXPECT_EQ(j["columns"].size(), 9u);
}

TEST_F(CliTest, PlanValidationErrors) {
  const fs::path odd = write("odd.json", R"({"d": 3, "n": 1, "obstacles": [[0,0,0],[1,0,0]],
    "start": [[2,0,0]], "goal": [[3,0,0]]})");
  Result r = run({"plan", odd.string(), "-o", (dir_ / "x.csv").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("OddDimension"), std::string::npos);

  const fs::path mism = write("mism.json", R"({"d": 2, "n": 1, "start_obstacles": [[0,0],[1,0]],
    "goal_obstacles": [[0,0],[1,1e-6]], "start": [[2,0]], "goal": [[3,0]]})");
  r = run({"plan", mism.string(), "-o", (dir_ / "x.csv").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ObstacleMismatch"), std::string::npos);

  const fs::path coll = write("coll.json", R"({"d": 2, "n": 1, "obstacles": [[0,0],[1,0]],
    "start": [[1,0]], "goal": [[3,0]]})");
  r = run({"plan", coll.string(), "-o", (dir_ / "x.csv").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("CollidingPoints"), std::string::npos);

  const fs::path degen = write("degen.json", R"({"d": 2, "n": 1, "obstacles": [[0,0],[0,0]],
    "start": [[1,0]], "goal": [[3,0]]})");
  r = run({"plan", degen.string(), "-o", (dir_ / "x.csv").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DegenerateObstacles"), std::string::npos);
}

TEST_F(CliTest, TwoBlockFormMustMatchExactly) {
  const fs::path ok = write("ok.json", R"({"d": 2, "n": 1, "start_obstacles": [[0,0],[1,0]],
    "goal_obstacles": [[0,0],[1,0]], "start": [[2,0]], "goal": [[0,3]]})");
  const Result r = run({"classify", ok.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "i=3 j=2 ell=5\n");
}

TEST_F(CliTest, Classify) {
  const fs::path colinear = write("c.json", R"({"d": 2, "n": 2, "obstacles": [[0,0],[1,0]],
    "start": [[2,0],[3,0]], "goal": [[-1,0],[-2,0]]})");
  Result r = run({"classify", colinear.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "i=4 j=4 ell=8\n");

  const fs::path low = write("low.json", R"({"d": 2, "n": 1, "obstacles": [[0,0],[1,0]],
    "start": [[0,1]], "goal": [[2,0]]})");
  r = run({"classify", low.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "i=2 j=3 ell=5\n");

  const fs::path broken = write("broken.json", "{not json");
  EXPECT_EQ(run({"classify", broken.string()}).code, 2);
  EXPECT_EQ(run({"classify", (dir_ / "missing.json").string()}).code, 2);
}

TEST_F(CliTest, VerifySmallRun) {
  const Result r = run({"verify", "--n", "2", "--d", "2", "--seed", "7", "--count", "40", "--samples", "200"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("failures: 0"), std::string::npos);
  EXPECT_NE(r.out.find("attainable regions: 5 (expected 5)"), std::string::npos);
}

TEST_F(CliTest, VerifyCensusSingleRobotJson) {
  const Result r =
      run({"verify", "--n", "1", "--d", "2", "--seed", "1", "--count", "20", "--samples", "100", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["census"]["attainable"], nlohmann::json::array({4, 5, 6}));
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GT(j["stats"]["min_separation"].get<double>(), 0.0);
}

TEST_F(CliTest, VerifyFlagErrors) {
  const Result r = run({"verify", "--d", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("OddDimension"), std::string::npos);
  EXPECT_EQ(run({"verify", "--n", "banana"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, RandomIsByteStable) {
  const fs::path a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(run({"random", "--n", "3", "--d", "4", "--seed", "5", "--count", "6", "-o", a.string()}).code, 0);
  ASSERT_EQ(run({"random", "--n", "3", "--d", "4", "--seed", "5", "--count", "6", "-o", b.string()}).code, 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++files;
    EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename()));
    EXPECT_NO_THROW(io::read_instance(e.path().string()));
  }
  EXPECT_EQ(files, 6u);
}

TEST_F(CliTest, RandomEdgeCases) {
  const fs::path empty = dir_ / "empty";
  ASSERT_EQ(run({"random", "--count", "0", "-o", empty.string()}).code, 0);
  EXPECT_TRUE(fs::is_directory(empty));
  EXPECT_TRUE(fs::is_empty(empty));

  const Result r = run({"random", "--n", "10", "--min-sep", "0.9", "--family", "uniform", "-o", (dir_ / "x").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos);
}

TEST_F(CliTest, RandomPlanRoundTrip) {
  const fs::path inst = dir_ / "inst";
  ASSERT_EQ(run({"random", "--n", "3", "--d", "2", "--seed", "9", "--count", "8", "-o", inst.string()}).code, 0);
  for (const auto& e : fs::directory_iterator(inst)) {
    const fs::path out = dir_ / (e.path().stem().string() + ".csv");
    ASSERT_EQ(run({"plan", e.path().string(), "--samples", "31", "-o", out.string()}).code, 0);
    const QueryPair q = io::read_instance(e.path().string());
    const io::CsvTable table = io::parse_csv(slurp(out));
    const auto& first = table.rows.front();
    const auto& last = table.rows.back();
    std::size_t col = 1;
    for (std::size_t k = 0; k < q.start.point_count(); ++k) {
      for (std::size_t c = 0; c < 2; ++c, ++col) {
        EXPECT_NEAR(first[col], q.start.point(k)[c], 1e-9);
        EXPECT_NEAR(last[col], q.goal.point(k)[c], 1e-9);
        if (k < 2) {
          for (const auto& row : table.rows) EXPECT_EQ(row[col], first[col]);
        }
      }
    }
  }
}

TEST(Io, InstanceRoundTrip) {
  Rng rng(3);
  for (const QueryPair& q : generate_queries({4, 3, 1, 20, 1.0, 1e-3, QueryFamily::Mixed})) {
    EXPECT_EQ(io::parse_instance(nlohmann::json::parse(io::instance_json(q).dump())), q);
  }
}

TEST(Io, SeventeenDigitCsv) {
  EXPECT_EQ(io::format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(io::format_real(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Io, ShapeErrors) {
  using nlohmann::json;
  EXPECT_THROW(io::parse_instance(json::parse(R"({"d": 2})")), PlanningError);
  EXPECT_THROW(io::parse_instance(json::parse(R"({"d": 2, "n": 1, "obstacles": [[0,0],[1,0]],
    "start": [[2,0,0]], "goal": [[3,0]]})")),
               PlanningError);
  EXPECT_THROW(io::parse_instance(json::parse(R"({"d": 2, "n": 2, "obstacles": [[0,0],[1,0]],
    "start": [[2,0]], "goal": [[3,0]]})")),
               PlanningError);
}
