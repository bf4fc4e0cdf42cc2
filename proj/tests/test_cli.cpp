#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polydiag/cli.hpp"
#include "polydiag/report.hpp"
#include "reference_tables.hpp"

using namespace polydiag;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "polydiag");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  explicit TempDir(const std::string& name) : path_(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Report, CountsJsonRoundTrip) {
  CountsRecord rec = formulas::closed_counts(30);
  rec.elapsed_ms = 1.25;
  const auto j = report::to_json(rec);
  EXPECT_EQ(j.at("I"), 16801);
  EXPECT_EQ(j.at("a").at("7"), 30);
  EXPECT_EQ(j.at("provenance"), "closed_form");
  const CountsRecord back = report::counts_from_json(j);
  EXPECT_TRUE(back.same_counts(rec));
  EXPECT_EQ(back.elapsed_ms, 1.25);
  EXPECT_FALSE(report::to_json(rec, false).contains("elapsed_ms"));
}

TEST(Report, CsvRows) {
  EXPECT_EQ(report::csv_header(false), "n,a2,a3,a4,a5,a6,a7,I,R");
  EXPECT_EQ(report::csv_header(true), "n,a2/n,a3/n,a4/n,a5/n,a6/n,a7/n,(I-1)/n");
  EXPECT_EQ(report::csv_row(formulas::closed_counts(30), false), "30,13800,2250,420,180,120,30,16801,21480");
  EXPECT_EQ(report::csv_row(formulas::closed_counts(60), true), "60,6251,422,63,12,0,5,6753");
  CountsRecord odd = formulas::closed_counts(8);
  odd.a[2] += 1;
  EXPECT_THROW(report::csv_row(odd, true), std::logic_error);
}

TEST(Report, TameJson) {
  const auto j = report::to_json(formulas::ak_over_n(7));
  EXPECT_EQ(j.dump(), R"({"d30":"1","d60":"4"})");
  EXPECT_EQ(report::tame_from_json(j).coefficients, formulas::ak_over_n(7).coefficients);
  const auto j2 = report::to_json(formulas::ak_over_n(2));
  EXPECT_EQ(report::tame_from_json(j2).coefficients, formulas::ak_over_n(2).coefficients);
}

TEST(Report, RelationsJson) {
  const auto j = report::to_json(relations::enumerate_minimal(12));
  std::size_t total = 0;
  for (const auto& c : j) {
    total += c.at("count").get<std::size_t>();
    EXPECT_EQ(c.at("relations").size(), c.at("count").get<std::size_t>());
  }
  EXPECT_EQ(total, 107u);
  EXPECT_EQ(j.front().at("class_label"), "R_2");
  EXPECT_EQ(j.front().at("relations").front().dump(), "[[1,0,1],[2,1,1]]");
}

TEST(Cache, HitMatchesColdRun) {
  TempDir dir("polydiag_cache_test");
  const std::string d = dir.path().string();
  const CliRun cold = run({"count", "36", "--format", "json", "--cache-dir", d});
  ASSERT_EQ(cold.code, 0) << cold.err;
  EXPECT_TRUE(std::filesystem::exists(report::CountsCache(d).path_for(36, geometry::ScanMode::slice)));
  const CliRun hit = run({"count", "36", "--format", "json", "--cache-dir", d});
  EXPECT_EQ(hit.out, cold.out);

  // A corrupt entry is recomputed.
  std::ofstream(report::CountsCache(d).path_for(36, geometry::ScanMode::slice)) << "{ nope";
  const CliRun again = run({"count", "36", "--format", "json", "--cache-dir", d, "--deterministic"});
  EXPECT_EQ(again.code, 0);
  EXPECT_EQ(report::Json::parse(again.out).at("I"), formulas::I_closed(36));
}

TEST(Cache, EnvironmentVariableSelectsDirectory) {
  TempDir dir("polydiag_cache_env_test");
  ::setenv("POLYDIAG_CACHE_DIR", dir.path().c_str(), 1);
  const CliRun r = run({"count", "18", "--format", "json"});
  ::unsetenv("POLYDIAG_CACHE_DIR");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(report::CountsCache(dir.path()).path_for(18, geometry::ScanMode::slice)));
}

TEST(Cli, CountBoth) {
  const CliRun r = run({"count", "30", "--source", "both"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("I=16801 R=21480"), std::string::npos);
  EXPECT_NE(r.out.find("match"), std::string::npos);
  const CliRun r9 = run({"count", "9", "--source", "both", "--format", "json", "--deterministic"});
  EXPECT_EQ(r9.code, 0);
  const auto j = report::Json::parse(r9.out);
  EXPECT_TRUE(j.at("match").get<bool>());
  EXPECT_EQ(j.at("geometric").at("a").at("2"), 126);
  EXPECT_EQ(j.at("geometric").at("a").at("3"), 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"count", "2"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"count", "12", "--mode", "diagonal"}).code, 1);
  EXPECT_EQ(run({"count", "12", "--jobs", "-1"}).code, 1);
  EXPECT_EQ(run({"table", "10", "5"}).code, 1);
  EXPECT_EQ(run({"verify", "3..x"}).code, 1);
  EXPECT_EQ(run({"relations", "--max-weight", "13"}).code, 1);
  EXPECT_EQ(run({"classify", "1/6", "1/6"}).code, 1);
  EXPECT_EQ(run({"classify", "1/6", "1/6", "1/6", "1/6", "1/6", "1/5"}).code, 1);
  EXPECT_EQ(run({"render", "12"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TableReproducesSmallCounts) {
  const CliRun r = run({"table", "3", "30"});
  ASSERT_EQ(r.code, 0);
  std::ostringstream want;
  want << "n,a2,a3,a4,a5,a6,a7,I,R\n";
  for (const auto& row : testdata::kSmallCounts) {
    for (std::size_t i = 0; i < row.size(); ++i) want << (i ? "," : "") << row[i];
    want << '\n';
  }
  EXPECT_EQ(r.out, want.str());
  EXPECT_EQ(run({"table", "5", "5"}).out, "n,a2,a3,a4,a5,a6,a7,I,R\n5,5,0,0,0,0,0,5,11\n");
}

TEST(Cli, TablePerSliceClosedForm) {
  const CliRun r = run({"table", "6", "420", "--multiples-of", "6", "--per-slice", "--source", "closed"});
  ASSERT_EQ(r.code, 0);
  std::ostringstream want;
  want << "n,a2/n,a3/n,a4/n,a5/n,a6/n,a7/n,(I-1)/n\n";
  for (const auto& row : testdata::kSliceCounts) {
    for (std::size_t i = 0; i < row.size(); ++i) want << (i ? "," : "") << row[i];
    want << '\n';
  }
  EXPECT_EQ(r.out, want.str());
}

TEST(Cli, Verify) {
  const CliRun small = run({"verify", "3..30"});
  EXPECT_EQ(small.code, 0) << small.out << small.err;
  EXPECT_NE(small.out.find("all checks passed for 28 values"), std::string::npos);
  const CliRun sixty = run({"verify", "60"});
  EXPECT_EQ(sixty.code, 0);
  EXPECT_NE(sixty.out.find("slice total 6753"), std::string::npos);
  EXPECT_EQ(run({"verify", "7", "--expect-empty-triples"}).code, 0);
  const CliRun six = run({"verify", "6", "--expect-empty-triples"});
  EXPECT_EQ(six.code, 2);
  EXPECT_NE(six.err.find("empty-triples"), std::string::npos);
}

TEST(Cli, NSetParsing) {
  EXPECT_EQ(cli::parse_n_set("3..6,10,4"), (std::vector<std::int64_t>{3, 4, 5, 6, 10}));
  EXPECT_THROW(cli::parse_n_set("2..5"), cli::UsageError);
  EXPECT_THROW(cli::parse_n_set("9..5"), cli::UsageError);
  EXPECT_THROW(cli::parse_n_set("5,,6"), cli::UsageError);
}

TEST(Cli, RelationsAndClassify) {
  const CliRun r = run({"relations", "--max-weight", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("107 relations"), std::string::npos);
  const CliRun j = run({"relations", "--format", "json", "--max-weight", "7"});
  EXPECT_EQ(report::Json::parse(j.out).size(), 6u);
  EXPECT_EQ(run({"classify", "1/10", "2/15", "3/10", "2/15", "1/6", "1/6"}).out, "Sporadic #1 (denominator 30)\n");
  EXPECT_EQ(run({"classify", "--interleaved", "1/10", "2/15", "2/15", "1/6", "3/10", "1/6"}).out,
            "Sporadic #1 (denominator 30)\n");
  EXPECT_EQ(run({"classify", "1/10", "1/10", "3/10", "1/6", "1/6", "1/6"}).out, "NotConcurrent\n");
}

TEST(Cli, RenderIsDeterministic) {
  TempDir dir("polydiag_render_test");
  const auto a = dir.path() / "a.svg", b = dir.path() / "b.svg";
  EXPECT_EQ(run({"render", "30", "-o", a.string()}).code, 0);
  EXPECT_EQ(run({"render", "30", "-o", b.string(), "--jobs", "3"}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("<svg"), std::string::npos);
  EXPECT_EQ(run({"render", "30", "-o", (dir.path() / "no" / "x.svg").string()}).code, 1);
}

TEST(Cli, ExportCatalogAndOutFile) {
  TempDir dir("polydiag_export_test");
  const auto p = dir.path() / "cat.csv";
  EXPECT_EQ(run({"export-catalog", "--out", p.string()}).code, 0);
  std::ostringstream direct;
  catalog::export_catalog_csv(direct);
  EXPECT_EQ(slurp(p), direct.str());
}

TEST(Cli, DeterministicOutputIsRepeatable) {
  const CliRun a = run({"table", "6", "24", "--format", "json", "--deterministic"});
  const CliRun b = run({"table", "6", "24", "--format", "json", "--deterministic", "--jobs", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed_ms"), std::string::npos);
}
