#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "frobdet/corpus.hpp"
#include "test_util.hpp"

using namespace frobdet;
using testutil::poly;
namespace fs = std::filesystem;

namespace {

AnalysisReport run(const std::string& text, std::uint32_t p, PipelineMode mode = PipelineMode::Auto) {
  PipelineOptions opts;
  opts.mode = mode;
  return analyze(HypersurfaceSpec(poly(text, p)), text, opts);
}

/// Fresh scratch directory under the build tree's temp area.
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("frobdet_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

int run_cli(const std::string& args) {
  const int status = std::system((std::string(FROBDET_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(CurvePipeline, OrdinaryCubicOverF2) {
  const AnalysisReport r = run("y^2*z+x*y*z+x^3+z^3", 2);
  EXPECT_EQ(r.verdict, Verdict::Verified) << r.message;
  EXPECT_EQ(r.mode, PipelineMode::Curve);
  ASSERT_TRUE(r.matrix && r.certificate && r.betti);
  EXPECT_EQ(r.matrix->size(), 3);
  EXPECT_EQ(r.certificate->r, 1);
  EXPECT_EQ(r.betti->gen_degrees, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(r.betti->rank, r.expected_rank);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(CurvePipeline, HesseCubicOverF3) {
  const AnalysisReport r = run("x^3+y^3+z^3+2*x*y*z", 3);
  ASSERT_EQ(r.verdict, Verdict::Verified) << r.message;
  EXPECT_EQ(r.matrix->size(), 6);
  EXPECT_EQ(r.certificate->r, 2);
  EXPECT_EQ(r.certificate->lambda, 2u);
  EXPECT_TRUE(r.ulrich.value_or(false));
  ASSERT_TRUE(r.skew_witness_found.has_value());
  EXPECT_TRUE(*r.skew_witness_found);
}

TEST(CurvePipeline, SupersingularFermatIsRejected) {
  const AnalysisReport r = run("x^3+y^3+z^3", 5);
  EXPECT_EQ(r.verdict, Verdict::HypothesisNotMet);
  EXPECT_EQ(r.ordinary, std::optional<bool>(false));
  EXPECT_FALSE(r.matrix.has_value());
  EXPECT_EQ(r.exit_code(), 3);
}

TEST(CurvePipeline, SingularInput) {
  const AnalysisReport r = run("x^3+y^3+z^3+x*y*z", 2);
  EXPECT_EQ(r.verdict, Verdict::HypothesisNotMet);
  EXPECT_FALSE(r.smooth);
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(CurvePipeline, QuarticUsesSaturatedModule) {
  const AnalysisReport r = run("x^4+x^3*z+x^2*y^2+x*y^3+x*y^2*z+x*y*z^2+y^4+y^2*z^2+y*z^3", 2);
  ASSERT_EQ(r.verdict, Verdict::Verified) << r.message;
  EXPECT_EQ(r.matrix->size(), 4);
  ASSERT_TRUE(r.betti.has_value());
  EXPECT_EQ(r.betti->hilbert.at(1), 4);
}

TEST(HypersurfacePipeline, ConicInAutoMode) {
  const AnalysisReport r = run("x^2+y^2+x*z", 3);
  EXPECT_EQ(r.mode, PipelineMode::Hypersurface);
  ASSERT_EQ(r.verdict, Verdict::Verified) << r.message;
  EXPECT_EQ(r.matrix->size(), 4);
  EXPECT_EQ(r.certificate->r, 2);
}

TEST(HypersurfacePipeline, SplitCubicSurface) {
  const auto h = random_search(SearchKind::SplitHypersurface, 2, 3, 3, 5, 400);
  ASSERT_TRUE(h.has_value());
  const std::string text = to_string(h->equation());
  const AnalysisReport r = analyze(*h, text);
  ASSERT_EQ(r.verdict, Verdict::Verified) << text << ": " << r.message;
  EXPECT_EQ(r.matrix->size(), 6);
  EXPECT_EQ(r.certificate->r, 3);
  EXPECT_TRUE(r.degree_profile_ok.value_or(false));
  EXPECT_LE(r.betti->regularity, 2);
}

TEST(HypersurfacePipeline, NonSplitReportsHypothesis) {
  const AnalysisReport r = run("x^3+y^3+z^3+w^3", 2);
  EXPECT_TRUE(r.smooth);
  EXPECT_FALSE(r.fedder_split);
  EXPECT_EQ(r.verdict, Verdict::HypothesisNotMet);
}

TEST(Report, JsonShapeAndDeterminism) {
  const AnalysisReport a = run("x^3+y^3+z^3+2*x*y*z", 3);
  const AnalysisReport b = run("x^3+y^3+z^3+2*x*y*z", 3);
  EXPECT_EQ(report_fingerprint(a), report_fingerprint(b));
  const nlohmann::json j = to_json(a);
  for (const char* key : {"input", "mode", "smooth", "fedder_split", "saturation_exponents", "betti", "matrix",
                          "certificate", "verdict", "timings_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["verdict"], "verified");
  EXPECT_FALSE(to_json(a, false).contains("timings_ms"));
}

TEST(Report, MatrixJsonRoundTrip) {
  const AnalysisReport r = run("y^2*z+x*y*z+x^3+z^3", 2);
  ASSERT_TRUE(r.matrix.has_value());
  const nlohmann::json j = to_json(*r.matrix);
  const PrimeField F(2);
  PolyMatrix M(F, 3, 3, 3);
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c) {
      const std::string text = j["entries"][a][c];
      M(a, c) = parse_poly(text, F, 3, true).poly;
      EXPECT_EQ(M(a, c), r.matrix->entries(a, c));
    }
  EXPECT_NO_THROW(verify_det_power(M, poly("y^2*z+x*y*z+x^3+z^3", 2)));
}

TEST(Search, BudgetAndKinds) {
  EXPECT_FALSE(random_search(SearchKind::OrdinaryCurve, 2, 3, 2, 1, 0).has_value());
  const auto h = random_search(SearchKind::OrdinaryCurve, 3, 3, 2, 1, 200);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(is_smooth(*h));
  EXPECT_TRUE(is_ordinary(*h));
  EXPECT_EQ(parse_search_kind("split-hypersurface"), SearchKind::SplitHypersurface);
  EXPECT_THROW(parse_search_kind("other"), Error);
}

TEST(Corpus, ParseCase) {
  const CaseFile c = parse_case("# comment\np = 3\npoly = x^3+y^3+z^3+2*x*y*z\nmode=curve\n", "a");
  EXPECT_EQ(c.p, 3u);
  EXPECT_EQ(c.poly, "x^3+y^3+z^3+2*x*y*z");
  EXPECT_EQ(c.mode, PipelineMode::Curve);
  EXPECT_THROW(parse_case("p=3\nfoo=1\n", "b"), Error);
  EXPECT_THROW(parse_case("p=abc\npoly=x\n", "c"), Error);
}

TEST(Corpus, InvalidCaseBecomesReport) {
  CaseFile c;
  c.name = "bad";
  c.p = 5;
  c.poly = "x^3+y^2";
  const AnalysisReport r = run_case(c, {});
  EXPECT_EQ(r.verdict, Verdict::Error);
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Corpus, EmptyDirectory) {
  const fs::path dir = scratch("empty");
  const CorpusSummary s = run_corpus(dir, {});
  EXPECT_TRUE(s.cases.empty());
  EXPECT_EQ(s.verdict_counts.size(), 4u);
  for (const auto& [k, v] : s.verdict_counts) EXPECT_EQ(v, 0) << k;
  fs::remove_all(dir);
}

TEST(Corpus, MixedCasesAndDeterminism) {
  const fs::path dir = scratch("mixed");
  write_file(dir / "a_hesse", "p=3\npoly=x^3+y^3+z^3+2*x*y*z\n");
  write_file(dir / "b_copy", "p=3\npoly=x^3+y^3+z^3+2*x*y*z\n");
  write_file(dir / "c_fermat", "p=5\npoly=x^3+y^3+z^3\n");
  write_file(dir / "d_bad", "p=5\npoly=x^3+y^2\n");
  write_file(dir / ".hidden", "p=5\npoly=x\n");
  write_file(dir / "old.json", "{}");

  CorpusOptions one;
  one.seed = 9;
  const CorpusSummary s1 = run_corpus(dir, one);
  ASSERT_EQ(s1.cases.size(), 4u);
  EXPECT_EQ(s1.cases[0].name, "a_hesse");
  EXPECT_EQ(s1.verdict_counts.at("verified"), 2);
  EXPECT_EQ(s1.verdict_counts.at("hypothesis-not-met"), 1);
  EXPECT_EQ(s1.verdict_counts.at("error"), 1);
  // Identical content, different case names: the reports differ only through the seed.
  AnalysisReport a = s1.cases[0].report;
  AnalysisReport b = s1.cases[1].report;
  a.seed = b.seed = 0;
  EXPECT_EQ(to_json(a, false)["matrix"], to_json(b, false)["matrix"]);

  CorpusOptions four = one;
  four.jobs = 4;
  four.out_dir = dir / "out";
  const CorpusSummary s4 = run_corpus(dir, four);
  ASSERT_EQ(s4.cases.size(), s1.cases.size());
  for (std::size_t i = 0; i < s1.cases.size(); ++i)
    EXPECT_EQ(report_fingerprint(s1.cases[i].report), report_fingerprint(s4.cases[i].report)) << s1.cases[i].name;
  EXPECT_TRUE(fs::exists(dir / "out" / "summary.json"));
  EXPECT_TRUE(fs::exists(dir / "out" / "a_hesse.json"));
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("analyze --p 3 --poly 'x^3+y^3+z^3+2*x*y*z'"), 0);
  EXPECT_EQ(run_cli("analyze --p 5 --poly 'x^3+y^2'"), 1);
  EXPECT_EQ(run_cli("analyze --p 2 --poly 'x^3+y^3+z^3+x*y*z'"), 2);
  EXPECT_EQ(run_cli("analyze --p 5 --poly 'x^3+y^3+z^3'"), 3);
  EXPECT_EQ(run_cli("fedder --p 7 --poly 'x^3+y^3+z^3'"), 0);
}

TEST(Cli, VerifyMatrixFile) {
  const fs::path dir = scratch("cli");
  write_file(dir / "good.json", R"([["x","y"],["y","z"]])");
  write_file(dir / "bad.json", R"([["x","y"],["y","x+z"]])");
  EXPECT_EQ(run_cli("verify --p 5 --poly 'x*z-y^2' --matrix " + (dir / "good.json").string()), 0);
  EXPECT_EQ(run_cli("verify --p 5 --poly 'x*z-y^2' --matrix " + (dir / "bad.json").string()), 4);
  fs::remove_all(dir);
}
