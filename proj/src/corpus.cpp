#include "frobdet/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace frobdet {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

CaseFile parse_case(std::string_view text, std::string name) {
  CaseFile c;
  c.name = std::move(name);
  bool have_p = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, c.name + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key == "p") {
      try {
        const unsigned long v = std::stoul(value);
        if (v >= PrimeField::kMaxCharacteristic) throw std::out_of_range("p");
        c.p = static_cast<std::uint32_t>(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, c.name + ":" + std::to_string(lineno) + ": bad prime '" + value + "'");
      }
      have_p = true;
    } else if (key == "poly") {
      c.poly = value;
    } else if (key == "mode") {
      c.mode = parse_mode(value);
    } else {
      throw Error(ErrorCode::ParseError, c.name + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_p || c.poly.empty()) throw Error(ErrorCode::ParseError, c.name + ": case needs p= and poly= lines");
  return c;
}

CaseFile read_case(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_case(ss.str(), path.filename().string());
}

AnalysisReport run_case(const CaseFile& c, const PipelineOptions& base) {
  try {
    const PrimeField F(c.p);
    HypersurfaceSpec h(parse_poly(c.poly, F).poly);
    PipelineOptions opts = base;
    opts.mode = c.mode;
    return analyze(h, c.poly, opts);
  } catch (const Error& e) {
    AnalysisReport r;
    r.poly = c.poly;
    r.p = c.p;
    r.mode = c.mode;
    r.seed = base.seed;
    r.stage = "input";
    r.invalid_input = true;
    r.verdict = Verdict::Error;
    r.message = e.what();
    return r;
  }
}

CorpusSummary run_corpus(const std::filesystem::path& dir, const CorpusOptions& opts) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::InvalidArgument, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.empty() || name.front() == '.' || entry.path().extension() == ".json") continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  CorpusSummary summary;
  summary.cases.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const std::string name = files[i].filename().string();
      PipelineOptions po;
      po.seed = case_seed(opts.seed, name);
      po.sz_trials = opts.sz_trials;
      const auto t0 = std::chrono::steady_clock::now();
      AnalysisReport report;
      try {
        report = run_case(read_case(files[i]), po);
      } catch (const Error& e) {
        report.seed = po.seed;
        report.stage = "input";
        report.invalid_input = true;
        report.verdict = Verdict::Error;
        report.message = e.what();
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      summary.cases[i] = {name, std::move(report), ms};
    }
  };
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const auto& v : {Verdict::Verified, Verdict::HypothesisNotMet, Verdict::Inconsistent, Verdict::Error})
    summary.verdict_counts[std::string(to_string(v))] = 0;
  for (const CorpusCase& c : summary.cases) {
    ++summary.verdict_counts[std::string(to_string(c.report.verdict))];
    summary.max_millis = std::max(summary.max_millis, c.millis);
  }

  if (opts.out_dir) {
    std::filesystem::create_directories(*opts.out_dir);
    for (const CorpusCase& c : summary.cases) {
      std::ofstream out(*opts.out_dir / (c.name + ".json"));
      out << to_json(c.report).dump(2) << '\n';
    }
    std::ofstream out(*opts.out_dir / "summary.json");
    out << to_json(summary).dump(2) << '\n';
  }
  return summary;
}

nlohmann::json to_json(const CorpusSummary& s) {
  nlohmann::json cases = nlohmann::json::array();
  for (const CorpusCase& c : s.cases)
    cases.push_back({{"name", c.name},
                     {"verdict", std::string(to_string(c.report.verdict))},
                     {"exit_code", c.report.exit_code()},
                     {"fingerprint", report_fingerprint(c.report)},
                     {"millis", c.millis}});
  return {{"total", s.cases.size()}, {"verdicts", s.verdict_counts}, {"max_millis", s.max_millis}, {"cases", cases}};
}

}  // namespace frobdet
