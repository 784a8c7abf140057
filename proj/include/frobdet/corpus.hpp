#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobdet/pipeline.hpp"

namespace frobdet {

/// Case file: `p=<prime>`, `poly=<expression>`, optional `mode=curve|hypersurface`.
struct CaseFile {
  std::string name;
  std::uint32_t p = 0;
  std::string poly;
  PipelineMode mode = PipelineMode::Auto;
};

CaseFile parse_case(std::string_view text, std::string name);
CaseFile read_case(const std::filesystem::path& path);

/// Parses, builds the hypersurface and runs the pipeline. Input errors become
/// an error report instead of an exception.
AnalysisReport run_case(const CaseFile& c, const PipelineOptions& base);

struct CorpusCase {
  std::string name;
  AnalysisReport report;
  double millis = 0;
};

struct CorpusSummary {
  std::vector<CorpusCase> cases;  // sorted by name
  std::map<std::string, int> verdict_counts;
  double max_millis = 0;
};

struct CorpusOptions {
  int jobs = 1;
  std::uint64_t seed = 0;
  int sz_trials = 16;
  /// Per-case JSON reports and summary.json go here when set.
  std::optional<std::filesystem::path> out_dir;
};

/// Every regular file in `dir` (hidden files and *.json skipped) is one case.
/// Cases run on a pool of opts.jobs threads; each case uses the seed derived
/// from (opts.seed, case name), so results do not depend on scheduling.
CorpusSummary run_corpus(const std::filesystem::path& dir, const CorpusOptions& opts);

nlohmann::json to_json(const CorpusSummary& s);

}  // namespace frobdet
