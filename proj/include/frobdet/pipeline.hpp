#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "frobdet/determinant.hpp"
#include "frobdet/splitting.hpp"

namespace frobdet {

enum class Verdict { Verified, HypothesisNotMet, Inconsistent, Error };
std::string_view to_string(Verdict v);

enum class PipelineMode { Auto, Curve, Hypersurface };
std::string_view to_string(PipelineMode m);
PipelineMode parse_mode(std::string_view text);

/// Curve iff n = 2 and d >= 3.
PipelineMode infer_mode(const HypersurfaceSpec& h);

struct PipelineOptions {
  PipelineMode mode = PipelineMode::Auto;
  int sz_trials = 16;
  std::uint64_t seed = 0;
  /// Run the skew-equivalence probe on even-size p = 3 curve matrices.
  bool skew_probe = true;
};

struct AnalysisReport {
  std::string poly;
  std::uint32_t p = 0;
  int n = 0;
  int d = 0;
  PipelineMode mode = PipelineMode::Auto;
  std::uint64_t seed = 0;

  bool smooth = false;
  bool fedder_split = false;
  bool degree_bound_ok = false;
  std::optional<int> genus;
  std::optional<bool> ordinary;
  std::optional<MatrixFp> hasse_witt;

  std::vector<int> saturation_exponents;
  /// Minimal generator degrees of the saturated, untwisted B^1 module.
  std::vector<int> untwisted_generator_degrees;
  std::optional<BettiData> betti;
  std::optional<PresentationMatrix> matrix;
  std::optional<DetCertificate> certificate;
  std::optional<bool> ulrich;
  std::optional<bool> degree_profile_ok;
  std::optional<bool> skew_witness_found;
  int expected_rank = 0;

  std::vector<std::pair<std::string, double>> timings;
  Verdict verdict = Verdict::Error;
  std::string stage;
  std::string message;
  /// Set when the input could not be parsed or validated.
  bool invalid_input = false;

  /// 0 verified, 1 invalid input, 2 singular, 3 hypothesis not met, 4 inconsistent, 5 error.
  int exit_code() const;
};

/// Degree window of the saturated untwisted module: [-1, n + 2].
inline constexpr int kWindowLo = -1;
inline int window_hi(int n) { return n + 2; }

struct ModuleData {
  GradedModule naive;
  Saturation saturated;
};

/// B^1 cokernel materialized far enough and saturated on [-1, n + 2]. For plane
/// curves the exponent search starts where H^1(O_X(k)) = 0 guarantees the
/// naive module is already saturated.
ModuleData saturated_b1(const HypersurfaceSpec& h);

AnalysisReport run_curve_pipeline(const HypersurfaceSpec& h, const std::string& poly_text,
                                  const PipelineOptions& opts = {});
AnalysisReport run_hypersurface_pipeline(const HypersurfaceSpec& h, const std::string& poly_text,
                                         const PipelineOptions& opts = {});
/// Dispatches on opts.mode (Auto uses infer_mode).
AnalysisReport analyze(const HypersurfaceSpec& h, const std::string& poly_text, const PipelineOptions& opts = {});

nlohmann::json to_json(const AnalysisReport& r, bool include_timings = true);
nlohmann::json to_json(const PresentationMatrix& P);
nlohmann::json to_json(const DetCertificate& c);
nlohmann::json to_json(const BettiData& b);

/// FNV-1a of the report without timings.
std::uint64_t report_fingerprint(const AnalysisReport& r);

enum class SearchKind { OrdinaryCurve, SplitHypersurface };
SearchKind parse_search_kind(std::string_view text);

/// Uniform coefficients on the degree-d monomials in n + 1 variables; the first
/// smooth sample passing the gate (ordinary with genus >= 1, or Fedder split).
std::optional<HypersurfaceSpec> random_search(SearchKind kind, std::uint32_t p, int d, int n, std::uint64_t seed,
                                              int budget);

/// Uniformly random form of degree d in nvars variables (possibly zero).
HomogPoly random_form(const PrimeField& F, int nvars, int d, std::mt19937_64& rng);

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 1469598103934665603ull);
std::uint64_t case_seed(std::uint64_t global_seed, std::string_view case_name);

}  // namespace frobdet
