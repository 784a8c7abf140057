#include "frobdet/pipeline.hpp"

#include <algorithm>
#include <chrono>

namespace frobdet {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Error: return "error";
  }
  return "error";
}

std::string_view to_string(PipelineMode m) {
  switch (m) {
    case PipelineMode::Auto: return "auto";
    case PipelineMode::Curve: return "curve";
    case PipelineMode::Hypersurface: return "hypersurface";
  }
  return "auto";
}

PipelineMode parse_mode(std::string_view text) {
  if (text == "auto") return PipelineMode::Auto;
  if (text == "curve") return PipelineMode::Curve;
  if (text == "hypersurface") return PipelineMode::Hypersurface;
  throw Error(ErrorCode::InvalidArgument, "unknown mode '" + std::string(text) + "'");
}

PipelineMode infer_mode(const HypersurfaceSpec& h) {
  return h.is_plane_curve() && h.degree() >= 3 ? PipelineMode::Curve : PipelineMode::Hypersurface;
}

int AnalysisReport::exit_code() const {
  if (invalid_input) return 1;
  switch (verdict) {
    case Verdict::Verified: return 0;
    case Verdict::HypothesisNotMet: return smooth ? 3 : 2;
    case Verdict::Inconsistent: return 4;
    case Verdict::Error: return 5;
  }
  return 5;
}

namespace {

class StageClock {
 public:
  explicit StageClock(AnalysisReport& r) : report_(r) {}

  template <typename Fn>
  auto run(const std::string& stage, Fn&& fn) {
    report_.stage = stage;
    const auto t0 = std::chrono::steady_clock::now();
    struct Record {
      AnalysisReport& r;
      std::string stage;
      std::chrono::steady_clock::time_point t0;
      ~Record() {
        r.timings.emplace_back(stage, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
      }
    } rec{report_, stage, t0};
    return fn();
  }

 private:
  AnalysisReport& report_;
};

void finish(AnalysisReport& r, Verdict v, std::string message) {
  r.verdict = v;
  r.message = std::move(message);
}

AnalysisReport start_report(const HypersurfaceSpec& h, const std::string& text, PipelineMode mode,
                            const PipelineOptions& opts) {
  AnalysisReport r;
  r.poly = text;
  r.p = h.characteristic();
  r.n = h.ambient_dim();
  r.d = h.degree();
  r.mode = mode;
  r.seed = opts.seed;
  return r;
}

std::vector<int> generator_degrees(const GradedModule& M) {
  std::vector<int> out;
  for (const Generator& g : minimal_generators(M)) out.push_back(g.degree);
  return out;
}

// Shared tail: determinant identity. A mismatch here is reported as inconsistent.
bool verify_determinant(AnalysisReport& r, StageClock& clock, const PresentationMatrix& P, const HypersurfaceSpec& h,
                        const PipelineOptions& opts) {
  try {
    r.certificate = clock.run("determinant", [&] {
      return verify_det_power(P.entries, h.equation(), {opts.sz_trials, opts.seed});
    });
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Mismatch || e.code() == ErrorCode::DegreeIncompatible) {
      finish(r, Verdict::Inconsistent, e.what());
      return false;
    }
    throw;
  }
  return true;
}

template <typename Body>
AnalysisReport guarded(AnalysisReport r, Body&& body) {
  try {
    body(r);
  } catch (const Error& e) {
    finish(r, Verdict::Error, e.what());
  } catch (const std::exception& e) {
    finish(r, Verdict::Error, std::string("internal: ") + e.what());
  }
  return r;
}

}  // namespace

ModuleData saturated_b1(const HypersurfaceSpec& h) {
  const int n = h.ambient_dim();
  const int d = h.degree();
  const std::uint32_t p = h.characteristic();
  const int hi = window_hi(n);
  const int src_hi = hi + std::max(2, d) + 1;
  const CoordinateRing A(h.equation(), coordinate_ring_degree_for(p, src_hi));
  GradedModule naive = b1_cokernel_module(A, kWindowLo, src_hi);
  SaturationOptions so;
  so.n_cap = static_cast<int>(p) * (d + n);
  // On a plane curve H^1(O_X(k)) = 0 for k >= d - 2; on higher-dimensional
  // hypersurfaces H^1(O_X(k)) = 0 for every k.
  if (n == 2) so.saturated_from = d - 2;
  Saturation sat = saturate_with_diagnostics(naive, kWindowLo, hi, so);
  return {std::move(naive), std::move(sat)};
}

AnalysisReport run_curve_pipeline(const HypersurfaceSpec& h, const std::string& poly_text, const PipelineOptions& opts) {
  return guarded(start_report(h, poly_text, PipelineMode::Curve, opts), [&](AnalysisReport& r) {
    StageClock clock(r);
    if (!h.is_plane_curve()) throw Error(ErrorCode::NotACurve, "curve pipeline needs a plane curve (3 variables)");
    r.smooth = clock.run("smoothness", [&] { return is_smooth(h); });
    if (!r.smooth) return finish(r, Verdict::HypothesisNotMet, "curve is singular");
    r.genus = genus(h);
    if (*r.genus == 0) return finish(r, Verdict::HypothesisNotMet, "genus 0; the curve theorem needs genus >= 1");
    r.fedder_split = clock.run("fedder", [&] { return fedder_split_test(h); });
    r.degree_bound_ok = degree_bound_check(h);
    const HasseWittMatrix hw = clock.run("hasse-witt", [&] { return hasse_witt(h); });
    r.hasse_witt = hw.entries;
    r.ordinary = rank_mod(hw.entries, h.field()) == hw.entries.rows();
    if (r.fedder_split && !r.degree_bound_ok)
      return finish(r, Verdict::Inconsistent, "Frobenius split curve of degree > n + 1");
    if (!*r.ordinary) return finish(r, Verdict::HypothesisNotMet, "curve is not ordinary (Hasse-Witt matrix singular)");

    const std::uint32_t p = h.characteristic();
    r.expected_rank = static_cast<int>(p) - 1;
    const ModuleData mod = clock.run("module", [&] { return saturated_b1(h); });
    r.saturation_exponents = mod.saturated.exponents;
    const GradedModule& B = mod.saturated.module;
    r.untwisted_generator_degrees = generator_degrees(B);
    for (int a : r.untwisted_generator_degrees)
      if (a < 1)
        return finish(r, Verdict::Inconsistent, "saturated B^1 has a generator in degree " + std::to_string(a));

    const GradedModule B1 = twist(B, 1);
    const PresentationMatrix P = clock.run("presentation", [&] { return presentation(B1, h.dim()); });
    r.matrix = P;
    PresentationMatrix untwisted = P;
    for (int& a : untwisted.gen_degrees) a += 1;
    for (int& b : untwisted.rel_degrees) b += 1;
    r.betti = betti_data(untwisted, B, h.degree());
    r.ulrich = ulrich_check(P, h);
    r.degree_profile_ok = degree_profile_check(untwisted, 2);
    if (!*r.ulrich) return finish(r, Verdict::Inconsistent, "B^1(1) of an ordinary curve is not Ulrich");
    if (r.betti->regularity > h.dim())
      return finish(r, Verdict::Inconsistent, "regularity " + std::to_string(r.betti->regularity) + " exceeds dim X");

    if (!verify_determinant(r, clock, P, h, opts)) return;
    if (r.certificate->r != r.expected_rank)
      return finish(r, Verdict::Inconsistent,
                    "det M = lambda G^" + std::to_string(r.certificate->r) + ", expected rank " +
                        std::to_string(r.expected_rank));
    if (opts.skew_probe && p == 3 && P.size() % 2 == 0)
      r.skew_witness_found =
          clock.run("skew-probe", [&] { return skew_equivalence_probe(P.entries, opts.seed).has_value(); });
    r.stage = "done";
    finish(r, Verdict::Verified, "det M = " + std::to_string(r.certificate->lambda) + " * G^" +
                                     std::to_string(r.certificate->r));
  });
}

AnalysisReport run_hypersurface_pipeline(const HypersurfaceSpec& h, const std::string& poly_text,
                                         const PipelineOptions& opts) {
  return guarded(start_report(h, poly_text, PipelineMode::Hypersurface, opts), [&](AnalysisReport& r) {
    StageClock clock(r);
    r.smooth = clock.run("smoothness", [&] { return is_smooth(h); });
    if (!r.smooth) return finish(r, Verdict::HypothesisNotMet, "hypersurface is singular");
    r.fedder_split = clock.run("fedder", [&] { return fedder_split_test(h); });
    r.degree_bound_ok = degree_bound_check(h);
    if (h.is_plane_curve()) {
      r.genus = genus(h);
      if (*r.genus > 0) {
        const HasseWittMatrix hw = hasse_witt(h);
        r.hasse_witt = hw.entries;
        r.ordinary = rank_mod(hw.entries, h.field()) == hw.entries.rows();
      } else {
        r.ordinary = true;
      }
    }
    if (!r.fedder_split) return finish(r, Verdict::HypothesisNotMet, "not Frobenius split (Fedder)");
    if (!r.degree_bound_ok) return finish(r, Verdict::Inconsistent, "Frobenius split hypersurface of degree > n + 1");

    std::uint64_t rank = 1;
    for (int i = 0; i < h.dim(); ++i) rank *= h.characteristic();
    r.expected_rank = static_cast<int>(rank - 1);
    const ModuleData mod = clock.run("module", [&] { return saturated_b1(h); });
    r.saturation_exponents = mod.saturated.exponents;
    const GradedModule& B = mod.saturated.module;
    r.untwisted_generator_degrees = generator_degrees(B);
    for (int a : r.untwisted_generator_degrees)
      if (a < 1)
        return finish(r, Verdict::Inconsistent, "saturated B^1 has a generator in degree " + std::to_string(a));

    const PresentationMatrix P = clock.run("presentation", [&] { return presentation(B, h.ambient_dim()); });
    r.matrix = P;
    r.betti = betti_data(P, B, h.degree());
    r.degree_profile_ok = degree_profile_check(P, h.ambient_dim());
    if (!*r.degree_profile_ok)
      return finish(r, Verdict::Inconsistent, "entry degree outside [1, n - 1]");
    if (r.betti->regularity > h.dim())
      return finish(r, Verdict::Inconsistent, "regularity " + std::to_string(r.betti->regularity) + " exceeds dim X");
    if (!verify_determinant(r, clock, P, h, opts)) return;
    r.stage = "done";
    finish(r, Verdict::Verified, "det M = " + std::to_string(r.certificate->lambda) + " * G^" +
                                     std::to_string(r.certificate->r));
  });
}

AnalysisReport analyze(const HypersurfaceSpec& h, const std::string& poly_text, const PipelineOptions& opts) {
  const PipelineMode mode = opts.mode == PipelineMode::Auto ? infer_mode(h) : opts.mode;
  return mode == PipelineMode::Curve ? run_curve_pipeline(h, poly_text, opts)
                                     : run_hypersurface_pipeline(h, poly_text, opts);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json matrix_json(const MatrixFp& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json to_json(const PresentationMatrix& P) {
  nlohmann::json entries = nlohmann::json::array();
  for (int j = 0; j < P.entries.rows(); ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < P.entries.cols(); ++i) row.push_back(to_string(P.entries(j, i)));
    entries.push_back(std::move(row));
  }
  return {{"size", P.size()}, {"gen_degrees", P.gen_degrees}, {"rel_degrees", P.rel_degrees}, {"entries", entries}};
}

nlohmann::json to_json(const DetCertificate& c) {
  nlohmann::json profile = nlohmann::json::object();
  for (const auto& [deg, count] : c.degree_profile) profile[std::to_string(deg)] = count;
  return {{"size", c.size},
          {"r", c.r},
          {"lambda", c.lambda},
          {"method", std::string(to_string(c.method))},
          {"sz_trials", c.sz_trials},
          {"degree_profile", profile}};
}

nlohmann::json to_json(const BettiData& b) {
  nlohmann::json hilbert = nlohmann::json::object();
  for (const auto& [m, dim] : b.hilbert) hilbert[std::to_string(m)] = dim;
  return {{"gen_degrees", b.gen_degrees},
          {"rel_degrees", b.rel_degrees},
          {"regularity", b.regularity},
          {"rank", b.rank},
          {"hilbert", hilbert}};
}

nlohmann::json to_json(const AnalysisReport& r, bool include_timings) {
  nlohmann::json j;
  j["input"] = {{"poly", r.poly}, {"p", r.p}, {"n", r.n}, {"d", r.d}};
  j["mode"] = std::string(to_string(r.mode));
  j["seed"] = r.seed;
  j["smooth"] = r.smooth;
  j["fedder_split"] = r.fedder_split;
  j["degree_bound_ok"] = r.degree_bound_ok;
  j["genus"] = r.genus ? nlohmann::json(*r.genus) : nlohmann::json(nullptr);
  j["ordinary"] = r.ordinary ? nlohmann::json(*r.ordinary) : nlohmann::json(nullptr);
  j["hasse_witt"] = r.hasse_witt ? matrix_json(*r.hasse_witt) : nlohmann::json(nullptr);
  j["saturation_exponents"] = r.saturation_exponents;
  j["untwisted_generator_degrees"] = r.untwisted_generator_degrees;
  j["betti"] = r.betti ? to_json(*r.betti) : nlohmann::json(nullptr);
  j["matrix"] = r.matrix ? to_json(*r.matrix) : nlohmann::json(nullptr);
  j["certificate"] = r.certificate ? to_json(*r.certificate) : nlohmann::json(nullptr);
  j["ulrich"] = r.ulrich ? nlohmann::json(*r.ulrich) : nlohmann::json(nullptr);
  j["degree_profile_ok"] = r.degree_profile_ok ? nlohmann::json(*r.degree_profile_ok) : nlohmann::json(nullptr);
  j["skew_witness_found"] = r.skew_witness_found ? nlohmann::json(*r.skew_witness_found) : nlohmann::json(nullptr);
  j["expected_rank"] = r.expected_rank;
  j["verdict"] = std::string(to_string(r.verdict));
  j["stage"] = r.stage;
  j["message"] = r.message;
  if (include_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [stage, ms] : r.timings) t[stage] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t report_fingerprint(const AnalysisReport& r) { return fnv1a(to_json(r, false).dump()); }

std::uint64_t case_seed(std::uint64_t global_seed, std::string_view case_name) {
  return fnv1a(case_name, fnv1a(std::to_string(global_seed)));
}

// ---------------------------------------------------------------------------
// Random search

SearchKind parse_search_kind(std::string_view text) {
  if (text == "ordinary-curve") return SearchKind::OrdinaryCurve;
  if (text == "split-hypersurface") return SearchKind::SplitHypersurface;
  throw Error(ErrorCode::InvalidArgument, "unknown search kind '" + std::string(text) + "'");
}

HomogPoly random_form(const PrimeField& F, int nvars, int d, std::mt19937_64& rng) {
  HomogPoly f(F, nvars, d);
  for (const Monomial& m : monomials_of_degree(nvars, d)) {
    const auto c = static_cast<std::uint32_t>(rng() % F.characteristic());
    if (c != 0) f.add_term(m, c);
  }
  return f;
}

std::optional<HypersurfaceSpec> random_search(SearchKind kind, std::uint32_t p, int d, int n, std::uint64_t seed,
                                              int budget) {
  if (kind == SearchKind::OrdinaryCurve && n != 2)
    throw Error(ErrorCode::NotACurve, "ordinary-curve search needs n = 2");
  const PrimeField F(p);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < budget; ++t) {
    HomogPoly G = random_form(F, n + 1, d, rng);
    if (G.is_zero()) continue;
    HypersurfaceSpec h(std::move(G));
    if (!is_smooth(h)) continue;
    if (kind == SearchKind::OrdinaryCurve) {
      if (genus(h) >= 1 && is_ordinary(h)) return h;
    } else if (fedder_split_test(h)) {
      return h;
    }
  }
  return std::nullopt;
}

}  // namespace frobdet
