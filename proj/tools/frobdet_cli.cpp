// frobdet: determinantal representations of hypersurfaces via B^1.
//
// Exit codes: 0 verified, 1 invalid input, 2 singular input,
// 3 hypothesis not met, 4 inconsistent, 5 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobdet/corpus.hpp"

using namespace frobdet;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitNotMet = 3;
constexpr int kExitInconsistent = 4;
constexpr int kExitInternal = 5;

struct InputFlags {
  unsigned p = 0;
  std::string poly;
  std::string poly_file;
  int nvars = 0;
  std::string json_path;
  std::uint64_t seed = 0;
  int sz_trials = 16;
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--p", f.p, "prime characteristic")->required();
  auto* poly = cmd->add_option("--poly", f.poly, "homogeneous polynomial");
  auto* file = cmd->add_option("--poly-file", f.poly_file, "file containing the polynomial");
  poly->excludes(file);
  cmd->add_option("--nvars", f.nvars, "number of variables (default: inferred, at least 3)");
  cmd->add_option("--json", f.json_path, "write a JSON report to this path");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string poly_text(const InputFlags& f) {
  if (!f.poly.empty()) return f.poly;
  if (f.poly_file.empty()) throw Error(ErrorCode::InvalidArgument, "one of --poly or --poly-file is required");
  std::string t = read_text(f.poly_file);
  while (!t.empty() && (t.back() == '\n' || t.back() == '\r' || t.back() == ' ')) t.pop_back();
  return t;
}

HypersurfaceSpec load(const InputFlags& f) {
  const PrimeField F(f.p);
  return HypersurfaceSpec(parse_poly(poly_text(f), F, f.nvars).poly);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::ZeroModP:
    case ErrorCode::VarMismatch:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::NotACurve:
    case ErrorCode::GenusZero:
    case ErrorCode::NotSquare:
      return true;
    default:
      return false;
  }
}

std::string matrix_text(const MatrixFp& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

void print_report(const AnalysisReport& r) {
  std::cout << "mode: " << to_string(r.mode) << "  p=" << r.p << " n=" << r.n << " d=" << r.d << '\n';
  std::cout << "smooth: " << r.smooth << "  fedder split: " << r.fedder_split
            << "  degree bound: " << r.degree_bound_ok << '\n';
  if (r.ordinary) std::cout << "ordinary: " << *r.ordinary << '\n';
  if (r.betti) {
    std::cout << "generator degrees:";
    for (int a : r.betti->gen_degrees) std::cout << ' ' << a;
    std::cout << "\nrelation degrees:";
    for (int b : r.betti->rel_degrees) std::cout << ' ' << b;
    std::cout << "\nregularity: " << r.betti->regularity << "  rank: " << r.betti->rank << '\n';
  }
  if (r.certificate)
    std::cout << "det M = " << r.certificate->lambda << " * G^" << r.certificate->r << "  (size "
              << r.certificate->size << ", " << to_string(r.certificate->method) << ", " << r.certificate->sz_trials
              << " SZ trials)\n";
  if (r.skew_witness_found) std::cout << "skew witness: " << (*r.skew_witness_found ? "found" : "none") << '\n';
  std::cout << "verdict: " << to_string(r.verdict) << " (" << r.stage << ")";
  if (!r.message.empty()) std::cout << ": " << r.message;
  std::cout << '\n';
}

PolyMatrix read_matrix(const std::string& path, const HomogPoly& G) {
  const nlohmann::json j = nlohmann::json::parse(read_text(path));
  const nlohmann::json& rows = j.is_object() ? (j.contains("matrix") ? j.at("matrix").at("entries") : j.at("entries")) : j;
  if (!rows.is_array() || rows.empty()) throw Error(ErrorCode::InvalidArgument, "matrix file has no entries");
  const int s = static_cast<int>(rows.size());
  PolyMatrix M(G.field(), G.nvars(), s, s);
  for (int i = 0; i < s; ++i) {
    if (!rows[static_cast<std::size_t>(i)].is_array() || static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != s)
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " does not have " + std::to_string(s) + " entries");
    for (int c = 0; c < s; ++c)
      M(i, c) = parse_poly(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].get<std::string>(), G.field(),
                           G.nvars(), true)
                    .poly;
  }
  return M;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal representations of hypersurfaces over finite fields"};
  app.require_subcommand(1);

  InputFlags in;
  std::string mode = "auto";
  auto* analyze_cmd = app.add_subcommand("analyze", "run the curve or hypersurface pipeline");
  add_input_flags(analyze_cmd, in);
  analyze_cmd->add_option("--mode", mode, "auto | curve | hypersurface");
  analyze_cmd->add_option("--seed", in.seed, "random seed");
  analyze_cmd->add_option("--sz-trials", in.sz_trials, "Schwartz-Zippel trials");

  auto* fedder_cmd = app.add_subcommand("fedder", "Fedder splitting test");
  add_input_flags(fedder_cmd, in);

  auto* hw_cmd = app.add_subcommand("hasse-witt", "Hasse-Witt matrix and ordinarity of a plane curve");
  add_input_flags(hw_cmd, in);

  int twist_by = 0;
  int max_degree = INT_MIN;
  auto* resolve_cmd = app.add_subcommand("resolve", "saturated B^1 module, presentation and Betti data");
  add_input_flags(resolve_cmd, in);
  resolve_cmd->add_option("--twist", twist_by, "twist of the module before resolving");
  resolve_cmd->add_option("--max-degree", max_degree, "largest relation degree (default n - twist)");

  std::string matrix_path;
  auto* verify_cmd = app.add_subcommand("verify", "check det M = lambda G^r for a matrix file");
  add_input_flags(verify_cmd, in);
  verify_cmd->add_option("--matrix", matrix_path, "JSON matrix: array of rows of polynomial strings")->required();
  verify_cmd->add_option("--seed", in.seed, "random seed");
  verify_cmd->add_option("--sz-trials", in.sz_trials, "Schwartz-Zippel trials");

  std::string kind = "ordinary-curve";
  int sd = 3, sn = 2, budget = 500;
  auto* search_cmd = app.add_subcommand("search", "random search for a smooth ordinary curve or split hypersurface");
  search_cmd->add_option("--kind", kind, "ordinary-curve | split-hypersurface");
  search_cmd->add_option("--p", in.p, "prime characteristic")->required();
  search_cmd->add_option("--d", sd, "degree");
  search_cmd->add_option("--n", sn, "ambient dimension");
  search_cmd->add_option("--seed", in.seed, "random seed");
  search_cmd->add_option("--budget", budget, "number of samples");
  search_cmd->add_option("--json", in.json_path, "write the result as JSON");

  std::string corpus_dir, out_dir;
  int jobs = 1;
  auto* corpus_cmd = app.add_subcommand("corpus", "batch runs");
  corpus_cmd->require_subcommand(1);
  auto* corpus_run = corpus_cmd->add_subcommand("run", "run every case file in a directory");
  corpus_run->add_option("dir", corpus_dir, "directory of case files")->required();
  corpus_run->add_option("--jobs", jobs, "worker threads");
  corpus_run->add_option("--seed", in.seed, "global seed");
  corpus_run->add_option("--sz-trials", in.sz_trials, "Schwartz-Zippel trials");
  corpus_run->add_option("--out", out_dir, "directory for per-case reports and summary.json");
  corpus_run->add_option("--json", in.json_path, "write the summary to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      const HypersurfaceSpec h = load(in);
      PipelineOptions opts;
      opts.mode = parse_mode(mode);
      opts.seed = in.seed;
      opts.sz_trials = in.sz_trials;
      const AnalysisReport r = analyze(h, poly_text(in), opts);
      print_report(r);
      write_json(in.json_path, to_json(r));
      return r.exit_code();
    }
    if (*fedder_cmd) {
      const HypersurfaceSpec h = load(in);
      const bool split = fedder_split_test(h);
      const bool bound = degree_bound_check(h);
      std::cout << "fedder split: " << split << "\ndegree bound (d <= n+1): " << bound << '\n';
      write_json(in.json_path, {{"fedder_split", split}, {"degree_bound_ok", bound}});
      if (split && !bound) return kExitInconsistent;
      return split ? 0 : kExitNotMet;
    }
    if (*hw_cmd) {
      const HypersurfaceSpec h = load(in);
      const HasseWittMatrix hw = hasse_witt(h);
      const bool ordinary = rank_mod(hw.entries, h.field()) == hw.entries.rows();
      nlohmann::json basis = nlohmann::json::array();
      for (const Monomial& m : hw.basis) basis.push_back(m.to_string());
      nlohmann::json rows = nlohmann::json::array();
      for (Index i = 0; i < hw.entries.rows(); ++i) {
        std::vector<std::int64_t> row(hw.entries.row(i).data(), hw.entries.row(i).data() + hw.entries.cols());
        rows.push_back(row);
      }
      std::cout << "basis:";
      for (const Monomial& m : hw.basis) std::cout << ' ' << m.to_string();
      std::cout << "\nHasse-Witt matrix:\n" << matrix_text(hw.entries) << "ordinary: " << ordinary << '\n';
      write_json(in.json_path, {{"basis", basis}, {"entries", rows}, {"ordinary", ordinary}});
      return ordinary ? 0 : kExitNotMet;
    }
    if (*resolve_cmd) {
      const HypersurfaceSpec h = load(in);
      const ModuleData mod = saturated_b1(h);
      const GradedModule M = twist(mod.saturated.module, twist_by);
      const int e_max = max_degree == INT_MIN ? h.ambient_dim() - twist_by : max_degree;
      const PresentationMatrix P = presentation(M, e_max);
      const BettiData b = betti_data(P, M, h.degree());
      std::cout << "saturation exponents:";
      for (int N : mod.saturated.exponents) std::cout << ' ' << N;
      std::cout << "\nhilbert:";
      for (const auto& [m, dim] : b.hilbert) std::cout << ' ' << m << ':' << dim;
      std::cout << "\ngenerator degrees:";
      for (int a : b.gen_degrees) std::cout << ' ' << a;
      std::cout << "\nrelation degrees:";
      for (int r : b.rel_degrees) std::cout << ' ' << r;
      std::cout << "\nregularity: " << b.regularity << "  rank: " << b.rank << '\n';
      write_json(in.json_path, {{"twist", twist_by}, {"betti", to_json(b)}, {"matrix", to_json(P)}});
      return 0;
    }
    if (*verify_cmd) {
      const HypersurfaceSpec h = load(in);
      const PolyMatrix M = read_matrix(matrix_path, h.equation());
      try {
        const DetCertificate c = verify_det_power(M, h.equation(), {in.sz_trials, in.seed});
        std::cout << "det M = " << c.lambda << " * G^" << c.r << "  (" << to_string(c.method) << ")\n";
        write_json(in.json_path, {{"verified", true}, {"certificate", to_json(c)}});
        return 0;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Mismatch && e.code() != ErrorCode::DegreeIncompatible) throw;
        std::cout << "not verified: " << e.what() << '\n';
        write_json(in.json_path, {{"verified", false}, {"message", e.what()}});
        return kExitInconsistent;
      }
    }
    if (*search_cmd) {
      const auto found = random_search(parse_search_kind(kind), in.p, sd, sn, in.seed, budget);
      if (!found) {
        std::cout << "none\n";
        write_json(in.json_path, {{"found", false}});
        return kExitNotMet;
      }
      const std::string text = to_string(found->equation());
      std::cout << text << '\n';
      write_json(in.json_path, {{"found", true}, {"poly", text}, {"p", in.p}});
      return 0;
    }
    if (*corpus_run) {
      CorpusOptions opts;
      opts.jobs = jobs;
      opts.seed = in.seed;
      opts.sz_trials = in.sz_trials;
      if (!out_dir.empty()) opts.out_dir = out_dir;
      const CorpusSummary s = run_corpus(corpus_dir, opts);
      for (const CorpusCase& c : s.cases)
        std::cout << c.name << ": " << to_string(c.report.verdict) << " (" << c.millis << " ms)\n";
      std::cout << "total " << s.cases.size();
      for (const auto& [v, count] : s.verdict_counts) std::cout << "  " << v << ' ' << count;
      std::cout << '\n';
      write_json(in.json_path, to_json(s));
      return s.verdict_counts.at("inconsistent") > 0 ? kExitInconsistent : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitInvalid : kExitInternal;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
