#include "frobdet/determinant.hpp"

#include <bit>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <unordered_map>

namespace frobdet {

namespace {

void require_square(const PolyMatrix& M) {
  if (!M.is_square())
    throw Error(ErrorCode::NotSquare,
                "matrix is " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + ", expected square");
}

bool sum_is_zero(const HomogPoly& a, const HomogPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return (a + b).is_zero();
}

HomogPoly retag_zero(const PolyMatrix& M, HomogPoly d) {
  if (!d.is_zero()) return d;
  try {
    return d.with_degree(infer_det_degree(M));
  } catch (const Error&) {
    return d;
  }
}

}  // namespace

HomogPoly det_exact(const PolyMatrix& M) {
  require_square(M);
  const int s = M.rows();
  if (s > kMaxExactSize)
    throw Error(ErrorCode::SizeCap, "exact determinant limited to size " + std::to_string(kMaxExactSize) + ", got " +
                                        std::to_string(s));
  const PrimeField& F = M.field();
  if (s == 0) return HomogPoly::constant(F, M.nvars(), 1);

  // layer[S] = det of the first |S| rows restricted to the columns in S.
  std::unordered_map<std::uint32_t, HomogPoly> layer;
  layer.emplace(0u, HomogPoly::constant(F, M.nvars(), 1));
  for (int k = 1; k <= s; ++k) {
    std::unordered_map<std::uint32_t, HomogPoly> next;
    const int row = k - 1;
    for (const auto& [T, minor] : layer) {
      if (minor.is_zero()) continue;
      for (int c = 0; c < s; ++c) {
        const std::uint32_t bit = 1u << c;
        if (T & bit) continue;
        const HomogPoly& entry = M(row, c);
        if (entry.is_zero()) continue;
        const std::uint32_t S = T | bit;
        const int pos = std::popcount(S & (bit - 1));
        HomogPoly term = entry * minor;
        if ((row + pos) % 2 == 1) term = -term;
        auto it = next.find(S);
        if (it == next.end())
          next.emplace(S, std::move(term));
        else
          it->second += term;
      }
    }
    layer = std::move(next);
  }
  const std::uint32_t full = s == 32 ? ~0u : (1u << s) - 1;
  auto it = layer.find(full);
  if (it == layer.end()) return retag_zero(M, HomogPoly(F, M.nvars(), 0));
  return retag_zero(M, it->second);
}

HomogPoly bareiss_det(const PolyMatrix& M) {
  require_square(M);
  const int s = M.rows();
  const PrimeField& F = M.field();
  if (s == 0) return HomogPoly::constant(F, M.nvars(), 1);
  std::vector<std::vector<HomogPoly>> a(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) a[static_cast<std::size_t>(i)].push_back(M(i, j));
  HomogPoly prev = HomogPoly::constant(F, M.nvars(), 1);
  bool negate = false;
  for (int k = 0; k + 1 < s; ++k) {
    auto& rk = a[static_cast<std::size_t>(k)];
    if (rk[static_cast<std::size_t>(k)].is_zero()) {
      int swap_with = -1;
      for (int i = k + 1; i < s; ++i)
        if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) return retag_zero(M, HomogPoly(F, M.nvars(), 0));
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_with)]);
      negate = !negate;
    }
    const HomogPoly& pivot = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < s; ++i) {
      auto& ri = a[static_cast<std::size_t>(i)];
      for (int j = k + 1; j < s; ++j) {
        HomogPoly num = pivot * ri[static_cast<std::size_t>(j)] -
                        ri[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        ri[static_cast<std::size_t>(j)] = divide_exact(num, prev);
      }
    }
    prev = pivot;
  }
  HomogPoly d = a[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(s - 1)];
  if (negate) d = -d;
  return retag_zero(M, d);
}

bool is_alternating(const PolyMatrix& M) {
  if (!M.is_square()) return false;
  for (int i = 0; i < M.rows(); ++i) {
    if (!M(i, i).is_zero()) return false;
    for (int j = i + 1; j < M.cols(); ++j)
      if (!sum_is_zero(M(i, j), M(j, i))) return false;
  }
  return true;
}

HomogPoly pfaffian(const PolyMatrix& M) {
  require_square(M);
  const int s = M.rows();
  if (s % 2 != 0) throw Error(ErrorCode::OddSize, "Pfaffian of an odd-size matrix");
  if (!is_alternating(M)) throw Error(ErrorCode::NotSkew, "matrix is not alternating");
  if (s > 2 * kMaxExactSize) throw Error(ErrorCode::SizeCap, "Pfaffian size cap exceeded");
  const PrimeField& F = M.field();
  std::unordered_map<std::uint32_t, HomogPoly> memo;

  std::function<HomogPoly(std::uint32_t)> pf = [&](std::uint32_t rows) -> HomogPoly {
    if (rows == 0) return HomogPoly::constant(F, M.nvars(), 1);
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    const int i = std::countr_zero(rows);
    const std::uint32_t rest = rows & ~(1u << i);
    HomogPoly acc(F, M.nvars(), 0);
    int k = 0;
    for (int j = i + 1; j < s; ++j) {
      if (!(rest & (1u << j))) continue;
      const HomogPoly& e = M(i, j);
      if (!e.is_zero()) {
        const HomogPoly sub = pf(rest & ~(1u << j));
        if (!sub.is_zero()) {
          HomogPoly term = e * sub;
          if (k % 2 == 1) term = -term;
          acc += term;
        }
      }
      ++k;
    }
    memo.emplace(rows, acc);
    return acc;
  };
  return pf(s == 32 ? ~0u : (1u << s) - 1);
}

FieldElement numeric_det(std::vector<FieldElement> a, int s) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "numeric determinant of an empty matrix");
  const FieldSpec& spec = a.front().spec();
  FieldElement det = FieldElement::one(spec);
  auto at = [&](int r, int c) -> FieldElement& { return a[static_cast<std::size_t>(r * s + c)]; };
  for (int k = 0; k < s; ++k) {
    int piv = -1;
    for (int r = k; r < s; ++r)
      if (!at(r, k).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return FieldElement::zero(spec);
    if (piv != k) {
      for (int c = 0; c < s; ++c) std::swap(at(k, c), at(piv, c));
      det = -det;
    }
    det *= at(k, k);
    const FieldElement inv = at(k, k).inverse();
    for (int r = k + 1; r < s; ++r) {
      if (at(r, k).is_zero()) continue;
      const FieldElement f = at(r, k) * inv;
      for (int c = k; c < s; ++c) at(r, c) -= f * at(k, c);
    }
  }
  return det;
}

int sampling_extension_degree(std::uint32_t p, std::uint64_t bound) {
  int k = 1;
  std::uint64_t q = p;
  while (q <= bound) {
    q *= p;
    ++k;
    if (k > FieldSpec::kMaxDegree) throw Error(ErrorCode::InvalidArgument, "sampling field too large");
  }
  return k;
}

namespace {

std::shared_ptr<const FieldSpec> sampling_field(std::uint32_t p, std::uint64_t bound) {
  const int k = sampling_extension_degree(p, bound);
  return k == 1 ? FieldSpec::prime(p) : FieldSpec::extension(p, k);
}

FieldElement random_element(const FieldSpec& spec, std::mt19937_64& rng) {
  FieldElement::Coeffs c{};
  for (int i = 0; i < spec.degree(); ++i) c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rng() % spec.characteristic());
  return {spec, c};
}

}  // namespace

bool schwartz_zippel_check(const PolyMatrix& M, const HomogPoly& G, int r, int trials, std::uint64_t seed) {
  require_square(M);
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "need at least one Schwartz-Zippel trial");
  const std::uint64_t deg = static_cast<std::uint64_t>(std::max(1, r * G.degree()));
  const auto spec = sampling_field(G.field().characteristic(), 4 * deg);
  std::mt19937_64 rng(seed);
  std::optional<FieldElement> lambda;
  std::vector<std::pair<FieldElement, FieldElement>> pending;  // (det, G^r) seen before lambda is known
  const int s = M.rows();
  for (int t = 0; t < trials; ++t) {
    std::vector<FieldElement> pt;
    for (int v = 0; v < M.nvars(); ++v) pt.push_back(random_element(*spec, rng));
    const FieldElement g = G.evaluate(pt).pow(static_cast<std::uint64_t>(r));
    const FieldElement d = s == 0 ? FieldElement::one(*spec) : numeric_det(M.evaluate(pt), s);
    if (!lambda) {
      if (g.is_zero()) {
        pending.emplace_back(d, g);
        continue;
      }
      if (d.is_zero()) return false;
      lambda = d / g;
      for (const auto& [pd, pg] : pending)
        if (!(pd == *lambda * pg)) return false;
      continue;
    }
    if (!(d == *lambda * g)) return false;
  }
  if (!lambda) throw Error(ErrorCode::DegenerateSamples, "G vanished at every sample point; re-seed");
  return true;
}

HomogPoly interpolated_det(const PolyMatrix& M, int degree) {
  require_square(M);
  const PrimeField& F = M.field();
  const int nv = M.nvars();
  const int n = nv - 1;
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative determinant degree");
  const int D = degree;
  const auto spec = sampling_field(F.characteristic(), static_cast<std::uint64_t>(D));
  const int width = D + 1;
  std::vector<FieldElement> nodes;
  for (int i = 0; i < width; ++i) nodes.push_back(FieldElement::from_index(*spec, static_cast<std::uint64_t>(i)));

  std::size_t total = 1;
  for (int a = 0; a < n; ++a) total *= static_cast<std::size_t>(width);
  std::vector<FieldElement> values(total);
  std::vector<FieldElement> pt(static_cast<std::size_t>(nv), FieldElement::one(*spec));
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int a = n - 1; a >= 0; --a) {
      pt[static_cast<std::size_t>(a)] = nodes[rem % static_cast<std::size_t>(width)];
      rem /= static_cast<std::size_t>(width);
    }
    values[flat] = M.rows() == 0 ? FieldElement::one(*spec) : numeric_det(M.evaluate(pt), M.rows());
  }

  // Inverse Vandermonde: V(i, j) = nodes[i]^j.
  std::vector<FieldElement> aug(static_cast<std::size_t>(width * 2 * width), FieldElement::zero(*spec));
  auto A = [&](int r, int c) -> FieldElement& { return aug[static_cast<std::size_t>(r * 2 * width + c)]; };
  for (int i = 0; i < width; ++i) {
    FieldElement x = FieldElement::one(*spec);
    for (int j = 0; j < width; ++j) {
      A(i, j) = x;
      x *= nodes[static_cast<std::size_t>(i)];
    }
    A(i, width + i) = FieldElement::one(*spec);
  }
  for (int k = 0; k < width; ++k) {
    int piv = k;
    while (A(piv, k).is_zero()) ++piv;
    if (piv != k)
      for (int c = 0; c < 2 * width; ++c) std::swap(A(k, c), A(piv, c));
    const FieldElement inv = A(k, k).inverse();
    for (int c = 0; c < 2 * width; ++c) A(k, c) *= inv;
    for (int r = 0; r < width; ++r) {
      if (r == k || A(r, k).is_zero()) continue;
      const FieldElement f = A(r, k);
      for (int c = 0; c < 2 * width; ++c) A(r, c) -= f * A(k, c);
    }
  }

  std::size_t stride = 1;
  for (int axis = n - 1; axis >= 0; --axis) {
    std::vector<FieldElement> next(values.size(), FieldElement::zero(*spec));
    for (std::size_t flat = 0; flat < total; ++flat) {
      const std::size_t idx = (flat / stride) % static_cast<std::size_t>(width);
      if (idx != 0) continue;
      for (int j = 0; j < width; ++j) {
        FieldElement acc = FieldElement::zero(*spec);
        for (int i = 0; i < width; ++i)
          acc += A(j, width + i) * values[flat + static_cast<std::size_t>(i) * stride];
        next[flat + static_cast<std::size_t>(j) * stride] = acc;
      }
    }
    values = std::move(next);
    stride *= static_cast<std::size_t>(width);
  }

  HomogPoly det(F, nv, D);
  for (std::size_t flat = 0; flat < total; ++flat) {
    const FieldElement& c = values[flat];
    if (c.is_zero()) continue;
    Monomial m(nv);
    std::size_t rem = flat;
    int sum = 0;
    for (int a = n - 1; a >= 0; --a) {
      m[a] = static_cast<std::uint32_t>(rem % static_cast<std::size_t>(width));
      sum += static_cast<int>(m[a]);
      rem /= static_cast<std::size_t>(width);
    }
    if (sum > D || !c.in_base_field())
      throw Error(ErrorCode::Internal, "interpolated determinant is not a degree-" + std::to_string(D) +
                                           " polynomial over F_p");
    m[n] = static_cast<std::uint32_t>(D - sum);
    det.add_term(m, c.coeffs()[0]);
  }
  return det;
}

std::string_view to_string(DetMethod m) {
  switch (m) {
    case DetMethod::ExactCofactor: return "exact-cofactor";
    case DetMethod::ExactBareiss: return "exact-bareiss";
    case DetMethod::Interpolated: return "interpolated";
  }
  return "unknown";
}

int infer_det_degree(const PolyMatrix& M) {
  require_square(M);
  const int s = M.rows();
  std::vector<std::optional<int>> row_off(static_cast<std::size_t>(s)), col_off(static_cast<std::size_t>(s));
  int total = 0;
  for (int start = 0; start < s; ++start) {
    if (row_off[static_cast<std::size_t>(start)]) continue;
    row_off[static_cast<std::size_t>(start)] = 0;
    int nrows = 0, ncols = 0, sum = 0;
    std::deque<std::pair<bool, int>> queue{{true, start}};
    while (!queue.empty()) {
      const auto [is_row, idx] = queue.front();
      queue.pop_front();
      if (is_row) {
        ++nrows;
        const int u = *row_off[static_cast<std::size_t>(idx)];
        sum -= u;
        for (int c = 0; c < s; ++c) {
          const HomogPoly& e = M(idx, c);
          if (e.is_zero()) continue;
          auto& v = col_off[static_cast<std::size_t>(c)];
          if (!v) {
            v = u + e.degree();
            queue.emplace_back(false, c);
          } else if (*v != u + e.degree()) {
            throw Error(ErrorCode::DegreeIncompatible, "entry degrees are not of the form b_i - a_j");
          }
        }
      } else {
        ++ncols;
        const int v = *col_off[static_cast<std::size_t>(idx)];
        sum += v;
        for (int r = 0; r < s; ++r) {
          const HomogPoly& e = M(r, idx);
          if (e.is_zero()) continue;
          auto& u = row_off[static_cast<std::size_t>(r)];
          if (!u) {
            u = v - e.degree();
            queue.emplace_back(true, r);
          } else if (*u != v - e.degree()) {
            throw Error(ErrorCode::DegreeIncompatible, "entry degrees are not of the form b_i - a_j");
          }
        }
      }
    }
    if (nrows != ncols) throw Error(ErrorCode::Mismatch, "determinant vanishes identically (unbalanced block)");
    total += sum;
  }
  for (const auto& v : col_off)
    if (!v) throw Error(ErrorCode::Mismatch, "determinant vanishes identically (zero column)");
  return total;
}

DetCertificate verify_det_power(const PolyMatrix& M, const HomogPoly& G, const VerifyOptions& opts) {
  require_square(M);
  if (G.is_zero() || G.degree() < 1) throw Error(ErrorCode::InvalidArgument, "G must be a nonzero form of positive degree");
  const int D = infer_det_degree(M);
  if (D < 0 || D % G.degree() != 0)
    throw Error(ErrorCode::DegreeIncompatible, "det degree " + std::to_string(D) + " is not a multiple of deg G = " +
                                                   std::to_string(G.degree()));
  DetCertificate cert;
  cert.size = M.rows();
  cert.r = D / G.degree();
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_zero()) ++cert.degree_profile[M(i, j).degree()];

  if (opts.sz_trials > 0) {
    if (!schwartz_zippel_check(M, G, cert.r, opts.sz_trials, opts.seed))
      throw Error(ErrorCode::Mismatch, "det M differs from lambda G^" + std::to_string(cert.r) +
                                           " at a random point (Schwartz-Zippel screen)");
    cert.sz_trials = opts.sz_trials;
  }

  HomogPoly det(G.field(), G.nvars(), D);
  if (M.rows() <= kMaxCofactorSize) {
    det = det_exact(M);
    cert.method = DetMethod::ExactCofactor;
  } else {
    det = interpolated_det(M, D);
    cert.method = DetMethod::Interpolated;
  }
  const PrimeField& F = G.field();
  const HomogPoly Gr = poly_pow(G, static_cast<std::uint64_t>(cert.r));
  const auto [lead, lead_c] = Gr.leading_term();
  const std::uint32_t lambda = F.mul(det.coeff(lead), F.inv(lead_c));
  if (lambda == 0) throw Error(ErrorCode::Mismatch, "det M has no term at the leading monomial of G^r");
  const HomogPoly residual = det - Gr.scaled(lambda);
  if (!residual.is_zero()) {
    std::string text = to_string(residual);
    if (text.size() > 200) text = text.substr(0, 200) + "...";
    throw Error(ErrorCode::Mismatch, "det M - lambda G^" + std::to_string(cert.r) + " = " + text);
  }
  cert.lambda = lambda;
  return cert;
}

bool degree_profile_check(const PresentationMatrix& P, int n) {
  const PolyMatrix& M = P.entries;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      const HomogPoly& e = M(i, j);
      if (!e.is_zero() && (e.degree() < 1 || e.degree() > n - 1)) return false;
    }
  return true;
}

PolyMatrix constant_product(const MatrixFp& P, const PolyMatrix& M, const MatrixFp& Q) {
  const PrimeField& F = M.field();
  PolyMatrix PM(F, M.nvars(), static_cast<int>(P.rows()), M.cols());
  for (int j = 0; j < PM.rows(); ++j)
    for (int c = 0; c < M.cols(); ++c)
      for (int k = 0; k < M.rows(); ++k)
        if (P(j, k) != 0 && !M(k, c).is_zero()) PM(j, c) += M(k, c).scaled(static_cast<std::uint32_t>(P(j, k)));
  PolyMatrix out(F, M.nvars(), PM.rows(), static_cast<int>(Q.cols()));
  for (int j = 0; j < out.rows(); ++j)
    for (int i = 0; i < out.cols(); ++i)
      for (int l = 0; l < PM.cols(); ++l)
        if (Q(l, i) != 0 && !PM(j, l).is_zero()) out(j, i) += PM(j, l).scaled(static_cast<std::uint32_t>(Q(l, i)));
  return out;
}

std::optional<SkewWitness> skew_equivalence_probe(const PolyMatrix& M, std::uint64_t seed, int trials) {
  if (!M.is_square() || M.rows() % 2 != 0) return std::nullopt;
  const int s = M.rows();
  const PrimeField& F = M.field();
  const MatrixFp I = MatrixFp::Identity(s, s);
  if (is_alternating(M)) return SkewWitness{I, I};

  // M = sum_mu C_mu mu; M R alternating <=> each C_mu R alternating.
  std::unordered_map<Monomial, MatrixFp, MonomialHash> coeffs;
  std::vector<Monomial> order;
  for (int a = 0; a < s; ++a)
    for (int c = 0; c < s; ++c)
      for (const auto& [mu, v] : M(a, c).sorted_terms()) {
        auto [it, fresh] = coeffs.try_emplace(mu, MatrixFp::Zero(s, s));
        if (fresh) order.push_back(mu);
        it->second(a, c) = v;
      }
  const Index unknowns = static_cast<Index>(s) * s;  // R(c, b) at c * s + b
  const Index per = static_cast<Index>(s) * (s + 1) / 2;
  MatrixFp sys = MatrixFp::Zero(per * static_cast<Index>(order.size()), unknowns);
  Index row = 0;
  for (const Monomial& mu : order) {
    const MatrixFp& C = coeffs.at(mu);
    for (int a = 0; a < s; ++a)
      for (int b = a; b < s; ++b, ++row) {
        for (int c = 0; c < s; ++c) {
          sys(row, c * s + b) = (sys(row, c * s + b) + C(a, c)) % F.characteristic();
          if (a != b) sys(row, c * s + a) = (sys(row, c * s + a) + C(b, c)) % F.characteristic();
        }
      }
  }
  const MatrixFp K = kernel_basis(sys, F);
  if (K.cols() == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    VectorFp w(K.cols());
    for (Index i = 0; i < w.size(); ++i) w(i) = static_cast<std::int64_t>(rng() % F.characteristic());
    const MatrixFp flat = mul_mod(K, w, F);
    MatrixFp R(s, s);
    for (int c = 0; c < s; ++c)
      for (int b = 0; b < s; ++b) R(c, b) = flat(c * s + b, 0);
    if (rank_mod(R, F) == s) return SkewWitness{I, R};
  }
  return std::nullopt;
}

}  // namespace frobdet
