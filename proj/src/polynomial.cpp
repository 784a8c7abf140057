#include "frobdet/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace frobdet {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars < 1 || nvars > kMaxVars)
    throw Error(ErrorCode::InvalidArgument, "variable count must be in [1, " + std::to_string(kMaxVars) + "]");
}

Monomial::Monomial(int nvars, std::span<const std::uint32_t> exps) : Monomial(nvars) {
  if (exps.size() != static_cast<std::size_t>(nvars)) throw Error(ErrorCode::VarMismatch, "exponent vector length");
  std::copy(exps.begin(), exps.end(), e_.begin());
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exps)
    : Monomial(static_cast<int>(exps.size()), std::span<const std::uint32_t>(exps.begin(), exps.size())) {}

Monomial Monomial::variable(int nvars, int i) {
  Monomial m(nvars);
  m.e_[i] = 1;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (int i = 0; i < nvars_; ++i) d += e_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (int i = 0; i < nvars_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    if (divisor.e_[i] > e_[i]) throw Error(ErrorCode::InvalidArgument, "monomial quotient is not exact");
    q.e_[i] = e_[i] - divisor.e_[i];
  }
  return q;
}

Monomial Monomial::pow(std::uint64_t e) const {
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) r.e_[i] = static_cast<std::uint32_t>(e_[i] * e);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::VarMismatch, "monomial product");
  Monomial r(a.nvars_);
  for (int i = 0; i < a.nvars_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

std::string Monomial::to_string() const {
  static constexpr const char* kAlias[] = {"x", "y", "z", "w"};
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < nvars_; ++i) {
    if (e_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    if (nvars_ <= 4)
      out << kAlias[i];
    else
      out << 'x' << i;
    if (e_[i] > 1) out << '^' << e_[i];
  }
  if (first) return "1";
  return out.str();
}

bool grlex_less(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < m.nvars(); ++i) {
    h ^= m[i] + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

void enumerate(int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == cur.nvars() - 1) {
    cur[var] = static_cast<std::uint32_t>(remaining);
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = static_cast<std::uint32_t>(e);
    enumerate(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  out.reserve(count_monomials(nvars, degree));
  Monomial cur(nvars);
  enumerate(0, degree, cur, out);
  return out;
}

std::size_t count_monomials(int nvars, int degree) {
  if (degree < 0) return 0;
  // C(degree + nvars - 1, nvars - 1)
  std::size_t r = 1;
  for (int i = 1; i < nvars; ++i) r = r * static_cast<std::size_t>(degree + i) / static_cast<std::size_t>(i);
  return r;
}

// ---------------------------------------------------------------------------
// HomogPoly

HomogPoly::HomogPoly(PrimeField field, int nvars, int degree) : field_(field), nvars_(nvars), degree_(degree) {
  if (nvars < 1 || nvars > kMaxVars) throw Error(ErrorCode::InvalidArgument, "variable count out of range");
}

HomogPoly HomogPoly::constant(PrimeField field, int nvars, std::uint32_t c) {
  HomogPoly f(field, nvars, 0);
  f.add_term(Monomial(nvars), c);
  return f;
}

HomogPoly HomogPoly::monomial(PrimeField field, const Monomial& m, std::uint32_t c) {
  HomogPoly f(field, m.nvars(), static_cast<int>(m.degree()));
  f.add_term(m, c);
  return f;
}

HomogPoly HomogPoly::variable(PrimeField field, int nvars, int i) {
  return monomial(field, Monomial::variable(nvars, i));
}

std::vector<std::pair<Monomial, std::uint32_t>> HomogPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, std::uint32_t>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  return out;
}

std::pair<Monomial, std::uint32_t> HomogPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return *best;
}

void HomogPoly::add_term(const Monomial& m, std::uint32_t c) {
  if (m.nvars() != nvars_) throw Error(ErrorCode::VarMismatch, "term has wrong variable count");
  if (static_cast<std::int64_t>(m.degree()) != degree_)
    throw Error(ErrorCode::NotHomogeneous,
                "term " + m.to_string() + " has degree " + std::to_string(m.degree()) + ", expected " + std::to_string(degree_));
  c %= field_.characteristic();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t HomogPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

HomogPoly HomogPoly::with_degree(int degree) const {
  if (!is_zero() && degree != degree_) throw Error(ErrorCode::DegreeMismatch, "cannot re-tag a nonzero polynomial");
  HomogPoly r = *this;
  r.degree_ = degree;
  return r;
}

void HomogPoly::check_compatible(const HomogPoly& o) const {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::VarMismatch, "polynomials in different variable counts");
  if (!(o.field_ == field_)) throw Error(ErrorCode::InvalidArgument, "polynomials over different fields");
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    terms_ = o.terms_;
    degree_ = o.degree_;
    return *this;
  }
  if (o.degree_ != degree_) throw Error(ErrorCode::DegreeMismatch, "sum of polynomials of different degree");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) { return *this += -o; }

HomogPoly HomogPoly::operator-() const { return scaled(field_.neg(1)); }

HomogPoly HomogPoly::scaled(std::uint32_t c) const {
  HomogPoly r(field_, nvars_, degree_);
  c %= field_.characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_.mul(v, c));
  return r;
}

bool operator==(const HomogPoly& a, const HomogPoly& b) {
  if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_)) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::uint32_t HomogPoly::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_)) throw Error(ErrorCode::VarMismatch, "evaluation point size");
  std::uint32_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) t = field_.mul(t, field_.pow(point[i], m[i]));
    acc = field_.add(acc, t);
  }
  return acc;
}

FieldElement HomogPoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_)) throw Error(ErrorCode::VarMismatch, "evaluation point size");
  const FieldSpec& spec = point.front().spec();
  if (spec.characteristic() != field_.characteristic())
    throw Error(ErrorCode::InvalidArgument, "evaluation field has a different characteristic");
  std::array<std::uint32_t, kMaxVars> max_exp{};
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  std::vector<std::vector<FieldElement>> powers(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) {
    auto& pw = powers[i];
    pw.reserve(max_exp[i] + 1u);
    pw.push_back(FieldElement::one(spec));
    for (std::uint32_t e = 1; e <= max_exp[i]; ++e) pw.push_back(pw.back() * point[i]);
  }
  FieldElement acc = FieldElement::zero(spec);
  for (const auto& [m, c] : terms_) {
    FieldElement t(spec, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) t *= powers[i][m[i]];
    acc += t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Free functions

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g) {
  if (f.nvars() != g.nvars()) throw Error(ErrorCode::VarMismatch, "poly_mul: variable counts differ");
  if (!(f.field() == g.field())) throw Error(ErrorCode::InvalidArgument, "poly_mul: fields differ");
  HomogPoly r(f.field(), f.nvars(), f.degree() + g.degree());
  if (f.is_zero() || g.is_zero()) return r;
  const PrimeField& F = f.field();
  HomogPoly::Terms acc;
  acc.reserve(f.term_count() * g.term_count());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      const std::uint32_t c = F.mul(cf, cg);
      auto [it, inserted] = acc.try_emplace(mf * mg, c);
      if (!inserted) it->second = F.add(it->second, c);
    }
  }
  for (const auto& [m, c] : acc)
    if (c != 0) r.add_term(m, c);
  return r;
}

HomogPoly frobenius_power(const HomogPoly& f, int t) {
  std::uint64_t q = 1;
  for (int i = 0; i < t; ++i) q *= f.field().characteristic();
  HomogPoly r(f.field(), f.nvars(), static_cast<int>(f.degree() * static_cast<std::int64_t>(q)));
  for (const auto& [m, c] : f.terms()) r.add_term(m.pow(q), c);
  return r;
}

HomogPoly poly_pow(const HomogPoly& f, std::uint64_t e) {
  const std::uint32_t p = f.field().characteristic();
  HomogPoly result = HomogPoly::constant(f.field(), f.nvars(), 1);
  int t = 0;
  while (e > 0) {
    const std::uint64_t digit = e % p;
    e /= p;
    if (digit != 0) {
      // f^digit by square-and-multiply, then lifted by the t-th Frobenius power.
      HomogPoly piece = HomogPoly::constant(f.field(), f.nvars(), 1);
      HomogPoly base = f;
      std::uint64_t k = digit;
      while (k > 0) {
        if (k & 1u) piece = poly_mul(piece, base);
        k >>= 1u;
        if (k > 0) base = poly_mul(base, base);
      }
      result = poly_mul(result, frobenius_power(piece, t));
    }
    ++t;
  }
  return result;
}

std::uint32_t coeff_of(const HomogPoly& f, const Monomial& m) { return f.coeff(m); }

std::uint32_t coeff_of(const HomogPoly& f, std::span<const std::int64_t> exponents) {
  if (exponents.size() != static_cast<std::size_t>(f.nvars())) throw Error(ErrorCode::VarMismatch, "coeff_of exponent length");
  Monomial m(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    if (exponents[i] < 0) return 0;
    m[i] = static_cast<std::uint32_t>(exponents[i]);
  }
  return f.coeff(m);
}

HomogPoly reduce_mod_G(const HomogPoly& f, const HomogPoly& G) {
  if (G.is_zero()) throw Error(ErrorCode::InvalidArgument, "reduce_mod_G by the zero polynomial");
  if (f.nvars() != G.nvars()) throw Error(ErrorCode::VarMismatch, "reduce_mod_G");
  const PrimeField& F = f.field();
  const auto [lead, lead_c] = G.leading_term();
  const std::uint32_t lead_inv = F.inv(lead_c);
  HomogPoly r = f;
  while (true) {
    // largest term divisible by lead(G)
    const Monomial* pick = nullptr;
    std::uint32_t pick_c = 0;
    for (const auto& [m, c] : r.terms()) {
      if (lead.divides(m) && (pick == nullptr || grlex_less(*pick, m))) {
        pick = &m;
        pick_c = c;
      }
    }
    if (pick == nullptr) break;
    const Monomial shift = pick->quotient(lead);
    const std::uint32_t factor = F.mul(pick_c, lead_inv);
    r -= poly_mul(HomogPoly::monomial(F, shift, factor), G);
  }
  return r;
}

HomogPoly divide_exact(const HomogPoly& f, const HomogPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const PrimeField& F = f.field();
  HomogPoly q(F, f.nvars(), f.degree() - g.degree());
  if (f.is_zero()) return q;
  const auto [lead, lead_c] = g.leading_term();
  const std::uint32_t lead_inv = F.inv(lead_c);
  HomogPoly r = f;
  while (!r.is_zero()) {
    const auto [m, c] = r.leading_term();
    if (!lead.divides(m)) throw Error(ErrorCode::Mismatch, "polynomial division is not exact");
    const HomogPoly t = HomogPoly::monomial(F, m.quotient(lead), F.mul(c, lead_inv));
    q += t;
    r -= poly_mul(t, g);
  }
  return q;
}

HomogPoly partial_derivative(const HomogPoly& f, int var) {
  const PrimeField& F = f.field();
  HomogPoly r(F, f.nvars(), std::max(f.degree() - 1, 0));
  if (f.degree() == 0) return r;
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, F.mul(c, F.reduce(m[var])));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, PrimeField field) : s_(text), F_(field) {}

  struct RawTerm {
    std::array<std::uint64_t, kMaxVars> exps{};
    std::uint32_t coeff = 1;
    std::size_t pos = 0;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++i_;
    }
    while (true) {
      RawTerm t = term();
      if (negate) t.coeff = F_.neg(t.coeff);
      terms.push_back(t);
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negate = c == '-';
      ++i_;
    }
    return terms;
  }

  int max_var() const { return max_var_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  static bool is_var_start(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }

  std::string digits() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected digits");
    return std::string(s_.substr(start, i_ - start));
  }

  std::uint32_t coefficient() {
    std::uint64_t acc = 0;
    for (char c : digits()) acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % F_.characteristic();
    return static_cast<std::uint32_t>(acc);
  }

  std::uint64_t exponent() {
    const std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    return std::stoull(d);
  }

  void monfactor(RawTerm& t) {
    const char c = peek();
    int var = 0;
    ++i_;
    if (c == 'x' && i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const std::string d = digits();
      if (d.size() > 2 || std::stoi(d) >= kMaxVars) fail("variable index out of range");
      var = std::stoi(d);
    } else {
      var = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
    }
    std::uint64_t e = 1;
    if (peek() == '^') {
      ++i_;
      e = exponent();
    }
    t.exps[var] += e;
    max_var_ = std::max(max_var_, var);
  }

  RawTerm term() {
    RawTerm t;
    t.pos = i_;
    const char c = peek();
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff = coefficient();
      have_any = true;
    } else if (!is_var_start(c)) {
      fail("expected a coefficient or variable");
    }
    while (true) {
      const char n = peek();
      if (n == '*') {
        ++i_;
        if (!is_var_start(peek())) fail("expected a variable after '*'");
        monfactor(t);
      } else if (is_var_start(n)) {
        monfactor(t);
      } else {
        break;
      }
      have_any = true;
    }
    if (!have_any) fail("empty term");
    return t;
  }

  std::string_view s_;
  PrimeField F_;
  std::size_t i_ = 0;
  int max_var_ = -1;
};

}  // namespace

ParsedPoly parse_poly(std::string_view text, PrimeField field, int nvars, bool allow_zero) {
  Parser parser(text, field);
  const auto raw = parser.parse();
  const int max_var = parser.max_var();
  if (nvars <= 0) nvars = std::max(3, max_var + 1);
  if (max_var >= nvars)
    throw Error(ErrorCode::VarMismatch, "polynomial uses x" + std::to_string(max_var) + " but only " +
                                            std::to_string(nvars) + " variables were expected");
  std::uint64_t degree = 0;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    std::uint64_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += raw[k].exps[i];
    if (k == 0) degree = d;
    if (d != degree)
      throw Error(ErrorCode::NotHomogeneous, "term at position " + std::to_string(raw[k].pos) + " has degree " +
                                                 std::to_string(d) + ", first term has degree " + std::to_string(degree));
  }
  if (degree > (1u << 20)) throw Error(ErrorCode::ParseError, "degree too large");
  HomogPoly f(field, nvars, static_cast<int>(degree));
  for (const auto& t : raw) {
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i) m[i] = static_cast<std::uint32_t>(t.exps[i]);
    f.add_term(m, t.coeff);
  }
  if (f.is_zero() && !allow_zero) throw Error(ErrorCode::ZeroModP, "polynomial vanishes mod " + std::to_string(field.characteristic()));
  return {std::move(f), max_var};
}

std::string to_string(const HomogPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.sorted_terms()) {
    if (!first) out << '+';
    first = false;
    const bool is_const = m.degree() == 0;
    if (c != 1 || is_const) {
      out << c;
      if (!is_const) out << '*';
    }
    if (!is_const) out << m.to_string();
  }
  return out.str();
}

}  // namespace frobdet
