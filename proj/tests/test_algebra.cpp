#include <gtest/gtest.h>

#include "frobdet/coordinate_ring.hpp"
#include "test_util.hpp"

using namespace frobdet;
using testutil::poly;

TEST(PrimeField, Inverse) {
  const PrimeField F7(7);
  EXPECT_EQ(field_inv(F7, 3), 5u);
  EXPECT_EQ(field_inv(PrimeField(2), 1), 1u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(F7.mul(a, F7.inv(a)), 1u);
}

TEST(PrimeField, ZeroInverseThrows) {
  try {
    PrimeField(5).inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
  }
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_THROW(PrimeField(1u << 16), Error);
}

TEST(FieldSpec, InverseOfTInF16) {
  const auto spec = FieldSpec::with_modulus(2, {1, 1, 0, 0, 1});
  const FieldElement t = FieldElement::from_index(*spec, 2);
  const FieldElement inv = field_inv(t);
  EXPECT_EQ(inv.to_string(), "t^3+1");
  EXPECT_TRUE((t * inv).is_one());
  const auto oracle_inv = oracle::ext_inverse_search({0, 1}, {1, 1, 0, 0, 1}, 2);
  ASSERT_TRUE(oracle_inv.has_value());
  EXPECT_EQ(*oracle_inv, (oracle::Uni{1, 0, 0, 1}));
}

TEST(FieldSpec, FindIrreducibleMatchesSieve) {
  EXPECT_EQ(find_irreducible(2, 4), (UniPoly{1, 1, 0, 0, 1}));
  EXPECT_EQ(find_irreducible(3, 2), (UniPoly{1, 0, 1}));
  EXPECT_EQ(find_irreducible(5, 2), (UniPoly{2, 0, 1}));
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (int k = 2; k <= (p == 2 ? 6 : 3); ++k) {
      const oracle::Uni expect = oracle::smallest_irreducible(p, k);
      const UniPoly got = find_irreducible(p, k);
      ASSERT_EQ(got.size(), expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(static_cast<std::int64_t>(got[i]), expect[i]) << p << "," << k;
    }
}

TEST(FieldSpec, RejectsReducibleModulus) { EXPECT_THROW(FieldSpec::with_modulus(2, {1, 0, 1}), Error); }

TEST(FieldSpec, ExtensionFieldAxioms) {
  const auto spec = FieldSpec::extension(3, 3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = FieldElement::from_index(*spec, rng() % 27);
    const auto b = FieldElement::from_index(*spec, rng() % 27);
    const auto c = FieldElement::from_index(*spec, rng() % 27);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(Polynomial, MulExamples) {
  EXPECT_EQ(to_string(poly("x0", 2) * poly("x1", 2)), "x*y");
  EXPECT_EQ(to_string(poly("x0+x1", 2) * poly("x0+x1", 2)), "x^2+y^2");
}

TEST(Polynomial, MulAgreesWithEvaluation) {
  const PrimeField F(7);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const HomogPoly f = testutil::random_poly(F, 3, 3, rng);
    const HomogPoly g = testutil::random_poly(F, 3, 3, rng);
    const std::array<std::uint32_t, 3> pt{static_cast<std::uint32_t>(rng() % 7), static_cast<std::uint32_t>(rng() % 7),
                                          static_cast<std::uint32_t>(rng() % 7)};
    EXPECT_EQ((f * g).evaluate(pt), F.mul(f.evaluate(pt), g.evaluate(pt)));
    EXPECT_TRUE(testutil::same(f * g, oracle::mul(testutil::to_oracle(f), testutil::to_oracle(g), 7)));
  }
}

TEST(Polynomial, MulVarMismatch) {
  try {
    poly_mul(poly("x", 2, 3), poly("x", 2, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VarMismatch);
  }
}

TEST(Polynomial, PowExamples) {
  const HomogPoly f = poly("x+y", 5);
  const HomogPoly one = poly_pow(f, 0);
  EXPECT_EQ(one.degree(), 0);
  EXPECT_EQ(to_string(one), "1");
  EXPECT_EQ(to_string(poly_pow(poly("x+y", 2), 2)), "x^2+y^2");
  const HomogPoly fermat6 = poly_pow(poly("x^3+y^3+z^3", 7), 6);
  EXPECT_EQ(coeff_of(fermat6, Monomial{6, 6, 6}), 6u);
  const oracle::Poly brute = oracle::power(testutil::to_oracle(poly("x^3+y^3+z^3", 7)), 6, 7, 3);
  EXPECT_EQ(oracle::coeff(brute, {6, 6, 6}), 6);
  EXPECT_TRUE(testutil::same(fermat6, brute));
}

TEST(Polynomial, PowAgreesWithRepeatedMul) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField F(p);
    for (int t = 0; t < 10; ++t) {
      const HomogPoly f = testutil::random_poly(F, 3, 2, rng);
      HomogPoly acc = HomogPoly::constant(F, 3, 1);
      for (int e = 0; e <= 6; ++e) {
        EXPECT_EQ(poly_pow(f, static_cast<std::uint64_t>(e)), acc) << "p=" << p << " e=" << e;
        acc = acc * f;
      }
    }
  }
}

TEST(Polynomial, CoeffOf) {
  const HomogPoly f = poly("x0^2 + 2*x1^2", 5);
  EXPECT_EQ(coeff_of(f, Monomial{0, 2, 0}), 2u);
  EXPECT_EQ(coeff_of(f, Monomial{1, 1, 0}), 0u);
  const std::array<std::int64_t, 3> neg{3, -1, 0};
  EXPECT_EQ(coeff_of(f, std::span<const std::int64_t>(neg)), 0u);
}

TEST(Polynomial, ReduceModG) {
  const HomogPoly G = poly("x^3+y^3+z^3+x*y*z", 2);
  EXPECT_TRUE(reduce_mod_G(G, G).is_zero());
  const HomogPoly low = poly("x^2+y*z", 2);
  EXPECT_EQ(reduce_mod_G(low, G), low);

  const HomogPoly f = poly("x^3*y", 2);
  const HomogPoly r = reduce_mod_G(f, G);
  const Monomial lead = G.leading_term().first;
  for (const auto& [m, c] : r.terms()) EXPECT_FALSE(lead.divides(m));
  // Membership oracle: f - r = q G with q linear; solve for q by brute force over F_2^3.
  const HomogPoly diff = f - r;
  bool found = false;
  for (int mask = 0; mask < 8 && !found; ++mask) {
    HomogPoly q(PrimeField(2), 3, 1);
    for (int v = 0; v < 3; ++v)
      if (mask & (1 << v)) q.add_term(Monomial::variable(3, v), 1);
    found = (q * G) == diff;
  }
  EXPECT_TRUE(found);
}

TEST(Polynomial, ReduceModGLinearAndIdempotent) {
  std::mt19937_64 rng(9);
  const PrimeField F(3);
  const HomogPoly G = poly("x^3+y^3+z^3+2*x*y*z", 3);
  for (int t = 0; t < 30; ++t) {
    const HomogPoly f = testutil::random_poly(F, 3, 5, rng);
    const HomogPoly g = testutil::random_poly(F, 3, 5, rng);
    const HomogPoly rf = reduce_mod_G(f, G);
    EXPECT_EQ(reduce_mod_G(rf, G), rf);
    EXPECT_EQ(reduce_mod_G(f + g, G), rf + reduce_mod_G(g, G));
  }
}

TEST(Polynomial, FrobeniusAdditivity) {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField F(p);
    for (int t = 0; t < 10; ++t) {
      const HomogPoly f = testutil::random_poly(F, 4, 2, rng);
      const HomogPoly g = testutil::random_poly(F, 4, 2, rng);
      EXPECT_EQ(poly_pow(f + g, p), poly_pow(f, p) + poly_pow(g, p));
    }
  }
}

TEST(Parser, Examples) {
  const auto a = parse_poly("x^3+y^3+z^3", PrimeField(7));
  EXPECT_EQ(a.poly.degree(), 3);
  EXPECT_EQ(a.poly.nvars(), 3);
  const auto b = parse_poly("x0^4 + x1^4 + x2^4 + x3^4", PrimeField(3));
  EXPECT_EQ(b.poly.degree(), 4);
  EXPECT_EQ(b.poly.nvars(), 4);
  EXPECT_EQ(to_string(parse_poly("12 x y z - x^3", PrimeField(5)).poly), "4*x^3+2*x*y*z");
}

TEST(Parser, Errors) {
  const auto code = [](const std::string& text, std::uint32_t p) {
    try {
      parse_poly(text, PrimeField(p));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code("x^3 + y^2", 5), ErrorCode::NotHomogeneous);
  EXPECT_EQ(code("2*x^3", 2), ErrorCode::ZeroModP);
  EXPECT_EQ(code("x^3 + + y^3", 5), ErrorCode::ParseError);
  EXPECT_EQ(code("q^2", 5), ErrorCode::ParseError);
}

TEST(Parser, RoundTrip) {
  std::mt19937_64 rng(4);
  const PrimeField F(5);
  for (int t = 0; t < 20; ++t) {
    const HomogPoly f = testutil::random_poly(F, 4, 3, rng);
    if (f.is_zero()) continue;
    EXPECT_EQ(parse_poly(to_string(f), F, 4).poly, f);
  }
}

TEST(CoordinateRing, HilbertFunctionMatchesBinomials) {
  const HomogPoly G = poly("x^3+y^3+z^3+x*y*z", 2);
  const CoordinateRing A(G, 18);
  for (int j = 0; j <= 18; ++j) EXPECT_EQ(A.dim(j), oracle::quotient_dim(3, 3, j));
  const HomogPoly S = poly("x^3+y^3+z^3+w^3", 5);
  const CoordinateRing B(S, 10);
  for (int j = 0; j <= 10; ++j) EXPECT_EQ(B.dim(j), oracle::quotient_dim(4, 3, j));
}

TEST(CoordinateRing, NormalFormAgreesWithReduction) {
  const HomogPoly G = poly("x^4+x^3*z+x^2*y^2+x*y^3+x*y^2*z+x*y*z^2+y^4+y^2*z^2+y*z^3", 2);
  const CoordinateRing A(G, 9);
  for (const Monomial& m : monomials_of_degree(3, 9))
    EXPECT_EQ(A.to_poly(9, A.normal_form(m)), reduce_mod_G(HomogPoly::monomial(G.field(), m), G));
}
