#include <gtest/gtest.h>

#include "frobdet/splitting.hpp"
#include "test_util.hpp"

using namespace frobdet;
using testutil::poly;

namespace {

HypersurfaceSpec hs(const std::string& text, std::uint32_t p) { return HypersurfaceSpec(poly(text, p)); }

bool fedder_oracle(const HomogPoly& G) {
  const std::int64_t p = G.field().characteristic();
  const oracle::Poly power = oracle::power(testutil::to_oracle(G), static_cast<int>(p - 1), p, G.nvars());
  for (const auto& [e, c] : power)
    if (std::all_of(e.begin(), e.end(), [p](int x) { return x <= p - 1; })) return true;
  return false;
}

}  // namespace

TEST(Fedder, Examples) {
  EXPECT_TRUE(fedder_split_test(hs("x0", 3)));
  EXPECT_TRUE(fedder_split_test(hs("x^3+y^3+z^3", 7)));
  EXPECT_FALSE(fedder_split_test(hs("x^3+y^3+z^3", 5)));
  EXPECT_EQ(fedder_split_test(hs("x^3+y^3+z^3", 5)), fedder_oracle(poly("x^3+y^3+z^3", 5)));
}

TEST(Fedder, AgreesWithExpansionOracle) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField F(p);
    for (int t = 0; t < 15; ++t) {
      const HomogPoly G = testutil::random_poly(F, 3, 3, rng);
      if (G.is_zero()) continue;
      EXPECT_EQ(fedder_split_test(HypersurfaceSpec(G)), fedder_oracle(G)) << to_string(G);
    }
  }
}

TEST(DegreeBound, Examples) {
  EXPECT_TRUE(degree_bound_check(hs("x^3+y^3+z^3", 5)));
  EXPECT_FALSE(degree_bound_check(hs("x^4+y^4+z^4", 5)));
  EXPECT_TRUE(degree_bound_check(hs("x^4+y^4+z^4+w^4", 5)));
}

TEST(Genus, Values) {
  EXPECT_EQ(genus(hs("x^3+y^3+z^3", 5)), 1);
  EXPECT_EQ(genus(hs("x^4+y^4+z^4", 5)), 3);
  EXPECT_EQ(genus(hs("x^5+y^5+z^5", 3)), 6);
  try {
    genus(hs("x^3+y^3+z^3+w^3", 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACurve);
  }
}

TEST(HasseWitt, CubicExamples) {
  const HasseWittMatrix a = hasse_witt(hs("x^3+y^3+z^3", 7));
  ASSERT_EQ(a.basis.size(), 1u);
  EXPECT_EQ(a.basis[0], (Monomial{1, 1, 1}));
  EXPECT_EQ(a.entries(0, 0), 6);
  EXPECT_EQ(hasse_witt(hs("x^3+y^3+z^3", 5)).entries(0, 0), 0);
  EXPECT_EQ(hasse_witt(hs("x^3+y^3+z^3+x*y*z", 2)).entries(0, 0), 1);
}

TEST(HasseWitt, CubicMatchesClassicalInvariant) {
  std::mt19937_64 rng(8);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField F(p);
    for (int t = 0; t < 8; ++t) {
      const HomogPoly G = testutil::random_poly(F, 3, 3, rng);
      if (G.is_zero()) continue;
      const oracle::Poly power = oracle::power(testutil::to_oracle(G), static_cast<int>(p - 1), p, 3);
      const int e = static_cast<int>(p) - 1;
      EXPECT_EQ(hasse_witt(HypersurfaceSpec(G)).entries(0, 0), oracle::coeff(power, {e, e, e}));
    }
  }
}

TEST(HasseWitt, Errors) {
  try {
    hasse_witt(hs("x^2+y^2+z^2", 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GenusZero);
  }
  try {
    hasse_witt(hs("x^3+y^3+z^3+w^3", 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACurve);
  }
}

TEST(Ordinary, FermatExamples) {
  EXPECT_TRUE(is_ordinary(hs("x^3+y^3+z^3", 7)));
  EXPECT_FALSE(is_ordinary(hs("x^3+y^3+z^3", 5)));
  EXPECT_TRUE(is_ordinary(hs("x^4+y^4+z^4", 13)));
  EXPECT_TRUE(is_ordinary(hs("x^2+y^2+z^2", 3)));
}

TEST(Ordinary, FermatCongruencePattern) {
  for (int m : {3, 4, 5}) {
    const std::string text = "x^" + std::to_string(m) + "+y^" + std::to_string(m) + "+z^" + std::to_string(m);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
      if (static_cast<int>(p) % m == 0 || (m == 4 && p == 2)) continue;
      EXPECT_EQ(is_ordinary(hs(text, p)), p % static_cast<std::uint32_t>(m) == 1) << "m=" << m << " p=" << p;
    }
  }
}

TEST(Smooth, Examples) {
  EXPECT_TRUE(is_smooth(hs("x^3+y^3+z^3", 7)));
  EXPECT_FALSE(is_smooth(hs("x^3+y^3+z^3", 3)));
  EXPECT_TRUE(is_smooth(hs("x^3+y^3+z^3+2*x*y*z", 3)));
  EXPECT_FALSE(testutil::has_singular_point(poly("x^3+y^3+z^3+2*x*y*z", 3), 2));
  EXPECT_TRUE(is_smooth(hs("x0", 3)));
}

TEST(Smooth, HesseCubicOverF2IsSingular) {
  // x^3+y^3+z^3+xyz is singular at (1 : w : w^2), w a primitive cube root of unity in F_4.
  EXPECT_FALSE(is_smooth(hs("x^3+y^3+z^3+x*y*z", 2)));
  EXPECT_TRUE(testutil::has_singular_point(poly("x^3+y^3+z^3+x*y*z", 2), 2));
}

TEST(Smooth, AgreesWithPointSearch) {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField F(p);
    for (int t = 0; t < 20; ++t) {
      const HomogPoly G = testutil::random_poly(F, 3, 3, rng);
      if (G.is_zero()) continue;
      const bool smooth = is_smooth(HypersurfaceSpec(G));
      // A rational singular point over F_{p^k} (k <= 3) forces is_smooth = false.
      if (smooth)
        for (int k = 1; k <= 3; ++k) EXPECT_FALSE(testutil::has_singular_point(G, k)) << to_string(G);
    }
  }
}

TEST(Splitting, SplitCubicsAreOrdinary) {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField F(p);
    for (int t = 0; t < 25; ++t) {
      const HomogPoly G = testutil::random_poly(F, 3, 3, rng);
      if (G.is_zero()) continue;
      const HypersurfaceSpec h(G);
      if (!is_smooth(h)) continue;
      if (fedder_split_test(h)) EXPECT_TRUE(is_ordinary(h)) << to_string(G);
      if (fedder_split_test(h)) EXPECT_TRUE(degree_bound_check(h));
    }
  }
}
