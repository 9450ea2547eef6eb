#include <gtest/gtest.h>

#include <random>

#include "hchain/exact_linalg.hpp"
#include "oracles.hpp"

using namespace hchain;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rational(num(rng), den(rng));
  return m;
}

std::vector<std::vector<Rational>> nested(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

}  // namespace

TEST(Rational, SerialisesAsPOverQ) {
  EXPECT_EQ(to_string(rational(-4, 3)), "-4/3");
  EXPECT_EQ(to_string(rational(6, 3)), "2");
  EXPECT_EQ(to_string(rational(3, -6)), "-1/2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("-4/3"), rational(-4, 3));
  EXPECT_EQ(parse_rational(" 5 "), Rational(5));
  EXPECT_EQ(parse_rational("+6/4"), rational(3, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("3/"), ParseError);
}

TEST(Rational, CanonicalFormProperty) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-100000, 100000), den(-5000, 5000);
  for (int k = 0; k < 2000; ++k) {
    long q = den(rng);
    if (q == 0) q = 1;
    const Rational r = parse_rational(std::to_string(num(rng)) + "/" + std::to_string(q));
    EXPECT_GT(denominator_of(r), 0);
    EXPECT_EQ(gcd(abs(numerator_of(r)), denominator_of(r)), numerator_of(r) == 0 ? denominator_of(r) : Integer(1));
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(Det, Examples) {
  EXPECT_EQ(det(RationalMatrix{{-1, -1}, {1, -2}}), 3);
  EXPECT_EQ(det(RationalMatrix::identity(3)), 1);
  EXPECT_EQ(det(RationalMatrix{{-6}}), -6);
}

TEST(Det, NeedsPivotingAndDetectsSingular) {
  EXPECT_EQ(det(RationalMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det(RationalMatrix{{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}), -6);
  EXPECT_EQ(det(RationalMatrix{{1, 1}, {2, 2}}), 0);
  EXPECT_EQ(det(RationalMatrix{{rational(1, 2), rational(1, 3)}, {rational(1, 4), rational(1, 5)}}),
            rational(1, 10) - rational(1, 12));
}

TEST(Det, RejectsNonSquare) {
  EXPECT_THROW(det(RationalMatrix(2, 3)), DimensionError);
  EXPECT_THROW(det(RationalMatrix()), DimensionError);
}

TEST(Det, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 20; ++k) {
      const RationalMatrix m = random_matrix(rng, n);
      EXPECT_EQ(det(m), oracle::cofactor_det(nested(m)));
    }
}

TEST(Det, IsMultiplicative) {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 30; ++k) {
      const RationalMatrix a = random_matrix(rng, n), b = random_matrix(rng, n);
      EXPECT_EQ(det(a * b), det(a) * det(b));
    }
}

TEST(Solve, Examples) {
  EXPECT_EQ(solve(RationalMatrix{{-1, -1}, {1, -2}}, {-5, -4}), (RationalVector{2, 3}));
  const RationalVector b{rational(1, 2), -7, 4};
  EXPECT_EQ(solve(RationalMatrix::identity(3), b), b);
  EXPECT_THROW(solve(RationalMatrix{{1, 1}, {2, 2}}, {1, 5}), SingularMatrixError);
}

TEST(Solve, RejectsBadShapes) {
  EXPECT_THROW(solve(RationalMatrix(2, 3), {1, 2}), DimensionError);
  EXPECT_THROW(solve(RationalMatrix::identity(2), {1, 2, 3}), DimensionError);
}

TEST(Solve, SolutionSatisfiesSystem) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> v(-9, 9);
  int solved = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 30; ++k) {
      const RationalMatrix m = random_matrix(rng, n);
      RationalVector b(n);
      for (auto& x : b) x = v(rng);
      if (det(m) == 0) {
        EXPECT_THROW(solve(m, b), SingularMatrixError);
        continue;
      }
      EXPECT_EQ(m * solve(m, b), b);
      ++solved;
    }
  EXPECT_GT(solved, 100);
}

TEST(Inverse, ProductIsIdentity) {
  EXPECT_EQ(inverse(RationalMatrix{{-1, -1}, {1, -2}}),
            (RationalMatrix{{rational(-2, 3), rational(1, 3)}, {rational(-1, 3), rational(-1, 3)}}));
  EXPECT_THROW(inverse(RationalMatrix{{1, 1}, {2, 2}}), SingularMatrixError);
  std::mt19937_64 rng(29);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 20; ++k) {
      const RationalMatrix m = random_matrix(rng, n);
      if (det(m) == 0) continue;
      EXPECT_EQ(m * inverse(m), RationalMatrix::identity(n));
    }
}
