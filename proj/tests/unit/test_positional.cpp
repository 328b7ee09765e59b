#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "infoscale/numkernel.hpp"
#include "infoscale/positional.hpp"

using namespace infoscale;

namespace {

Matrix repeated_rows(std::span<const double> v, std::size_t n) {
  Matrix m(n, v.size());
  for (std::size_t i = 0; i < n; ++i) std::copy(v.begin(), v.end(), m.row(i).begin());
  return m;
}

std::vector<double> random_vector(SeededRng& rng, std::size_t d) {
  std::vector<double> v(d);
  for (double& x : v) x = rng.normal();
  return v;
}

}  // namespace

TEST(RopeRotate, ZeroPositionIsIdentity) {
  const std::vector<double> x{0.3, -1.2, 2.5, 0.7};
  EXPECT_EQ(rope_rotate(x, 0.0), x);
}

TEST(RopeRotate, PreservesNorm) {
  SeededRng rng(4);
  for (double p : {1.0, 17.0, 1000.0, 123456.0, 1e6}) {
    const auto x = random_vector(rng, 64);
    EXPECT_NEAR(norm(rope_rotate(x, p)), norm(x), 1e-12 * norm(x)) << p;
  }
}

TEST(RopeRotate, ScalarRotationOracle) {
  // pair t = 0 always has frequency 1: angle equals the position
  for (double p : {0.5, 1.0, 2.0, 3.0}) {
    const auto y = rope_rotate(std::vector<double>{1.0, 0.0}, p);
    EXPECT_NEAR(y[0], std::cos(p), 1e-15);
    EXPECT_NEAR(y[1], std::sin(p), 1e-15);
  }
  // pair t = 1 of d = 4 has frequency 10000^(-1/2) = 0.01, so position 314 is ~pi
  const auto y = rope_rotate(std::vector<double>{0.0, 0.0, 1.0, 0.0}, 314.0);
  EXPECT_NEAR(y[2], -1.0, 1e-5);
  EXPECT_NEAR(y[3], std::sin(3.14), 1e-12);
  EXPECT_NEAR(y[2], std::cos(3.14), 1e-12);
}

TEST(RopeRotate, Errors) {
  EXPECT_THROW(rope_rotate(std::vector<double>{1, 2, 3}, 1.0), ConfigError);
  EXPECT_THROW(rope_rotate(std::vector<double>{1, 2}, -1.0), ConfigError);
}

TEST(RopeScores, NoPEIdentityGram) {
  const Matrix eye = Matrix::identity(6);
  EXPECT_EQ(rope_score_matrix(eye, eye, NoPE{}), eye);
  EXPECT_THROW(rope_score_matrix(eye, Matrix(5, 6), NoPE{}), ConfigError);
  EXPECT_THROW(rope_score_matrix(Matrix(4, 3), Matrix(4, 3), RoPE{}), ConfigError);
}

TEST(RopeScores, RelativePositionOnly) {
  SeededRng rng(5);
  const std::size_t n = 96;
  const auto q = random_vector(rng, 32);
  const auto k = random_vector(rng, 32);
  for (const PositionalScheme& scheme :
       {PositionalScheme{RoPE{}}, PositionalScheme{PIScaledRoPE{}}, PositionalScheme{ReRoPE{10000.0, 16}}}) {
    const Matrix s = rope_score_matrix(repeated_rows(q, n), repeated_rows(k, n), scheme);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t shift : {1u, 7u, 40u}) {
          if (i + shift >= n || j + shift >= n) continue;
          ASSERT_NEAR(s(i, j), s(i + shift, j + shift), 1e-9)
              << scheme_name(scheme) << " " << i << "," << j << "+" << shift;
        }
      }
    }
  }
}

TEST(RopeScores, ReRoPEClampsBeyondWindow) {
  SeededRng rng(6);
  const std::size_t n = 80;
  const std::size_t w = 10;
  const auto q = random_vector(rng, 16);
  const auto k = random_vector(rng, 16);
  const Matrix s = rope_score_matrix(repeated_rows(q, n), repeated_rows(k, n), ReRoPE{10000.0, w});
  // explicit clamp oracle: rotate q by min(i - j, w), leave k at 0
  const double clamped = dot(rope_rotate(q, static_cast<double>(w)), k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + w <= i; ++j) {
      ASSERT_NEAR(s(i, j), clamped, 1e-12);
    }
  }
}

TEST(RopeScores, ReRoPEEqualsRoPEInsideWindow) {
  SeededRng rng(7);
  const Matrix q = sample_hypersphere(rng, 16, 1.0, 50);
  const Matrix k = sample_hypersphere(rng, 16, 1.0, 50);
  const std::size_t w = 12;
  const Matrix re = rope_score_matrix(q, k, ReRoPE{10000.0, w});
  const Matrix ro = rope_score_matrix(q, k, RoPE{});
  for (std::size_t i = 0; i < 50; ++i) {
    for (std::size_t j = 0; j < 50; ++j) {
      const std::size_t dist = i > j ? i - j : j - i;
      if (dist < w) ASSERT_EQ(re(i, j), ro(i, j));
    }
  }
}

TEST(RopeScores, PIFactorOneIsRoPE) {
  SeededRng rng(8);
  const Matrix q = sample_hypersphere(rng, 16, 1.0, 40);
  const Matrix k = sample_hypersphere(rng, 16, 1.0, 40);
  EXPECT_EQ(rope_score_matrix(q, k, PIScaledRoPE{10000.0, 1.0}), rope_score_matrix(q, k, RoPE{}));
}

TEST(RopeScores, PIMatchesExplicitInterpolation) {
  SeededRng rng(9);
  const Matrix q = sample_hypersphere(rng, 8, 1.0, 12);
  const Matrix k = sample_hypersphere(rng, 8, 1.0, 12);
  const Matrix s = rope_score_matrix(q, k, PIScaledRoPE{10000.0, 4.0});
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 12; ++j) {
      const double expected = dot(rope_rotate(q.row(i), i / 4.0), rope_rotate(k.row(j), j / 4.0));
      EXPECT_NEAR(s(i, j), expected, 1e-14);
    }
  }
}

TEST(Alibi, Examples) {
  EXPECT_EQ(alibi_slope(0, 8), 0.5);
  EXPECT_EQ(alibi_slope(7, 8), 1.0 / 256.0);
  const Matrix b = alibi_bias(6, 0, 8);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(b(i, i), 0.0);
    EXPECT_FALSE(std::signbit(b(i, i)));
    for (std::size_t j = i + 1; j < 6; ++j) EXPECT_EQ(b(i, j), -std::numeric_limits<double>::infinity());
  }
  EXPECT_EQ(b(3, 2), -0.5);
  EXPECT_THROW(alibi_bias(4, 8, 8), ConfigError);
}

TEST(Alibi, TranslationStructured) {
  const Matrix b = alibi_bias(20, 3, 16);
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (i + 1 < 20) EXPECT_EQ(b(i, j), b(i + 1, j + 1));
    }
  }
}

TEST(PositionalScheme, Validation) {
  EXPECT_THROW(validate(RoPE{1.0}), ConfigError);
  EXPECT_THROW(validate(PIScaledRoPE{10000.0, 0.5}), ConfigError);
  EXPECT_THROW(validate(ReRoPE{10000.0, 0}), ConfigError);
  EXPECT_THROW(validate(ALiBi{6, 0}), ConfigError);
  EXPECT_THROW(validate(ALiBi{8, 8}), ConfigError);
  EXPECT_NO_THROW(validate(ALiBi{1, 0}));
  EXPECT_TRUE(is_rotary(ReRoPE{}));
  EXPECT_FALSE(is_rotary(ALiBi{}));
  EXPECT_EQ(scheme_name(PIScaledRoPE{}), "pi");
}
