#include <gtest/gtest.h>

#include <random>

#include "polydiag/formulas.hpp"
#include "reference_tables.hpp"

using namespace polydiag;
using namespace polydiag::formulas;

TEST(Delta, Examples) {
  EXPECT_EQ(formulas::delta(2, 6), 1);
  EXPECT_EQ(formulas::delta(4, 6), 0);
  EXPECT_EQ(formulas::delta(30, 420), 1);
  EXPECT_THROW(formulas::delta(0, 6), std::invalid_argument);
}

TEST(Basis, TagsRoundTrip) {
  EXPECT_EQ(kBasis.size(), 28u);
  for (Tag t : kBasis) EXPECT_EQ(parse_tag(tag_name(t)), t);
  EXPECT_THROW(parse_tag("d7"), std::invalid_argument);
  // d24(n-6) is 1 exactly when n = 6 mod 24.
  EXPECT_EQ(basis_value(Tag::d24_shift6, 30), Rational(1));
  EXPECT_EQ(basis_value(Tag::d24_shift6, 6), Rational(1));
  EXPECT_EQ(basis_value(Tag::d24_shift6, 24), Rational(0));
  EXPECT_EQ(basis_value(Tag::n2_d2, 10), Rational(100));
  EXPECT_EQ(basis_value(Tag::n2_d2, 11), Rational(0));
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(I_closed(7), 35);
  EXPECT_EQ(I_closed(30), 16801);
  EXPECT_EQ(I_closed(4), 1);
  EXPECT_EQ(R_closed(3), 1);
  EXPECT_EQ(R_closed(12), 444);
  EXPECT_EQ(R_closed(30), 21480);
  EXPECT_EQ(ak_closed(7, 30), 30);
  EXPECT_EQ(ak_closed(4, 420), 273 * 420);
  EXPECT_EQ(ak_closed(3, 9), 0);
  EXPECT_EQ(b2_closed(6), 12);
  EXPECT_THROW(I_closed(2), std::invalid_argument);
}

TEST(ClosedForms, MatchSmallTable) {
  for (const auto& row : testdata::kSmallCounts) {
    const std::int64_t n = row[0];
    for (int k = 2; k <= 7; ++k) EXPECT_EQ(ak_closed(k, n), row[static_cast<std::size_t>(k - 1)]) << n;
    EXPECT_EQ(I_closed(n), row[7]) << n;
    EXPECT_EQ(R_closed(n), row[8]) << n;
  }
}

TEST(ClosedForms, MatchSliceTable) {
  for (const auto& row : testdata::kSliceCounts) {
    const std::int64_t n = row[0];
    for (int k = 2; k <= 7; ++k) EXPECT_EQ(ak_closed(k, n), row[static_cast<std::size_t>(k - 1)] * n) << n;
    EXPECT_EQ(I_closed(n) - 1, row[7] * n) << n;
  }
}

TEST(ClosedForms, InvariantsUpToOneThousand) {
  for (std::int64_t n = 3; n <= 1000; ++n) {
    std::map<int, std::int64_t> a;
    std::int64_t sum = 0, sum_k = 0;
    for (int k = 2; k <= 7; ++k) {
      a[k] = ak_closed(k, n);
      ASSERT_GE(a[k], 0) << n;
      sum += a[k];
      sum_k += k * a[k];
    }
    EXPECT_EQ(sum + polydiag::delta(2, n), I_closed(n)) << n;
    if (n % 2) {
      EXPECT_EQ(I_closed(n), choose(n, 4)) << n;
    }
    const std::int64_t two_e = n * (n - 1) + n * polydiag::delta(2, n) + 2 * sum_k;
    ASSERT_EQ(two_e % 2, 0);
    EXPECT_EQ(R_closed(n), two_e / 2 - (n + I_closed(n)) + 1) << n;
    EXPECT_EQ(bk_from_ak(a, 2), b2_closed(n)) << n;
    EXPECT_EQ(bk_from_ak(a, 8), 0) << n;
    EXPECT_EQ(ak_from_bk({{2, bk_from_ak(a, 2)}, {3, bk_from_ak(a, 3)}, {4, bk_from_ak(a, 4)}, {5, bk_from_ak(a, 5)},
                          {6, bk_from_ak(a, 6)}, {7, bk_from_ak(a, 7)}}),
              a)
        << n;
  }
}

TEST(BinomialTransform, Examples) {
  const std::map<int, std::int64_t> a12{{2, 228}, {3, 60}, {4, 12}};
  EXPECT_EQ(bk_from_ak(a12, 2), 228 + 3 * 60 + 6 * 12);
  EXPECT_EQ(bk_from_ak(a12, 2), b2_closed(12));
  const std::map<int, std::int64_t> a30{{2, 13800}, {3, 2250}, {4, 420}, {5, 180}, {6, 120}, {7, 30}};
  std::map<int, std::int64_t> b;
  for (int k = 2; k <= 7; ++k) b[k] = bk_from_ak(a30, k);
  EXPECT_EQ(ak_from_bk(b), a30);
  EXPECT_THROW(ak_from_bk({{2, 1}, {3, 1}}), std::domain_error);
}

TEST(Tame, EvaluationExamples) {
  EXPECT_EQ(tame_eval(TameFunction{}, 17), Rational(0));
  TameFunction a7;
  a7.set(Tag::d30, 1);
  a7.set(Tag::d60, 4);
  EXPECT_EQ(tame_eval(a7, 60), Rational(5));
  EXPECT_EQ(tame_eval(a7, 90), Rational(1));
  EXPECT_EQ(tame_eval(a7, 7), Rational(0));
  EXPECT_EQ(tame_eval(ak_over_n(7), 60), Rational(5));
}

TEST(Tame, AnchorRank) {
  EXPECT_EQ(default_anchors().size(), 28u);
  EXPECT_EQ(anchor_rank(default_anchors()), 28u);
  std::vector<std::int64_t> without_102(default_anchors().begin(), default_anchors().end() - 1);
  EXPECT_EQ(anchor_rank(without_102), 27u);
}

TEST(Tame, FitRecoversRandomFunctions) {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 100; ++iter) {
    TameFunction f;
    for (Tag t : kBasis) {
      if (rng() % 3 == 0) continue;
      const long long num = static_cast<long long>(rng() % 41) - 20;
      const long long den = 1 + static_cast<long long>(rng() % 48);
      f.set(t, rat(num, den));
    }
    std::map<std::int64_t, Rational> samples;
    for (std::int64_t n : default_anchors()) samples[n] = tame_eval(f, n);
    const TameFunction g = tame_fit(samples);
    EXPECT_EQ(g.coefficients, f.coefficients) << iter;
  }
}

TEST(Tame, FitClosedFormsFromSamples) {
  for (int k = 2; k <= 7; ++k) {
    std::map<std::int64_t, Rational> samples;
    for (std::int64_t n : default_anchors()) samples[n] = rat(ak_closed(k, n), n);
    EXPECT_EQ(tame_fit(samples).coefficients, ak_over_n(k).coefficients) << k;
  }
  std::map<std::int64_t, Rational> zeros;
  for (std::int64_t n : default_anchors()) zeros[n] = 0;
  EXPECT_TRUE(tame_fit(zeros).is_zero());
}

TEST(Tame, FitErrors) {
  std::map<std::int64_t, Rational> without_102;
  for (std::size_t i = 0; i + 1 < default_anchors().size(); ++i) without_102[default_anchors()[i]] = 1;
  try {
    tame_fit(without_102);
    FAIL() << "expected insufficient anchors";
  } catch (const FitError& e) {
    EXPECT_EQ(e.kind(), FitError::Kind::insufficient_anchors);
  }
  std::map<std::int64_t, Rational> quartic;
  for (std::int64_t n : default_anchors()) quartic[n] = Rational(n * n * n * n);
  for (std::int64_t n : {11, 13, 17}) quartic[n] = Rational(n * n * n * n);
  try {
    tame_fit(quartic);
    FAIL() << "expected not tame";
  } catch (const FitError& e) {
    EXPECT_EQ(e.kind(), FitError::Kind::not_tame);
  }
}
