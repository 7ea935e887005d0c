#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "boolnl/bitfn.hpp"
#include "boolnl/errors.hpp"
#include "boolnl/nonlinearity.hpp"
#include "boolnl/transforms.hpp"
#include "oracles.hpp"

using namespace boolnl;

namespace {

BooleanFunction anf(const char* text) { return from_anf(parse_anf(text)); }

std::vector<AffineFunction> parse_set(std::vector<const char*> texts, int n) {
  std::vector<AffineFunction> out;
  for (auto* t : texts) out.push_back(parse_affine(t, n));
  std::sort(out.begin(), out.end());
  return out;
}

void expect_engines_agree(const BooleanFunction& f) {
  auto a = nonlinearity_nlp(f);
  auto b = nonlinearity_walsh(f);
  auto c = nonlinearity_brute(f);
  ASSERT_EQ(a.value, b.value);
  ASSERT_EQ(a.value, c.value);
  ASSERT_EQ(a.nearest, b.nearest);
  ASSERT_EQ(a.nearest, c.nearest);
}

}  // namespace

TEST(Nonlinearity, ThreeVariableExample) {
  auto f = anf("x1*x2+x1*x3+x2+1");
  auto r = nonlinearity_nlp(f);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.nearest, parse_set({"1 + x1 + x2", "1 + x2", "1 + x3", "x1 + x3"}, 3));
  expect_engines_agree(f);
}

TEST(Nonlinearity, FiveVariableExample) {
  auto f = anf("x1*x3*x4*x5 + x1*x2*x4 + x1*x4*x5 + x2*x3*x4 + x2*x4*x5 + x3*x4*x5 + x4*x5");
  auto r = nonlinearity_walsh(f);
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.nearest, (std::vector<AffineFunction>{{false, 0}}));
  expect_engines_agree(f);
}

TEST(Nonlinearity, AffineFunctionsAreZero) {
  for (int n = 1; n <= 6; ++n) {
    for (Point l = 0; l < (Point{1} << n); ++l) {
      auto f = affine_table({true, l}, n);
      auto r = nonlinearity_nlp(f);
      ASSERT_EQ(r.value, 0);
      ASSERT_EQ(r.nearest, (std::vector<AffineFunction>{{true, l}}));
    }
  }
}

TEST(Nonlinearity, WalshUsesAbsolutePeak) {
  // The spectrum of 1 + x1 peaks at -4; ignoring the sign would miss it.
  auto r = nonlinearity_walsh(from_anf(parse_anf("x1 + 1", 2)));
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.nearest, (std::vector<AffineFunction>{{true, 0b10}}));
}

TEST(Nonlinearity, ExhaustiveSmallAgreement) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (1u << n)); ++idx) {
      auto f = oracle::function_from_index(n, idx);
      expect_engines_agree(f);
      ASSERT_EQ(nonlinearity_nlp(f).value, oracle::brute_nonlinearity(f));
    }
  }
}

TEST(Nonlinearity, RandomAgreement) {
  std::mt19937_64 rng(41);
  for (int n = 4; n <= 12; ++n) {
    for (int k = 0; k < 20; ++k) expect_engines_agree(random_function(n, rng));
  }
}

TEST(Nonlinearity, InvariantUnderAffineShift) {
  std::mt19937_64 rng(42);
  for (int n = 2; n <= 10; ++n) {
    auto f = random_function(n, rng);
    const AffineFunction shift{static_cast<bool>(rng() & 1), static_cast<Point>(rng() & ((1u << n) - 1))};
    EXPECT_EQ(nonlinearity_nlp(f).value, nonlinearity_nlp(f ^ affine_table(shift, n)).value);
  }
}

TEST(Nonlinearity, BentFunctions) {
  EXPECT_EQ(nonlinearity_nlp(anf("x1*x2")).value, 1);
  EXPECT_EQ(nonlinearity_nlp(anf("x1*x2 + x3*x4")).value, 6);
  EXPECT_EQ(nonlinearity_walsh(anf("x1*x2 + x3*x4 + x5*x6")).value, 28);
}

TEST(Nonlinearity, BruteCap) {
  EXPECT_THROW(nonlinearity_brute(BooleanFunction(kBruteMaxVars + 1)), TooLarge);
}

TEST(Nonlinearity, MethodNames) {
  for (Method m : {Method::kNlp, Method::kWalsh, Method::kBrute, Method::kViaJ, Method::kViaN}) {
    EXPECT_EQ(parse_method(method_name(m)), m);
  }
  EXPECT_FALSE(parse_method("fast").has_value());
}

TEST(CoveringBound, Values) {
  EXPECT_EQ(covering_bound(2).integer_value, 1);
  EXPECT_EQ(covering_bound(4).integer_value, 6);
  EXPECT_TRUE(covering_bound(6).integral);
  EXPECT_FALSE(covering_bound(3).integral);
  EXPECT_NEAR(covering_bound(3).value, 4 - 1.41421356, 1e-6);
  EXPECT_NEAR(covering_bound(1).value, 1 - 0.70710678, 1e-6);
  EXPECT_THROW(covering_bound(0), OutOfRange);
}

TEST(CoveringBound, HoldsOnRandomFunctions) {
  std::mt19937_64 rng(43);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k < 10; ++k) {
      EXPECT_LE(static_cast<double>(nonlinearity_nlp(random_function(n, rng)).value),
                covering_bound(n).value);
    }
  }
}
