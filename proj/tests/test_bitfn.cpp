#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "boolnl/bitfn.hpp"
#include "boolnl/errors.hpp"
#include "oracles.hpp"

using namespace boolnl;

namespace {

const char* kFiveVarAnf =
    "x1*x3*x4*x5 + x1*x2*x4 + x1*x4*x5 + x2*x3*x4 + x2*x4*x5 + x3*x4*x5 + x4*x5";

BooleanFunction table(std::vector<std::uint8_t> bits) {
  return BooleanFunction::from_truth_table(bits);
}

// Table of an ANF by direct evaluation, independent of the Moebius butterfly.
BooleanFunction table_of(const AnfForm& p) {
  std::vector<std::uint8_t> bits(std::size_t{1} << p.num_vars());
  for (std::size_t u = 0; u < bits.size(); ++u) bits[u] = p.evaluate(static_cast<Point>(u));
  return BooleanFunction::from_truth_table(bits);
}

}  // namespace

TEST(BooleanFunction, FromTruthTable) {
  auto f = table({1, 1, 1, 0});
  EXPECT_EQ(f.num_vars(), 2);
  EXPECT_TRUE(f(0b00));
  EXPECT_FALSE(f(0b11));

  auto zero = table({0, 0});
  EXPECT_EQ(zero.num_vars(), 1);
  EXPECT_EQ(weight(zero), 0u);
  EXPECT_EQ(zero, BooleanFunction(1));
}

TEST(BooleanFunction, RejectsNonPowerOfTwo) {
  EXPECT_THROW(table({1, 0, 1}), NotPowerOfTwo);
  EXPECT_THROW(table({1}), NotPowerOfTwo);
  EXPECT_THROW(table({}), NotPowerOfTwo);
}

TEST(BooleanFunction, EvaluateReassemblesTable) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 9; ++n) {
    auto f = random_function(n, rng);
    std::vector<std::uint8_t> bits(f.size());
    for (Point u = 0; u < f.size(); ++u) bits[u] = evaluate(f, u);
    EXPECT_EQ(BooleanFunction::from_truth_table(bits), f);
  }
}

TEST(BooleanFunction, EvaluateMatchesAnf) {
  auto p = parse_anf("x1*x2+x1*x3+x2+1");
  auto f = table_of(p);
  EXPECT_FALSE(evaluate(f, 0b010));
  EXPECT_EQ(format_truth_table_bin(f), "11001010");
  EXPECT_EQ(weight(f), 4u);
}

TEST(BooleanFunction, Weight) {
  EXPECT_EQ(weight(table({1, 1, 1, 0})), 3u);
  EXPECT_EQ(weight(BooleanFunction(6)), 0u);
  EXPECT_EQ(weight(table_of(parse_anf(kFiveVarAnf))), 4u);
}

TEST(BooleanFunction, Distance) {
  auto f = table({1, 1, 1, 0});
  EXPECT_EQ(distance(f, f), 0u);
  EXPECT_EQ(distance(f, table({0, 1, 1, 0})), 1u);

  auto g = table_of(parse_anf("x1*x2+x1*x3+x2+1"));
  EXPECT_EQ(distance(g, affine_table(parse_affine("1 + x2", 3), 3)), 2u);

  EXPECT_THROW(distance(BooleanFunction(2), BooleanFunction(3)), DimensionMismatch);
}

TEST(BooleanFunction, DistanceIsAMetric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    auto f = random_function(n, rng);
    auto g = random_function(n, rng);
    auto h = random_function(n, rng);
    EXPECT_EQ(distance(f, g) == 0, f == g);
    EXPECT_EQ(distance(f, g), distance(g, f));
    EXPECT_LE(distance(f, h), distance(f, g) + distance(g, h));
  }
}

TEST(AffineTable, SmallCases) {
  EXPECT_EQ(affine_table({false, 0}, 3), BooleanFunction(3));
  EXPECT_EQ(weight(affine_table({true, 0}, 7)), 128u);
  EXPECT_EQ(affine_table({false, 0b11}, 2), table({0, 1, 1, 0}));
}

TEST(AffineTable, MatchesPointwiseDefinition) {
  for (int n = 1; n <= 8; ++n) {
    for (int a0 = 0; a0 < 2; ++a0) {
      for (Point l = 0; l < (Point{1} << n); l += (n > 6 ? 7 : 1)) {
        const AffineFunction alpha{a0 != 0, l};
        EXPECT_EQ(oracle::distance_to_affine(affine_table(alpha, n), alpha.a0, alpha.linear), 0)
            << "n=" << n << " l=" << l;
      }
    }
  }
}

TEST(Anf, ParseExamples) {
  auto p = parse_anf("x1*x2 + 1", 2);
  std::vector<Point> masks(p.monomials().begin(), p.monomials().end());
  EXPECT_EQ(masks, (std::vector<Point>{0b00, 0b11}));

  EXPECT_TRUE(parse_anf("x1 + x1", 1).monomials().empty());

  auto q = parse_anf(kFiveVarAnf, 5);
  EXPECT_EQ(q.monomials().size(), 7u);
  EXPECT_EQ(q.degree(), 4);
  EXPECT_EQ(parse_anf("0").degree(), 0);
}

TEST(Anf, InfersVariableCount) {
  EXPECT_EQ(parse_anf("x3 + 1").num_vars(), 3);
  EXPECT_EQ(parse_anf("1").num_vars(), 1);
}

TEST(Anf, ParseErrors) {
  EXPECT_THROW(parse_anf(""), ParseError);
  EXPECT_THROW(parse_anf("x1 +"), ParseError);
  EXPECT_THROW(parse_anf("x1 x2"), ParseError);
  EXPECT_THROW(parse_anf("y1"), ParseError);
  EXPECT_THROW(parse_anf("x"), ParseError);
  EXPECT_THROW(parse_anf("x3", 2), VariableOutOfRange);
  EXPECT_THROW(parse_anf("x0"), VariableOutOfRange);
  try {
    parse_anf("x1 + *x2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Anf, FormatIsCanonical) {
  EXPECT_EQ(format_anf(parse_anf("x2 + x1*x3 + 1 + x1*x2")), "1 + x2 + x1*x2 + x1*x3");
  EXPECT_EQ(format_anf(parse_anf("x1 + x1")), "0");
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<Point> ms;
    for (int k = 0; k < 6; ++k) ms.push_back(static_cast<Point>(rng() & ((1u << n) - 1)));
    auto p = AnfForm::from_monomials(n, ms);
    EXPECT_EQ(parse_anf(format_anf(p), n), p);
  }
}

TEST(Affine, FormatAndParse) {
  EXPECT_EQ(format_affine({true, 0b110}, 3), "1 + x1 + x2");
  EXPECT_EQ(format_affine({false, 0}, 5), "0");
  EXPECT_EQ(parse_affine("x1 + x3", 3), (AffineFunction{false, 0b101}));
  EXPECT_THROW(parse_affine("x1*x2", 2), ParseError);
}

TEST(TruthTableText, HexLayout) {
  // idx 0 sits in the top bit of the first digit.
  EXPECT_EQ(parse_truth_table("0x6"), table({0, 1, 1, 0}));
  EXPECT_EQ(parse_truth_table("0xe"), table({1, 1, 1, 0}));
  EXPECT_EQ(format_truth_table_hex(table({1, 1, 0, 1, 1, 0, 0, 0})), "0xd8");
  EXPECT_EQ(parse_truth_table("d8"), table({1, 1, 0, 1, 1, 0, 0, 0}));
  EXPECT_EQ(format_truth_table_hex(table({0, 1})), "0b01");
}

TEST(TruthTableText, Binary) {
  EXPECT_EQ(parse_truth_table("0110"), table({0, 1, 1, 0}));
  EXPECT_EQ(parse_truth_table("0b10"), table({1, 0}));
  EXPECT_THROW(parse_truth_table("011"), NotPowerOfTwo);
  EXPECT_THROW(parse_truth_table("0xzz"), ParseError);
  EXPECT_THROW(parse_truth_table("0x"), ParseError);
}

TEST(TruthTableText, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 12; ++n) {
    auto f = random_function(n, rng);
    EXPECT_EQ(parse_truth_table(format_truth_table_hex(f)), f);
    EXPECT_EQ(parse_truth_table("0b" + format_truth_table_bin(f)), f);
  }
}

TEST(BooleanFunction, ComplementAndXor) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 8; ++n) {
    auto f = random_function(n, rng);
    EXPECT_EQ(weight(f.complement()), f.size() - weight(f));
    EXPECT_EQ(f ^ f, BooleanFunction(n));
    EXPECT_EQ(f ^ affine_table({true, 0}, n), f.complement());
  }
}

TEST(BooleanFunction, VariableCountLimits) {
  EXPECT_THROW(BooleanFunction(0), OutOfRange);
  EXPECT_THROW(BooleanFunction(kMaxVars + 1), OutOfRange);
}
