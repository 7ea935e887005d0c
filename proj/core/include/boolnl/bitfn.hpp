#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#ifndef BOOLNL_MAX_VARS
#define BOOLNL_MAX_VARS 24
#endif

namespace boolnl {

inline constexpr int kMaxVars = BOOLNL_MAX_VARS;
static_assert(kMaxVars >= 1 && kMaxVars <= 30, "BOOLNL_MAX_VARS out of range");

// An n-bit point of F2^n. Bit (n - i) holds x_i, so x_n is the least
// significant bit and table order is plain binary counting order.
using Point = std::uint32_t;

// Bit position of variable x_var (1-based) inside a Point.
constexpr int var_bit(int var, int n) { return n - var; }

// Truth table of f : F2^n -> F2, packed 64 entries per word.
class BooleanFunction {
 public:
  // Zero function of n variables.
  explicit BooleanFunction(int n);

  // Table given one entry per element (nonzero means 1). Length must be 2^n.
  static BooleanFunction from_truth_table(std::span<const std::uint8_t> bits);
  static BooleanFunction from_words(int n, std::vector<std::uint64_t> words);

  int num_vars() const noexcept { return n_; }
  std::size_t size() const noexcept { return std::size_t{1} << n_; }

  bool operator()(Point u) const noexcept {
    return (words_[u >> 6] >> (u & 63)) & 1u;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::vector<std::uint8_t> bits() const;

  BooleanFunction complement() const;
  BooleanFunction operator^(const BooleanFunction& other) const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  BooleanFunction(int n, std::vector<std::uint64_t> words);

  int n_;
  std::vector<std::uint64_t> words_;
};

// Mask of valid table bits inside the (single) word of a table with n < 6.
std::uint64_t tail_mask(int n) noexcept;

bool evaluate(const BooleanFunction& f, Point u);
std::uint64_t weight(const BooleanFunction& f);
std::uint64_t distance(const BooleanFunction& f, const BooleanFunction& g);

// alpha(x) = a0 + a_1 x_1 + ... + a_n x_n over F2. `linear` uses the Point
// layout, so bit (n - i) is a_i.
struct AffineFunction {
  bool a0 = false;
  Point linear = 0;

  bool operator()(Point u) const noexcept {
    return a0 ^ (std::popcount(linear & u) & 1);
  }

  // Sort order (a0, idx(linear)).
  friend auto operator<=>(const AffineFunction&, const AffineFunction&) = default;
};

BooleanFunction affine_table(const AffineFunction& alpha, int n);

// Square-free polynomial over F2: sorted, duplicate-free monomial masks.
class AnfForm {
 public:
  explicit AnfForm(int n) : n_(n) {}

  // Duplicates cancel in pairs.
  static AnfForm from_monomials(int n, std::vector<Point> monomials);

  int num_vars() const noexcept { return n_; }
  std::span<const Point> monomials() const noexcept { return monomials_; }
  int degree() const noexcept;
  bool evaluate(Point u) const noexcept;

  friend bool operator==(const AnfForm&, const AnfForm&) = default;

 private:
  int n_;
  std::vector<Point> monomials_;
};

// Grammar: term ('+' term)*, term := '0' | '1' | var ('*' var)*, var := 'x' k.
// When n is not given it is the largest variable index that occurs (at least 1).
AnfForm parse_anf(std::string_view text, std::optional<int> n = std::nullopt);

// Canonical rendering: constant first, then by degree, then lexicographically
// by variable index. The zero polynomial renders as "0".
std::string format_anf(const AnfForm& p);

// Canonical term order: by degree, then lexicographically by variable index.
bool canonical_term_less(Point a, Point b) noexcept;

// Rendering of a single monomial mask, e.g. "x1*x3"; "1" for the empty mask.
std::string format_monomial(Point mask, int n, char var = 'x');

std::string format_affine(const AffineFunction& alpha, int n);
AffineFunction parse_affine(std::string_view text, int n);

// Truth-table text. Hex is most significant digit first with idx 0 in the
// top bit of the first digit; a "0x" prefix is optional when a non-binary
// digit occurs. Pure 0/1 strings (or a "0b" prefix) are read as binary.
// Tables of a single variable have no hex form and format as "0b.." binary.
BooleanFunction parse_truth_table(std::string_view text);
std::string format_truth_table_hex(const BooleanFunction& f);
std::string format_truth_table_bin(const BooleanFunction& f);

// Uniform i.i.d. table bits.
BooleanFunction random_function(int n, std::mt19937_64& rng);

}  // namespace boolnl
