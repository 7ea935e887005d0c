#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolnl/bitfn.hpp"
#include "boolnl/transforms.hpp"

namespace boolnl {

/// Integer nonlinearity polynomial of a Boolean function f.
///
/// A multilinear polynomial in a0, a1, ..., an whose value at a Boolean point
/// (a0, a) is the Hamming distance between f and the affine function
/// a0 + a.x. Coefficients are stored with a0 as the high index bit: index k
/// in [0, 2^n) holds the coefficient of a^k (a_n least significant, same
/// layout as Point), index 2^n + k holds the coefficient of a0 * a^k.
///
/// Construction checks the half-storage identities
///   c[0] = w(f),  c[2^n] = 2^n - 2 c[0],  c[2^n + k] = -2 c[k] (k > 0)
/// and the magnitude bound |c| <= 2^n, throwing InvariantViolation otherwise.
class NlPolynomial {
 public:
  NlPolynomial(int n, std::vector<std::int64_t> coeffs);

  int num_vars() const noexcept { return n_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  std::int64_t coeff(bool a0, Point monomial) const noexcept {
    return coeffs_[(std::size_t{a0} << n_) | monomial];
  }
  std::int64_t constant() const noexcept { return coeffs_[0]; }

  // Value at the Boolean point (a0, linear), by direct summation.
  std::int64_t evaluate(const AffineFunction& point) const noexcept;

  friend bool operator==(const NlPolynomial&, const NlPolynomial&) = default;

 private:
  int n_;
  std::vector<std::int64_t> coeffs_;
};

/// Polynomial value at every Boolean point. Entry 2 * idx(a) + a0 is the
/// distance from f to the affine function (a0, a).
struct DistanceVector {
  int n = 0;
  std::vector<std::int64_t> dists;

  std::int64_t at(const AffineFunction& alpha) const {
    return dists[(std::size_t{alpha.linear} << 1) | std::size_t{alpha.a0}];
  }
  static AffineFunction affine_at(std::size_t index) {
    return AffineFunction{(index & 1) != 0, static_cast<Point>(index >> 1)};
  }
};

/// Butterfly construction in n 2^(n-1) pair steps. Per pass i the low entry
/// of each pair accumulates the high one, and the high entry becomes
/// 2^i - 2x at the first position of a block and -2x elsewhere; the a0 half
/// is filled from the a0-free half afterwards. With `counts`, additions are
/// the first-phase pair sums, offsets the 2^i adjustments, and doublings all
/// multiplications by -2 in both phases.
NlPolynomial nl_polynomial_fast(const BooleanFunction& f, OpCounts* counts = nullptr);

/// Closed-form construction, independent of the butterfly:
///   c_0 = w(f),
///   c_v = (-2)^(w(v)-1) * (2 * sum_{u >= v~} f(u) - 2^(n - w(v~)))  for v != 0,
/// where v~ is v without the a0 bit. Quadratic in 2^n; intended as an oracle.
NlPolynomial nl_polynomial_direct(const BooleanFunction& f);

/// Evaluates the polynomial at all 2^(n+1) Boolean points with the subset-sum
/// butterfly, (n + 1) 2^n additions.
DistanceVector evaluate_all(const NlPolynomial& p, OpCounts* counts = nullptr);

/// Polynomial of the complemented function: constant c0 -> 2^n - c0, every
/// other coefficient negated.
NlPolynomial complement_nlp(const NlPolynomial& p);

// One-line rendering, terms in descending coefficient index, constant always
// last, e.g. "4*a0*a1*a2 - 2*a0 - 2*a1*a2 + 3". `constant_shift` is subtracted
// from the constant term.
std::string format_nlp_expression(const NlPolynomial& p, std::int64_t constant_shift = 0);

// Serialization: one "c*a0*a2"-style term per line in the same order, zero
// coefficients omitted, constant line always present.
std::string format_nlp_terms(const NlPolynomial& p);
NlPolynomial parse_nlp_terms(std::string_view text, int n);

/// Multilinear integer polynomial over named 0/1 symbols.
struct IntTerm {
  std::int64_t coeff = 0;
  std::uint32_t mask = 0;  // bit i selects symbol i
};

struct IntPolynomial {
  std::vector<std::string> symbols;
  std::vector<IntTerm> terms;

  std::int64_t evaluate(std::uint32_t point) const noexcept;
  std::string to_string() const;
};

inline constexpr std::size_t kXorExpandCap = 20;

/// Integer polynomial equal to b_1 xor ... xor b_k on {0,1}^k:
///   sum over nonempty v of (-2)^(w(v)-1) * b^v.
/// Throws CapExceeded when k is 0 or above kXorExpandCap.
IntPolynomial xor_expand(std::span<const std::string> symbols);

}  // namespace boolnl
