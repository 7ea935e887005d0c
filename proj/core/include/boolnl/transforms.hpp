#pragma once

#include <cstdint>
#include <vector>

#include "boolnl/bitfn.hpp"

namespace boolnl {

// Tally of elementary steps taken by an instrumented kernel. Kernels only
// touch it when a non-null pointer is passed; the default path is the
// uninstrumented instantiation of the same code.
struct OpCounts {
  std::uint64_t butterflies = 0;  // pair steps of a transform
  std::uint64_t additions = 0;    // integer sums (x += y)
  std::uint64_t doublings = 0;    // multiplications by -2
  std::uint64_t offsets = 0;      // constant adjustments (2^i - 2x)

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Entry at idx(v) is F(v) = sum_y (-1)^(v.y + f(y)).
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;
};

// Entry at idx(u) is the coefficient lambda_u of x^u in the numerical
// normal form, so f(u) = sum over a below u of lambda_a.
struct NnfForm {
  int n = 0;
  std::vector<std::int64_t> coeffs;
};

AnfForm to_anf(const BooleanFunction& f, OpCounts* counts = nullptr);
BooleanFunction from_anf(const AnfForm& p, OpCounts* counts = nullptr);

WalshSpectrum walsh(const BooleanFunction& f, OpCounts* counts = nullptr);

NnfForm to_nnf(const BooleanFunction& f, OpCounts* counts = nullptr);

// Throws NotBooleanValued if some reconstructed value is not 0 or 1.
BooleanFunction nnf_to_table(const NnfForm& nnf, OpCounts* counts = nullptr);

// Rendering with integer coefficients, e.g. "x1 + x2 - 2*x1*x2"; term order
// as in format_anf.
std::string format_nnf(const NnfForm& nnf);

}  // namespace boolnl
