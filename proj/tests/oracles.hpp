#pragma once

// Slow reference computations straight from the definitions. Test-only; none
// of these share code with the butterfly kernels they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "boolnl/bitfn.hpp"

namespace boolnl::oracle {

inline int bit(const BooleanFunction& f, std::uint32_t u) { return f(u) ? 1 : 0; }

inline int parity(std::uint32_t x) { return std::popcount(x) & 1; }

inline BooleanFunction function_from_index(int n, std::uint64_t index) {
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (index >> i) & 1;
  return BooleanFunction::from_truth_table(bits);
}

// d(f, alpha) by pointwise comparison.
inline std::int64_t distance_to_affine(const BooleanFunction& f, bool a0, std::uint32_t linear) {
  std::int64_t d = 0;
  for (std::uint32_t u = 0; u < f.size(); ++u) {
    d += bit(f, u) != (int(a0) ^ parity(linear & u));
  }
  return d;
}

// F(v) = sum_y (-1)^(v.y + f(y)).
inline std::vector<std::int64_t> walsh_direct(const BooleanFunction& f) {
  std::vector<std::int64_t> out(f.size());
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    std::int64_t s = 0;
    for (std::uint32_t y = 0; y < f.size(); ++y) s += (parity(v & y) ^ bit(f, y)) ? -1 : 1;
    out[v] = s;
  }
  return out;
}

// lambda_u = (-1)^w(u) sum_{a below u} (-1)^w(a) f(a).
inline std::vector<std::int64_t> nnf_direct(const BooleanFunction& f) {
  std::vector<std::int64_t> out(f.size());
  for (std::uint32_t u = 0; u < f.size(); ++u) {
    std::int64_t s = 0;
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      if ((a & u) == a) s += (std::popcount(a) & 1 ? -1 : 1) * bit(f, a);
    }
    out[u] = (std::popcount(u) & 1 ? -1 : 1) * s;
  }
  return out;
}

// ANF coefficients b_v = xor of f(u) over u below v.
inline std::vector<std::uint8_t> anf_direct(const BooleanFunction& f) {
  std::vector<std::uint8_t> out(f.size());
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    int b = 0;
    for (std::uint32_t u = 0; u < f.size(); ++u) {
      if ((u & v) == u) b ^= bit(f, u);
    }
    out[v] = static_cast<std::uint8_t>(b);
  }
  return out;
}

// Nonlinearity polynomial from its definition: the sum over u of the
// integer normal form of f(u) + a0 + sum_i u_i a_i. The xor of k symbols has
// coefficient (-2)^(|S|-1) on every nonempty subset S; adding the constant 1
// maps the form g to 1 - g. Index layout matches NlPolynomial.
inline std::vector<std::int64_t> nlp_by_definition(const BooleanFunction& f) {
  const int n = f.num_vars();
  const std::size_t size = f.size();
  std::vector<std::int64_t> c(2 * size, 0);
  for (std::uint32_t u = 0; u < size; ++u) {
    const std::size_t support = (std::size_t{1} << n) | u;  // a0 always present
    const int sign = bit(f, u) ? -1 : 1;
    if (bit(f, u)) c[0] += 1;
    for (std::size_t s = support; s != 0; s = (s - 1) & support) {
      const int w = std::popcount(s);
      const std::int64_t xor_coeff = (w % 2 == 1 ? 1 : -1) * (std::int64_t{1} << (w - 1));
      c[s] += sign * xor_coeff;
    }
  }
  return c;
}

inline std::int64_t brute_nonlinearity(const BooleanFunction& f) {
  std::int64_t best = static_cast<std::int64_t>(f.size());
  for (int a0 = 0; a0 < 2; ++a0) {
    for (std::uint32_t l = 0; l < f.size(); ++l) {
      best = std::min(best, distance_to_affine(f, a0 != 0, l));
    }
  }
  return best;
}

}  // namespace boolnl::oracle
