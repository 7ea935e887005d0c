#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "boolnl/bitfn.hpp"
#include "boolnl/nlpoly.hpp"

namespace boolnl {

enum class Method { kNlp, kWalsh, kBrute, kViaJ, kViaN };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

// Nonlinearity together with every affine function at minimum distance,
// sorted by (a0, idx(linear)).
struct NlReport {
  int n = 0;
  std::int64_t value = 0;
  Method method = Method::kNlp;
  std::vector<AffineFunction> nearest;

  friend bool operator==(const NlReport&, const NlReport&) = default;
};

// Minimum of the nonlinearity polynomial over the Boolean cube. Affine
// functions need no special case: their minimum is 0.
NlReport nonlinearity_nlp(const BooleanFunction& f);

// Minimum value and its minimizers read off an already evaluated polynomial.
NlReport report_from_distances(const DistanceVector& d, Method method);

// N(f) = 2^(n-1) - max_v |F(v)| / 2. The nearest set takes a0 = 0 where the
// extreme coefficient is positive and a0 = 1 where it is negative.
NlReport nonlinearity_walsh(const BooleanFunction& f);

inline constexpr int kBruteMaxVars = 16;

// Distance to every one of the 2^(n+1) affine tables. Throws TooLarge for
// n > kBruteMaxVars.
NlReport nonlinearity_brute(const BooleanFunction& f);

// 2^(n-1) - 2^(n/2-1). Integral for even n; for odd n the value is
// irrational and only the floating value is meaningful.
struct CoveringBound {
  double value = 0;
  bool integral = false;
  std::int64_t integer_value = 0;  // valid when integral
};

CoveringBound covering_bound(int n);

}  // namespace boolnl
