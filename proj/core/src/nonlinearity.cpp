#include "boolnl/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "boolnl/errors.hpp"
#include "boolnl/transforms.hpp"

namespace boolnl {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kNlp:
      return "nlp";
    case Method::kWalsh:
      return "walsh";
    case Method::kBrute:
      return "brute";
    case Method::kViaJ:
      return "via-J";
    case Method::kViaN:
      return "via-N";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kNlp, Method::kWalsh, Method::kBrute, Method::kViaJ, Method::kViaN}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

NlReport report_from_distances(const DistanceVector& d, Method method) {
  NlReport r;
  r.n = d.n;
  r.method = method;
  r.value = *std::min_element(d.dists.begin(), d.dists.end());
  for (std::size_t j = 0; j < d.dists.size(); ++j) {
    if (d.dists[j] == r.value) r.nearest.push_back(DistanceVector::affine_at(j));
  }
  std::sort(r.nearest.begin(), r.nearest.end());
  return r;
}

NlReport nonlinearity_nlp(const BooleanFunction& f) {
  return report_from_distances(evaluate_all(nl_polynomial_fast(f)), Method::kNlp);
}

NlReport nonlinearity_walsh(const BooleanFunction& f) {
  const WalshSpectrum s = walsh(f);
  std::int64_t peak = 0;
  for (auto v : s.values) peak = std::max(peak, v < 0 ? -v : v);
  NlReport r;
  r.n = f.num_vars();
  r.method = Method::kWalsh;
  r.value = (std::int64_t{1} << (r.n - 1)) - peak / 2;
  for (std::size_t v = 0; v < s.values.size(); ++v) {
    if (s.values[v] == peak || s.values[v] == -peak) {
      r.nearest.push_back({s.values[v] < 0, static_cast<Point>(v)});
    }
  }
  std::sort(r.nearest.begin(), r.nearest.end());
  return r;
}

NlReport nonlinearity_brute(const BooleanFunction& f) {
  const int n = f.num_vars();
  if (n > kBruteMaxVars) {
    throw TooLarge("brute-force search is capped at n = " + std::to_string(kBruteMaxVars));
  }
  NlReport r;
  r.n = n;
  r.method = Method::kBrute;
  r.value = std::numeric_limits<std::int64_t>::max();
  for (int a0 = 0; a0 < 2; ++a0) {
    for (Point linear = 0; linear < (Point{1} << n); ++linear) {
      const AffineFunction alpha{a0 != 0, linear};
      const auto d = static_cast<std::int64_t>(distance(f, affine_table(alpha, n)));
      if (d < r.value) {
        r.value = d;
        r.nearest.clear();
      }
      if (d == r.value) r.nearest.push_back(alpha);
    }
  }
  return r;
}

CoveringBound covering_bound(int n) {
  if (n < 1) throw OutOfRange("covering bound needs n >= 1");
  CoveringBound b;
  b.value = std::ldexp(1.0, n - 1) - std::pow(2.0, n / 2.0 - 1.0);
  b.integral = n % 2 == 0;
  if (b.integral) {
    b.integer_value = (std::int64_t{1} << (n - 1)) - (std::int64_t{1} << (n / 2 - 1));
  }
  return b;
}

}  // namespace boolnl
