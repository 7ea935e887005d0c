#include "boolnl/nlpoly.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

#include "boolnl/errors.hpp"
#include "butterfly.hpp"

namespace boolnl {
namespace {

using detail::with_tally;

std::int64_t pow_neg2(int e) {
  std::int64_t v = std::int64_t{1} << e;
  return (e & 1) ? -v : v;
}

template <class Tally>
void nl_butterfly(std::vector<std::int64_t>& c, int n, Tally& tally) {
  const std::size_t size = std::size_t{1} << n;
  for (int i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    const auto offset = static_cast<std::int64_t>(half);
    for (std::size_t b = 0; b < size; b += 2 * half) {
      std::int64_t* lo = c.data() + b;
      std::int64_t* hi = lo + half;
      lo[0] += hi[0];
      tally.add();
      hi[0] = offset - 2 * hi[0];
      tally.doubling();
      tally.offset();
      for (std::size_t x = 1; x < half; ++x) {
        lo[x] += hi[x];
        tally.add();
        hi[x] = -2 * hi[x];
        tally.doubling();
      }
    }
  }
  // Monomials containing a0.
  c[size] = static_cast<std::int64_t>(size) - 2 * c[0];
  tally.doubling();
  tally.offset();
  for (std::size_t k = 1; k < size; ++k) {
    c[size + k] = -2 * c[k];
    tally.doubling();
  }
}

std::string nlp_monomial(std::size_t index, int n) {
  std::string out;
  if ((index >> n) & 1) out = "a0";
  for (int i = 1; i <= n; ++i) {
    if (index & (std::size_t{1} << var_bit(i, n))) {
      if (!out.empty()) out += '*';
      out += 'a';
      out += std::to_string(i);
    }
  }
  return out;
}

std::string nlp_term(std::int64_t c, std::size_t index, int n) {
  if (index == 0) return std::to_string(c);
  return std::to_string(c) + "*" + nlp_monomial(index, n);
}

}  // namespace

NlPolynomial::NlPolynomial(int n, std::vector<std::int64_t> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1 || n > kMaxVars) throw OutOfRange("variable count out of range");
  const std::size_t size = std::size_t{1} << n;
  if (coeffs_.size() != 2 * size) {
    throw DimensionMismatch("nonlinearity polynomial needs 2^(n+1) coefficients");
  }
  const auto bound = static_cast<std::int64_t>(size);
  if (coeffs_[0] < 0 || coeffs_[0] > bound) {
    throw InvariantViolation("constant term is not a weight in [0, 2^n]");
  }
  if (coeffs_[size] != bound - 2 * coeffs_[0]) {
    throw InvariantViolation("coefficient of a0 differs from 2^n - 2 w(f)");
  }
  for (std::size_t k = 0; k < size; ++k) {
    if (std::llabs(coeffs_[k]) > bound || std::llabs(coeffs_[size + k]) > bound) {
      throw InvariantViolation("coefficient exceeds 2^n in magnitude at index " +
                               std::to_string(k));
    }
    if (k > 0 && coeffs_[size + k] != -2 * coeffs_[k]) {
      throw InvariantViolation("a0 coefficient is not -2 times its partner at index " +
                               std::to_string(k));
    }
  }
}

std::int64_t NlPolynomial::evaluate(const AffineFunction& point) const noexcept {
  const std::size_t top = (std::size_t{point.a0} << n_) | point.linear;
  std::int64_t sum = coeffs_[0];
  for (std::size_t v = top; v != 0; v = (v - 1) & top) sum += coeffs_[v];
  return sum;
}

NlPolynomial nl_polynomial_fast(const BooleanFunction& f, OpCounts* counts) {
  const int n = f.num_vars();
  const std::size_t size = f.size();
  std::vector<std::int64_t> c(2 * size);
  for (std::size_t i = 0; i < size; ++i) c[i] = f(static_cast<Point>(i));
  with_tally(counts, [&](auto& tally) { nl_butterfly(c, n, tally); });
  return NlPolynomial(n, std::move(c));
}

NlPolynomial nl_polynomial_direct(const BooleanFunction& f) {
  const int n = f.num_vars();
  const std::size_t size = f.size();
  // above[k] = sum of f(u) over u containing k, by submask enumeration.
  std::vector<std::int64_t> above(size, 0);
  for (std::size_t u = 0; u < size; ++u) {
    if (!f(static_cast<Point>(u))) continue;
    for (std::size_t k = u;; k = (k - 1) & u) {
      ++above[k];
      if (k == 0) break;
    }
  }
  std::vector<std::int64_t> c(2 * size);
  for (std::size_t k = 0; k < size; ++k) {
    const int wk = std::popcount(k);
    // (-2)^w * (S - 2^(n-wk) / 2) rescaled to integers.
    const std::int64_t twice_centered = 2 * above[k] - (std::int64_t{1} << (n - wk));
    if (k != 0) c[k] = -pow_neg2(wk - 1) * twice_centered;
    c[size + k] = -pow_neg2(wk) * twice_centered;
  }
  c[0] = above[0];
  return NlPolynomial(n, std::move(c));
}

DistanceVector evaluate_all(const NlPolynomial& p, OpCounts* counts) {
  const int n = p.num_vars();
  std::vector<std::int64_t> v(p.coeffs().begin(), p.coeffs().end());
  with_tally(counts, [&](auto& tally) {
    detail::butterfly(std::span<std::int64_t>(v),
                      [](std::int64_t& lo, std::int64_t& hi) { hi += lo; }, tally);
  });
  const std::size_t size = std::size_t{1} << n;
  DistanceVector out;
  out.n = n;
  out.dists.resize(2 * size);
  for (std::size_t k = 0; k < size; ++k) {
    out.dists[2 * k] = v[k];
    out.dists[2 * k + 1] = v[size + k];
  }
  return out;
}

NlPolynomial complement_nlp(const NlPolynomial& p) {
  std::vector<std::int64_t> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : c) x = -x;
  c[0] = (std::int64_t{1} << p.num_vars()) - p.constant();
  return NlPolynomial(p.num_vars(), std::move(c));
}

std::string format_nlp_expression(const NlPolynomial& p, std::int64_t constant_shift) {
  const int n = p.num_vars();
  auto c = p.coeffs();
  std::string out;
  auto append = [&](std::int64_t coeff, std::size_t index) {
    const std::string mag = std::to_string(coeff < 0 ? -coeff : coeff);
    const std::string body = index == 0 ? mag : mag + "*" + nlp_monomial(index, n);
    if (out.empty()) {
      out = (coeff < 0 ? "-" : "") + body;
    } else {
      out += (coeff < 0 ? " - " : " + ") + body;
    }
  };
  for (std::size_t index = c.size() - 1; index > 0; --index) {
    if (c[index] != 0) append(c[index], index);
  }
  append(c[0] - constant_shift, 0);
  return out;
}

std::string format_nlp_terms(const NlPolynomial& p) {
  const int n = p.num_vars();
  auto c = p.coeffs();
  std::string out;
  for (std::size_t index = c.size() - 1; index > 0; --index) {
    if (c[index] != 0) out += nlp_term(c[index], index, n) + "\n";
  }
  out += std::to_string(c[0]) + "\n";
  return out;
}

NlPolynomial parse_nlp_terms(std::string_view text, int n) {
  if (n < 1 || n > kMaxVars) throw OutOfRange("variable count out of range");
  std::vector<std::int64_t> c(std::size_t{2} << n, 0);
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t base = line_start;
    line_start = line_end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;

    std::int64_t coeff = 0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, coeff);
    if (ec != std::errc()) throw ParseError("expected integer coefficient", base);
    std::size_t index = 0;
    while (ptr != last) {
      if (*ptr != '*' || ptr + 1 == last || ptr[1] != 'a') {
        throw ParseError("expected '*a<k>'", base + static_cast<std::size_t>(ptr - first));
      }
      ptr += 2;
      int var = 0;
      auto [next, ec2] = std::from_chars(ptr, last, var);
      if (ec2 != std::errc()) {
        throw ParseError("expected variable index", base + static_cast<std::size_t>(ptr - first));
      }
      if (var < 0 || var > n) throw VariableOutOfRange("variable a" + std::to_string(var));
      index |= var == 0 ? (std::size_t{1} << n) : (std::size_t{1} << var_bit(var, n));
      ptr = next;
    }
    c[index] += coeff;
  }
  return NlPolynomial(n, std::move(c));
}

std::int64_t IntPolynomial::evaluate(std::uint32_t point) const noexcept {
  std::int64_t sum = 0;
  for (const auto& t : terms) {
    if ((t.mask & point) == t.mask) sum += t.coeff;
  }
  return sum;
}

std::string IntPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const std::int64_t mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (out.empty()) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (t.mask & (std::uint32_t{1} << i)) {
        if (!mono.empty()) mono += '*';
        mono += symbols[i];
      }
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

IntPolynomial xor_expand(std::span<const std::string> symbols) {
  if (symbols.empty() || symbols.size() > kXorExpandCap) {
    throw CapExceeded("xor expansion supports 1 to " + std::to_string(kXorExpandCap) +
                      " symbols");
  }
  IntPolynomial p;
  p.symbols.assign(symbols.begin(), symbols.end());
  const std::uint32_t count = std::uint32_t{1} << symbols.size();
  p.terms.reserve(count - 1);
  for (std::uint32_t v = 1; v < count; ++v) {
    p.terms.push_back({pow_neg2(std::popcount(v) - 1), v});
  }
  // Degree first, then by lowest symbol index.
  std::stable_sort(p.terms.begin(), p.terms.end(), [](const IntTerm& a, const IntTerm& b) {
    const int wa = std::popcount(a.mask), wb = std::popcount(b.mask);
    if (wa != wb) return wa < wb;
    const std::uint32_t diff = a.mask ^ b.mask;
    return (a.mask & diff & (~diff + 1)) != 0;
  });
  return p;
}

}  // namespace boolnl
