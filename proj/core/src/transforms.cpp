#include "boolnl/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "boolnl/errors.hpp"
#include "butterfly.hpp"

namespace boolnl {

using detail::butterfly;
using detail::with_tally;

AnfForm to_anf(const BooleanFunction& f, OpCounts* counts) {
  std::vector<std::uint8_t> b = f.bits();
  with_tally(counts, [&](auto& tally) {
    butterfly(std::span<std::uint8_t>(b), [](std::uint8_t& lo, std::uint8_t& hi) { hi ^= lo; },
              tally);
  });
  std::vector<Point> masks;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) masks.push_back(static_cast<Point>(i));
  }
  return AnfForm::from_monomials(f.num_vars(), std::move(masks));
}

BooleanFunction from_anf(const AnfForm& p, OpCounts* counts) {
  std::vector<std::uint8_t> b(std::size_t{1} << p.num_vars(), 0);
  for (Point m : p.monomials()) b[m] = 1;
  with_tally(counts, [&](auto& tally) {
    butterfly(std::span<std::uint8_t>(b), [](std::uint8_t& lo, std::uint8_t& hi) { hi ^= lo; },
              tally);
  });
  return BooleanFunction::from_truth_table(b);
}

WalshSpectrum walsh(const BooleanFunction& f, OpCounts* counts) {
  WalshSpectrum s;
  s.n = f.num_vars();
  s.values.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) s.values[i] = f(static_cast<Point>(i)) ? -1 : 1;
  with_tally(counts, [&](auto& tally) {
    butterfly(std::span<std::int64_t>(s.values),
              [](std::int64_t& lo, std::int64_t& hi) {
                const std::int64_t a = lo;
                lo = a + hi;
                hi = a - hi;
              },
              tally);
  });
  return s;
}

NnfForm to_nnf(const BooleanFunction& f, OpCounts* counts) {
  NnfForm nnf;
  nnf.n = f.num_vars();
  nnf.coeffs.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) nnf.coeffs[i] = f(static_cast<Point>(i));
  with_tally(counts, [&](auto& tally) {
    butterfly(std::span<std::int64_t>(nnf.coeffs),
              [](std::int64_t& lo, std::int64_t& hi) { hi -= lo; }, tally);
  });
  return nnf;
}

BooleanFunction nnf_to_table(const NnfForm& nnf, OpCounts* counts) {
  if (nnf.coeffs.size() != (std::size_t{1} << nnf.n)) {
    throw DimensionMismatch("NNF coefficient count is not 2^n");
  }
  std::vector<std::int64_t> v(nnf.coeffs);
  with_tally(counts, [&](auto& tally) {
    butterfly(std::span<std::int64_t>(v), [](std::int64_t& lo, std::int64_t& hi) { hi += lo; },
              tally);
  });
  std::vector<std::uint8_t> bits(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && v[i] != 1) {
      throw NotBooleanValued("NNF value " + std::to_string(v[i]) + " at index " +
                             std::to_string(i) + " is not 0 or 1");
    }
    bits[i] = static_cast<std::uint8_t>(v[i]);
  }
  return BooleanFunction::from_truth_table(bits);
}

std::string format_nnf(const NnfForm& nnf) {
  std::vector<Point> order;
  for (std::size_t i = 0; i < nnf.coeffs.size(); ++i) {
    if (nnf.coeffs[i] != 0) order.push_back(static_cast<Point>(i));
  }
  if (order.empty()) return "0";
  std::sort(order.begin(), order.end(), canonical_term_less);
  std::string out;
  for (Point m : order) {
    const std::int64_t c = nnf.coeffs[m];
    const std::uint64_t mag = static_cast<std::uint64_t>(std::llabs(c));
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += format_monomial(m, nnf.n);
    }
  }
  return out;
}

}  // namespace boolnl
