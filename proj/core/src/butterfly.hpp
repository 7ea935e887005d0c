#pragma once

#include <cstddef>
#include <span>

#include "boolnl/transforms.hpp"

namespace boolnl::detail {

struct NoTally {
  void butterfly() noexcept {}
  void add() noexcept {}
  void doubling() noexcept {}
  void offset() noexcept {}
};

struct CountingTally {
  OpCounts* counts;
  void butterfly() noexcept { ++counts->butterflies; }
  void add() noexcept { ++counts->additions; }
  void doubling() noexcept { ++counts->doublings; }
  void offset() noexcept { ++counts->offsets; }
};

// Applies `step(low, high)` to every pair (j, j + half) for half = 1, 2, ...,
// i.e. once per variable starting at the least significant index bit.
template <class T, class Step, class Tally>
void butterfly(std::span<T> data, Step&& step, Tally& tally) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      T* lo = data.data() + block;
      T* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        step(lo[j], hi[j]);
        tally.butterfly();
      }
    }
  }
}

// Runs `body(tally)` with a counting tally when `counts` is set, otherwise
// with the no-op tally.
template <class Body>
decltype(auto) with_tally(OpCounts* counts, Body&& body) {
  if (counts != nullptr) {
    CountingTally tally{counts};
    return body(tally);
  }
  NoTally tally;
  return body(tally);
}

}  // namespace boolnl::detail
