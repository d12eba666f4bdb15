#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stk/stormer.hpp"

namespace stk::density {

struct DensityReport {
  std::uint64_t limit = 0;
  std::uint64_t count = 0;
  double ratio = 0.0;    // count / limit
  double ln2_gap = 0.0;  // |ratio - ln 2|
  stormer::Convention convention = stormer::Convention::Strict;
};

/// Neumaier's variant of compensated summation.
class KahanSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Counts Størmer numbers in [1, limit].
DensityReport count_stormer(std::uint64_t limit,
                            stormer::Convention convention = stormer::Convention::Strict,
                            unsigned workers = 0, const stormer::Progress& progress = {});

/// One report per limit from a single enumeration up to the largest limit.
/// Limits must be positive and strictly ascending.
std::vector<DensityReport> count_stormer(std::span<const std::uint64_t> limits,
                                         stormer::Convention convention = stormer::Convention::Strict,
                                         unsigned workers = 0,
                                         const stormer::Progress& progress = {});

/// Σ 2/(p-1) over primes p ≡ 1 (mod 4) with 2·x0+1 <= p <= x0²+1. Requires x0 >= 2.
double heuristic_probability(std::uint64_t x0);

/// Σ_{p <= x} 1/p − ln ln x. Requires x >= 3.
double mertens_gap(std::uint64_t x);

}  // namespace stk::density
