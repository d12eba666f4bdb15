#include "stk/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stk/arith.hpp"
#include "stk/error.hpp"

namespace stk::density {

void KahanSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

namespace {

DensityReport make_report(std::uint64_t limit, std::uint64_t count, stormer::Convention convention) {
  DensityReport r;
  r.limit = limit;
  r.count = count;
  r.ratio = static_cast<double>(count) / static_cast<double>(limit);
  r.ln2_gap = std::abs(r.ratio - std::numbers::ln2);
  r.convention = convention;
  return r;
}

}  // namespace

DensityReport count_stormer(std::uint64_t limit, stormer::Convention convention, unsigned workers,
                            const stormer::Progress& progress) {
  const std::uint64_t limits[] = {limit};
  return count_stormer(limits, convention, workers, progress).front();
}

std::vector<DensityReport> count_stormer(std::span<const std::uint64_t> limits,
                                         stormer::Convention convention, unsigned workers,
                                         const stormer::Progress& progress) {
  if (limits.empty()) throw DomainError("count_stormer: no limits given");
  for (std::size_t i = 0; i < limits.size(); ++i) {
    if (limits[i] == 0) throw DomainError("count_stormer: limits must be positive");
    if (i > 0 && limits[i] <= limits[i - 1]) {
      throw DomainError("count_stormer: limits must be strictly ascending");
    }
  }
  const auto all = stormer::enumerate_stormer(limits.back(), convention, workers, progress);
  std::vector<DensityReport> out;
  for (std::uint64_t limit : limits) {
    const auto count = static_cast<std::uint64_t>(
        std::upper_bound(all.begin(), all.end(), limit) - all.begin());
    out.push_back(make_report(limit, count, convention));
  }
  return out;
}

double heuristic_probability(std::uint64_t x0) {
  if (x0 <= 1) throw DomainError("heuristic_probability: x0 must be >= 2");
  if (x0 >= (std::uint64_t{1} << 32)) throw DomainError("heuristic_probability: x0 too large");
  KahanSum sum;
  arith::for_each_prime_in(2 * x0 + 1, x0 * x0 + 1, [&](std::uint64_t p) {
    if (p % 4 == 1) sum.add(2.0 / static_cast<double>(p - 1));
  });
  return sum.value();
}

double mertens_gap(std::uint64_t x) {
  if (x < 3) throw DomainError("mertens_gap: x must be >= 3");
  KahanSum sum;
  arith::for_each_prime_in(2, x, [&](std::uint64_t p) { sum.add(1.0 / static_cast<double>(p)); });
  return sum.value() - std::log(std::log(static_cast<double>(x)));
}

}  // namespace stk::density
