#pragma once

#include <cstdint>

namespace stk::arith::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Montgomery arithmetic modulo an odd 64-bit modulus, R = 2^64.
class Montgomery {
 public:
  explicit Montgomery(u64 n) : n_(n) {
    u64 inv = n;
    for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
    inv_ = inv;
    const u64 r = static_cast<u64>((static_cast<u128>(1) << 64) % n);
    r2_ = static_cast<u64>(static_cast<u128>(r) * r % n);
    one_ = to(1);
  }

  u64 modulus() const { return n_; }
  u64 one() const { return one_; }

  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * inv_;
    const u64 mn_hi = static_cast<u64>((static_cast<u128>(m) * n_) >> 64);
    const u64 t_hi = static_cast<u64>(t >> 64);
    const u64 r = t_hi - mn_hi;
    return t_hi < mn_hi ? r + n_ : r;
  }

  u64 to(u64 x) const { return reduce(static_cast<u128>(x % n_) * r2_); }
  u64 from(u64 x) const { return reduce(x); }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }

  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }

  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (n_ - b); }

  u64 pow(u64 base, u64 e) const {
    u64 result = one_;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

 private:
  u64 n_;
  u64 inv_;
  u64 r2_;
  u64 one_;
};

}  // namespace stk::arith::detail
