#ifndef QSYS_CHECKED_HPP
#define QSYS_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace qsys {

using Count = std::uint64_t;

// Copy counts never wrap: every accumulation goes through these.
inline Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("copy count overflow in addition");
  }
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("copy count overflow in multiplication");
  }
  return out;
}

inline Count checked_sub(Count a, Count b) {
  if (b > a) {
    throw std::overflow_error("copy count underflow in subtraction");
  }
  return a - b;
}

/// Binomial coefficient C(n, k); 0 when k > n.
inline Count binomial(Count n, Count k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (Count i = 1; i <= k; ++i) {
    // result * (n - k + i) is always divisible by i at this point.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

}  // namespace qsys

#endif  // QSYS_CHECKED_HPP
