#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motzcyc/errors.hpp"

namespace motzcyc {

// n-th Motzkin number via m_0 = m_1 = 1 and
// m_n = m_{n-1} + sum_{i=0}^{n-2} m_i * m_{n-2-i}.
// Exact; overflow past uint64 is reported, never wrapped.
inline std::uint64_t motzkin_number(int n) {
  if (n < 0) throw Error("motzkin_number: n must be >= 0");
  std::vector<std::uint64_t> m(static_cast<std::size_t>(n) + 1);
  m[0] = 1;
  if (n >= 1) m[1] = 1;
  for (int j = 2; j <= n; ++j) {
    std::uint64_t acc = m[static_cast<std::size_t>(j) - 1];
    for (int i = 0; i <= j - 2; ++i) {
      std::uint64_t prod;
      if (__builtin_mul_overflow(m[static_cast<std::size_t>(i)],
                                 m[static_cast<std::size_t>(j - 2 - i)], &prod) ||
          __builtin_add_overflow(acc, prod, &acc))
        throw OverflowError("motzkin_number(" + std::to_string(n) +
                            ") exceeds 64-bit range");
    }
    m[static_cast<std::size_t>(j)] = acc;
  }
  return m[static_cast<std::size_t>(n)];
}

}  // namespace motzcyc
