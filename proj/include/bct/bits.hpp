#ifndef BCT_BITS_HPP
#define BCT_BITS_HPP

#include <bit>
#include <cstdint>

// Vertex sets over graphs of at most 64 vertices are plain 64-bit masks.
// Bit i corresponds to the vertex at index i in the host graph's sorted
// label order.

namespace bct {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }

// Index of the lowest set bit; undefined on 0.
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

// All-ones mask on n bits, n in [0, 64].
inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

template <typename Fn>
inline void for_each_bit(Mask m, Fn&& fn) {
  while (m) {
    int i = lowest_bit(m);
    m &= m - 1;
    fn(i);
  }
}

// Next larger mask with the same popcount (Gosper's hack); 0 when exhausted.
inline Mask next_same_popcount(Mask m) {
  Mask c = m & -m;
  Mask r = m + c;
  if (r == 0) return 0;
  return (((r ^ m) >> 2) / c) | r;
}

}  // namespace bct

#endif
