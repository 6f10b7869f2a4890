#ifndef BCT_BITROW_HPP
#define BCT_BITROW_HPP

#include <cstdint>
#include <vector>

#include "bct/bits.hpp"

// Variable-width bit vector used where 64 bits are not enough: conflict
// graphs over edge sets and boundary-matrix rows.

namespace bct {

using BitRow = std::vector<std::uint64_t>;

inline BitRow make_row(int bits) { return BitRow((bits + 63) / 64, 0); }

inline void row_set(BitRow& r, int i) { r[i >> 6] |= Mask{1} << (i & 63); }

inline void row_reset(BitRow& r, int i) { r[i >> 6] &= ~(Mask{1} << (i & 63)); }

inline bool row_test(const BitRow& r, int i) {
  return (r[i >> 6] >> (i & 63)) & 1;
}

inline void row_xor(BitRow& r, const BitRow& o) {
  for (std::size_t w = 0; w < r.size(); ++w) r[w] ^= o[w];
}

inline void row_and(BitRow& r, const BitRow& o) {
  for (std::size_t w = 0; w < r.size(); ++w) r[w] &= o[w];
}

inline void row_andnot(BitRow& r, const BitRow& o) {
  for (std::size_t w = 0; w < r.size(); ++w) r[w] &= ~o[w];
}

inline bool row_any(const BitRow& r) {
  for (auto w : r)
    if (w) return true;
  return false;
}

inline int row_count(const BitRow& r) {
  int c = 0;
  for (auto w : r) c += popcount(w);
  return c;
}

// Index of the first set bit, or -1.
inline int row_first(const BitRow& r) {
  for (std::size_t w = 0; w < r.size(); ++w)
    if (r[w]) return static_cast<int>(w * 64) + lowest_bit(r[w]);
  return -1;
}

template <typename Fn>
inline void row_for_each(const BitRow& r, Fn&& fn) {
  for (std::size_t w = 0; w < r.size(); ++w) {
    Mask m = r[w];
    while (m) {
      fn(static_cast<int>(w * 64) + lowest_bit(m));
      m &= m - 1;
    }
  }
}

}  // namespace bct

#endif
