#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumcover {

// Fixed-width bit vector. Bit i encodes membership of i. Backs both set
// representations and the subset-sum dynamic programs, so the shift and
// rotate operations below are the hot path of the whole library.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t nbits);

  size_t size() const { return nbits_; }
  size_t word_count() const { return w_.size(); }

  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void clear();

  size_t count() const;
  bool any() const;
  bool all() const;
  bool none() const { return !any(); }

  BitVec& operator|=(const BitVec& o);
  BitVec& operator&=(const BitVec& o);
  BitVec complemented() const;
  // this & ~o
  BitVec minus(const BitVec& o) const;
  bool operator==(const BitVec& o) const;
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  // self |= (self << k); bits shifted past size() drop off.
  void or_shifted_left(size_t k);
  // (self << k) with bits past size() dropped.
  BitVec shifted_left(size_t k) const;
  // Cyclic rotation within size() bits: result bit (i + k) mod n = bit i.
  BitVec rotated(size_t k) const;
  // self |= src.rotated(k). Safe when &src == this.
  void or_rotated(const BitVec& src, size_t k);

  // Index of the first set bit at position > prev, or -1. Pass prev = -1
  // to start from bit 0.
  ptrdiff_t find_next(ptrdiff_t prev) const;

  std::vector<uint64_t> member_positions() const;
  const std::vector<uint64_t>& words() const { return w_; }

 private:
  void trim();

  size_t nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace sumcover
