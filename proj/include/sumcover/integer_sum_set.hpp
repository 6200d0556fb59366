#pragma once

#include <cstdint>
#include <vector>

#include "sumcover/bitvec.hpp"

namespace sumcover {

// A subset of {0, ..., bound} as a (bound+1)-bit membership mask. Engines
// use it for subset sums taken over the integers before any reduction;
// the progression search accepts arbitrary instances.
class IntegerSumSet {
 public:
  explicit IntegerSumSet(uint64_t bound)
      : bound_(bound), bits_(static_cast<size_t>(bound) + 1) {}

  static IntegerSumSet from_members(uint64_t bound,
                                    const std::vector<uint64_t>& members);

  uint64_t bound() const { return bound_; }
  bool contains(uint64_t v) const {
    return v <= bound_ && bits_.test(static_cast<size_t>(v));
  }
  void add(uint64_t v);

  size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  uint64_t min_member() const;  // EmptySetError when empty
  uint64_t max_member() const;

  std::vector<uint64_t> members() const { return bits_.member_positions(); }

  bool operator==(const IntegerSumSet& o) const {
    return bound_ == o.bound_ && bits_ == o.bits_;
  }

  const BitVec& bits() const { return bits_; }
  BitVec& mutable_bits() { return bits_; }

 private:
  uint64_t bound_;
  BitVec bits_;
};

}  // namespace sumcover
