#pragma once

#include <cstdint>
#include <vector>

#include "sumcover/bitvec.hpp"
#include "sumcover/modular.hpp"

namespace sumcover {

// A subset of Z_n as an n-bit membership mask. Immutable in spirit: the
// mutating methods exist for construction, every algebraic operation
// returns a fresh set.
class ResidueSet {
 public:
  explicit ResidueSet(Modulus n) : n_(n), bits_(n.value()) {}

  static ResidueSet full(Modulus n);
  static ResidueSet from_members(Modulus n, const std::vector<long long>& members);
  static ResidueSet from_bits(Modulus n, BitVec bits);

  Modulus modulus() const { return n_; }
  uint64_t n() const { return n_.value(); }

  bool contains(long long r) const { return bits_.test(n_.reduce(r)); }
  void add(long long r) { bits_.set(n_.reduce(r)); }

  size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }

  ResidueSet complemented() const;
  ResidueSet unioned(const ResidueSet& o) const;
  ResidueSet intersected(const ResidueSet& o) const;
  // S + k = { s + k mod n : s in S }
  ResidueSet shifted(uint64_t k) const;

  std::vector<uint64_t> members() const { return bits_.member_positions(); }

  bool operator==(const ResidueSet& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const ResidueSet& o) const { return !(*this == o); }

  const BitVec& bits() const { return bits_; }
  BitVec& mutable_bits() { return bits_; }

 private:
  Modulus n_;
  BitVec bits_;
};

// { c * s mod n : s in S }. c must be a unit; dilation is then a bijection
// of Z_n and preserves cardinality.
ResidueSet dilate(const ResidueSet& s, uint64_t c);

// Smallest positive g dividing n with S + g = S (the minimal period).
// Returns n when S has no proper period. The periods of S form a subgroup
// of Z_n, so the minimal one determines them all.
uint64_t stabilizer_gcd(const ResidueSet& s);

}  // namespace sumcover
