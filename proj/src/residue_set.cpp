#include "sumcover/residue_set.hpp"

#include <utility>

#include "sumcover/errors.hpp"

namespace sumcover {

ResidueSet ResidueSet::full(Modulus n) {
  ResidueSet s(n);
  s.bits_ = s.bits_.complemented();
  return s;
}

ResidueSet ResidueSet::from_members(Modulus n,
                                    const std::vector<long long>& members) {
  ResidueSet s(n);
  for (long long m : members) s.add(m);
  return s;
}

ResidueSet ResidueSet::from_bits(Modulus n, BitVec bits) {
  if (bits.size() != n.value()) throw Error("bit mask width != modulus");
  ResidueSet s(n);
  s.bits_ = std::move(bits);
  return s;
}

ResidueSet ResidueSet::complemented() const {
  return from_bits(n_, bits_.complemented());
}

ResidueSet ResidueSet::unioned(const ResidueSet& o) const {
  if (n_ != o.n_) throw Error("modulus mismatch");
  BitVec b = bits_;
  b |= o.bits_;
  return from_bits(n_, std::move(b));
}

ResidueSet ResidueSet::intersected(const ResidueSet& o) const {
  if (n_ != o.n_) throw Error("modulus mismatch");
  BitVec b = bits_;
  b &= o.bits_;
  return from_bits(n_, std::move(b));
}

ResidueSet ResidueSet::shifted(uint64_t k) const {
  return from_bits(n_, bits_.rotated(k % n_.value()));
}

ResidueSet dilate(const ResidueSet& s, uint64_t c) {
  const uint64_t n = s.n();
  c %= n;
  if (!is_coprime(c, n))
    throw NotCoprimeError("dilation factor " + std::to_string(c) +
                          " is not a unit mod " + std::to_string(n));
  ResidueSet out(s.modulus());
  const BitVec& b = s.bits();
  for (ptrdiff_t i = b.find_next(-1); i >= 0; i = b.find_next(i)) {
    out.mutable_bits().set(
        static_cast<size_t>((static_cast<uint64_t>(i) * c) % n));
  }
  return out;
}

uint64_t stabilizer_gcd(const ResidueSet& s) {
  if (s.empty()) throw EmptySetError("stabilizer_gcd of empty set");
  const uint64_t n = s.n();
  for (uint64_t g : divisors_ascending(n)) {
    if (s.bits().rotated(g % n) == s.bits()) return g;
  }
  return n;  // g = n always fixes S, so this line is not reached
}

}  // namespace sumcover
