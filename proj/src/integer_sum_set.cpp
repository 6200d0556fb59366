#include "sumcover/integer_sum_set.hpp"

#include "sumcover/errors.hpp"

namespace sumcover {

IntegerSumSet IntegerSumSet::from_members(uint64_t bound,
                                          const std::vector<uint64_t>& members) {
  IntegerSumSet s(bound);
  for (uint64_t m : members) s.add(m);
  return s;
}

void IntegerSumSet::add(uint64_t v) {
  if (v > bound_)
    throw InvalidElementError("member " + std::to_string(v) +
                              " exceeds bound " + std::to_string(bound_));
  bits_.set(static_cast<size_t>(v));
}

uint64_t IntegerSumSet::min_member() const {
  ptrdiff_t i = bits_.find_next(-1);
  if (i < 0) throw EmptySetError("min_member of empty set");
  return static_cast<uint64_t>(i);
}

uint64_t IntegerSumSet::max_member() const {
  if (empty()) throw EmptySetError("max_member of empty set");
  for (size_t i = bits_.size(); i-- > 0;)
    if (bits_.test(i)) return i;
  return 0;
}

}  // namespace sumcover
