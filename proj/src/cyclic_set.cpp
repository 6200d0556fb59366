#include "sumcover/cyclic_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sumcover/errors.hpp"

namespace sumcover {

CyclicSet::CyclicSet(Modulus n, const std::vector<long long>& elements,
                     bool require_coprime)
    : n_(n), all_coprime_(true) {
  elements_.reserve(elements.size());
  for (long long raw : elements) {
    uint64_t r = n_.reduce(raw);
    if (r == 0)
      throw InvalidElementError("element " + std::to_string(raw) +
                                " reduces to 0 mod " +
                                std::to_string(n.value()));
    elements_.push_back(r);
  }
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) !=
      elements_.end())
    throw InvalidElementError("duplicate element after reduction");
  for (uint64_t e : elements_) {
    if (!is_coprime(e, n.value())) {
      all_coprime_ = false;
      if (require_coprime)
        throw NotCoprimeError("element " + std::to_string(e) +
                              " shares a factor with " +
                              std::to_string(n.value()));
    }
  }
}

CyclicSet CyclicSet::units(Modulus n) {
  std::vector<long long> es;
  for (uint64_t e = 1; e < n.value(); ++e)
    if (is_coprime(e, n.value())) es.push_back(static_cast<long long>(e));
  return CyclicSet(n, es, true);
}

uint64_t CyclicSet::element_sum() const {
  return std::accumulate(elements_.begin(), elements_.end(), uint64_t{0});
}

CoprimeMultiset::CoprimeMultiset(Modulus n,
                                 const std::vector<long long>& elements)
    : n_(n) {
  elements_.reserve(elements.size());
  for (long long raw : elements) {
    uint64_t r = n_.reduce(raw);
    if (!is_coprime(r, n.value()))
      throw NotCoprimeError("multiset element " + std::to_string(raw) +
                            " is not a unit mod " + std::to_string(n.value()));
    elements_.push_back(r);
  }
}

}  // namespace sumcover
