#pragma once

#include <cstdint>
#include <vector>

#include "sumcover/modular.hpp"

namespace sumcover {

// A set of nonzero residues of Z_n, stored reduced and strictly increasing.
// Inputs may be arbitrary integers; they are reduced at construction. Zero
// and duplicates are rejected. Pass require_coprime to additionally demand
// gcd(e, n) = 1 for every element.
class CyclicSet {
 public:
  CyclicSet(Modulus n, const std::vector<long long>& elements,
            bool require_coprime = false);

  // All residues in [1, n-1] coprime to n.
  static CyclicSet units(Modulus n);

  Modulus modulus() const { return n_; }
  const std::vector<uint64_t>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  bool all_coprime() const { return all_coprime_; }

  // Integer sum of the elements, each viewed in [1, n-1].
  uint64_t element_sum() const;

 private:
  Modulus n_;
  std::vector<uint64_t> elements_;
  bool all_coprime_;
};

// A sequence of residues coprime to n; repetition allowed, order preserved.
class CoprimeMultiset {
 public:
  CoprimeMultiset(Modulus n, const std::vector<long long>& elements);

  Modulus modulus() const { return n_; }
  const std::vector<uint64_t>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }

 private:
  Modulus n_;
  std::vector<uint64_t> elements_;
};

}  // namespace sumcover
