#pragma once

#include <cstdint>
#include <vector>

#include "sumcover/cyclic_set.hpp"
#include "sumcover/integer_sum_set.hpp"
#include "sumcover/residue_set.hpp"

namespace sumcover {

struct SumsetOptions {
  // When true (the default), the empty subset contributes the sum 0.
  // When false, only nonempty subsets are summed; the result is rebuilt
  // from scratch, not obtained by deleting 0, so a nonempty subset that
  // sums to 0 still shows up.
  bool include_empty = true;
};

// An explicit sub-collection certifying that `target` is a subset sum.
// Holds a snapshot of the source elements so that verification never
// depends on the collection that produced it staying alive.
struct Witness {
  std::vector<uint64_t> source_elements;  // canonical order of the source
  std::vector<size_t> picks;              // strictly increasing indices
  uint64_t target = 0;                    // reduced residue
  uint64_t modulus = 0;

  // Independent check: indices strictly increasing and in range, and the
  // picked elements sum to `target` mod `modulus`.
  bool verify() const;
  uint64_t picked_sum() const;  // over the integers
};

// { sum(B) mod n : B subseteq A }, by the prefix recurrence
// S_i = S_{i-1} | (a_i + S_{i-1}) with S_0 = {0}.
ResidueSet cyclic_subset_sums(const CyclicSet& a, SumsetOptions opts = {});

// Subset sums over the integers; the mask bound is sum(A). Elements must
// be >= 1.
IntegerSumSet integer_subset_sums(const std::vector<uint64_t>& elements,
                                  SumsetOptions opts = {});

// Sums of exactly l pairwise distinct elements. Layered DP capped at l;
// layers beyond l are never materialized. Throws BadCardinalityError
// unless 1 <= l <= |A|.
ResidueSet restricted_sumset(const CyclicSet& a, size_t l);
IntegerSumSet restricted_sumset(const std::vector<uint64_t>& elements,
                                size_t l);

struct CompletenessReport {
  bool complete = false;
  std::vector<uint64_t> missing;  // sorted residues not in S_A
};

// complete iff cyclic_subset_sums(A) = Z_n.
CompletenessReport is_complete(const CyclicSet& a);

// A witness for target in S_A, by storing every prefix layer of the DP
// and backtracking: at step i, drop a_i whenever the running target is
// already reachable without it, else take a_i. Throws UnreachableError
// when target is not in S_A.
Witness find_witness(const CyclicSet& a, long long target);

// Same backtracking over the integer DP. Returns pick indices into
// `elements`.
std::vector<size_t> integer_witness_picks(const std::vector<uint64_t>& elements,
                                          uint64_t target);

// Fast completeness predicate used by the exhaustive searches: runs the
// prefix recurrence with early exit once the mask saturates. Single-word
// arithmetic when n <= 64.
bool covers_all_residues(const uint64_t* elements, size_t k, uint64_t n);

}  // namespace sumcover
