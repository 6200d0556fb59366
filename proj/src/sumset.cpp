#include "sumcover/sumset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "sumcover/errors.hpp"

namespace sumcover {

namespace {

// Mask guard: a pathological CLI input could ask for a multi-gigabyte DP.
constexpr uint64_t kMaxMaskBits = uint64_t{1} << 33;

void check_mask_width(uint64_t bits) {
  if (bits > kMaxMaskBits)
    throw Error("subset-sum mask of " + std::to_string(bits) +
                " bits exceeds the supported range");
}

}  // namespace

bool Witness::verify() const {
  if (modulus < 2) return false;
  uint64_t sum = 0;
  size_t prev = std::numeric_limits<size_t>::max();
  for (size_t idx : picks) {
    if (idx >= source_elements.size()) return false;
    if (prev != std::numeric_limits<size_t>::max() && idx <= prev)
      return false;
    prev = idx;
    sum = (sum + source_elements[idx] % modulus) % modulus;
  }
  return sum == target % modulus;
}

uint64_t Witness::picked_sum() const {
  uint64_t sum = 0;
  for (size_t idx : picks) sum += source_elements[idx];
  return sum;
}

ResidueSet cyclic_subset_sums(const CyclicSet& a, SumsetOptions opts) {
  const uint64_t n = a.modulus().value();
  BitVec acc(n);
  if (opts.include_empty) {
    acc.set(0);
    for (uint64_t e : a.elements()) acc.or_rotated(acc, e);
  } else {
    // Sums of nonempty subsets: S'_i = S'_{i-1} | (a_i + S'_{i-1}) | {a_i}.
    for (uint64_t e : a.elements()) {
      acc.or_rotated(acc, e);
      acc.set(e);
    }
  }
  return ResidueSet::from_bits(a.modulus(), std::move(acc));
}

IntegerSumSet integer_subset_sums(const std::vector<uint64_t>& elements,
                                  SumsetOptions opts) {
  uint64_t total = 0;
  for (uint64_t e : elements) {
    if (e < 1) throw InvalidElementError("integer elements must be >= 1");
    total += e;
  }
  check_mask_width(total + 1);
  IntegerSumSet s(total);
  BitVec& bits = s.mutable_bits();
  if (opts.include_empty) {
    bits.set(0);
    for (uint64_t e : elements) bits.or_shifted_left(e);
  } else {
    for (uint64_t e : elements) {
      bits.or_shifted_left(e);
      bits.set(e);
    }
  }
  return s;
}

ResidueSet restricted_sumset(const CyclicSet& a, size_t l) {
  const size_t k = a.size();
  if (l < 1 || l > k)
    throw BadCardinalityError("l = " + std::to_string(l) +
                              " outside [1, " + std::to_string(k) + "]");
  const uint64_t n = a.modulus().value();
  // layers[c] = sums of exactly c of the elements seen so far.
  std::vector<BitVec> layers(l + 1, BitVec(n));
  layers[0].set(0);
  size_t seen = 0;
  for (uint64_t e : a.elements()) {
    ++seen;
    for (size_t c = std::min(l, seen); c >= 1; --c)
      layers[c].or_rotated(layers[c - 1], e);
  }
  return ResidueSet::from_bits(a.modulus(), std::move(layers[l]));
}

IntegerSumSet restricted_sumset(const std::vector<uint64_t>& elements,
                                size_t l) {
  const size_t k = elements.size();
  if (l < 1 || l > k)
    throw BadCardinalityError("l = " + std::to_string(l) +
                              " outside [1, " + std::to_string(k) + "]");
  uint64_t total = 0;
  for (uint64_t e : elements) {
    if (e < 1) throw InvalidElementError("integer elements must be >= 1");
    total += e;
  }
  check_mask_width(total + 1);
  const size_t width = static_cast<size_t>(total) + 1;
  std::vector<BitVec> layers(l + 1, BitVec(width));
  layers[0].set(0);
  size_t seen = 0;
  for (uint64_t e : elements) {
    ++seen;
    for (size_t c = std::min(l, seen); c >= 1; --c) {
      BitVec shifted = layers[c - 1];
      shifted.or_shifted_left(e);
      // or_shifted_left keeps the unshifted bits too; mask them out by
      // subtracting the original layer, then fold in.
      layers[c] |= shifted.minus(layers[c - 1]);
    }
  }
  IntegerSumSet out(total);
  out.mutable_bits() = std::move(layers[l]);
  return out;
}

CompletenessReport is_complete(const CyclicSet& a) {
  ResidueSet s = cyclic_subset_sums(a);
  CompletenessReport rep;
  rep.complete = s.is_full();
  if (!rep.complete) rep.missing = s.complemented().members();
  return rep;
}

Witness find_witness(const CyclicSet& a, long long target) {
  const Modulus n = a.modulus();
  const uint64_t t0 = n.reduce(target);
  const auto& elems = a.elements();

  // All prefix layers are kept so the backtrack is a single pass.
  std::vector<BitVec> layers;
  layers.reserve(elems.size() + 1);
  layers.emplace_back(n.value());
  layers[0].set(0);
  for (uint64_t e : elems) {
    BitVec next = layers.back();
    next.or_rotated(layers.back(), e);
    layers.push_back(std::move(next));
  }
  if (!layers.back().test(t0))
    throw UnreachableError("target " + std::to_string(t0) +
                           " is not a subset sum mod " +
                           std::to_string(n.value()));

  Witness w;
  w.source_elements = elems;
  w.target = t0;
  w.modulus = n.value();
  uint64_t t = t0;
  for (size_t i = elems.size(); i >= 1; --i) {
    if (layers[i - 1].test(t)) continue;  // reachable without a_i: drop it
    w.picks.push_back(i - 1);
    t = n.reduce(static_cast<long long>(t) -
                 static_cast<long long>(elems[i - 1]));
  }
  std::reverse(w.picks.begin(), w.picks.end());
  return w;
}

std::vector<size_t> integer_witness_picks(
    const std::vector<uint64_t>& elements, uint64_t target) {
  uint64_t total = 0;
  for (uint64_t e : elements) {
    if (e < 1) throw InvalidElementError("integer elements must be >= 1");
    total += e;
  }
  check_mask_width(total + 1);
  const size_t width = static_cast<size_t>(total) + 1;

  std::vector<BitVec> layers;
  layers.reserve(elements.size() + 1);
  layers.emplace_back(width);
  layers[0].set(0);
  for (uint64_t e : elements) {
    BitVec next = layers.back();
    next.or_shifted_left(e);
    layers.push_back(std::move(next));
  }
  if (target > total || !layers.back().test(static_cast<size_t>(target)))
    throw UnreachableError("target " + std::to_string(target) +
                           " is not an integer subset sum");

  std::vector<size_t> picks;
  uint64_t t = target;
  for (size_t i = elements.size(); i >= 1; --i) {
    if (layers[i - 1].test(static_cast<size_t>(t))) continue;
    picks.push_back(i - 1);
    t -= elements[i - 1];
  }
  std::reverse(picks.begin(), picks.end());
  return picks;
}

bool covers_all_residues(const uint64_t* elements, size_t k, uint64_t n) {
  if (n < 2) throw InvalidElementError("modulus must be at least 2");
  if (n <= 64) {
    const uint64_t full =
        n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    uint64_t m = 1;
    for (size_t i = 0; i < k; ++i) {
      uint64_t e = elements[i] % n;
      if (e) m |= ((m << e) | (m >> (n - e))) & full;
      if (m == full) return true;
    }
    return m == full;
  }
  BitVec acc(n);
  acc.set(0);
  for (size_t i = 0; i < k; ++i) {
    acc.or_rotated(acc, elements[i] % n);
    if (acc.all()) return true;
  }
  return acc.all();
}

}  // namespace sumcover
