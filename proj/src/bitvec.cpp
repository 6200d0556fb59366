#include "sumcover/bitvec.hpp"

#include <bit>

#include "sumcover/errors.hpp"

namespace sumcover {

namespace {
inline uint64_t top_mask(size_t nbits) {
  size_t rem = nbits & 63;
  return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
}
}  // namespace

BitVec::BitVec(size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

void BitVec::clear() {
  for (auto& w : w_) w = 0;
}

size_t BitVec::count() const {
  size_t c = 0;
  for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
  return c;
}

bool BitVec::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

bool BitVec::all() const {
  if (nbits_ == 0) return true;
  for (size_t i = 0; i + 1 < w_.size(); ++i)
    if (w_[i] != ~uint64_t{0}) return false;
  return w_.back() == top_mask(nbits_);
}

BitVec& BitVec::operator|=(const BitVec& o) {
  if (o.nbits_ != nbits_) throw Error("BitVec size mismatch");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  if (o.nbits_ != nbits_) throw Error("BitVec size mismatch");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

BitVec BitVec::complemented() const {
  BitVec r(nbits_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
  r.trim();
  return r;
}

BitVec BitVec::minus(const BitVec& o) const {
  if (o.nbits_ != nbits_) throw Error("BitVec size mismatch");
  BitVec r(nbits_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
  return r;
}

bool BitVec::operator==(const BitVec& o) const {
  return nbits_ == o.nbits_ && w_ == o.w_;
}

void BitVec::or_shifted_left(size_t k) {
  if (k == 0 || k >= nbits_) return;
  const size_t wk = k >> 6;
  const unsigned bs = static_cast<unsigned>(k & 63);
  const size_t nw = w_.size();
  if (bs == 0) {
    for (size_t i = nw; i-- > wk;) w_[i] |= w_[i - wk];
  } else {
    for (size_t i = nw; i-- > wk;) {
      uint64_t v = w_[i - wk] << bs;
      if (i - wk > 0) v |= w_[i - wk - 1] >> (64 - bs);
      w_[i] |= v;
    }
  }
  w_.back() &= top_mask(nbits_);
}

BitVec BitVec::rotated(size_t k) const {
  BitVec r(nbits_);
  r.or_rotated(*this, k);
  return r;
}

void BitVec::or_rotated(const BitVec& src, size_t k) {
  if (src.nbits_ != nbits_) throw Error("BitVec size mismatch");
  if (nbits_ == 0) return;
  k %= nbits_;
  if (k == 0) {
    *this |= src;
    return;
  }
  const size_t nw = w_.size();
  // Left part: source bit i lands on i + k, for i < n - k.
  {
    const size_t wk = k >> 6;
    const unsigned bs = static_cast<unsigned>(k & 63);
    if (bs == 0) {
      for (size_t i = nw; i-- > wk;) w_[i] |= src.w_[i - wk];
    } else {
      for (size_t i = nw; i-- > wk;) {
        uint64_t v = src.w_[i - wk] << bs;
        if (i - wk > 0) v |= src.w_[i - wk - 1] >> (64 - bs);
        w_[i] |= v;
      }
    }
  }
  // Wrapped part: source bit i lands on i - (n - k), for i >= n - k.
  {
    const size_t j = nbits_ - k;
    const size_t wj = j >> 6;
    const unsigned bs = static_cast<unsigned>(j & 63);
    if (bs == 0) {
      for (size_t i = 0; i + wj < nw; ++i) w_[i] |= src.w_[i + wj];
    } else {
      for (size_t i = 0; i + wj < nw; ++i) {
        uint64_t v = src.w_[i + wj] >> bs;
        if (i + wj + 1 < nw) v |= src.w_[i + wj + 1] << (64 - bs);
        w_[i] |= v;
      }
    }
  }
  w_.back() &= top_mask(nbits_);
}

ptrdiff_t BitVec::find_next(ptrdiff_t prev) const {
  size_t start = static_cast<size_t>(prev + 1);
  if (start >= nbits_) return -1;
  size_t wi = start >> 6;
  uint64_t w = w_[wi] & (~uint64_t{0} << (start & 63));
  while (true) {
    if (w) {
      size_t pos = (wi << 6) + static_cast<size_t>(std::countr_zero(w));
      return pos < nbits_ ? static_cast<ptrdiff_t>(pos) : -1;
    }
    if (++wi == w_.size()) return -1;
    w = w_[wi];
  }
}

std::vector<uint64_t> BitVec::member_positions() const {
  std::vector<uint64_t> out;
  out.reserve(count());
  for (ptrdiff_t i = find_next(-1); i >= 0; i = find_next(i))
    out.push_back(static_cast<uint64_t>(i));
  return out;
}

void BitVec::trim() {
  if (!w_.empty()) w_.back() &= top_mask(nbits_);
}

}  // namespace sumcover
