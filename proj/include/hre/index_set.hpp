#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hre {

/// Bit-packed subset of [0, universe).
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const {
    return i < universe_ && (words_[i >> 6] >> (i & 63) & 1);
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Calls f(i) for every member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Members in [lo, hi), shifted down by lo, as a set over [0, hi - lo).
  IndexSet slice(std::size_t lo, std::size_t hi) const {
    IndexSet out(hi - lo);
    for (std::size_t b = 0; b < out.words_.size(); ++b) {
      std::size_t src = lo + b * 64;
      std::size_t k = src >> 6, off = src & 63;
      std::uint64_t w = k < words_.size() ? words_[k] >> off : 0;
      if (off && k + 1 < words_.size()) w |= words_[k + 1] << (64 - off);
      out.words_[b] = w;
    }
    out.trim();
    return out;
  }

  /// True iff some member lies in [lo, hi).
  bool any_in(std::size_t lo, std::size_t hi) const {
    if (hi > universe_) hi = universe_;
    for (std::size_t i = lo; i < hi;) {
      std::size_t k = i >> 6, off = i & 63;
      std::uint64_t w = words_[k] >> off;
      std::size_t span = 64 - off;
      if (hi - i < span) w &= (std::uint64_t{1} << (hi - i)) - 1;
      if (w) return true;
      i += span;
    }
    return false;
  }

  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size() && k < o.words_.size(); ++k) words_[k] |= o.words_[k];
    trim();
    return *this;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  /// Clears bits at or above universe().
  void trim() {
    if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// {a + b : a in A, b in B} over [0, A.universe() + B.universe()).
/// Shift-and-OR over the members of the smaller operand.
IndexSet bool_sumset(const IndexSet& a, const IndexSet& b);

/// OR of `src` shifted up by `shift` into `dst`, clipped to dst's universe.
void or_shifted(IndexSet& dst, const IndexSet& src, std::size_t shift);

}  // namespace hre
