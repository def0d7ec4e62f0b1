#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace conex {

/// Flat bit set backing adjacency rows. Size is fixed at construction.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_(word_count(nbits), 0) {}

  int size() const { return nbits_; }

  bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  /// this := this \ o
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  int count_and(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  int count_and_not(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~o.w_[i]);
    return c;
  }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  /// First set bit, or -1.
  int find_first() const { return find_next(-1); }

  /// First set bit strictly greater than i, or -1.
  int find_next(int i) const {
    size_t wi = i < 0 ? 0 : static_cast<size_t>(i + 1) >> 6;
    if (wi >= w_.size()) return -1;
    uint64_t x = w_[wi];
    if (i >= 0 && static_cast<size_t>(i) >> 6 == wi) x &= ~uint64_t{0} << ((i & 63) + 1);
    while (true) {
      if (x) return static_cast<int>(wi * 64 + std::countr_zero(x));
      if (++wi >= w_.size()) return -1;
      x = w_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t x = w_[wi];
      while (x) {
        f(static_cast<int>(wi * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  /// True iff N(u) \ {v} = N(v) \ {u} for adjacency rows ru = N(u), rv = N(v).
  /// Such u, v are exchangeable by a transposition automorphism.
  static bool twin_rows(const Bitset& ru, const Bitset& rv, int u, int v) {
    size_t uw = static_cast<size_t>(u) >> 6, vw = static_cast<size_t>(v) >> 6;
    uint64_t ub = uint64_t{1} << (u & 63), vb = uint64_t{1} << (v & 63);
    for (size_t i = 0; i < ru.w_.size(); ++i) {
      uint64_t a = ru.w_[i], b = rv.w_[i];
      if (i == uw) { a &= ~ub; b &= ~ub; }
      if (i == vw) { a &= ~vb; b &= ~vb; }
      if (a != b) return false;
    }
    return true;
  }

 private:
  static size_t word_count(int nbits) { return (static_cast<size_t>(nbits) + 63) / 64; }

  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace conex
