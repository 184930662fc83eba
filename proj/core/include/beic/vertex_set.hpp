#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace beic {

using VertexId = std::uint32_t;

/// Set of vertex ids drawn from a fixed universe {0, ..., n-1}, stored as
/// 64-bit words. Two sets compare equal only if they share the universe size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : nbits_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(std::size_t universe, std::initializer_list<VertexId> ids) {
    VertexSet s(universe);
    for (VertexId v : ids) s.set(v);
    return s;
  }

  std::size_t universe_size() const { return nbits_; }

  bool test(VertexId v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool operator==(const VertexSet&) const = default;

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& flip() {
    for (auto& w : words_) w = ~w;
    trim();
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s = *this;
    s.flip();
    return s;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  /// Lowest member, or -1 when empty.
  int first() const { return next_at_or_after(0); }

  int next_at_or_after(std::size_t from) const {
    if (from >= nbits_) return -1;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next_at_or_after(static_cast<std::size_t>(v) + 1)) {
      out.push_back(static_cast<VertexId>(v));
    }
    return out;
  }

  class const_iterator {
   public:
    const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    VertexId operator*() const { return static_cast<VertexId>(v_); }
    const_iterator& operator++() {
      v_ = set_->next_at_or_after(static_cast<std::size_t>(v_) + 1);
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* set_;
    int v_;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  void trim() {
    if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending member lists; a proper prefix sorts
/// first. Equivalent formulation: the set owning the smallest element of the
/// symmetric difference sorts first.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  for (int v = 0;;) {
    int av = a.next_at_or_after(static_cast<std::size_t>(v));
    int bv = b.next_at_or_after(static_cast<std::size_t>(v));
    if (av != bv) {
      if (av < 0) return true;   // a is a prefix of b
      if (bv < 0) return false;
      return av < bv;
    }
    if (av < 0) return false;  // equal
    v = av + 1;
  }
}

/// Order by cardinality, then lexicographically.
inline bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

}  // namespace beic
