#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qbr/element.hpp"

namespace qbr {

/// A set of element indices of one ring, stored as a dense bitset over [0, universe).
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  Subset(std::size_t universe, std::initializer_list<Elem> members)
      : Subset(universe) {
    for (Elem e : members) insert(e);
  }

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  [[nodiscard]] std::size_t universe() const noexcept { return universe_; }

  [[nodiscard]] bool contains(Elem e) const noexcept {
    return (words_[e >> 6] >> (e & 63)) & 1U;
  }
  void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Members in ascending index order.
  [[nodiscard]] std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        out.push_back(static_cast<Elem>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
    return out;
  }

  [[nodiscard]] bool is_subset_of(const Subset& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  Subset& operator|=(const Subset& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  Subset& operator&=(const Subset& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qbr
