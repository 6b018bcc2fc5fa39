#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "qbr/element.hpp"
#include "qbr/subset.hpp"

namespace qbr {

enum class ArithOp { Add, Mul, Neg, Sub };

/// A finite ring presented by dense addition and multiplication tables.
///
/// Immutable after construction. Element 0 is the additive identity. The ring
/// is unital exactly when `one()` is engaged; the zero ring is unital with 1 = 0.
class FiniteRing {
 public:
  /// Tables are row-major n*n. Throws MalformedSpec on shape errors or when
  /// 0 is not the additive identity; the full axiom scan is `check_axioms`.
  FiniteRing(std::string label, std::size_t order, std::vector<Elem> add_table,
             std::vector<Elem> mul_table, std::optional<Elem> one);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  /// Identity of the underlying tables; copies share it.
  [[nodiscard]] std::uint64_t id() const noexcept { return id_; }

  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
  [[nodiscard]] Elem neg(Elem a) const noexcept { return neg_[a]; }
  [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
  [[nodiscard]] Elem mul(Elem a, Elem b, Elem c) const noexcept { return mul(mul(a, b), c); }

  /// Checked table lookup; throws ForeignElement on an out-of-range index.
  /// `b` is ignored for Neg.
  [[nodiscard]] Elem apply(ArithOp op, Elem a, Elem b = 0) const;

  [[nodiscard]] bool unital() const noexcept { return one_.has_value(); }
  [[nodiscard]] std::optional<Elem> one() const noexcept { return one_; }
  /// The identity; throws NonUnitalRing when absent.
  [[nodiscard]] Elem unit() const;
  /// 1 - a; requires a unital ring.
  [[nodiscard]] Elem one_minus(Elem a) const noexcept { return sub(*one_, a); }

  [[nodiscard]] bool contains(std::size_t index) const noexcept { return index < n_; }

  [[nodiscard]] auto elements() const noexcept {
    return std::views::iota(std::size_t{0}, n_) |
           std::views::transform([](std::size_t i) { return static_cast<Elem>(i); });
  }

  [[nodiscard]] std::span<const Elem> add_table() const noexcept { return add_; }
  [[nodiscard]] std::span<const Elem> mul_table() const noexcept { return mul_; }
  [[nodiscard]] std::span<const Elem> neg_table() const noexcept { return neg_; }

  /// Integer multiple k*a.
  [[nodiscard]] Elem times(std::uint64_t k, Elem a) const noexcept;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.n_ == b.n_ && a.add_ == b.add_ && a.mul_ == b.mul_ && a.one_ == b.one_;
  }

 private:
  std::string label_;
  std::size_t n_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::optional<Elem> one_;
  std::uint64_t id_;
};

/// Full enumeration of the ring axioms. Returns a description of the first
/// violation found, or nothing when the tables form a ring.
[[nodiscard]] std::optional<std::string> check_axioms(const FiniteRing& r);

/// The two-sided identity of the tables, if one exists.
[[nodiscard]] std::optional<Elem> find_identity(std::size_t n, std::span<const Elem> mul);

/// Additive exponent: the least m >= 1 with m*a = 0 for every a.
[[nodiscard]] std::uint64_t additive_exponent(const FiniteRing& r);

/// Two-sided units {u : uv = vu = 1 for some v}. Throws NonUnitalRing.
[[nodiscard]] Subset units(const FiniteRing& r);
/// Elements with a left inverse (vu = 1).
[[nodiscard]] Subset left_invertibles(const FiniteRing& r);
/// Elements with a right inverse (uv = 1).
[[nodiscard]] Subset right_invertibles(const FiniteRing& r);
/// Two-sided inverse of a unit; throws NotAUnit.
[[nodiscard]] Elem inverse(const FiniteRing& r, Elem u);

/// Same elements and addition, multiplication transposed.
[[nodiscard]] FiniteRing opposite(const FiniteRing& r);

/// Restriction of `r` to a subset closed under +, - and *, re-indexed in
/// ascending order of the original indices. `embedding[i]` is the original
/// index of new element i. The identity is detected, not inherited.
struct Subring {
  FiniteRing ring;
  std::vector<Elem> embedding;
};
[[nodiscard]] Subring restrict_to(const FiniteRing& r, const Subset& members, std::string label);

}  // namespace qbr
