#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qbr/ring.hpp"
#include "qbr/subset.hpp"

namespace qbr {

/// A two-sided ideal of a specific ring, identified by the ring's id.
struct Ideal {
  std::uint64_t ring_id = 0;
  Subset members;

  [[nodiscard]] bool contains(Elem e) const noexcept { return members.contains(e); }
  [[nodiscard]] std::size_t size() const noexcept { return members.count(); }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

/// Smallest ideal containing `gens`. Worklist closure: each element that
/// enlarges the additive group is multiplied on both sides by all of R.
[[nodiscard]] Ideal ideal_generated_by(const FiniteRing& r, const std::vector<Elem>& gens);

/// I + J.
[[nodiscard]] Ideal ideal_sum(const FiniteRing& r, const Ideal& i, const Ideal& j);

/// True when `s` is closed under +, - and two-sided multiplication by R.
[[nodiscard]] bool is_ideal(const FiniteRing& r, const Subset& s);

struct IdealLattice {
  std::vector<Ideal> ideals;  // sorted by size, then by members
  bool complete = true;       // false when the cap cut the enumeration short
};

/// All ideals, found as sums of principal ideals. Stops at `cap` ideals.
[[nodiscard]] IdealLattice enumerate_ideals(const FiniteRing& r, std::size_t cap = 512);

struct Quotient {
  FiniteRing ring;
  std::vector<Elem> projection;       // element of R -> coset index
  std::vector<Elem> representatives;  // coset index -> least element of the coset
};

/// R/I with cosets numbered by their least representative.
[[nodiscard]] Quotient quotient(const FiniteRing& r, const Ideal& i);

/// {x : 1 - rx is a unit for all r}. Throws NonUnitalRing.
[[nodiscard]] Ideal jacobson_radical(const FiniteRing& r);

struct Primeness {
  bool semiprime = true;
  bool prime = true;
  std::optional<Elem> nilpotent_witness;               // x != 0 with xRx = 0
  std::optional<std::pair<Elem, Elem>> prime_witness;  // x, y != 0 with xRy = 0
};
[[nodiscard]] Primeness primeness(const FiniteRing& r);

/// IJ = 0 = JI. Throws DifferentRings.
[[nodiscard]] bool orthogonal_ideals(const FiniteRing& r, const Ideal& i, const Ideal& j);

/// `map[s]` is the image in `r` of element s of `sub`. Checks that the map is
/// an injective ring homomorphism (NotAHomomorphism otherwise), then that
/// orthogonal idempotent pairs of `sub` stay orthogonal in `r`.
[[nodiscard]] bool is_primely_embedded(const FiniteRing& sub, const FiniteRing& r,
                                       const std::vector<Elem>& map);

/// The ideal viewed as a ring in its own right.
[[nodiscard]] Subring ideal_as_ring(const FiniteRing& r, const Ideal& i);

}  // namespace qbr
