#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qbr/ring.hpp"
#include "qbr/subset.hpp"

namespace qbr {

struct RegularWitness {
  Elem a;
  Elem x;  // axa = a and xax = x
};

/// Distinct values xax over all x with axa = a, ascending. Empty iff a is not regular.
[[nodiscard]] std::vector<Elem> partial_inverses(const FiniteRing& r, Elem a);
/// First normalized partial inverse by index, if any.
[[nodiscard]] std::optional<Elem> partial_inverse(const FiniteRing& r, Elem a);
[[nodiscard]] bool is_regular(const FiniteRing& r, Elem a);
[[nodiscard]] Subset regular_elements(const FiniteRing& r);

[[nodiscard]] Subset idempotents(const FiniteRing& r);

/// The set pRq = {prq}. When R lacks an identity this still contains pq.
[[nodiscard]] Subset corner(const FiniteRing& r, Elem p, Elem q);

/// u in pRq, v in qRp with uv = p and vu = q. Throws NotIdempotent.
[[nodiscard]] std::optional<std::pair<Elem, Elem>> mvn_equivalent(const FiniteRing& r, Elem p,
                                                                  Elem q);

/// x with a = axb = bxa = axa, provided b is itself regular; first x by index.
[[nodiscard]] std::optional<Elem> extends(const FiniteRing& r, Elem a, Elem b);

/// b' = a + (1-p) b (1-q'), after checking every hypothesis; then checks
/// Rb = Rb', bR = b'R and pb' = a = b'q'. Throws PreconditionViolated.
[[nodiscard]] Elem realign_partial_inverse(const FiniteRing& r, Elem a, Elem b, Elem p, Elem q,
                                           Elem q2);

struct ExtensionSplit {
  Elem x, p, q;  // p = ax, q = xa
};
/// Idempotents p, q with pb = a = bq and b - a in (1-p)R(1-q). Throws NotAnExtension.
[[nodiscard]] ExtensionSplit decompose_extension(const FiniteRing& r, Elem a, Elem b);

/// Regular elements with no proper regular extension. Throws
/// ScaleCapExceeded above `cap`.
[[nodiscard]] Subset maximal_regular_elements(const FiniteRing& r, std::size_t cap = 512);

/// Principal one-sided ideals aR and Ra as sets.
[[nodiscard]] Subset right_multiples(const FiniteRing& r, Elem a);
[[nodiscard]] Subset left_multiples(const FiniteRing& r, Elem a);

}  // namespace qbr
