#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbr/ideals.hpp"
#include "qbr/ring.hpp"
#include "qbr/subset.hpp"

namespace qbr {

/// An unreduced equation: for cl, xa + b = 1 with no y putting a + yb in A;
/// for cr, ax + b = 1 with no y putting a + by in A.
struct ClosureFailure {
  Elem a, x, b;
};

/// Membership test for cl(A); returns the least (by x) unreduced equation.
[[nodiscard]] std::optional<ClosureFailure> cl_failure(const FiniteRing& r, const Subset& a_set,
                                                       Elem a);
[[nodiscard]] std::optional<ClosureFailure> cr_failure(const FiniteRing& r, const Subset& a_set,
                                                       Elem a);
[[nodiscard]] Subset cl(const FiniteRing& r, const Subset& a_set);
[[nodiscard]] Subset cr(const FiniteRing& r, const Subset& a_set);

struct RingVerdict {
  bool holds = true;
  std::optional<ClosureFailure> counterexample;
};

/// cl(R^-1) = R.
[[nodiscard]] RingVerdict is_b_ring(const FiniteRing& r);
/// cl(R_q^-1) = R.
[[nodiscard]] RingVerdict is_qb_ring(const FiniteRing& r);
/// cr(R_q^-1) = R.
[[nodiscard]] RingVerdict is_qb_ring_right(const FiniteRing& r);

/// Non-unital closure over a set A of R: a qualifies when every x with
/// b = x + a - xa admits y with a - yb in A (cr: b = x + a - ax, a - by).
[[nodiscard]] std::optional<ClosureFailure> cl0_failure(const FiniteRing& r, const Subset& a_set,
                                                        Elem a);
[[nodiscard]] std::optional<ClosureFailure> cr0_failure(const FiniteRing& r, const Subset& a_set,
                                                        Elem a);
[[nodiscard]] Subset cl0(const FiniteRing& r, const Subset& a_set);
/// cl0 of the quasi-adversibles is everything. No identity needed.
[[nodiscard]] RingVerdict is_qb_nonunital(const FiniteRing& r);
/// cl0 of the adversibles is everything: stable rank one without identity.
[[nodiscard]] RingVerdict is_b_nonunital(const FiniteRing& r);

struct MirrorReduction {
  Elem y = 0, d = 0;
  bool left_identity = false;   // 1-(a+by)d = b(1-z(x+cb))(1-ac)
  bool right_identity = false;  // 1-d(a+by) = (1-xa)(1-(x+cb)z)(1-ca)
  bool reduced = false;         // a + by is quasi-invertible
};
/// Turns a left reduction of x into a right reduction of a: given ax + b = 1
/// and a quasi-inverse z of x + cb, sets y = z(1-ca), d = x + (1-xa)c.
/// Throws PreconditionViolated.
[[nodiscard]] MirrorReduction mirror_reduction(const FiniteRing& r, Elem a, Elem x, Elem b, Elem c,
                                               Elem z);

struct SymmetryReport {
  bool cl_full = false;
  bool cr_full = false;
  bool sets_equal = false;  // measured, not expected
  [[nodiscard]] bool biconditional() const noexcept { return cl_full == cr_full; }
};
[[nodiscard]] SymmetryReport symmetry_check(const FiniteRing& r);

struct ClauseResult {
  std::string clause;
  bool pass = true;
  std::size_t instances = 0;
  std::string detail;
};
/// Checks the listed properties of cl on canonical subsets plus `samples`
/// seeded random subsets, including compatibility with every proper quotient.
[[nodiscard]] std::vector<ClauseResult> closure_law_suite(const FiniteRing& r, std::uint64_t seed,
                                                          std::size_t samples = 8);

struct ComaximalReport {
  bool left_comaximal = false;  // 1 in R(1-a) + Rb
  bool absorbs = false;         // I = I(1-a) + Ib
  bool translates = false;      // 1 - I in (1-I)(1-a) + Ib
  bool solvable = false;        // xa - x - a + yb = 0 for some x, y in I
  [[nodiscard]] bool consistent() const noexcept {
    return left_comaximal == absorbs && absorbs == translates && translates == solvable;
  }
};
/// Throws NotInIdeal unless a is in I.
[[nodiscard]] ComaximalReport comaximal_conditions(const FiniteRing& r, const Ideal& i, Elem a, Elem b);

struct IdealTransferReport {
  bool t_quasi_adversible_in_i = false;
  bool one_minus_t_qinv = false;
  bool t_in_cl0 = false;
  bool one_minus_t_in_cl = false;
  [[nodiscard]] bool consistent() const noexcept {
    return t_quasi_adversible_in_i == one_minus_t_qinv && t_in_cl0 == one_minus_t_in_cl;
  }
};
/// Compares t inside I (as a ring) with 1 - t inside R. Throws NotInIdeal.
[[nodiscard]] IdealTransferReport ideal_transfer(const FiniteRing& r, const Ideal& i, Elem t);

/// Same comparison for every t in I, sharing the intermediate sets.
[[nodiscard]] std::vector<IdealTransferReport> ideal_transfer_all(const FiniteRing& r, const Ideal& i,
                                                           const Subset& qinv,
                                                           const Subset& cl_qinv);

}  // namespace qbr
