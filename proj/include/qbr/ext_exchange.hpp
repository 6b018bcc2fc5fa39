#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qbr/facts.hpp"
#include "qbr/ideals.hpp"
#include "qbr/ring.hpp"

namespace qbr {

/// Lifts a coset quasi-invertible in R/I to w in R_q^-1 with pi(w) = pi(a):
/// reduces the witness b of pi(a) to v = b + y(1-ab) in R_q^-1, takes a
/// quasi-inverse u of v and returns w = u + a(1-vu) + (1-uv)a.
/// Throws HypothesisFailed (R not QB, or pi(a) not quasi-invertible) or
/// ConstructionFailed.
[[nodiscard]] Elem lift_quasi_invertible(const RingFacts& f, const Quotient& q, Elem a);
[[nodiscard]] Elem lift_quasi_invertible(const FiniteRing& r, const Ideal& i, Elem a);

struct ExtensionOptions {
  bool b_ideal_route = true;   // I a B-ideal: quotient QB and lifting already decide
  bool qb_ideal_route = true;  // I a QB-ideal, R/I a B-ring and units lift: R is QB
};

struct ExtensionConditions {
  bool quotient_qb = false;  // R/I is QB
  bool lifts = false;        // (R_q^-1 + I)/I = (R/I)_q^-1
  bool perturbs = false;     // I + R_q^-1 inside cl(R_q^-1)
  bool ring_qb = false;
  bool ideal_b = false;      // I has stable rank one as a ring without identity
  bool ideal_qb = false;
  bool quotient_b = false;
  bool units_lift = false;   // (R^-1 + I)/I = (R/I)^-1
  bool consistent = false;
};
/// Evaluates each condition exactly and compares the biconditional with
/// is_qb_ring(R), plus the B-ideal and QB-ideal shortcuts selected by `opts`.
[[nodiscard]] ExtensionConditions extension_conditions(const RingFacts& f, const Ideal& i,
                                                       const ExtensionOptions& opts = {});

/// u - t in cl(R_q^-1) for all t in I. Throws NotABIdeal unless I has stable
/// rank one, PreconditionViolated unless u is quasi-invertible.
[[nodiscard]] bool b_ideal_perturbation(const RingFacts& f, const Ideal& i, Elem u);
/// u - t in cl(R_q^-1) for all t in I. Throws NotABIdeal unless I is a
/// QB-ring, PreconditionViolated unless u is a unit.
[[nodiscard]] bool qb_ideal_perturbation(const RingFacts& f, const Ideal& i, Elem u);

struct PerturbingIdeal {
  Ideal ideal;
  bool complete = true;  // every ideal of R was enumerated
  bool verified = false; // the sum itself satisfies the condition
};
/// Sum of the listed ideals I with I + base inside target.
[[nodiscard]] PerturbingIdeal largest_perturbing_ideal(const FiniteRing& r,
                                                       const IdealLattice& lattice,
                                                       const Subset& base, const Subset& target);
/// Largest ideal with I + R_q^-1 inside cl(R_q^-1). Throws IdealCapExceeded
/// when the lattice is incomplete, unless allow_partial.
[[nodiscard]] PerturbingIdeal compute_iqb(const RingFacts& f, bool allow_partial = false);

/// First idempotent p = ar (r by index) with 1 - p in (1-a)R.
[[nodiscard]] std::optional<Elem> is_exchange(const FiniteRing& r, Elem a);
/// Least element failing is_exchange, if any.
[[nodiscard]] std::optional<Elem> exchange_failure(const FiniteRing& r);
[[nodiscard]] inline bool is_exchange_ring(const FiniteRing& r) { return !exchange_failure(r); }

/// Maximal regular elements equal R_q^-1. Throws HypothesisFailed unless R
/// is semiprimitive and exchange.
[[nodiscard]] bool maximal_equals_qinv(const RingFacts& f);

struct ExchangeExtension {
  bool qb = false;
  bool extends_all = false;       // every regular a has a <= u for some u in R_q^-1
  bool inner_quasi_inverse = false;  // every x = xvx for some v in R_q^-1
  [[nodiscard]] bool agree() const noexcept { return qb == extends_all && qb == inner_quasi_inverse; }
};
/// Throws NotExchange.
[[nodiscard]] ExchangeExtension exchange_extension_conditions(const RingFacts& f);

/// Murray-von Neumann classes of idempotents of R and M2(R), restricted to
/// block-diagonal representatives diag(p, q) with p, q idempotent in R.
struct MonoidClass {
  std::size_t id = 0;
  int level = 1;            // 1 when some representative has q = 0
  Elem p = 0, q = 0;        // representative diag(p, q)
  std::size_t module_size = 0;  // |e M2(R)|, a class invariant
};
struct OrderIdealTrace {
  std::size_t ideal_index = 0;  // into the ring's ideal lattice
  std::vector<std::size_t> classes;
  bool order_ideal = false;  // hereditary and additive inside the fragment
};
struct MonoidFragment {
  std::vector<MonoidClass> classes;
  std::map<std::pair<Elem, Elem>, std::size_t> diag_class;  // absent: undecided
  std::map<Elem, std::size_t> level1;                       // idempotent -> class
  std::vector<std::array<std::size_t, 3>> additions;        // [a] + [b] = [c], level 1 summands
  std::vector<OrderIdealTrace> traces;
  std::size_t undecided = 0;  // witness searches cut off by the budget
  [[nodiscard]] std::optional<std::size_t> sum(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::vector<std::size_t> level1_classes() const;
};
/// Throws ScaleCapExceeded when kmax = 2 and |R| > 64, or kmax outside {1, 2}.
[[nodiscard]] MonoidFragment vr_monoid(const RingFacts& f, int kmax = 2);

/// Whether diag(p1, p2) and diag(q1, q2) are equivalent idempotents of M2(R):
/// u in eMf, v in fMe with uv = e, vu = f. nullopt when the search budget
/// (products tried) runs out first.
[[nodiscard]] std::optional<bool> diag_equivalent(const FiniteRing& r, Elem p1, Elem p2, Elem q1,
                                                  Elem q2, std::size_t budget = 1u << 26);

struct CancellationReport {
  std::size_t equations = 0;     // a + b1 = a + b2, including b1 = b2
  std::size_t cancelled = 0;     // equations with b1 = b2
  std::size_t satisfied = 0;     // some orthogonal ideal pair repairs it
  std::size_t inconclusive = 0;  // no repair inside the fragment
  bool ring_qb = false;
  [[nodiscard]] bool pass() const noexcept { return !ring_qb || satisfied + inconclusive == equations; }
};
/// For every a + b1 = a + b2 among level-1 classes, looks for orthogonal
/// ideals I1, I2 and c_i in V(I_i) with b1 + c1 = b2 + c2.
[[nodiscard]] CancellationReport monoid_cancellation_condition(const RingFacts& f,
                                                               const MonoidFragment& m);

struct RefinementReport {
  std::size_t equations = 0;  // x1 + x2 = y1 + y2 among level-1 classes
  std::size_t refined = 0;
  std::size_t inconclusive = 0;
};
[[nodiscard]] RefinementReport monoid_refinement(const MonoidFragment& m);

}  // namespace qbr
