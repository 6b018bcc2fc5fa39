#pragma once

#include <optional>
#include <utility>

#include "qbr/ring.hpp"
#include "qbr/subset.hpp"

namespace qbr {

/// sRt = tRs = {0} and st = ts = 0. The product terms matter only when R has
/// no identity, so this is the unital relation whenever one exists.
[[nodiscard]] bool centrally_orthogonal(const FiniteRing& r, Elem s, Elem t);

struct QIWitness {
  Elem u;
  Elem v;  // uvu = u, vuv = v, (1-uv) orthogonal to (1-vu)
};

[[nodiscard]] bool is_qi_witness(const FiniteRing& r, Elem u, Elem v);

/// Any normalized partial inverse decides the question: when u is
/// quasi-invertible every partial inverse is a quasi-inverse.
[[nodiscard]] std::optional<QIWitness> quasi_invertible(const FiniteRing& r, Elem u);
[[nodiscard]] Subset quasi_invertibles(const FiniteRing& r);

/// v = a + b - aub for (1-ua) orthogonal to (1-bu). Throws PreconditionViolated.
[[nodiscard]] Elem quasi_inverse_canonical(const FiniteRing& r, Elem u, Elem a, Elem b);

struct FamilyCheck {
  Elem v2 = 0;  // v + a(1-uv) + (1-vu)b
  bool partial_inverse = false;
  bool orth_self = false;    // (1-uv') _|_ (1-v'u)
  bool orth_left = false;    // (1-uv') _|_ (1-vu)
  bool orth_right = false;   // (1-uv) _|_ (1-v'u)
  bool absorb_left = false;  // 1-uv = (1-uv)(1-uv')
  bool absorb_right = false; // 1-uv' = (1-uv')(1-uv)
  bool equivalent = false;   // (1-uv, 1-uv') is a Murray-von Neumann pair
  [[nodiscard]] bool all() const noexcept {
    return partial_inverse && orth_self && orth_left && orth_right && absorb_left &&
           absorb_right && equivalent;
  }
};
/// Throws InvalidWitness unless `w` satisfies the QIWitness invariants.
[[nodiscard]] FamilyCheck quasi_inverse_family(const FiniteRing& r, QIWitness w, Elem a, Elem b);

struct ConverseCheck {
  bool decomposes = false;  // v' = v + (1-vu)v' + v'(1-uv)
  bool orthogonal = false;  // (1-uv') _|_ (1-v'u)
};
/// Throws InvalidWitness or NotAPartialInverse.
[[nodiscard]] ConverseCheck converse_partial_inverse(const FiniteRing& r, QIWitness w, Elem v2);

/// Given quasi-invertible v with ava = a, builds u = tvs quasi-invertible with
/// a <= u. Throws PreconditionViolated or ConstructionFailed.
[[nodiscard]] Elem extend_regular_via_qinv(const FiniteRing& r, Elem a, Elem v);

struct QAWitness {
  Elem x;
  Elem y;  // x+y-xy and x+y-yx are orthogonal idempotents
};
/// Searches for a single quasi-adverse y, which exists exactly when some
/// pair (b, c) has x+b-xb orthogonal to x+c-cx.
[[nodiscard]] std::optional<QAWitness> quasi_adversible(const FiniteRing& r, Elem x);
[[nodiscard]] Subset quasi_adversibles(const FiniteRing& r);
/// y with x+y-xy = 0 = x+y-yx.
[[nodiscard]] std::optional<Elem> adverse(const FiniteRing& r, Elem x);
[[nodiscard]] Subset adversibles(const FiniteRing& r);

/// y in qRp with x = xyx, y = yxy and (p-xy) orthogonal to (q-yx).
/// Throws NotInCorner when x is outside pRq or pRq = 0.
[[nodiscard]] std::optional<Elem> skew_corner_qinv(const FiniteRing& r, Elem p, Elem q, Elem x);
/// Quasi-invertible elements of the corner pRq.
[[nodiscard]] Subset skew_corner_qinvs(const FiniteRing& r, Elem p, Elem q);

struct SkewClosures {
  // a in pRq such that every xa+b = q (x in qRp, b in qRq) admits y in pRq
  // with a+yb quasi-invertible in the corner; cr mirrors with ax+b = p.
  Subset cl;
  Subset cr;
  Subset corner;
  [[nodiscard]] bool qb_corner() const { return cl == corner && cr == corner; }
};
[[nodiscard]] SkewClosures skew_corner_closures(const FiniteRing& r, Elem p, Elem q);

struct TransferReport {
  bool corner_qinv = false;
  bool ambient_qinv = false;
  bool corner_cl = false;
  bool ambient_cl = false;
  std::size_t perturbations = 0;
  std::size_t perturbation_violations = 0;
  [[nodiscard]] bool consistent() const noexcept {
    return corner_qinv == ambient_qinv && corner_cl == ambient_cl && perturbation_violations == 0;
  }
};
/// Compares quasi-invertibility of x in pRq with that of u + x in R, and the
/// same for the closures, where 1-p = uv and 1-q = vu. Also checks that
/// u+x+y stays quasi-invertible for y in (1-p)Rq. Throws BadEquivalenceData.
[[nodiscard]] TransferReport corner_transfer(const FiniteRing& r, Elem u, Elem v, Elem p, Elem q,
                                             Elem x, const Subset* qinv = nullptr,
                                             const Subset* cl_qinv = nullptr);

/// With p = 1-ax and q = 1-xa, finds y with a + yq quasi-invertible and
/// returns u = a + pyq, checked quasi-invertible with a <= u.
/// Throws PreconditionViolated or NoReducer.
[[nodiscard]] Elem extend_to_quasi_invertible(const FiniteRing& r, Elem a, Elem x,
                                              const Subset* qinv = nullptr);

}  // namespace qbr
