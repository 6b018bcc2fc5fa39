#include "qbr/closure.hpp"

#include <algorithm>
#include <random>

#include "qbr/error.hpp"
#include "qbr/quasi.hpp"
#include "qbr/regular.hpp"

namespace qbr {

namespace {

// Shared driver: for each x, b = make_b(x); need some y with target(y, b) in A.
template <class MakeB, class Target>
std::optional<ClosureFailure> closure_failure(const FiniteRing& r, const Subset& a_set, Elem a,
                                              MakeB make_b, Target target) {
  if (a_set.contains(a)) return std::nullopt;  // y = 0 reduces every equation
  Subset seen(r.order());
  for (Elem x : r.elements()) {
    const Elem b = make_b(x);
    if (seen.contains(b)) continue;
    seen.insert(b);
    bool reduced = false;
    for (Elem y : r.elements()) {
      if (a_set.contains(target(y, b))) {
        reduced = true;
        break;
      }
    }
    if (!reduced) return ClosureFailure{a, x, b};
  }
  return std::nullopt;
}

template <class Failure>
Subset closure_set(const FiniteRing& r, const Subset& a_set, Failure failure) {
  Subset out(r.order());
  for (Elem a : r.elements())
    if (!failure(r, a_set, a)) out.insert(a);
  return out;
}

template <class Failure>
RingVerdict verdict(const FiniteRing& r, const Subset& a_set, Failure failure) {
  for (Elem a : r.elements())
    if (auto f = failure(r, a_set, a)) return RingVerdict{false, f};
  return RingVerdict{};
}

// {s + t : s in xs, t in ys}
Subset sumset(const FiniteRing& r, const Subset& xs, const Subset& ys) {
  Subset out(r.order());
  const auto ye = ys.elements();
  for (Elem s : xs.elements())
    for (Elem t : ye) out.insert(r.add(s, t));
  return out;
}

}  // namespace

std::optional<ClosureFailure> cl_failure(const FiniteRing& r, const Subset& a_set, Elem a) {
  const Elem one = r.unit();
  return closure_failure(
      r, a_set, a, [&](Elem x) { return r.sub(one, r.mul(x, a)); },
      [&](Elem y, Elem b) { return r.add(a, r.mul(y, b)); });
}

std::optional<ClosureFailure> cr_failure(const FiniteRing& r, const Subset& a_set, Elem a) {
  const Elem one = r.unit();
  return closure_failure(
      r, a_set, a, [&](Elem x) { return r.sub(one, r.mul(a, x)); },
      [&](Elem y, Elem b) { return r.add(a, r.mul(b, y)); });
}

Subset cl(const FiniteRing& r, const Subset& a_set) { return closure_set(r, a_set, cl_failure); }
Subset cr(const FiniteRing& r, const Subset& a_set) { return closure_set(r, a_set, cr_failure); }

RingVerdict is_b_ring(const FiniteRing& r) { return verdict(r, units(r), cl_failure); }
RingVerdict is_qb_ring(const FiniteRing& r) {
  return verdict(r, quasi_invertibles(r), cl_failure);
}
RingVerdict is_qb_ring_right(const FiniteRing& r) {
  return verdict(r, quasi_invertibles(r), cr_failure);
}

std::optional<ClosureFailure> cl0_failure(const FiniteRing& r, const Subset& a_set, Elem a) {
  return closure_failure(
      r, a_set, a, [&](Elem x) { return r.sub(r.add(x, a), r.mul(x, a)); },
      [&](Elem y, Elem b) { return r.sub(a, r.mul(y, b)); });
}

std::optional<ClosureFailure> cr0_failure(const FiniteRing& r, const Subset& a_set, Elem a) {
  return closure_failure(
      r, a_set, a, [&](Elem x) { return r.sub(r.add(x, a), r.mul(a, x)); },
      [&](Elem y, Elem b) { return r.sub(a, r.mul(b, y)); });
}

Subset cl0(const FiniteRing& r, const Subset& a_set) { return closure_set(r, a_set, cl0_failure); }

RingVerdict is_qb_nonunital(const FiniteRing& r) {
  return verdict(r, quasi_adversibles(r), cl0_failure);
}
RingVerdict is_b_nonunital(const FiniteRing& r) { return verdict(r, adversibles(r), cl0_failure); }

MirrorReduction mirror_reduction(const FiniteRing& r, Elem a, Elem x, Elem b, Elem c, Elem z) {
  const Elem one = r.unit();
  if (r.add(r.mul(a, x), b) != one)
    throw Error(ErrorCode::PreconditionViolated, "ax + b != 1");
  const Elem w = r.add(x, r.mul(c, b));  // x + cb
  if (!centrally_orthogonal(r, r.one_minus(r.mul(w, z)), r.one_minus(r.mul(z, w))))
    throw Error(ErrorCode::PreconditionViolated, "z is not a quasi-inverse of x + cb");
  MirrorReduction out;
  out.y = r.mul(z, r.one_minus(r.mul(c, a)));
  out.d = r.add(x, r.mul(r.one_minus(r.mul(x, a)), c));
  const Elem s = r.add(a, r.mul(b, out.y));  // a + by
  const Elem lhs1 = r.one_minus(r.mul(s, out.d));
  const Elem rhs1 = r.mul(r.mul(b, r.one_minus(r.mul(z, w))), r.one_minus(r.mul(a, c)));
  const Elem lhs2 = r.one_minus(r.mul(out.d, s));
  const Elem rhs2 = r.mul(r.mul(r.one_minus(r.mul(x, a)), r.one_minus(r.mul(w, z))),
                          r.one_minus(r.mul(c, a)));
  out.left_identity = lhs1 == rhs1;
  out.right_identity = lhs2 == rhs2;
  out.reduced = centrally_orthogonal(r, lhs1, lhs2);
  return out;
}

SymmetryReport symmetry_check(const FiniteRing& r) {
  const Subset q = quasi_invertibles(r);
  const Subset l = cl(r, q);
  const Subset rt = cr(r, q);
  const Subset all = Subset::full(r.order());
  return SymmetryReport{l == all, rt == all, l == rt};
}

std::vector<ClauseResult> closure_law_suite(const FiniteRing& r, std::uint64_t seed,
                                            std::size_t samples) {
  const std::size_t n = r.order();
  const Subset all = Subset::full(n);
  const Subset empty(n);
  const Subset zero(n, {0});
  const Subset u = units(r);
  const Subset lu = left_invertibles(r);
  const Subset jac = jacobson_radical(r).members;

  std::mt19937_64 rng(seed);
  std::vector<Subset> sets{empty, zero, u, quasi_invertibles(r), all};
  for (std::size_t s = 0; s < samples; ++s) {
    Subset a(n);
    const std::uint64_t density = 1 + rng() % 4;  // keep 1/5 .. 4/5 of elements
    for (Elem e : r.elements())
      if (rng() % 5 < density) a.insert(e);
    sets.push_back(std::move(a));
  }
  std::vector<Subset> small;  // multiplier sets B
  for (std::size_t s = 0; s < samples; ++s) {
    Subset b(n);
    for (int k = 0; k < 2; ++k) b.insert(static_cast<Elem>(rng() % n));
    small.push_back(std::move(b));
  }
  std::vector<Subset> unit_sets;
  const auto ue = u.elements();
  for (std::size_t s = 0; s < samples; ++s) {
    Subset b(n);
    for (int k = 0; k < 2; ++k) b.insert(ue[rng() % ue.size()]);
    unit_sets.push_back(std::move(b));
  }
  std::vector<Subset> closures;
  for (const auto& a : sets) closures.push_back(cl(r, a));

  auto product = [&](const Subset& x, const Subset& y) {
    Subset out(n);
    const auto ye = y.elements();
    for (Elem a : x.elements())
      for (Elem b : ye) out.insert(r.mul(a, b));
    return out;
  };
  auto left_span = [&](const Subset& b) {  // RB
    Subset out(n);
    for (Elem e : b.elements())
      for (Elem x : r.elements()) out.insert(r.mul(x, e));
    return out;
  };

  std::vector<ClauseResult> out;
  auto clause = [&](std::string name) -> ClauseResult& {
    out.push_back(ClauseResult{std::move(name), true, 0, {}});
    return out.back();
  };
  auto record = [](ClauseResult& c, bool ok, const std::string& what) {
    ++c.instances;
    if (!ok && c.pass) {
      c.pass = false;
      c.detail = what;
    }
  };

  {
    auto& c = clause("(i) cl(empty) = empty, cl(R) = R");
    record(c, closures[0].empty(), "cl(empty) nonempty");
    record(c, closures[4] == all, "cl(R) != R");
  }
  {
    auto& c = clause("(ii) monotone");
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j) {
        const Subset uni = sets[i] | sets[j];
        record(c, closures[i].is_subset_of(cl(r, uni)), "set " + std::to_string(i));
      }
  }
  {
    auto& c = clause("(iii) A in cl(A) = cl(cl(A))");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      record(c, sets[i].is_subset_of(closures[i]), "A not in cl(A), set " + std::to_string(i));
      record(c, cl(r, closures[i]) == closures[i], "cl not idempotent, set " + std::to_string(i));
    }
  }
  {
    auto& c = clause("(iv) J(R) in cl(A) for nonempty A");
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!sets[i].empty()) record(c, jac.is_subset_of(closures[i]), "set " + std::to_string(i));
  }
  {
    auto& c = clause("(v) cl({0}) = J(R)");
    record(c, closures[1] == jac, "cl({0}) != J(R)");
  }
  {
    auto& c = clause("(vi) cl(A) and A agree on left invertibles");
    for (std::size_t i = 0; i < sets.size(); ++i)
      record(c, (closures[i] & lu) == (sets[i] & lu), "set " + std::to_string(i));
  }
  {
    auto& c = clause("(vii) B cl(A) in cl(BA)");
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (const auto& b : small)
        record(c, product(b, closures[i]).is_subset_of(cl(r, product(b, sets[i]))),
               "set " + std::to_string(i));
  }
  {
    auto& c = clause("(viii) cl(A) B in cl(AB) for units B");
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (const auto& b : unit_sets)
        record(c, product(closures[i], b).is_subset_of(cl(r, product(sets[i], b))),
               "set " + std::to_string(i));
  }
  {
    auto& c = clause("(ix) cl(A) + B in cl(A + RB)");
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (const auto& b : small)
        record(c, sumset(r, closures[i], b).is_subset_of(cl(r, sumset(r, sets[i], left_span(b)))),
               "set " + std::to_string(i));
  }
  const IdealLattice lat = enumerate_ideals(r);
  {
    auto& c = clause("(x) RB in B and A + B in cl(A) imply cl(A) + B in cl(A)");
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (const auto& ideal : lat.ideals) {
        if (!sumset(r, sets[i], ideal.members).is_subset_of(closures[i])) continue;
        record(c, sumset(r, closures[i], ideal.members).is_subset_of(closures[i]),
               "set " + std::to_string(i));
      }
  }
  {
    auto& c = clause("(xi) pi(cl(A)) in cl(pi(A)) for proper quotients");
    for (const auto& ideal : lat.ideals) {
      if (ideal.size() == 1 || ideal.size() == n) continue;
      const Quotient q = quotient(r, ideal);
      for (std::size_t i = 0; i < sets.size(); ++i) {
        Subset img(q.ring.order()), img_cl(q.ring.order());
        for (Elem e : sets[i].elements()) img.insert(q.projection[e]);
        for (Elem e : closures[i].elements()) img_cl.insert(q.projection[e]);
        record(c, img_cl.is_subset_of(cl(q.ring, img)),
               "ideal of size " + std::to_string(ideal.size()) + ", set " + std::to_string(i));
      }
    }
  }
  return out;
}

ComaximalReport comaximal_conditions(const FiniteRing& r, const Ideal& i, Elem a, Elem b) {
  if (!i.contains(a)) throw Error(ErrorCode::NotInIdeal, std::to_string(a) + " is not in I");
  const Elem one = r.unit();
  const Elem na = r.one_minus(a);
  ComaximalReport rep;
  Subset ra(r.order()), rb(r.order());
  for (Elem x : r.elements()) {
    ra.insert(r.mul(x, na));
    rb.insert(r.mul(x, b));
  }
  rep.left_comaximal = sumset(r, ra, rb).contains(one);

  const auto ie = i.members.elements();
  Subset ia(r.order()), ib(r.order()), shifted(r.order());
  for (Elem x : ie) {
    ia.insert(r.mul(x, na));
    ib.insert(r.mul(x, b));
    shifted.insert(r.mul(r.one_minus(x), na));
  }
  rep.absorbs = sumset(r, ia, ib) == i.members;
  const Subset t = sumset(r, shifted, ib);
  rep.translates = std::all_of(ie.begin(), ie.end(), [&](Elem s) { return t.contains(r.one_minus(s)); });
  // xa - x - a + yb = 0  <=>  yb = a + x - xa
  for (Elem x : ie) {
    if (ib.contains(r.sub(r.add(a, x), r.mul(x, a)))) {
      rep.solvable = true;
      break;
    }
  }
  return rep;
}

namespace {

Elem local_index(const Subring& s, Elem t) {
  auto it = std::lower_bound(s.embedding.begin(), s.embedding.end(), t);
  return static_cast<Elem>(it - s.embedding.begin());
}

}  // namespace

IdealTransferReport ideal_transfer(const FiniteRing& r, const Ideal& i, Elem t) {
  if (!i.contains(t)) throw Error(ErrorCode::NotInIdeal, std::to_string(t) + " is not in I");
  const Subset q = quasi_invertibles(r);
  const Subset c = cl(r, q);
  const auto ie = i.members.elements();
  const auto pos = std::lower_bound(ie.begin(), ie.end(), t) - ie.begin();
  return ideal_transfer_all(r, i, q, c)[static_cast<std::size_t>(pos)];
}

std::vector<IdealTransferReport> ideal_transfer_all(const FiniteRing& r, const Ideal& i,
                                                    const Subset& qinv, const Subset& cl_qinv) {
  const Subring sub = ideal_as_ring(r, i);
  const Subset qa = quasi_adversibles(sub.ring);
  std::vector<IdealTransferReport> out;
  for (Elem t : sub.embedding) {
    const Elem lt = local_index(sub, t);
    IdealTransferReport rep;
    rep.t_quasi_adversible_in_i = qa.contains(lt);
    rep.one_minus_t_qinv = qinv.contains(r.one_minus(t));
    rep.t_in_cl0 = !cl0_failure(sub.ring, qa, lt).has_value();
    rep.one_minus_t_in_cl = cl_qinv.contains(r.one_minus(t));
    out.push_back(rep);
  }
  return out;
}

}  // namespace qbr
