#include "qbr/quasi.hpp"

#include "qbr/closure.hpp"
#include "qbr/error.hpp"
#include "qbr/regular.hpp"

namespace qbr {

bool centrally_orthogonal(const FiniteRing& r, Elem s, Elem t) {
  if (r.mul(s, t) != 0 || r.mul(t, s) != 0) return false;
  for (Elem x : r.elements())
    if (r.mul(s, x, t) != 0 || r.mul(t, x, s) != 0) return false;
  return true;
}

bool is_qi_witness(const FiniteRing& r, Elem u, Elem v) {
  return r.mul(u, v, u) == u && r.mul(v, u, v) == v &&
         centrally_orthogonal(r, r.one_minus(r.mul(u, v)), r.one_minus(r.mul(v, u)));
}

std::optional<QIWitness> quasi_invertible(const FiniteRing& r, Elem u) {
  (void)r.unit();  // throws on rings without identity
  auto v = partial_inverse(r, u);
  if (!v) return std::nullopt;
  if (!centrally_orthogonal(r, r.one_minus(r.mul(u, *v)), r.one_minus(r.mul(*v, u))))
    return std::nullopt;
  return QIWitness{u, *v};
}

Subset quasi_invertibles(const FiniteRing& r) {
  Subset out(r.order());
  for (Elem u : r.elements())
    if (quasi_invertible(r, u)) out.insert(u);
  return out;
}

Elem quasi_inverse_canonical(const FiniteRing& r, Elem u, Elem a, Elem b) {
  const Elem one = r.unit();
  const Elem s = r.sub(one, r.mul(u, a));
  const Elem t = r.sub(one, r.mul(b, u));
  if (!centrally_orthogonal(r, s, t))
    throw Error(ErrorCode::PreconditionViolated, "(1-ua) is not orthogonal to (1-bu)");
  const Elem v = r.sub(r.add(a, b), r.mul(a, u, b));
  const Elem ub = r.mul(u, b), au = r.mul(a, u);
  auto check = [](bool ok, const char* eq) {
    if (!ok) throw Error(ErrorCode::PreconditionViolated, std::string("conclusion fails: ") + eq);
  };
  check(r.mul(u, v, u) == u, "uvu = u");
  check(r.one_minus(r.mul(u, v)) == r.mul(s, r.one_minus(ub)), "1-uv = (1-ua)(1-ub)");
  check(r.one_minus(r.mul(v, u)) == r.mul(r.one_minus(au), t), "1-vu = (1-au)(1-bu)");
  check(centrally_orthogonal(r, r.one_minus(r.mul(u, v)), r.one_minus(r.mul(v, u))),
        "(1-uv) orthogonal to (1-vu)");
  return v;
}

FamilyCheck quasi_inverse_family(const FiniteRing& r, QIWitness w, Elem a, Elem b) {
  const auto [u, v] = w;
  if (!is_qi_witness(r, u, v))
    throw Error(ErrorCode::InvalidWitness, "not a normalized quasi-inverse pair");
  FamilyCheck c;
  const Elem e = r.one_minus(r.mul(u, v));  // 1-uv
  const Elem f = r.one_minus(r.mul(v, u));  // 1-vu
  c.v2 = r.add(r.add(v, r.mul(a, e)), r.mul(f, b));
  const Elem e2 = r.one_minus(r.mul(u, c.v2));
  const Elem f2 = r.one_minus(r.mul(c.v2, u));
  c.partial_inverse = r.mul(u, c.v2, u) == u;
  c.orth_self = centrally_orthogonal(r, e2, f2);
  c.orth_left = centrally_orthogonal(r, e2, f);
  c.orth_right = centrally_orthogonal(r, e, f2);
  c.absorb_left = r.mul(e, e2) == e;
  c.absorb_right = r.mul(e2, e) == e2;
  c.equivalent = r.mul(e2, e2) == e2 && mvn_equivalent(r, e, e2).has_value();
  return c;
}

ConverseCheck converse_partial_inverse(const FiniteRing& r, QIWitness w, Elem v2) {
  const auto [u, v] = w;
  if (!is_qi_witness(r, u, v))
    throw Error(ErrorCode::InvalidWitness, "not a normalized quasi-inverse pair");
  if (r.mul(u, v2, u) != u)
    throw Error(ErrorCode::NotAPartialInverse, std::to_string(v2) + " is not a partial inverse");
  ConverseCheck c;
  const Elem rebuilt = r.add(r.add(v, r.mul(r.one_minus(r.mul(v, u)), v2)),
                             r.mul(v2, r.one_minus(r.mul(u, v))));
  c.decomposes = rebuilt == v2;
  c.orthogonal = centrally_orthogonal(r, r.one_minus(r.mul(u, v2)), r.one_minus(r.mul(v2, u)));
  return c;
}

Elem extend_regular_via_qinv(const FiniteRing& r, Elem a, Elem v) {
  if (!quasi_invertible(r, v))
    throw Error(ErrorCode::PreconditionViolated, std::to_string(v) + " is not quasi-invertible");
  if (r.mul(a, v, a) != a) throw Error(ErrorCode::PreconditionViolated, "ava != a");
  const Elem p = r.mul(v, a);
  const Elem q = r.mul(a, v);
  const Elem w = *partial_inverse(r, v);
  const Elem e = r.mul(v, w);
  const Elem f = r.mul(w, v);
  const Elem e2 = r.mul(r.one_minus(p), e);
  const Elem f2 = r.mul(f, r.one_minus(q));
  const Elem left = r.add(p, e2);
  const Elem right = r.add(q, f2);
  std::optional<Elem> s, t;
  for (Elem c : r.elements()) {
    if (!s && r.mul(v, c) == left) s = c;
    if (!t && r.mul(c, v) == right) t = c;
  }
  if (!s || !t)
    throw Error(ErrorCode::ConstructionFailed,
                std::string("no solution of ") + (!s ? "vs = p+e'" : "tv = q+f'"));
  const Elem u = r.mul(*t, v, *s);
  if (!quasi_invertible(r, u))
    throw Error(ErrorCode::ConstructionFailed, "constructed u is not quasi-invertible");
  if (r.mul(a, v, u) != a || r.mul(u, v, a) != a)
    throw Error(ErrorCode::ConstructionFailed, "constructed u does not extend a");
  return u;
}

std::optional<QAWitness> quasi_adversible(const FiniteRing& r, Elem x) {
  for (Elem y : r.elements()) {
    const Elem s = r.sub(r.add(x, y), r.mul(x, y));
    const Elem t = r.sub(r.add(x, y), r.mul(y, x));
    if (r.mul(s, s) != s || r.mul(t, t) != t) continue;
    if (centrally_orthogonal(r, s, t)) return QAWitness{x, y};
  }
  return std::nullopt;
}

Subset quasi_adversibles(const FiniteRing& r) {
  Subset out(r.order());
  for (Elem x : r.elements())
    if (quasi_adversible(r, x)) out.insert(x);
  return out;
}

std::optional<Elem> adverse(const FiniteRing& r, Elem x) {
  for (Elem y : r.elements()) {
    const Elem xy = r.add(x, y);
    if (r.sub(xy, r.mul(x, y)) == 0 && r.sub(xy, r.mul(y, x)) == 0) return y;
  }
  return std::nullopt;
}

Subset adversibles(const FiniteRing& r) {
  Subset out(r.order());
  for (Elem x : r.elements())
    if (adverse(r, x)) out.insert(x);
  return out;
}

namespace {

bool skew_pair_orthogonal(const FiniteRing& r, Elem p, Elem q, Elem x, Elem a, Elem b) {
  return centrally_orthogonal(r, r.sub(p, r.mul(x, a)), r.sub(q, r.mul(b, x)));
}

}  // namespace

std::optional<Elem> skew_corner_qinv(const FiniteRing& r, Elem p, Elem q, Elem x) {
  const Subset pq = corner(r, p, q);
  if (pq.count() <= 1) throw Error(ErrorCode::NotInCorner, "pRq = 0");
  if (r.mul(p, x, q) != x)
    throw Error(ErrorCode::NotInCorner, std::to_string(x) + " is not in pRq");
  const auto qp = corner(r, q, p).elements();
  // Fast path: a normalized partial inverse inside qRp.
  for (Elem y : qp) {
    if (r.mul(x, y, x) != x) continue;
    const Elem y2 = r.mul(y, x, y);
    if (skew_pair_orthogonal(r, p, q, x, y2, y2)) return y2;
  }
  // Full definition: any a, b in qRp, normalized afterwards.
  for (Elem a : qp)
    for (Elem b : qp)
      if (skew_pair_orthogonal(r, p, q, x, a, b)) {
        const Elem y = r.sub(r.add(a, b), r.mul(a, x, b));
        return r.mul(y, x, y);
      }
  return std::nullopt;
}

Subset skew_corner_qinvs(const FiniteRing& r, Elem p, Elem q) {
  Subset out(r.order());
  for (Elem x : corner(r, p, q).elements())
    if (skew_corner_qinv(r, p, q, x)) out.insert(x);
  return out;
}

namespace {

bool skew_cl_member(const FiniteRing& r, Elem p, Elem q, const Subset& cq,
                    const std::vector<Elem>& pq, const std::vector<Elem>& qp, Elem a, bool left) {
  for (Elem x : qp) {
    // left: xa + b = q with b in qRq; right: ax + b = p with b in pRp.
    const Elem b = left ? r.sub(q, r.mul(x, a)) : r.sub(p, r.mul(a, x));
    bool found = false;
    for (Elem y : pq) {
      if (cq.contains(r.add(a, left ? r.mul(y, b) : r.mul(b, y)))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

SkewClosures skew_corner_closures(const FiniteRing& r, Elem p, Elem q) {
  SkewClosures out{Subset(r.order()), Subset(r.order()), corner(r, p, q)};
  if (out.corner.count() <= 1) throw Error(ErrorCode::NotInCorner, "pRq = 0");
  const Subset cq = skew_corner_qinvs(r, p, q);
  const auto pq = out.corner.elements();
  const auto qp = corner(r, q, p).elements();
  for (Elem a : pq) {
    if (skew_cl_member(r, p, q, cq, pq, qp, a, true)) out.cl.insert(a);
    if (skew_cl_member(r, p, q, cq, pq, qp, a, false)) out.cr.insert(a);
  }
  return out;
}

TransferReport corner_transfer(const FiniteRing& r, Elem u, Elem v, Elem p, Elem q, Elem x,
                               const Subset* qinv, const Subset* cl_qinv) {
  auto bad = [](const std::string& m) { throw Error(ErrorCode::BadEquivalenceData, m); };
  if (r.mul(p, p) != p || r.mul(q, q) != q) bad("p and q must be idempotent");
  const Elem np = r.one_minus(p), nq = r.one_minus(q);
  if (r.mul(u, v) != np || r.mul(v, u) != nq) bad("need 1-p = uv and 1-q = vu");
  if (r.mul(np, u) != u || r.mul(u, nq) != u || r.mul(nq, v) != v || r.mul(v, np) != v)
    bad("u, v are not normalized to (1-p)R(1-q) and (1-q)R(1-p)");
  const Subset pq = corner(r, p, q);
  if (pq.count() <= 1) bad("pRq = 0");
  if (!pq.contains(x)) bad(std::to_string(x) + " is not in pRq");

  Subset own_qinv, own_cl;
  if (!qinv) {
    own_qinv = quasi_invertibles(r);
    qinv = &own_qinv;
  }
  if (!cl_qinv) {
    own_cl = cl(r, *qinv);
    cl_qinv = &own_cl;
  }
  TransferReport rep;
  rep.corner_qinv = skew_corner_qinv(r, p, q, x).has_value();
  const Elem ux = r.add(u, x);
  rep.ambient_qinv = qinv->contains(ux);
  const Subset cq = skew_corner_qinvs(r, p, q);
  rep.corner_cl = skew_cl_member(r, p, q, cq, pq.elements(), corner(r, q, p).elements(), x, true);
  rep.ambient_cl = cl_qinv->contains(ux);
  if (rep.ambient_qinv) {
    for (Elem y : corner(r, np, q).elements()) {
      ++rep.perturbations;
      if (!qinv->contains(r.add(ux, y))) ++rep.perturbation_violations;
    }
  }
  return rep;
}

Elem extend_to_quasi_invertible(const FiniteRing& r, Elem a, Elem x, const Subset* qinv) {
  if (r.mul(a, x, a) != a || r.mul(x, a, x) != x)
    throw Error(ErrorCode::PreconditionViolated, "x is not a normalized partial inverse of a");
  Subset own;
  if (!qinv) {
    own = quasi_invertibles(r);
    qinv = &own;
  }
  if (auto f = cl_failure(r, *qinv, a))
    throw Error(ErrorCode::NoReducer, std::to_string(a) + " is outside cl(R_q^-1)");
  const Elem p = r.one_minus(r.mul(a, x));
  const Elem q = r.one_minus(r.mul(x, a));
  for (Elem y : r.elements()) {
    if (!qinv->contains(r.add(a, r.mul(y, q)))) continue;
    const Elem u = r.add(a, r.mul(p, y, q));
    if (!qinv->contains(u))
      throw Error(ErrorCode::ConstructionFailed, "a + pyq left the quasi-invertibles");
    if (!extends(r, a, u))
      throw Error(ErrorCode::ConstructionFailed, "a + pyq does not extend a");
    return u;
  }
  throw Error(ErrorCode::NoReducer, "no y makes a + yq quasi-invertible");
}

}  // namespace qbr
