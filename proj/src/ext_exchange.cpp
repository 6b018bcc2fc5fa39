#include "qbr/ext_exchange.hpp"

#include <algorithm>

#include "qbr/closure.hpp"
#include "qbr/error.hpp"
#include "qbr/quasi.hpp"
#include "qbr/regular.hpp"

namespace qbr {

namespace {

bool is_qb(const RingFacts& f) { return f.cl_qinv() == Subset::full(f.ring().order()); }

Subset image(const Quotient& q, const Subset& s) {
  Subset out(q.ring.order());
  for (Elem e : s.elements()) out.insert(q.projection[e]);
  return out;
}

}  // namespace

Elem lift_quasi_invertible(const RingFacts& f, const Quotient& q, Elem a) {
  const FiniteRing& r = f.ring();
  if (!is_qb(f)) throw Error(ErrorCode::HypothesisFailed, r.label() + " is not a QB-ring");
  auto down = quasi_invertible(q.ring, q.projection[a]);
  if (!down)
    throw Error(ErrorCode::HypothesisFailed,
                "coset of " + std::to_string(a) + " is not quasi-invertible in the quotient");
  const Elem b = q.representatives[down->v];
  const Elem gap = r.one_minus(r.mul(a, b));
  std::optional<Elem> v;
  for (Elem y : r.elements()) {
    const Elem c = r.add(b, r.mul(y, gap));
    if (f.qinv().contains(c)) {
      v = c;
      break;
    }
  }
  if (!v) throw Error(ErrorCode::ConstructionFailed, "no y puts b + y(1-ab) in R_q^-1");
  const Elem u = quasi_invertible(r, *v)->v;
  const Elem w = r.add(r.add(u, r.mul(a, r.one_minus(r.mul(*v, u)))),
                       r.mul(r.one_minus(r.mul(u, *v)), a));
  if (!f.qinv().contains(w) || q.projection[w] != q.projection[a])
    throw Error(ErrorCode::ConstructionFailed, "lift of " + std::to_string(a) + " failed");
  return w;
}

Elem lift_quasi_invertible(const FiniteRing& r, const Ideal& i, Elem a) {
  const RingFacts f(r);
  return lift_quasi_invertible(f, quotient(r, i), a);
}

ExtensionConditions extension_conditions(const RingFacts& f, const Ideal& i,
                                         const ExtensionOptions& opts) {
  const FiniteRing& r = f.ring();
  const Quotient q = quotient(r, i);
  ExtensionConditions c;
  c.ring_qb = is_qb(f);
  c.quotient_qb = is_qb_ring(q.ring).holds;
  c.quotient_b = is_b_ring(q.ring).holds;
  c.lifts = image(q, f.qinv()) == quasi_invertibles(q.ring);
  c.units_lift = image(q, f.units()) == units(q.ring);
  c.perturbs = true;
  const auto ie = i.members.elements();
  for (Elem u : f.qinv().elements()) {
    for (Elem t : ie)
      if (!f.cl_qinv().contains(r.add(u, t))) {
        c.perturbs = false;
        break;
      }
    if (!c.perturbs) break;
  }
  const Subring ideal = ideal_as_ring(r, i);
  c.ideal_b = is_b_nonunital(ideal.ring).holds;
  c.ideal_qb = is_qb_nonunital(ideal.ring).holds;

  c.consistent = (c.quotient_qb && c.lifts && c.perturbs) == c.ring_qb;
  if (opts.b_ideal_route && c.ideal_b)
    c.consistent = c.consistent && (c.quotient_qb && c.lifts) == c.ring_qb;
  if (opts.qb_ideal_route && c.ideal_qb && c.quotient_b && c.units_lift)
    c.consistent = c.consistent && c.ring_qb;
  return c;
}

namespace {

bool perturbation(const RingFacts& f, const Ideal& i, Elem u) {
  const FiniteRing& r = f.ring();
  for (Elem t : i.members.elements())
    if (!f.cl_qinv().contains(r.sub(u, t))) return false;
  return true;
}

}  // namespace

bool b_ideal_perturbation(const RingFacts& f, const Ideal& i, Elem u) {
  if (!is_b_nonunital(ideal_as_ring(f.ring(), i).ring).holds)
    throw Error(ErrorCode::NotABIdeal, "ideal does not have stable rank one");
  if (!f.qinv().contains(u))
    throw Error(ErrorCode::PreconditionViolated, std::to_string(u) + " is not quasi-invertible");
  return perturbation(f, i, u);
}

bool qb_ideal_perturbation(const RingFacts& f, const Ideal& i, Elem u) {
  if (!is_qb_nonunital(ideal_as_ring(f.ring(), i).ring).holds)
    throw Error(ErrorCode::NotABIdeal, "ideal is not a QB-ring");
  if (!f.units().contains(u))
    throw Error(ErrorCode::PreconditionViolated, std::to_string(u) + " is not a unit");
  return perturbation(f, i, u);
}

PerturbingIdeal largest_perturbing_ideal(const FiniteRing& r, const IdealLattice& lattice,
                                         const Subset& base, const Subset& target) {
  auto ok = [&](const Ideal& i) {
    const auto ie = i.members.elements();
    for (Elem u : base.elements())
      for (Elem t : ie)
        if (!target.contains(r.add(u, t))) return false;
    return true;
  };
  PerturbingIdeal out{ideal_generated_by(r, {}), lattice.complete, false};
  for (const auto& i : lattice.ideals)
    if (ok(i)) out.ideal = ideal_sum(r, out.ideal, i);
  out.verified = ok(out.ideal);
  return out;
}

PerturbingIdeal compute_iqb(const RingFacts& f, bool allow_partial) {
  const auto& lat = f.ideals();
  if (!lat.complete && !allow_partial)
    throw Error(ErrorCode::IdealCapExceeded, "ideal enumeration hit its cap");
  return largest_perturbing_ideal(f.ring(), lat, f.qinv(), f.cl_qinv());
}

std::optional<Elem> is_exchange(const FiniteRing& r, Elem a) {
  if (r.mul(a, a) == a) return a;
  const Subset target = right_multiples(r, r.one_minus(a));
  for (Elem x : r.elements()) {
    const Elem p = r.mul(a, x);
    if (r.mul(p, p) == p && target.contains(r.one_minus(p))) return p;
  }
  return std::nullopt;
}

std::optional<Elem> exchange_failure(const FiniteRing& r) {
  for (Elem a : r.elements())
    if (!is_exchange(r, a)) return a;
  return std::nullopt;
}

bool maximal_equals_qinv(const RingFacts& f) {
  const FiniteRing& r = f.ring();
  if (f.radical().size() != 1)
    throw Error(ErrorCode::HypothesisFailed, r.label() + " is not semiprimitive");
  if (!is_exchange_ring(r))
    throw Error(ErrorCode::HypothesisFailed, r.label() + " is not an exchange ring");
  return maximal_regular_elements(r, 65535) == f.qinv();
}

ExchangeExtension exchange_extension_conditions(const RingFacts& f) {
  const FiniteRing& r = f.ring();
  if (auto a = exchange_failure(r))
    throw Error(ErrorCode::NotExchange, "no exchange idempotent for " + std::to_string(*a));
  ExchangeExtension out;
  out.qb = is_qb(f);
  const auto qe = f.qinv().elements();
  out.extends_all = true;
  out.inner_quasi_inverse = true;
  for (Elem a : f.regular().elements()) {
    // Try the constructive extension first, then fall back to a full search.
    bool found = false;
    try {
      const Elem u = extend_to_quasi_invertible(r, a, *partial_inverse(r, a), &f.qinv());
      found = f.qinv().contains(u) && extends(r, a, u).has_value();
    } catch (const Error&) {
    }
    for (std::size_t k = 0; !found && k < qe.size(); ++k) found = extends(r, a, qe[k]).has_value();
    out.extends_all = out.extends_all && found;
    const bool inner = std::any_of(qe.begin(), qe.end(), [&](Elem v) { return r.mul(a, v, a) == a; });
    out.inner_quasi_inverse = out.inner_quasi_inverse && inner;
  }
  return out;
}

std::optional<std::size_t> MonoidFragment::sum(std::size_t a, std::size_t b) const {
  const auto& ca = classes.at(a);
  const auto& cb = classes.at(b);
  if (ca.level != 1 || cb.level != 1) return std::nullopt;
  auto it = diag_class.find({ca.p, cb.p});
  if (it == diag_class.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> MonoidFragment::level1_classes() const {
  std::vector<std::size_t> out;
  for (const auto& c : classes)
    if (c.level == 1) out.push_back(c.id);
  return out;
}

std::optional<bool> diag_equivalent(const FiniteRing& r, Elem p1, Elem p2, Elem q1, Elem q2,
                                    std::size_t budget) {
  if ((p1 == q1 && p2 == q2) || (p1 == q2 && p2 == q1)) return true;
  const Elem e[2] = {p1, p2};
  const Elem g[2] = {q1, q2};
  // u_ij in e_i R g_j, v_ij in g_i R e_j.
  std::vector<Elem> uc[2][2], vc[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      uc[i][j] = corner(r, e[i], g[j]).elements();
      vc[i][j] = corner(r, g[i], e[j]).elements();
    }
  // Columns of v are independent in uv = e: collect (v_0j, v_1j) per column.
  std::size_t spent = 0;
  for (Elem u00 : uc[0][0])
    for (Elem u01 : uc[0][1])
      for (Elem u10 : uc[1][0])
        for (Elem u11 : uc[1][1]) {
          std::vector<std::pair<Elem, Elem>> cols[2];
          for (int j = 0; j < 2; ++j) {
            const Elem want0 = j == 0 ? p1 : 0;
            const Elem want1 = j == 0 ? 0 : p2;
            for (Elem a : vc[0][j])
              for (Elem b : vc[1][j]) {
                ++spent;
                if (r.add(r.mul(u00, a), r.mul(u01, b)) == want0 &&
                    r.add(r.mul(u10, a), r.mul(u11, b)) == want1)
                  cols[j].emplace_back(a, b);
              }
          }
          for (auto [v00, v10] : cols[0])
            for (auto [v01, v11] : cols[1]) {
              ++spent;
              // vu = diag(q1, q2)
              if (r.add(r.mul(v00, u00), r.mul(v01, u10)) == q1 &&
                  r.add(r.mul(v00, u01), r.mul(v01, u11)) == 0 &&
                  r.add(r.mul(v10, u00), r.mul(v11, u10)) == 0 &&
                  r.add(r.mul(v10, u01), r.mul(v11, u11)) == q2)
                return true;
            }
          if (spent > budget) return std::nullopt;
        }
  return false;
}

MonoidFragment vr_monoid(const RingFacts& f, int kmax) {
  const FiniteRing& r = f.ring();
  if (kmax != 1 && kmax != 2)
    throw Error(ErrorCode::ScaleCapExceeded, "matrix level must be 1 or 2");
  if (kmax == 2 && r.order() > 64)
    throw Error(ErrorCode::ScaleCapExceeded, "level 2 needs |R| <= 64");
  const auto idem = f.idempotents().elements();
  std::vector<std::size_t> right_size(r.order(), 0);
  for (Elem p : idem) right_size[p] = right_multiples(r, p).count();

  MonoidFragment m;
  auto classify = [&](Elem p, Elem q) {
    const std::size_t size = right_size[p] * right_size[p] * right_size[q] * right_size[q];
    bool undecided = false;
    for (const auto& c : m.classes) {
      if (c.module_size != size) continue;
      auto eq = diag_equivalent(r, p, q, c.p, c.q);
      if (!eq) {
        undecided = true;
        continue;
      }
      if (*eq) {
        m.diag_class[{p, q}] = c.id;
        return;
      }
    }
    if (undecided) {
      ++m.undecided;
      return;
    }
    const std::size_t id = m.classes.size();
    m.classes.push_back(MonoidClass{id, q == 0 ? 1 : 2, p, q, size});
    m.diag_class[{p, q}] = id;
  };
  // Level-1 representatives first so every level-1 class has q = 0.
  for (Elem p : idem) classify(p, 0);
  for (Elem p : idem) m.level1[p] = m.diag_class.at({p, 0});
  if (kmax == 2) {
    for (Elem p : idem)
      for (Elem q : idem)
        if (q != 0) classify(p, q);
    for (std::size_t a : m.level1_classes())
      for (std::size_t b : m.level1_classes())
        if (auto c = m.sum(a, b)) m.additions.push_back({a, b, *c});
  }

  const auto& lat = f.ideals();
  for (std::size_t k = 0; k < lat.ideals.size(); ++k) {
    const Ideal& ideal = lat.ideals[k];
    std::vector<bool> in(m.classes.size(), false);
    for (const auto& [pq, id] : m.diag_class)
      if (ideal.contains(pq.first) && ideal.contains(pq.second)) in[id] = true;
    OrderIdealTrace t{k, {}, true};
    for (std::size_t id = 0; id < in.size(); ++id)
      if (in[id]) t.classes.push_back(id);
    for (const auto& [a, b, c] : m.additions) {
      if (in[a] && in[b] && !in[c]) t.order_ideal = false;  // additive
      if (in[c] && (!in[a] || !in[b])) t.order_ideal = false;  // hereditary
    }
    m.traces.push_back(std::move(t));
  }
  return m;
}

CancellationReport monoid_cancellation_condition(const RingFacts& f, const MonoidFragment& m) {
  const FiniteRing& r = f.ring();
  CancellationReport rep;
  rep.ring_qb = is_qb(f);
  const auto& lat = f.ideals();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // orthogonal ideal pairs
  for (std::size_t i = 0; i < lat.ideals.size(); ++i)
    for (std::size_t j = 0; j < lat.ideals.size(); ++j)
      if (orthogonal_ideals(r, lat.ideals[i], lat.ideals[j])) pairs.emplace_back(i, j);
  const auto l1 = m.level1_classes();
  for (std::size_t a : l1)
    for (std::size_t b1 : l1)
      for (std::size_t b2 : l1) {
        auto s1 = m.sum(a, b1);
        auto s2 = m.sum(a, b2);
        if (!s1 || !s2 || *s1 != *s2) continue;
        ++rep.equations;
        if (b1 == b2) ++rep.cancelled;
        bool found = false;
        for (auto [i, j] : pairs) {
          for (std::size_t c1 : m.traces[i].classes) {
            for (std::size_t c2 : m.traces[j].classes) {
              auto t1 = m.sum(b1, c1);
              auto t2 = m.sum(b2, c2);
              if (t1 && t2 && *t1 == *t2) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (found) break;
        }
        if (found)
          ++rep.satisfied;
        else
          ++rep.inconclusive;
      }
  return rep;
}

RefinementReport monoid_refinement(const MonoidFragment& m) {
  RefinementReport rep;
  const auto l1 = m.level1_classes();
  for (std::size_t x1 : l1)
    for (std::size_t x2 : l1)
      for (std::size_t y1 : l1)
        for (std::size_t y2 : l1) {
          auto lhs = m.sum(x1, x2);
          auto rhs = m.sum(y1, y2);
          if (!lhs || !rhs || *lhs != *rhs) continue;
          ++rep.equations;
          bool found = false;
          for (std::size_t z11 : l1) {
            for (std::size_t z12 : l1) {
              if (m.sum(z11, z12) != x1) continue;
              for (std::size_t z21 : l1) {
                if (m.sum(z11, z21) != y1) continue;
                for (std::size_t z22 : l1)
                  if (m.sum(z21, z22) == x2 && m.sum(z12, z22) == y2) {
                    found = true;
                    break;
                  }
                if (found) break;
              }
              if (found) break;
            }
            if (found) break;
          }
          if (found)
            ++rep.refined;
          else
            ++rep.inconclusive;
        }
  return rep;
}

}  // namespace qbr
