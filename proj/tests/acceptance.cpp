// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qbr/closure.hpp"
#include "qbr/error.hpp"
#include "qbr/ext_exchange.hpp"
#include "qbr/facts.hpp"
#include "qbr/ideals.hpp"
#include "qbr/jacobson.hpp"
#include "qbr/matrix_qb.hpp"
#include "qbr/quasi.hpp"
#include "qbr/regular.hpp"
#include "qbr/ring_spec.hpp"
#include "qbr/zoo.hpp"

using namespace qbr;

namespace {

// Collects the first few violations; a criterion passes when none are seen.
struct Log {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::ostringstream first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (violations++ < 3) first << (violations > 1 ? "; " : "") << what;
  }
};

Subset as_subset(std::size_t n, const std::vector<Elem>& v) {
  Subset s(n);
  for (Elem e : v) s.insert(e);
  return s;
}

std::string str(Elem e) { return std::to_string(e); }

// ---- criteria

void zoo_consistency(Log& log) {
  for (const auto& z : unital_zoo(512)) {
    const FiniteRing& r = z.ring;
    const RingFacts f(r);
    log.expect(f.qinv() == f.units(), z.name + ": R_q^-1 != R^-1");
    if (r.order() <= 32) log.expect(f.qinv() == as_subset(r.order(), oracle::quasi_invertibles(r)),
                                    z.name + ": qinv differs from brute force");
    log.expect(f.units() == as_subset(r.order(), oracle::units(r)), z.name + ": units differ");
    log.expect(is_b_ring(r).holds, z.name + ": not B");
    log.expect(is_qb_ring(r).holds, z.name + ": not QB");
    log.expect(is_exchange_ring(r), z.name + ": not exchange");
  }
}

void family_sweep(Log& log) {
  for (const auto& z : unital_zoo(64)) {
    const FiniteRing& r = z.ring;
    const Elem one = r.unit();
    for (Elem u : quasi_invertibles(r).elements()) {
      const QIWitness w = *quasi_invertible(r, u);
      const Elem v = w.v;
      const Elem e = r.one_minus(r.mul(u, v)), g = r.one_minus(r.mul(v, u));
      for (Elem a : r.elements())
        for (Elem b : r.elements()) {
          const FamilyCheck c = quasi_inverse_family(r, w, a, b);
          // Recomputed from the definitions, independent of the library flags.
          const Elem v2 = r.add(r.add(v, r.mul(a, e)), r.mul(g, b));
          const Elem e2 = r.one_minus(r.mul(u, v2)), g2 = r.one_minus(r.mul(v2, u));
          const bool ok = c.all() && c.v2 == v2 && r.mul(r.mul(u, v2), u) == u &&
                          oracle::orth(r, e2, g2) && oracle::orth(r, e2, g) && oracle::orth(r, e, g2) &&
                          r.mul(e, e2) == e && r.mul(e2, e) == e2 && one == r.unit();
          log.expect(ok, z.name + " u=" + str(u) + " a=" + str(a) + " b=" + str(b));
        }
    }
  }
}

void mirror_identities(Log& log) {
  for (const FiniteRing& r : {make_zn(6), make_matrix(2, make_zn(2))}) {
    for (Elem a : r.elements())
      for (Elem x : r.elements())
        for (Elem c : r.elements()) {
          const Elem b = r.one_minus(r.mul(a, x));
          const Elem w = r.add(x, r.mul(c, b));
          for (Elem z : r.elements()) {
            const Elem e = r.one_minus(r.mul(w, z)), g = r.one_minus(r.mul(z, w));
            if (!oracle::orth(r, e, g)) continue;
            const MirrorReduction m = mirror_reduction(r, a, x, b, c, z);
            const Elem s = r.add(a, r.mul(b, m.y));
            const bool reduced = oracle::quasi_invertible(r, s);
            log.expect(m.left_identity && m.right_identity && m.reduced && reduced,
                       r.label() + " a=" + str(a) + " x=" + str(x) + " c=" + str(c) + " z=" + str(z));
          }
        }
  }
}

void opposite_symmetry(Log& log) {
  for (const auto& z : unital_zoo(512)) {
    const FiniteRing op = opposite(z.ring);
    log.expect(is_qb_ring(z.ring).holds == is_qb_ring(op).holds, z.name);
    log.expect(is_qb_ring(z.ring).holds == is_qb_ring_right(z.ring).holds, z.name + " (right)");
  }
}

void matrix_reduction(Log& log) {
  for (const FiniteRing& base : {make_zn(2), make_zn(3), make_zn(4), make_gf(4)}) {
    const FiniteRing m2 = make_matrix(2, base);
    log.expect(is_qb_ring(m2).holds, m2.label() + " not QB");
    // Units sit inside R_q^-1, so cl(R^-1) = R already forces QB.
    std::vector<char> u(m2.order(), 0);
    for (Elem e : oracle::units(m2)) u[e] = 1;
    bool full = true;
    for (Elem a : m2.elements()) full = full && oracle::in_cl(m2, u, a);
    log.expect(full, m2.label() + " cl(units) oracle");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const FiniteRing z6 = make_zn(6);
  const Mat2Ops m(z6);
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 200; ++k) {
    const UnimodularRow row = random_unimodular_row(m, rng);
    check_certificate(m, row);
    const Reduction red = reduce_row_m2(m, row);  // stage invariants throw on failure
    const Mat2 s = m.add(row.a, m.mul(row.b, red.y));
    bool invariants = !red.trace.empty();
    for (const auto& st : red.trace) invariants = invariants && !st.invariants.empty();
    // Recheck the quasi-inverse by hand: sws = s, wsw = w, (1-sw) orthogonal to (1-ws).
    const bool partial = m.mul(m.mul(s, red.w), s) == s && m.mul(m.mul(red.w, s), red.w) == red.w;
    const Mat2 e = m.one_minus(m.mul(s, red.w)), g = m.one_minus(m.mul(red.w, s));
    bool orth = true;
    for (std::uint32_t t = 0; t < m.size() && orth; ++t) {
      const Mat2 q = m.from_key(t);
      orth = m.mul(m.mul(e, q), g) == m.zero() && m.mul(m.mul(g, q), e) == m.zero();
    }
    log.expect(invariants && partial && orth, "row " + std::to_string(k));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  log.expect(secs < 120, "200 rows took " + std::to_string(secs) + "s");
}

void nonunital_coherence(Log& log) {
  for (const auto& z : nonunital_zoo()) {
    const FiniteRing& r = z.ring;
    const FiniteRing u = make_unitization(r);
    for (Elem x : r.elements()) {
      const bool lib = quasi_adversible(r, x).has_value();
      log.expect(lib == quasi_invertible(u, u.one_minus(x)).has_value(), z.name + " unitization x=" + str(x));
      if (r.order() <= 16) log.expect(lib == oracle::quasi_adversible(r, x), z.name + " oracle x=" + str(x));
    }
  }
  for (const auto& z : unital_zoo(512)) {
    const FiniteRing& r = z.ring;
    const RingFacts f(r);
    if (r.order() <= 64)
      for (const auto& i : f.ideals().ideals)
        for (Elem a : i.members.elements())
          for (Elem b : r.elements())
            log.expect(comaximal_conditions(r, i, a, b).consistent(), z.name + " comaximal a=" + str(a));
    if (!is_qb_ring(r).holds) continue;
    for (const auto& i : f.ideals().ideals)
      log.expect(is_qb_nonunital(ideal_as_ring(r, i).ring).holds, z.name + " ideal not QB");
  }
}

void corner_transfer_and_extension(Log& log) {
  for (const FiniteRing& r : {make_matrix(2, make_zn(2)), make_matrix(2, make_zn(3))}) {
    const RingFacts f(r);
    const auto idem = f.idempotents().elements();
    std::size_t admissible = 0;
    for (Elem p : idem)
      for (Elem q : idem) {
        const Subset pq = corner(r, p, q);
        if (pq.count() <= 1) continue;  // zero corner, not admissible
        const Elem np = r.one_minus(p), nq = r.one_minus(q);
        for (Elem u : corner(r, np, nq).elements())
          for (Elem v : corner(r, nq, np).elements()) {
            if (r.mul(u, v) != np || r.mul(v, u) != nq) continue;
            for (Elem x : pq.elements()) {
              ++admissible;
              const TransferReport t = corner_transfer(r, u, v, p, q, x, &f.qinv(), &f.cl_qinv());
              log.expect(t.consistent(), r.label() + " p=" + str(p) + " q=" + str(q) + " x=" + str(x));
            }
          }
      }
    log.expect(admissible > 0, r.label() + " has no admissible tuples");
  }
  for (const auto& z : unital_zoo(128)) {
    const FiniteRing& r = z.ring;
    const RingFacts f(r);
    for (Elem a : f.regular().elements()) {
      const Elem x = *partial_inverse(r, a);
      const Elem u = extend_to_quasi_invertible(r, a, x, &f.qinv());
      bool below = false;  // a <= u: a = ayu = uya = aya for some y
      for (Elem y : r.elements()) {
        const Elem ay = r.mul(a, y);
        if (r.mul(ay, u) == a && r.mul(r.mul(u, y), a) == a && r.mul(ay, a) == a) {
          below = true;
          break;
        }
      }
      log.expect(f.qinv().contains(u) && below, z.name + " a=" + str(a));
    }
  }
}

void lifting(Log& log) {
  for (const auto& z : unital_zoo(64)) {
    const FiniteRing& r = z.ring;
    const RingFacts f(r);
    std::vector<char> qi(r.order(), 0);
    for (Elem e : oracle::quasi_invertibles(r)) qi[e] = 1;
    for (const Ideal& i : f.ideals().ideals) {
      const Quotient quo = quotient(r, i);
      for (Elem c : quasi_invertibles(quo.ring).elements()) {
        const Elem w = lift_quasi_invertible(f, quo, quo.representatives[c]);
        log.expect(qi[w] && quo.projection[w] == c, z.name + " coset " + str(c));
      }
    }
  }
  for (const auto& z : unital_zoo(512)) {
    const RingFacts f(z.ring);
    const bool qb = is_qb_ring(z.ring).holds;
    for (const Ideal& i : f.ideals().ideals) {
      const ExtensionConditions c = extension_conditions(f, i);
      log.expect(c.consistent && (c.quotient_qb && c.lifts && c.perturbs) == qb, z.name);
    }
  }
}

void exchange_and_monoid(Log& log) {
  for (const auto& z : unital_zoo(512)) {
    const RingFacts f(z.ring);
    if (f.radical().size() == 1) {
      log.expect(maximal_equals_qinv(f), z.name + " maximal != qinv");
      if (z.ring.order() <= 64) log.expect(maximal_regular_elements(z.ring) == f.qinv(), z.name + " direct");
    }
    log.expect(exchange_extension_conditions(f).agree(), z.name + " exchange extension");
  }
  const FiniteRing m = make_matrix(2, make_zn(2));
  const RingFacts f(m);
  const MonoidFragment v = vr_monoid(f, 2);
  log.expect(v.undecided == 0, "undecided classes");
  std::map<std::size_t, std::size_t> by_rank;
  for (const auto& [pq, id] : v.diag_class) {
    const std::size_t rk = oracle::rank_f2(pq.first) + oracle::rank_f2(pq.second);
    auto [it, fresh] = by_rank.emplace(rk, id);
    log.expect(fresh || it->second == id, "rank does not determine class");
  }
  log.expect(by_rank.size() == 5 && v.classes.size() == 5, "expected 5 classes");
  for (const auto& [a, b, c] : v.additions)
    log.expect(by_rank.at(oracle::rank_f2(v.classes[a].p) + oracle::rank_f2(v.classes[b].p)) == c,
               "addition is not rank addition");
  for (const FiniteRing& r : {m, make_zn(6), make_upper_triangular(2, make_zn(2))}) {
    const RingFacts g(r);
    const CancellationReport c = monoid_cancellation_condition(g, vr_monoid(g, 2));
    log.expect(c.pass() && c.ring_qb, r.label() + " cancellation");
  }
}

void jacobson_demo(Log& log) {
  using namespace qbr::jacobson;
  const auto t0 = std::chrono::steady_clock::now();
  for (unsigned p : {2u, 3u}) {
    const JElement x = JElement::x(p), y = JElement::y(p), one = JElement::one(p);
    log.expect(x * y == one, "xy != 1");
    log.expect(y * x != one, "yx = 1");
    log.expect(matrix_unit_violations(p, 6) == 0, "matrix unit laws");
    for (const Claim& c : demo_claims(p)) log.expect(c.pass, c.name + ": " + c.detail);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  log.expect(secs < 5, "demo took " + std::to_string(secs) + "s");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Log&)>>> criteria{
      {"zoo consistency", zoo_consistency},
      {"quasi-inverse family sweep", family_sweep},
      {"mirror identities", mirror_identities},
      {"opposite-ring symmetry", opposite_symmetry},
      {"M2 brute force and row reduction", matrix_reduction},
      {"rings without identity and ideals", nonunital_coherence},
      {"corner transfer and extension", corner_transfer_and_extension},
      {"lifting and extension conditions", lifting},
      {"exchange, maximal regulars, V(M2(F2))", exchange_and_monoid},
      {"Jacobson algebra demo", jacobson_demo},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(log);
    } catch (const std::exception& e) {
      log.violations++;
      log.first << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = log.violations == 0 && log.checked > 0;
    failed += !ok;
    std::printf("%s %2zu %-40s checks=%zu violations=%zu %.2fs%s%s\n", ok ? "PASS" : "FAIL", k + 1,
                criteria[k].first, log.checked, log.violations, secs, ok ? "" : "  ",
                ok ? "" : log.first.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
