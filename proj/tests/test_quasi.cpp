#include <doctest.h>

#include "oracles.hpp"
#include "qbr/error.hpp"
#include "qbr/ideals.hpp"
#include "qbr/quasi.hpp"
#include "qbr/regular.hpp"
#include "qbr/ring_spec.hpp"
#include "qbr/zoo.hpp"

using namespace qbr;

namespace {

constexpr Elem e11 = 1, e12 = 2, e21 = 4, e22 = 8, I2 = 9;

FiniteRing m2f2() { return make_matrix(2, make_zn(2)); }

}  // namespace

TEST_CASE("centrally orthogonal") {
  const FiniteRing z6 = make_zn(6);
  CHECK(centrally_orthogonal(z6, 2, 3));
  CHECK_FALSE(centrally_orthogonal(z6, 2, 2));
  for (Elem x : z6.elements()) CHECK(centrally_orthogonal(z6, x, 0));
}

TEST_CASE("quasi_invertible examples") {
  const FiniteRing z6 = make_zn(6);
  auto w = quasi_invertible(z6, 5);
  REQUIRE(w);
  CHECK(w->v == 5);
  CHECK_FALSE(quasi_invertible(z6, 3));
  CHECK_FALSE(quasi_invertible(m2f2(), e11));
  CHECK_THROWS_AS((void)quasi_invertible(make_ideal_ring(make_zn(4), {2}), 0), Error);
}

TEST_CASE("quasi-invertibles match the exhaustive (a, b) oracle") {
  for (const auto& z : unital_zoo(128)) {
    if (z.ring.order() > 81) continue;
    CHECK_MESSAGE(quasi_invertibles(z.ring).elements() == oracle::quasi_invertibles(z.ring), z.name);
  }
}

TEST_CASE("finite rings: quasi-invertibles are units") {
  for (const auto& z : unital_zoo(512)) CHECK_MESSAGE(quasi_invertibles(z.ring) == units(z.ring), z.name);
}

TEST_CASE("prime rings: quasi-invertibles are one-sided invertibles") {
  for (const FiniteRing& r : {m2f2(), make_matrix(2, make_zn(3))}) {
    REQUIRE(primeness(r).prime);
    CHECK(quasi_invertibles(r) == (left_invertibles(r) | right_invertibles(r)));
  }
}

TEST_CASE("quasi_inverse_canonical") {
  const FiniteRing z6 = make_zn(6);
  CHECK(quasi_inverse_canonical(z6, 1, 1, 1) == 1);
  CHECK(quasi_inverse_canonical(z6, 5, 5, 5) == 5);
  for (const auto& z : unital_zoo(64)) {
    const FiniteRing& r = z.ring;
    if (r.order() > 16) continue;
    for (Elem u : r.elements())
      for (Elem a : r.elements())
        for (Elem b : r.elements()) {
          if (!oracle::orth(r, r.one_minus(r.mul(u, a)), r.one_minus(r.mul(b, u)))) continue;
          const Elem v = quasi_inverse_canonical(r, u, a, b);
          CHECK(r.mul(u, v, u) == u);
          CHECK(r.mul(v, u, v) == v);
          CHECK(oracle::orth(r, r.one_minus(r.mul(u, v)), r.one_minus(r.mul(v, u))));
        }
  }
}

TEST_CASE("quasi_inverse_family") {
  const FiniteRing z6 = make_zn(6);
  const QIWitness w{5, 5};
  const FamilyCheck zero = quasi_inverse_family(z6, w, 0, 0);
  CHECK(zero.v2 == 5);
  CHECK(zero.all());
  CHECK(quasi_inverse_family(z6, w, 5, 5).v2 == 5);

  for (const FiniteRing& r : {z6, m2f2()})
    for (Elem u : quasi_invertibles(r).elements())
      for (Elem v : partial_inverses(r, u)) {
        if (!is_qi_witness(r, u, v)) continue;
        for (Elem a : r.elements())
          for (Elem b : r.elements()) {
            const FamilyCheck c = quasi_inverse_family(r, {u, v}, a, b);
            // Independent recomputation of v' = v + a(1 - uv) + (1 - vu)b.
            const Elem v2 = r.add(r.add(v, r.mul(a, r.one_minus(r.mul(u, v)))),
                                  r.mul(r.one_minus(r.mul(v, u)), b));
            CHECK(c.v2 == v2);
            CHECK(r.mul(u, v2, u) == u);
            CHECK(oracle::orth(r, r.one_minus(r.mul(u, v2)), r.one_minus(r.mul(v2, u))));
            CHECK(c.all());
          }
      }
}

TEST_CASE("converse_partial_inverse") {
  const FiniteRing z6 = make_zn(6);
  const ConverseCheck same = converse_partial_inverse(z6, {5, 5}, 5);
  CHECK(same.decomposes);
  CHECK(same.orthogonal);
  const ConverseCheck one = converse_partial_inverse(z6, {1, 1}, 1);
  CHECK(one.decomposes);
  for (const auto& z : unital_zoo(64))
    for (Elem u : quasi_invertibles(z.ring).elements()) {
      const Elem v = quasi_invertible(z.ring, u)->v;
      for (Elem v2 : partial_inverses(z.ring, u)) {
        const ConverseCheck c = converse_partial_inverse(z.ring, {u, v}, v2);
        CHECK_MESSAGE(c.decomposes, z.name);
        CHECK_MESSAGE(c.orthogonal, z.name);
      }
    }
}

TEST_CASE("extend_regular_via_qinv") {
  const FiniteRing z6 = make_zn(6);
  CHECK(extend_regular_via_qinv(z6, 1, 1) == 1);
  const Elem u = extend_regular_via_qinv(z6, 2, 5);
  CHECK((u == 1 || u == 5));
  CHECK(extends(z6, 2, u));
  for (const auto& z : unital_zoo(64)) {
    const FiniteRing& r = z.ring;
    for (Elem v : quasi_invertibles(r).elements())
      for (Elem a : r.elements()) {
        if (r.mul(a, v, a) != a) continue;
        const Elem w = extend_regular_via_qinv(r, a, v);
        CHECK_MESSAGE(oracle::quasi_invertible(r, w), z.name);
        CHECK_MESSAGE(extends(r, a, w), z.name);
      }
  }
}

TEST_CASE("quasi_adversible") {
  const FiniteRing two_z4 = make_ideal_ring(make_zn(4), {2});
  REQUIRE(two_z4.order() == 2);
  const auto w = quasi_adversible(two_z4, 1);  // the element 2 of Z4
  REQUIRE(w);
  CHECK(w->y == 1);
  CHECK(quasi_adversible(two_z4, 0)->y == 0);
}

TEST_CASE("quasi-adversibility matches the unitization and the direct oracle") {
  for (const auto& z : nonunital_zoo()) {
    const FiniteRing& r = z.ring;
    const FiniteRing u = make_unitization(r);
    for (Elem x : r.elements()) {
      const bool lib = quasi_adversible(r, x).has_value();
      CHECK_MESSAGE(lib == oracle::quasi_adversible(r, x), z.name << " x=" << x);
      CHECK_MESSAGE(lib == oracle::quasi_invertible(u, u.one_minus(x)), z.name << " x=" << x);
    }
  }
}

TEST_CASE("skew corner quasi-invertibility") {
  const FiniteRing m = m2f2();
  const auto y = skew_corner_qinv(m, e11, e22, e12);
  REQUIRE(y);
  CHECK(*y == e21);
  // p = q = 1 is ordinary quasi-invertibility.
  for (Elem x : m.elements())
    CHECK(skew_corner_qinv(m, I2, I2, x).has_value() == quasi_invertible(m, x).has_value());
  CHECK_THROWS_AS((void)skew_corner_qinv(m, e11, e22, e21), Error);
}

TEST_CASE("corner_transfer") {
  const FiniteRing m = m2f2();
  const TransferReport t = corner_transfer(m, e21, e12, e11, e22, e12);
  CHECK(t.corner_qinv);
  CHECK(t.ambient_qinv);
  CHECK(units(m).contains(m.add(e21, e12)));
  CHECK(t.consistent());
}

TEST_CASE("corner transfer sweep over M2(F2) and M2(F3)") {
  for (const FiniteRing& r : {m2f2(), make_matrix(2, make_zn(3))}) {
    const auto idem = idempotents(r).elements();
    std::vector<char> qi(r.order(), 0);
    for (Elem u : oracle::quasi_invertibles(r)) qi[u] = 1;
    std::size_t n = 0;
    for (Elem p : idem)
      for (Elem q : idem) {
        const Subset pq = corner(r, p, q);
        if (pq.count() <= 1) continue;
        const Elem np = r.one_minus(p), nq = r.one_minus(q);
        for (Elem u : corner(r, np, nq).elements())
          for (Elem v : corner(r, nq, np).elements()) {
            if (r.mul(u, v) != np || r.mul(v, u) != nq) continue;
            for (Elem x : pq.elements()) {
              ++n;
              const TransferReport t = corner_transfer(r, u, v, p, q, x);
              // Ambient side checked against the exhaustive oracle.
              CHECK(t.ambient_qinv == bool(qi[r.add(u, x)]));
              CHECK(t.consistent());
            }
          }
      }
    CHECK(n > 0);
  }
}

TEST_CASE("quasi-invertibility is stable under (1-p)Rq perturbations") {
  for (const auto& z : unital_zoo(32)) {
    const FiniteRing& r = z.ring;
    const Subset q = quasi_invertibles(r);
    const auto idem = idempotents(r).elements();
    for (Elem p : idem)
      for (Elem e : idem) {
        const Elem np = r.one_minus(p), nq = r.one_minus(e);
        const auto us = corner(r, np, nq).elements();
        const auto vs = corner(r, nq, np).elements();
        const auto xs = corner(r, r.unit(), e).elements();
        const auto ys = corner(r, np, e).elements();
        for (Elem u : us)
          for (Elem v : vs) {
            if (r.mul(u, v) != np || r.mul(v, u) != nq) continue;
            for (Elem x : xs) {
              if (!q.contains(r.add(u, x))) continue;
              for (Elem y : ys)
                if (!q.contains(r.add(r.add(u, x), y))) FAIL_CHECK(z.name);
              CHECK(q.contains(r.add(u, r.mul(p, x))));
            }
          }
      }
  }
}

TEST_CASE("extend_to_quasi_invertible") {
  const FiniteRing z6 = make_zn(6);
  CHECK(extend_to_quasi_invertible(z6, 2, 2) == 5);
  for (const auto& z : unital_zoo(128)) {
    const FiniteRing& r = z.ring;
    for (Elem a : regular_elements(r).elements()) {
      const Elem u = extend_to_quasi_invertible(r, a, *partial_inverse(r, a));
      CHECK_MESSAGE(units(r).contains(u), z.name);
      CHECK_MESSAGE(extends(r, a, u), z.name);
    }
  }
}
