#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "qbr/error.hpp"
#include "qbr/ideals.hpp"
#include "qbr/ring_spec.hpp"
#include "qbr/zoo.hpp"

using namespace qbr;
using json = nlohmann::json;

namespace {

// M2(F2), row-major bits.
constexpr Elem e11 = 1, e12 = 2, e21 = 4, e22 = 8, I2 = 9;

FiniteRing m2f2() { return make_matrix(2, make_zn(2)); }

std::vector<Elem> members(const Ideal& i) { return i.members.elements(); }

}  // namespace

TEST_CASE("build_ring examples") {
  const FiniteRing z6 = build_ring(json{{"kind", "zn"}, {"n", 6}});
  CHECK(z6.order() == 6);
  CHECK(z6.one() == Elem{1});

  const FiniteRing m = build_ring(json::parse(R"({"kind":"matrix","size":2,"base":{"kind":"zn","n":2}})"));
  CHECK(m.order() == 16);
  CHECK(units(m).count() == 6);
  CHECK(oracle::units(m).size() == 6);

  const FiniteRing c = build_ring(
      json::parse(R"({"kind":"corner","idempotent":1,"base":{"kind":"matrix","size":2,"base":{"kind":"zn","n":2}}})"));
  CHECK(c.order() == 2);
  CHECK(c.mul(1, 1) == 1);
  CHECK(c.add(1, 1) == 0);
}

TEST_CASE("malformed specs are rejected") {
  CHECK_THROWS_AS((void)build_ring(json{{"kind", "nope"}}), Error);
  CHECK_THROWS_AS((void)build_ring(json{{"kind", "gf"}, {"q", 6}}), Error);
  CHECK_THROWS_AS((void)build_ring(json::array()), Error);
  // F2 x F2 addition with a non-associative product.
  const json bad = {{"kind", "table"},
                    {"add", {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0}},
                    {"mul", {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 1}}};
  try {
    (void)build_ring(bad);
    FAIL("corrupted table accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedSpec);
  }
  try {
    (void)build_ring(json{{"kind", "matrix"}, {"size", 3}, {"base", {{"kind", "zn"}, {"n", 4}}}});
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderCapExceeded);
  }
}

TEST_CASE("arithmetic examples") {
  const FiniteRing z6 = make_zn(6);
  CHECK(z6.mul(2, 3) == 0);
  CHECK(z6.add(4, 5) == 3);
  CHECK(z6.apply(ArithOp::Sub, 1, 4) == 3);
  CHECK(z6.apply(ArithOp::Neg, 1) == 5);
  const FiniteRing m = m2f2();
  CHECK(m.mul(e12, e21) == e11);
  CHECK(m.mul(e21, e12) == e22);
  CHECK(m.one() == I2);
}

TEST_CASE("units examples") {
  CHECK(units(make_zn(6)).elements() == std::vector<Elem>{1, 5});
  CHECK(units(make_zn(4)).elements() == std::vector<Elem>{1, 3});
  const FiniteRing m = m2f2();
  CHECK(units(m).elements() == oracle::units(m));
}

TEST_CASE("opposite ring") {
  const FiniteRing z6 = make_zn(6);
  const FiniteRing op = opposite(z6);
  CHECK(std::equal(op.mul_table().begin(), op.mul_table().end(), z6.mul_table().begin()));

  const FiniteRing t2 = make_upper_triangular(2, make_zn(2));
  const FiniteRing t2op = opposite(t2);
  CHECK(t2op.order() == t2.order());
  for (Elem a : t2.elements())
    for (Elem b : t2.elements()) CHECK(t2op.mul(a, b) == t2.mul(b, a));

  for (const auto& z : base_zoo(256)) {
    const FiniteRing back = opposite(opposite(z.ring));
    CHECK_MESSAGE(back == z.ring, z.name);
  }
}

TEST_CASE("constructed rings satisfy the axioms and sizes") {
  for (const auto& z : base_zoo(256)) CHECK_MESSAGE(!check_axioms(z.ring), z.name);
  CHECK(make_matrix(2, make_zn(3)).order() == 81);
  CHECK(make_matrix(3, make_zn(2)).order() == 512);
  CHECK(make_product({make_zn(2), make_zn(3), make_gf(4)}).order() == 24);
  CHECK(make_upper_triangular(3, make_zn(2)).order() == 64);
}

TEST_CASE("units form a group") {
  for (const auto& z : unital_zoo(256)) {
    const FiniteRing& r = z.ring;
    const Subset u = units(r);
    for (Elem a : u.elements()) {
      CHECK_MESSAGE(u.contains(inverse(r, a)), z.name);
      for (Elem b : u.elements())
        if (!u.contains(r.mul(a, b))) FAIL_CHECK(z.name << " not closed");
    }
  }
}

TEST_CASE("build is deterministic") {
  const json spec = json::parse(R"({"kind":"product","factors":[{"kind":"gf","q":4},{"kind":"zn","n":3}]})");
  CHECK(build_ring(spec) == build_ring(spec));
}

TEST_CASE("ideal_generated_by examples") {
  const FiniteRing z6 = make_zn(6);
  CHECK(members(ideal_generated_by(z6, {2})) == std::vector<Elem>{0, 2, 4});
  CHECK(members(ideal_generated_by(z6, {})) == std::vector<Elem>{0});
  CHECK(ideal_generated_by(m2f2(), {e11}).size() == 16);
}

TEST_CASE("ideal_generated_by is monotone and idempotent") {
  for (const auto& z : unital_zoo(64)) {
    const FiniteRing& r = z.ring;
    for (Elem g : r.elements()) {
      const Ideal i = ideal_generated_by(r, {g});
      CHECK(is_ideal(r, i.members));
      CHECK(ideal_generated_by(r, i.members.elements()) == i);
      const Ideal j = ideal_generated_by(r, {g, r.mul(g, g)});
      CHECK(i.members.is_subset_of(j.members));
    }
  }
}

TEST_CASE("quotient examples") {
  const FiniteRing z6 = make_zn(6);
  const Quotient q3 = quotient(z6, ideal_generated_by(z6, {3}));
  CHECK(q3.ring.order() == 3);
  CHECK(units(q3.ring).count() == 2);
  const Quotient q2 = quotient(z6, ideal_generated_by(z6, {2}));
  CHECK(q2.ring.order() == 2);
  const Quotient id = quotient(z6, ideal_generated_by(z6, {}));
  CHECK(id.ring.order() == 6);
  for (Elem a : z6.elements()) CHECK(id.representatives[id.projection[a]] == a);
}

TEST_CASE("projection is a homomorphism") {
  for (const auto& z : unital_zoo(64)) {
    const FiniteRing& r = z.ring;
    for (const Ideal& i : enumerate_ideals(r).ideals) {
      const Quotient q = quotient(r, i);
      for (Elem a : r.elements())
        for (Elem b : r.elements()) {
          if (q.projection[r.add(a, b)] != q.ring.add(q.projection[a], q.projection[b]) ||
              q.projection[r.mul(a, b)] != q.ring.mul(q.projection[a], q.projection[b]))
            FAIL_CHECK(z.name);
        }
    }
  }
}

TEST_CASE("jacobson radical examples") {
  CHECK(members(jacobson_radical(make_zn(4))) == std::vector<Elem>{0, 2});
  CHECK(members(jacobson_radical(m2f2())) == std::vector<Elem>{0});
  // T2(F2): digits (1,1), (1,2), (2,2); e12 is index 2.
  CHECK(members(jacobson_radical(make_upper_triangular(2, make_zn(2)))) == std::vector<Elem>{0, 2});
}

TEST_CASE("jacobson radical matches the unit oracle and vanishes on R/J") {
  for (const auto& z : unital_zoo(128)) {
    const Ideal j = jacobson_radical(z.ring);
    CHECK_MESSAGE(members(j) == oracle::radical(z.ring), z.name);
    const Quotient q = quotient(z.ring, j);
    CHECK_MESSAGE(jacobson_radical(q.ring).size() == 1, z.name);
  }
}

TEST_CASE("primeness examples") {
  const Primeness z6 = primeness(make_zn(6));
  CHECK(z6.semiprime);
  CHECK_FALSE(z6.prime);
  const Primeness z4 = primeness(make_zn(4));
  CHECK_FALSE(z4.semiprime);
  CHECK(z4.nilpotent_witness == Elem{2});
  CHECK(primeness(m2f2()).prime);
}

TEST_CASE("semiprime rings have symmetric annihilation") {
  for (const auto& z : unital_zoo(64)) {
    const FiniteRing& r = z.ring;
    if (!primeness(r).semiprime) continue;
    auto kills = [&](Elem x, Elem y) {
      for (Elem m : r.elements())
        if (r.mul(x, m, y) != 0) return false;
      return true;
    };
    for (Elem x : r.elements())
      for (Elem y : r.elements())
        if (kills(x, y) != kills(y, x)) FAIL_CHECK(z.name << " " << x << " " << y);
  }
}

TEST_CASE("orthogonal ideals") {
  const FiniteRing z6 = make_zn(6);
  const Ideal two = ideal_generated_by(z6, {2}), three = ideal_generated_by(z6, {3});
  CHECK(orthogonal_ideals(z6, two, three));
  CHECK_FALSE(orthogonal_ideals(z6, two, two));
  CHECK(orthogonal_ideals(z6, two, ideal_generated_by(z6, {})));
}

TEST_CASE("prime embeddings") {
  const FiniteRing m = m2f2();
  std::vector<Elem> all;
  for (Elem a : m.elements()) all.push_back(a);
  CHECK(is_primely_embedded(m, m, all));

  const Subring diag = restrict_to(m, Subset(16, {0, e11, e22, I2}), "diag");
  CHECK_FALSE(is_primely_embedded(diag.ring, m, diag.embedding));

  const FiniteRing z6 = make_zn(6);
  for (const Ideal& i : enumerate_ideals(z6).ideals) {
    const Subring s = ideal_as_ring(z6, i);
    CHECK(is_primely_embedded(s.ring, z6, s.embedding));
  }
}
