#include "qbr/suites.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "qbr/closure.hpp"
#include "qbr/error.hpp"
#include "qbr/ext_exchange.hpp"
#include "qbr/facts.hpp"
#include "qbr/ideals.hpp"
#include "qbr/matrix_qb.hpp"
#include "qbr/parallel.hpp"
#include "qbr/quasi.hpp"
#include "qbr/regular.hpp"
#include "qbr/ring_spec.hpp"

namespace qbr {

using json = nlohmann::json;

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct Outcome {
  Status status = Status::Pass;
  json witness = json::object();
};

Outcome pass(json w = json::object()) { return {Status::Pass, std::move(w)}; }
Outcome fail(json w) { return {Status::Fail, std::move(w)}; }
Outcome skip(const std::string& why) { return {Status::Skipped, json{{"reason", why}}}; }

// Caps for the exhaustive sweeps; above them a check is skipped or sampled.
constexpr std::size_t kSweep = 64;
constexpr std::size_t kSmall = 16;
constexpr std::size_t kSamples = 4096;

bool skippable(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonUnitalRing:
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::ScaleCapExceeded:
    case ErrorCode::IdealCapExceeded:
    case ErrorCode::HypothesisFailed:
    case ErrorCode::NotExchange:
      return true;
    default:
      return false;
  }
}

class Runner {
 public:
  explicit Runner(std::vector<CheckRecord>& out) : out_(out) {}

  void operator()(std::string name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec{std::move(name)};
    try {
      Outcome o = body();
      rec.status = o.status;
      rec.witness = std::move(o.witness);
    } catch (const Error& e) {
      rec.status = skippable(e.code()) ? Status::Skipped : Status::Fail;
      rec.witness = json{{"error", qbr::to_string(e.code())}, {"message", e.what()}};
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(rec));
  }

 private:
  std::vector<CheckRecord>& out_;
};

json indices(const Subset& s) { return s.elements(); }

json failure_json(const ClosureFailure& f) { return json{{"a", f.a}, {"x", f.x}, {"b", f.b}}; }

// Seeded sample of k-tuples of elements, or all of them when n^k <= cap.
std::vector<std::vector<Elem>> tuples(std::size_t n, std::size_t k, std::size_t cap,
                                      std::mt19937_64& rng) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < k && total <= cap; ++i) total *= n;
  std::vector<std::vector<Elem>> out;
  if (total <= cap) {
    std::vector<Elem> t(k, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t v = idx;
      for (std::size_t i = 0; i < k; ++i) {
        t[i] = static_cast<Elem>(v % n);
        v /= n;
      }
      out.push_back(t);
    }
    return out;
  }
  for (std::size_t s = 0; s < kSamples; ++s) {
    std::vector<Elem> t(k);
    for (auto& e : t) e = static_cast<Elem>(rng() % n);
    out.push_back(std::move(t));
  }
  return out;
}

void require_unital(const FiniteRing& r) {
  if (!r.unital()) throw Error(ErrorCode::NonUnitalRing, r.label() + " has no identity");
}

// ---------------------------------------------------------------- thm2.3

void suite_quasi_inverses(const FiniteRing& r, const SuiteOptions& o, Runner& run) {
  run("quasi-inverse family relations", [&] {
    require_unital(r);
    std::mt19937_64 rng(o.seed);
    const auto qs = quasi_invertibles(r).elements();
    std::size_t checked = 0;
    for (Elem u : qs) {
      const Elem v = quasi_invertible(r, u)->v;
      for (const auto& t : tuples(r.order(), 2, kSweep * kSweep, rng)) {
        ++checked;
        const FamilyCheck c = quasi_inverse_family(r, {u, v}, t[0], t[1]);
        if (!c.all()) return fail({{"u", u}, {"v", v}, {"a", t[0]}, {"b", t[1]}, {"v2", c.v2}});
      }
    }
    return pass({{"instances", checked}});
  });
  run("every partial inverse of a quasi-invertible is a quasi-inverse", [&] {
    require_unital(r);
    std::size_t checked = 0;
    for (Elem u : quasi_invertibles(r).elements()) {
      const Elem v = quasi_invertible(r, u)->v;
      for (Elem v2 : partial_inverses(r, u)) {
        ++checked;
        const ConverseCheck c = converse_partial_inverse(r, {u, v}, v2);
        if (!c.decomposes || !c.orthogonal) return fail({{"u", u}, {"v", v}, {"v2", v2}});
      }
    }
    return pass({{"instances", checked}});
  });
  run("single partial inverse decides quasi-invertibility", [&] {
    require_unital(r);
    if (r.order() > 32) return skip("exhaustive (a, b) search needs |R| <= 32");
    const Subset fast = quasi_invertibles(r);
    for (Elem u : r.elements()) {
      bool slow = false;
      for (Elem a : r.elements()) {
        for (Elem b : r.elements())
          if (centrally_orthogonal(r, r.one_minus(r.mul(u, a)), r.one_minus(r.mul(b, u)))) {
            slow = true;
            break;
          }
        if (slow) break;
      }
      if (slow != fast.contains(u)) return fail({{"u", u}, {"fast", fast.contains(u)}});
    }
    return pass();
  });
  run("canonical quasi-inverse a + b - aub", [&] {
    require_unital(r);
    if (r.order() > kSmall) return skip("sweep needs |R| <= 16");
    std::size_t checked = 0;
    for (Elem u : quasi_invertibles(r).elements())
      for (Elem a : r.elements())
        for (Elem b : r.elements()) {
          if (!centrally_orthogonal(r, r.one_minus(r.mul(u, a)), r.one_minus(r.mul(b, u)))) continue;
          ++checked;
          (void)quasi_inverse_canonical(r, u, a, b);  // throws on a failed post-condition
        }
    return pass({{"instances", checked}});
  });
  run("prime ring: quasi-invertibles are the one-sided invertibles", [&] {
    require_unital(r);
    if (!primeness(r).prime) return skip("ring is not prime");
    const Subset lr = left_invertibles(r) | right_invertibles(r);
    const Subset q = quasi_invertibles(r);
    if (q != lr) return fail({{"qinv", indices(q)}, {"one_sided", indices(lr)}});
    return pass();
  });
}

// ---------------------------------------------------------------- prop2.5

void suite_extension_order(const FiniteRing& r, const SuiteOptions& o, Runner& run) {
  (void)o;
  run("extension order is a partial order", [&] {
    if (r.order() > kSweep) return skip("relation sweep needs |R| <= 64");
    const auto reg = regular_elements(r).elements();
    const std::size_t m = reg.size();
    std::vector<char> le(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) le[i * m + j] = extends(r, reg[i], reg[j]).has_value();
    for (std::size_t i = 0; i < m; ++i)
      if (!le[i * m + i]) return fail({{"reflexive", reg[i]}});
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && le[i * m + j] && le[j * m + i])
          return fail({{"antisymmetric", {reg[i], reg[j]}}});
        if (!le[i * m + j]) continue;
        for (std::size_t k = 0; k < m; ++k)
          if (le[j * m + k] && !le[i * m + k])
            return fail({{"transitive", {reg[i], reg[j], reg[k]}}});
      }
    return pass({{"regular", m}});
  });
  run("a <= b and aR = bR force a = b", [&] {
    if (r.order() > kSweep) return skip("sweep needs |R| <= 64");
    const auto reg = regular_elements(r).elements();
    for (Elem a : reg)
      for (Elem b : reg)
        if (a != b && extends(r, a, b) && right_multiples(r, a) == right_multiples(r, b))
          return fail({{"a", a}, {"b", b}});
    return pass();
  });
  run("quasi-invertibles are maximal regular elements", [&] {
    require_unital(r);
    const Subset q = quasi_invertibles(r);
    const Subset maxreg = maximal_regular_elements(r);
    if (!q.is_subset_of(maxreg)) return fail({{"qinv", indices(q)}, {"maximal", indices(maxreg)}});
    return pass({{"maximal", indices(maxreg)}});
  });
  run("regular elements below quasi-invertibles extend via tvs", [&] {
    require_unital(r);
    if (r.order() > kSweep) return skip("sweep needs |R| <= 64");
    std::size_t checked = 0;
    for (Elem v : quasi_invertibles(r).elements())
      for (Elem a : r.elements()) {
        if (r.mul(a, v, a) != a) continue;
        ++checked;
        const Elem u = extend_regular_via_qinv(r, a, v);
        if (!extends(r, a, u)) return fail({{"a", a}, {"v", v}, {"u", u}});
      }
    return pass({{"instances", checked}});
  });
}

// ---------------------------------------------------------------- lemma3.2

void suite_closure_laws(const FiniteRing& r, const SuiteOptions& o, Runner& run) {
  if (!r.unital()) {
    run("closure laws", [&] { return skip("ring has no identity"); });
    return;
  }
  if (r.order() > 256) {
    run("closure laws", [&] { return skip("clause sweep needs |R| <= 256"); });
    return;
  }
  for (const ClauseResult& c : closure_law_suite(r, o.seed))
    run("closure law " + c.clause, [&] {
      json w{{"instances", c.instances}};
      if (!c.pass) {
        w["detail"] = c.detail;
        return fail(w);
      }
      return pass(w);
    });
}

// ---------------------------------------------------------------- lemma3.5

void suite_mirror(const FiniteRing& r, const SuiteOptions& o, Runner& run) {
  run("mirror reduction identities", [&] {
    require_unital(r);
    std::mt19937_64 rng(o.seed);
    const Subset q = quasi_invertibles(r);
    const bool all_z = r.order() <= kSmall;
    std::size_t checked = 0;
    for (const auto& t : tuples(r.order(), 3, kSweep * kSweep * kSweep, rng)) {
      const Elem a = t[0], x = t[1], c = t[2];
      const Elem b = r.one_minus(r.mul(a, x));
      const Elem w = r.add(x, r.mul(c, b));
      if (!q.contains(w)) continue;
      std::vector<Elem> zs;
      if (all_z) {
        for (Elem z : r.elements())
          if (centrally_orthogonal(r, r.one_minus(r.mul(w, z)), r.one_minus(r.mul(z, w))))
            zs.push_back(z);
      } else {
        zs.push_back(quasi_invertible(r, w)->v);
      }
      for (Elem z : zs) {
        ++checked;
        const MirrorReduction m = mirror_reduction(r, a, x, b, c, z);
        if (!m.left_identity || !m.right_identity || !m.reduced)
          return fail({{"a", a}, {"x", x}, {"b", b}, {"c", c}, {"z", z}});
      }
    }
    return pass({{"instances", checked}});
  });
}

// ---------------------------------------------------------------- thm3.6

void suite_symmetry(const FiniteRing& r, const SuiteOptions&, Runner& run) {
  run("left and right closures are full together", [&] {
    require_unital(r);
    const SymmetryReport s = symmetry_check(r);
    json w{{"cl_full", s.cl_full}, {"cr_full", s.cr_full}};
    return s.biconditional() ? pass(w) : fail(w);
  });
  run("cl(R_q^-1) = cr(R_q^-1) as sets (measured)", [&] {
    require_unital(r);
    return pass({{"sets_equal", symmetry_check(r).sets_equal}});
  });
  run("QB agrees with the opposite ring", [&] {
    require_unital(r);
    const FiniteRing op = opposite(r);
    const bool a = is_qb_ring(r).holds, b = is_qb_ring(op).holds;
    const bool right = is_qb_ring_right(r).holds;
    json w{{"ring", a}, {"opposite", b}, {"right_closure", right}};
    return a == b && a == right ? pass(w) : fail(w);
  });
}

// ---------------------------------------------------------------- sec4

void suite_nonunital(const FiniteRing& r, const SuiteOptions&, Runner& run) {
  if (!r.unital()) {
    run("quasi-adversible matches the unitization", [&] {
      const FiniteRing u = make_unitization(r);
      for (Elem x : r.elements()) {
        const bool intrinsic = quasi_adversible(r, x).has_value();
        const bool via = quasi_invertible(u, u.one_minus(x)).has_value();
        if (intrinsic != via) return fail({{"x", x}, {"intrinsic", intrinsic}});
      }
      return pass();
    });
    run("QB without identity", [&] {
      const RingVerdict v = is_qb_nonunital(r);
      return v.holds ? pass() : fail(failure_json(*v.counterexample));
    });
    run("QB without identity matches 1 - R inside cl of the unitization", [&] {
      const FiniteRing u = make_unitization(r);
      const Subset c = cl(u, quasi_invertibles(u));
      bool inside = true;
      for (Elem x : r.elements()) inside = inside && c.contains(u.one_minus(x));
      const bool intrinsic = is_qb_nonunital(r).holds;
      json w{{"intrinsic", intrinsic}, {"unitization", inside}};
      return inside == intrinsic ? pass(w) : fail(w);
    });
    return;
  }
  const RingFacts f(r);
  run("ideals of a QB-ring are QB", [&] {
    if (!is_qb_ring(r).holds) return skip("ring is not QB");
    for (const auto& i : f.ideals().ideals) {
      const RingVerdict v = is_qb_nonunital(ideal_as_ring(r, i).ring);
      if (!v.holds) return fail({{"ideal", indices(i.members)}});
    }
    return pass({{"ideals", f.ideals().ideals.size()}});
  });
  run("comaximality conditions agree", [&] {
    if (r.order() > kSweep) return skip("sweep needs |R| <= 64");
    std::size_t checked = 0;
    for (const auto& i : f.ideals().ideals)
      for (Elem a : i.members.elements())
        for (Elem b : r.elements()) {
          ++checked;
          const ComaximalReport c = comaximal_conditions(r, i, a, b);
          if (!c.consistent()) return fail({{"ideal", indices(i.members)}, {"a", a}, {"b", b}});
        }
    return pass({{"instances", checked}});
  });
  run("ideal elements transfer to 1 - t", [&] {
    std::size_t checked = 0;
    for (const auto& i : f.ideals().ideals) {
      const auto reps = ideal_transfer_all(r, i, f.qinv(), f.cl_qinv());
      const auto ie = i.members.elements();
      for (std::size_t k = 0; k < reps.size(); ++k) {
        ++checked;
        if (!reps[k].consistent()) return fail({{"ideal", indices(i.members)}, {"t", ie[k]}});
      }
    }
    return pass({{"instances", checked}});
  });
}

// ---------------------------------------------------------------- sec5

void suite_corners(const FiniteRing& r, const SuiteOptions&, Runner& run) {
  run("corner and ambient quasi-invertibility agree", [&] {
    require_unital(r);
    if (r.order() > 81) return skip("sweep needs |R| <= 81");
    const RingFacts f(r);
    const auto idem = f.idempotents().elements();
    std::size_t checked = 0;
    for (Elem p : idem)
      for (Elem q : idem) {
        const Subset pq = corner(r, p, q);
        if (pq.count() <= 1) continue;
        const Elem np = r.one_minus(p), nq = r.one_minus(q);
        const auto us = corner(r, np, nq).elements();
        const auto vs = corner(r, nq, np).elements();
        for (Elem u : us)
          for (Elem v : vs) {
            if (r.mul(u, v) != np || r.mul(v, u) != nq) continue;
            for (Elem x : pq.elements()) {
              ++checked;
              const TransferReport t = corner_transfer(r, u, v, p, q, x, &f.qinv(), &f.cl_qinv());
              if (!t.consistent())
                return fail({{"p", p}, {"q", q}, {"u", u}, {"v", v}, {"x", x}});
            }
          }
      }
    return pass({{"instances", checked}});
  });
  run("regular elements extend to quasi-invertibles", [&] {
    require_unital(r);
    const RingFacts f(r);
    std::size_t checked = 0;
    for (Elem a : f.regular().elements()) {
      const Elem x = *partial_inverse(r, a);
      ++checked;
      const Elem u = extend_to_quasi_invertible(r, a, x, &f.qinv());
      if (!f.qinv().contains(u) || !extends(r, a, u)) return fail({{"a", a}, {"x", x}, {"u", u}});
    }
    return pass({{"instances", checked}});
  });
  run("corners between equivalent idempotents are QB-corners", [&] {
    require_unital(r);
    if (r.order() > kSweep) return skip("sweep needs |R| <= 64");
    if (!is_qb_ring(r).holds) return skip("ring is not QB");
    const auto idem = idempotents(r).elements();
    std::size_t checked = 0;
    for (Elem p : idem)
      for (Elem q : idem) {
        if (corner(r, p, q).count() <= 1 || !mvn_equivalent(r, p, q)) continue;
        ++checked;
        if (!skew_corner_closures(r, p, q).qb_corner()) return fail({{"p", p}, {"q", q}});
      }
    return pass({{"instances", checked}});
  });
}

// ---------------------------------------------------------------- thm6.4

void suite_matrices(const FiniteRing& r, const SuiteOptions& o, Runner& run) {
  run("ring is QB", [&] {
    require_unital(r);
    const RingVerdict v = is_qb_ring(r);
    return v.holds ? pass() : fail(failure_json(*v.counterexample));
  });
  run("M2(R) is QB by exhaustive check", [&] {
    require_unital(r);
    if (r.order() > 4) return skip("exhaustive M2 check needs |R| <= 4");
    const FiniteRing m2 = make_matrix(2, r);
    const RingVerdict v = is_qb_ring(m2);
    return v.holds ? pass({{"order", m2.order()}}) : fail(failure_json(*v.counterexample));
  });
  run("staged reduction of seeded rows over M2(R)", [&] {
    require_unital(r);
    const Mat2Ops m(r);
    std::mt19937_64 rng(o.seed);
    const bool table = m.size() <= 4096;
    std::optional<FiniteRing> m2;
    if (table) m2 = make_matrix(2, r);
    std::size_t stages = 0;
    for (int k = 0; k < 200; ++k) {
      const UnimodularRow row = random_unimodular_row(m, rng);
      const Reduction red = reduce_row_m2(m, row);
      stages += red.trace.size();
      const Mat2 s = m.add(row.a, m.mul(row.b, red.y));
      if (table && !quasi_invertible(*m2, m.encode(s)))
        return fail({{"row", k}, {"A", row.a.e}, {"B", row.b.e}, {"Y", red.y.e}});
    }
    return pass({{"rows", 200}, {"stages", stages}, {"table_verified", table}});
  });
  run("row transforms preserve reducibility", [&] {
    require_unital(r);
    if (r.order() > 4) return skip("reducibility search needs |R| <= 4");
    const Mat2Ops m(r);
    const FiniteRing m2 = make_matrix(2, r);
    const Subset q = quasi_invertibles(m2);
    auto reducible = [&](const UnimodularRow& row) {
      for (std::uint32_t k = 0; k < m.size(); ++k)
        if (q.contains(m.encode(m.add(row.a, m.mul(row.b, m.from_key(k)))))) return true;
      return false;
    };
    std::mt19937_64 rng(o.seed);
    const auto gl = units(m2).elements();
    for (int k = 0; k < 20; ++k) {
      const UnimodularRow row = random_unimodular_row(m, rng);
      const Mat2 u = m.decode(gl[rng() % gl.size()]), v = m.decode(gl[rng() % gl.size()]);
      const Mat2 c = m.from_key(static_cast<std::uint32_t>(rng() % m.size()));
      const UnimodularRow moved = row_transform(m, row, u, v, c);
      check_certificate(m, moved);
      if (reducible(row) != reducible(moved)) return fail({{"row", k}});
      // The inverse transform is (u^-1, v^-1, -c u^-1).
      const Mat2 ui = *m.inverse(u), vi = *m.inverse(v);
      const UnimodularRow back = row_transform(m, moved, ui, vi, m.sub(m.zero(), m.mul(c, ui)));
      if (back.a != row.a || back.b != row.b) return fail({{"row", k}, {"inverse", false}});
    }
    return pass({{"rows", 20}});
  });
  run("complement corners are zero or QB-corners", [&] {
    require_unital(r);
    if (r.order() > kSmall) return skip("sweep needs |R| <= 16");
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem u : quasi_invertibles(r).elements())
      for (Elem x : r.elements())
        if (is_qi_witness(r, u, x)) pairs.emplace_back(u, x);
    std::size_t checked = 0;
    for (auto [u, x] : pairs)
      for (auto [v, y] : pairs) {
        ++checked;
        const ComplementCornerReport c = complement_corner(r, u, x, v, y);
        if (c.hypothesis && !c.conclusion()) return fail({{"u", u}, {"x", x}, {"v", v}, {"y", y}});
      }
    return pass({{"instances", checked}});
  });
}

// ---------------------------------------------------------------- sec7

void suite_extensions(const FiniteRing& r, const SuiteOptions&, Runner& run) {
  if (!r.unital()) {
    run("extension conditions", [&] { return skip("ring has no identity"); });
    return;
  }
  const RingFacts f(r);
  run("quasi-invertible cosets lift", [&] {
    if (r.order() > 256) return skip("sweep needs |R| <= 256");
    if (!is_qb_ring(r).holds) return skip("ring is not QB");
    std::size_t checked = 0;
    for (const auto& i : f.ideals().ideals) {
      const Quotient q = quotient(r, i);
      const Subset down = quasi_invertibles(q.ring);
      for (Elem c : down.elements()) {
        ++checked;
        (void)lift_quasi_invertible(f, q, q.representatives[c]);
      }
    }
    return pass({{"instances", checked}});
  });
  run("extension conditions match QB", [&] {
    for (std::size_t k = 0; k < f.ideals().ideals.size(); ++k) {
      const auto& i = f.ideals().ideals[k];
      const ExtensionConditions c = extension_conditions(f, i);
      if (!c.consistent)
        return fail({{"ideal", indices(i.members)},
                     {"quotient_qb", c.quotient_qb},
                     {"lifts", c.lifts},
                     {"perturbs", c.perturbs},
                     {"ring_qb", c.ring_qb}});
    }
    return pass({{"ideals", f.ideals().ideals.size()}});
  });
  run("stable rank one ideals perturb quasi-invertibles into cl", [&] {
    std::size_t checked = 0;
    for (const auto& i : f.ideals().ideals) {
      if (!is_b_nonunital(ideal_as_ring(r, i).ring).holds) continue;
      for (Elem u : f.qinv().elements()) {
        ++checked;
        if (!b_ideal_perturbation(f, i, u)) return fail({{"ideal", indices(i.members)}, {"u", u}});
      }
    }
    return pass({{"instances", checked}});
  });
  run("QB ideals perturb units into cl", [&] {
    std::size_t checked = 0;
    for (const auto& i : f.ideals().ideals) {
      if (!is_qb_nonunital(ideal_as_ring(r, i).ring).holds) continue;
      for (Elem u : f.units().elements()) {
        ++checked;
        if (!qb_ideal_perturbation(f, i, u)) return fail({{"ideal", indices(i.members)}, {"u", u}});
      }
    }
    return pass({{"instances", checked}});
  });
  run("largest perturbing ideal", [&] {
    const PerturbingIdeal p = compute_iqb(f);
    json w{{"size", p.ideal.size()}, {"verified", p.verified}};
    const bool full = p.ideal.size() == r.order();
    return p.verified && (!is_qb_ring(r).holds || full) ? pass(w) : fail(w);
  });
}

// ---------------------------------------------------------------- sec8

void suite_exchange(const FiniteRing& r, const SuiteOptions&, Runner& run) {
  run("exchange ring", [&] {
    require_unital(r);
    if (auto a = exchange_failure(r)) return fail({{"a", *a}});
    return pass();
  });
  if (!r.unital()) return;
  const RingFacts f(r);
  run("maximal regular elements are the quasi-invertibles", [&] {
    return maximal_equals_qinv(f) ? pass() : fail({{"qinv", indices(f.qinv())}});
  });
  run("exchange extension conditions agree", [&] {
    const ExchangeExtension e = exchange_extension_conditions(f);
    json w{{"qb", e.qb}, {"extends", e.extends_all}, {"inner", e.inner_quasi_inverse}};
    return e.agree() ? pass(w) : fail(w);
  });
  std::optional<MonoidFragment> m;
  run("idempotent classes up to M2(R)", [&] {
    m = vr_monoid(f, r.order() <= kSweep ? 2 : 1);
    json adds = json::array();
    for (const auto& [a, b, c] : m->additions) adds.push_back({a, b, c});
    json classes = json::array();
    for (const auto& c : m->classes) classes.push_back({{"id", c.id}, {"level", c.level}, {"rep", {c.p, c.q}}});
    json w{{"classes", classes}, {"additions", adds}, {"undecided", m->undecided}};
    return m->undecided ? Outcome{Status::Inconclusive, w} : pass(w);
  });
  if (!m) return;
  run("ideal traces are order-ideals", [&] {
    for (const auto& t : m->traces)
      if (!t.order_ideal) return fail({{"ideal", t.ideal_index}, {"classes", t.classes}});
    return pass({{"ideals", m->traces.size()}});
  });
  run("cancellation repaired by orthogonal ideals", [&] {
    const CancellationReport c = monoid_cancellation_condition(f, *m);
    json w{{"equations", c.equations}, {"satisfied", c.satisfied}, {"inconclusive", c.inconclusive},
           {"cancelled", c.cancelled}};
    if (!c.pass()) return fail(w);
    return c.inconclusive ? Outcome{Status::Inconclusive, w} : pass(w);
  });
  run("refinement inside the fragment", [&] {
    const RefinementReport rf = monoid_refinement(*m);
    json w{{"equations", rf.equations}, {"refined", rf.refined}, {"inconclusive", rf.inconclusive}};
    return rf.inconclusive ? Outcome{Status::Inconclusive, w} : pass(w);
  });
}

using SuiteFn = void (*)(const FiniteRing&, const SuiteOptions&, Runner&);

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> e{
      {{"thm2.3", "quasi-inverse families, converse, single-witness decision"}, suite_quasi_inverses},
      {{"prop2.5", "extension order, maximal regular elements, tvs extension"}, suite_extension_order},
      {{"lemma3.2", "closure laws on canonical and seeded subsets, quotients"}, suite_closure_laws},
      {{"lemma3.5", "mirror reduction identities"}, suite_mirror},
      {{"thm3.6", "left/right closure symmetry and the opposite ring"}, suite_symmetry},
      {{"sec4", "rings without identity, comaximality, ideal transfer"}, suite_nonunital},
      {{"sec5", "skew corners, corner transfer, quasi-invertible extension"}, suite_corners},
      {{"thm6.4", "M2 brute force, staged row reduction, complement corners"}, suite_matrices},
      {{"sec7", "lifting, extension conditions, perturbing ideals"}, suite_extensions},
      {{"sec8", "exchange, maximal regulars, idempotent monoid fragment"}, suite_exchange},
  };
  return e;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> c = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return c;
}

std::vector<CheckRecord> run_suite(const std::string& suite, const FiniteRing& r,
                                   const SuiteOptions& opts) {
  const auto& es = entries();
  std::vector<const SuiteEntry*> chosen;
  for (const auto& e : es)
    if (suite == "all" || e.info.name == suite) chosen.push_back(&e);
  if (chosen.empty()) throw Error(ErrorCode::MalformedSpec, "unknown suite '" + suite + "'");
  std::vector<std::vector<CheckRecord>> parts(chosen.size());
  parallel_for(chosen.size(), opts.jobs, [&](std::size_t k) {
    Runner run(parts[k]);
    chosen[k]->fn(r, opts, run);
    for (auto& rec : parts[k]) rec.name = chosen[k]->info.name + ": " + rec.name;
  });
  std::vector<CheckRecord> out;
  for (auto& p : parts)
    for (auto& rec : p) out.push_back(std::move(rec));
  return out;
}

CheckRecord run_property(const std::string& property, const FiniteRing& r) {
  std::vector<CheckRecord> out;
  Runner run(out);
  auto verdict = [](const RingVerdict& v) {
    return v.holds ? pass() : fail(failure_json(*v.counterexample));
  };
  if (property == "b") {
    run("b-ring", [&] { return verdict(is_b_ring(r)); });
  } else if (property == "qb") {
    run("qb-ring", [&] { return verdict(is_qb_ring(r)); });
  } else if (property == "qb-nonunital") {
    run("qb-ring without identity", [&] { return verdict(is_qb_nonunital(r)); });
  } else if (property == "exchange") {
    run("exchange ring", [&] {
      require_unital(r);
      if (auto a = exchange_failure(r)) return fail({{"a", *a}});
      return pass();
    });
  } else if (property == "semiprime" || property == "prime") {
    run(property, [&] {
      const Primeness p = primeness(r);
      if (property == "semiprime")
        return p.semiprime ? pass() : fail({{"x", *p.nilpotent_witness}});
      return p.prime ? pass() : fail({{"x", p.prime_witness->first}, {"y", p.prime_witness->second}});
    });
  } else {
    throw Error(ErrorCode::MalformedSpec, "unknown property '" + property + "'");
  }
  return out.front();
}

CheckRecord run_set(const std::string& set, const FiniteRing& r) {
  std::vector<CheckRecord> out;
  Runner run(out);
  auto emit = [&](const std::function<Subset()>& f) {
    run(set, [&] { return pass({{"set", indices(f())}}); });
  };
  if (set == "units")
    emit([&] { return units(r); });
  else if (set == "qinv")
    emit([&] { return quasi_invertibles(r); });
  else if (set == "regular")
    emit([&] { return regular_elements(r); });
  else if (set == "idempotents")
    emit([&] { return idempotents(r); });
  else if (set == "radical")
    emit([&] { return jacobson_radical(r).members; });
  else if (set == "maxreg")
    emit([&] {
      require_unital(r);
      return maximal_regular_elements(r);
    });
  else
    throw Error(ErrorCode::MalformedSpec, "unknown set '" + set + "'");
  return out.front();
}

json make_report(const std::string& command, const json& spec, const FiniteRing* r,
                 const std::vector<CheckRecord>& checks, bool timing) {
  json rep{{"tool", "qbr"}, {"version", kToolVersion}, {"schema", kReportSchema}, {"command", command}};
  rep["spec"] = spec;
  if (r)
    rep["ring"] = {{"label", r->label()}, {"order", r->order()}, {"unital", r->unital()}};
  json list = json::array();
  json tally{{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"inconclusive", 0}};
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}};
    if (timing) j["seconds"] = c.seconds;
    list.push_back(std::move(j));
    tally[to_string(c.status)] = tally[to_string(c.status)].get<int>() + 1;
  }
  rep["checks"] = std::move(list);
  rep["summary"] = std::move(tally);
  return rep;
}

int exit_code(const std::vector<CheckRecord>& checks) {
  bool all_skipped = !checks.empty();
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return 1;
    if (c.status != Status::Skipped) all_skipped = false;
  }
  return all_skipped ? 2 : 0;
}

}  // namespace qbr
