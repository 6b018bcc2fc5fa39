#include "qbr/regular.hpp"

#include "qbr/error.hpp"

namespace qbr {

std::vector<Elem> partial_inverses(const FiniteRing& r, Elem a) {
  Subset seen(r.order());
  for (Elem x : r.elements())
    if (r.mul(a, x, a) == a) seen.insert(r.mul(x, a, x));
  return seen.elements();
}

std::optional<Elem> partial_inverse(const FiniteRing& r, Elem a) {
  for (Elem x : r.elements())
    if (r.mul(a, x, a) == a) return r.mul(x, a, x);
  return std::nullopt;
}

bool is_regular(const FiniteRing& r, Elem a) { return partial_inverse(r, a).has_value(); }

Subset regular_elements(const FiniteRing& r) {
  Subset out(r.order());
  for (Elem a : r.elements())
    if (is_regular(r, a)) out.insert(a);
  return out;
}

Subset idempotents(const FiniteRing& r) {
  Subset out(r.order());
  for (Elem p : r.elements())
    if (r.mul(p, p) == p) out.insert(p);
  return out;
}

Subset corner(const FiniteRing& r, Elem p, Elem q) {
  Subset out(r.order());
  out.insert(r.mul(p, q));
  for (Elem x : r.elements()) out.insert(r.mul(p, x, q));
  return out;
}

Subset right_multiples(const FiniteRing& r, Elem a) {
  Subset out(r.order());
  for (Elem x : r.elements()) out.insert(r.mul(a, x));
  return out;
}

Subset left_multiples(const FiniteRing& r, Elem a) {
  Subset out(r.order());
  for (Elem x : r.elements()) out.insert(r.mul(x, a));
  return out;
}

std::optional<std::pair<Elem, Elem>> mvn_equivalent(const FiniteRing& r, Elem p, Elem q) {
  if (r.mul(p, p) != p) throw Error(ErrorCode::NotIdempotent, std::to_string(p) + " is not idempotent");
  if (r.mul(q, q) != q) throw Error(ErrorCode::NotIdempotent, std::to_string(q) + " is not idempotent");
  const auto us = corner(r, p, q).elements();
  const auto vs = corner(r, q, p).elements();
  for (Elem u : us)
    for (Elem v : vs)
      if (r.mul(u, v) == p && r.mul(v, u) == q) return std::pair{u, v};
  return std::nullopt;
}

std::optional<Elem> extends(const FiniteRing& r, Elem a, Elem b) {
  if (!is_regular(r, b)) return std::nullopt;
  for (Elem x : r.elements())
    if (r.mul(a, x, a) == a && r.mul(a, x, b) == a && r.mul(b, x, a) == a) return x;
  return std::nullopt;
}

Elem realign_partial_inverse(const FiniteRing& r, Elem a, Elem b, Elem p, Elem q, Elem q2) {
  auto fail = [](const std::string& eq) -> Elem {
    throw Error(ErrorCode::PreconditionViolated, "hypothesis fails: " + eq);
  };
  for (auto [e, name] : {std::pair{p, "p"}, std::pair{q, "q"}, std::pair{q2, "q'"}})
    if (r.mul(e, e) != e) fail(std::string(name) + " is not idempotent");
  if (right_multiples(r, a) != right_multiples(r, p)) fail("aR = pR");
  if (left_multiples(r, a) != left_multiples(r, q)) fail("Ra = Rq");
  if (r.mul(p, b) != a) fail("pb = a");
  if (r.mul(b, q) != a) fail("bq = a");
  if (left_multiples(r, q) != left_multiples(r, q2)) fail("Rq = Rq'");
  if (!is_regular(r, b)) fail("b regular");
  const Elem b2 = r.add(a, r.mul(r.one_minus(p), b, r.one_minus(q2)));
  auto post = [&](bool ok, const std::string& eq) {
    if (!ok) throw Error(ErrorCode::PreconditionViolated, "conclusion fails: " + eq);
  };
  post(left_multiples(r, b) == left_multiples(r, b2), "Rb = Rb'");
  post(right_multiples(r, b) == right_multiples(r, b2), "bR = b'R");
  post(r.mul(p, b2) == a, "pb' = a");
  post(r.mul(b2, q2) == a, "b'q' = a");
  return b2;
}

ExtensionSplit decompose_extension(const FiniteRing& r, Elem a, Elem b) {
  auto x = extends(r, a, b);
  if (!x)
    throw Error(ErrorCode::NotAnExtension,
                std::to_string(b) + " does not extend " + std::to_string(a));
  const Elem p = r.mul(a, *x);
  const Elem q = r.mul(*x, a);
  const Elem d = r.sub(b, a);
  if (r.mul(p, b) != a || r.mul(b, q) != a ||
      r.mul(r.one_minus(p), d, r.one_minus(q)) != d)
    throw Error(ErrorCode::NotAnExtension, "extension witness does not split b - a");
  return ExtensionSplit{*x, p, q};
}

Subset maximal_regular_elements(const FiniteRing& r, std::size_t cap) {
  if (r.order() > cap)
    throw Error(ErrorCode::ScaleCapExceeded,
                "maximal regular sweep capped at order " + std::to_string(cap));
  const auto reg = regular_elements(r).elements();
  Subset out(r.order());
  std::vector<Elem> xs;
  for (Elem a : reg) {
    xs.clear();
    for (Elem x : r.elements())
      if (r.mul(a, x, a) == a) xs.push_back(x);
    bool maximal = true;
    for (Elem b : reg) {
      if (b == a) continue;
      for (Elem x : xs) {
        if (r.mul(a, x, b) == a && r.mul(b, x, a) == a) {
          maximal = false;
          break;
        }
      }
      if (!maximal) break;
    }
    if (maximal) out.insert(a);
  }
  return out;
}

}  // namespace qbr
