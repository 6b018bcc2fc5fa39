#include "qbr/ideals.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "qbr/error.hpp"
#include "qbr/quasi.hpp"

namespace qbr {

namespace {

// Grow the additive subgroup `group` (listed in `members`) by t.
void adjoin(const FiniteRing& r, Subset& group, std::vector<Elem>& members, Elem t) {
  const std::size_t base = members.size();
  Elem step = t;
  while (!group.contains(step)) {
    for (std::size_t i = 0; i < base; ++i) {
      Elem e = r.add(members[i], step);
      group.insert(e);
      members.push_back(e);
    }
    step = r.add(step, t);
  }
}

}  // namespace

Ideal ideal_generated_by(const FiniteRing& r, const std::vector<Elem>& gens) {
  Subset group(r.order(), {0});
  std::vector<Elem> members{0};
  std::deque<Elem> work(gens.begin(), gens.end());
  while (!work.empty()) {
    Elem t = work.front();
    work.pop_front();
    if (!r.contains(t)) throw Error(ErrorCode::ForeignElement, "generator out of range");
    if (group.contains(t)) continue;
    adjoin(r, group, members, t);
    for (Elem s : r.elements()) {
      work.push_back(r.mul(s, t));
      work.push_back(r.mul(t, s));
    }
  }
  return Ideal{r.id(), std::move(group)};
}

Ideal ideal_sum(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  if (i.ring_id != r.id() || j.ring_id != r.id())
    throw Error(ErrorCode::DifferentRings, "ideal belongs to another ring");
  Subset group = i.members;
  std::vector<Elem> members = group.elements();
  for (Elem t : j.members.elements())
    if (!group.contains(t)) adjoin(r, group, members, t);
  return Ideal{r.id(), std::move(group)};
}

bool is_ideal(const FiniteRing& r, const Subset& s) {
  if (!s.contains(0)) return false;
  auto m = s.elements();
  for (Elem a : m) {
    for (Elem b : m)
      if (!s.contains(r.add(a, b))) return false;
    for (Elem x : r.elements())
      if (!s.contains(r.mul(x, a)) || !s.contains(r.mul(a, x))) return false;
  }
  return true;
}

IdealLattice enumerate_ideals(const FiniteRing& r, std::size_t cap) {
  IdealLattice out;
  std::vector<Ideal>& found = out.ideals;
  auto known = [&](const Ideal& i) {
    return std::find(found.begin(), found.end(), i) != found.end();
  };
  for (Elem g : r.elements()) {
    Ideal i = ideal_generated_by(r, {g});
    if (!known(i)) {
      if (found.size() >= cap) {
        out.complete = false;
        break;
      }
      found.push_back(std::move(i));
    }
  }
  // Close under pairwise sums; new ideals are summed against everything found.
  for (std::size_t a = 0; a < found.size() && out.complete; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      Ideal s = ideal_sum(r, found[a], found[b]);
      if (known(s)) continue;
      if (found.size() >= cap) {
        out.complete = false;
        break;
      }
      found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const Ideal& x, const Ideal& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members.elements() < y.members.elements();
  });
  return out;
}

Quotient quotient(const FiniteRing& r, const Ideal& i) {
  if (i.ring_id != r.id()) throw Error(ErrorCode::DifferentRings, "ideal belongs to another ring");
  constexpr Elem unassigned = 0xFFFF;
  std::vector<Elem> proj(r.order(), unassigned);
  std::vector<Elem> reps;
  auto members = i.members.elements();
  for (Elem a : r.elements()) {
    if (proj[a] != unassigned) continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem t : members) proj[r.add(a, t)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      add[x * m + y] = proj[r.add(reps[x], reps[y])];
      mul[x * m + y] = proj[r.mul(reps[x], reps[y])];
    }
  std::optional<Elem> one;
  if (r.one()) one = proj[*r.one()];
  else one = find_identity(m, mul);
  std::string label = r.label() + "/I" + std::to_string(i.size());
  return Quotient{FiniteRing(std::move(label), m, std::move(add), std::move(mul), one),
                  std::move(proj), std::move(reps)};
}

Ideal jacobson_radical(const FiniteRing& r) {
  const Subset u = units(r);
  const Elem one = r.unit();
  Subset j(r.order());
  for (Elem x : r.elements()) {
    bool in = true;
    for (Elem s : r.elements()) {
      if (!u.contains(r.sub(one, r.mul(s, x)))) {
        in = false;
        break;
      }
    }
    if (in) j.insert(x);
  }
  return Ideal{r.id(), std::move(j)};
}

Primeness primeness(const FiniteRing& r) {
  Primeness out;
  auto annihilates = [&](Elem x, Elem y) {
    for (Elem s : r.elements())
      if (r.mul(x, s, y) != 0) return false;
    // R may lack an identity; xy itself is part of xR^1y.
    return r.mul(x, y) == 0;
  };
  for (Elem x : r.elements()) {
    if (x == 0) continue;
    if (annihilates(x, x)) {
      out.semiprime = out.prime = false;
      out.nilpotent_witness = x;
      out.prime_witness = std::pair{x, x};
      return out;
    }
  }
  for (Elem x : r.elements()) {
    if (x == 0) continue;
    for (Elem y : r.elements()) {
      if (y == 0) continue;
      if (annihilates(x, y)) {
        out.prime = false;
        out.prime_witness = std::pair{x, y};
        return out;
      }
    }
  }
  return out;
}

bool orthogonal_ideals(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  if (i.ring_id != r.id() || j.ring_id != r.id())
    throw Error(ErrorCode::DifferentRings, "ideals belong to different rings");
  auto ie = i.members.elements();
  auto je = j.members.elements();
  for (Elem a : ie)
    for (Elem b : je)
      if (r.mul(a, b) != 0 || r.mul(b, a) != 0) return false;
  return true;
}

bool is_primely_embedded(const FiniteRing& sub, const FiniteRing& r,
                         const std::vector<Elem>& map) {
  if (map.size() != sub.order())
    throw Error(ErrorCode::NotAHomomorphism, "map size differs from subring order");
  Subset image(r.order());
  for (Elem s : sub.elements()) {
    if (!r.contains(map[s])) throw Error(ErrorCode::NotAHomomorphism, "image out of range");
    if (image.contains(map[s])) throw Error(ErrorCode::NotAHomomorphism, "map is not injective");
    image.insert(map[s]);
  }
  for (Elem a : sub.elements())
    for (Elem b : sub.elements())
      if (map[sub.add(a, b)] != r.add(map[a], map[b]) ||
          map[sub.mul(a, b)] != r.mul(map[a], map[b]))
        throw Error(ErrorCode::NotAHomomorphism,
                    "map fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  std::vector<Elem> idem;
  for (Elem p : sub.elements())
    if (sub.mul(p, p) == p) idem.push_back(p);
  for (Elem p : idem)
    for (Elem q : idem)
      if (centrally_orthogonal(sub, p, q) && !centrally_orthogonal(r, map[p], map[q]))
        return false;
  return true;
}

Subring ideal_as_ring(const FiniteRing& r, const Ideal& i) {
  return restrict_to(r, i.members, r.label() + "|I" + std::to_string(i.size()));
}

}  // namespace qbr
