#include "qbr/ring.hpp"

#include <atomic>
#include <numeric>
#include <sstream>

#include "qbr/error.hpp"

namespace qbr {

namespace {

std::uint64_t next_ring_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

FiniteRing::FiniteRing(std::string label, std::size_t order, std::vector<Elem> add_table,
                       std::vector<Elem> mul_table, std::optional<Elem> one)
    : label_(std::move(label)),
      n_(order),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      neg_(order, 0),
      one_(one),
      id_(next_ring_id()) {
  if (n_ == 0 || n_ > 65535)
    throw Error(ErrorCode::MalformedSpec, "ring order must lie in [1, 65535]");
  if (add_.size() != n_ * n_ || mul_.size() != n_ * n_)
    throw Error(ErrorCode::MalformedSpec, "operation tables must be n*n");
  for (std::size_t i = 0; i < n_ * n_; ++i)
    if (add_[i] >= n_ || mul_[i] >= n_)
      throw Error(ErrorCode::MalformedSpec, "table entry out of range");
  if (one_ && *one_ >= n_) throw Error(ErrorCode::MalformedSpec, "identity out of range");
  for (std::size_t a = 0; a < n_; ++a) {
    if (add_[a] != a || add_[a * n_] != a)
      throw Error(ErrorCode::MalformedSpec, "element 0 is not the additive identity");
    bool found = false;
    for (std::size_t b = 0; b < n_; ++b) {
      if (add_[a * n_ + b] == 0) {
        neg_[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::MalformedSpec, "element without additive inverse");
  }
}

Elem FiniteRing::apply(ArithOp op, Elem a, Elem b) const {
  if (!contains(a) || (op != ArithOp::Neg && !contains(b)))
    throw Error(ErrorCode::ForeignElement, "element index outside ring '" + label_ + "'");
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Neg: return neg(a);
    case ArithOp::Sub: return sub(a, b);
  }
  return 0;
}

Elem FiniteRing::unit() const {
  if (!one_) throw Error(ErrorCode::NonUnitalRing, "ring '" + label_ + "' has no identity");
  return *one_;
}

Elem FiniteRing::times(std::uint64_t k, Elem a) const noexcept {
  Elem acc = 0;
  Elem base = a;
  while (k != 0) {
    if (k & 1U) acc = add(acc, base);
    base = add(base, base);
    k >>= 1U;
  }
  return acc;
}

std::optional<std::string> check_axioms(const FiniteRing& r) {
  const std::size_t n = r.order();
  auto name = [](std::size_t a) { return std::to_string(a); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
      if (r.add(ea, eb) != r.add(eb, ea))
        return "addition not commutative at (" + name(a) + "," + name(b) + ")";
      for (std::size_t c = 0; c < n; ++c) {
        const auto ec = static_cast<Elem>(c);
        if (r.add(r.add(ea, eb), ec) != r.add(ea, r.add(eb, ec)))
          return "addition not associative at (" + name(a) + "," + name(b) + "," + name(c) + ")";
        if (r.mul(r.mul(ea, eb), ec) != r.mul(ea, r.mul(eb, ec)))
          return "multiplication not associative at (" + name(a) + "," + name(b) + "," +
                 name(c) + ")";
        if (r.mul(ea, r.add(eb, ec)) != r.add(r.mul(ea, eb), r.mul(ea, ec)))
          return "left distributivity fails at (" + name(a) + "," + name(b) + "," + name(c) + ")";
        if (r.mul(r.add(eb, ec), ea) != r.add(r.mul(eb, ea), r.mul(ec, ea)))
          return "right distributivity fails at (" + name(a) + "," + name(b) + "," + name(c) +
                 ")";
      }
    }
  }
  if (auto one = r.one()) {
    for (Elem a : r.elements())
      if (r.mul(*one, a) != a || r.mul(a, *one) != a)
        return "declared identity fails at " + name(a);
  }
  return std::nullopt;
}

std::optional<Elem> find_identity(std::size_t n, std::span<const Elem> mul) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = mul[e * n + a] == a && mul[a * n + e] == a;
    if (ok) return static_cast<Elem>(e);
  }
  return std::nullopt;
}

std::uint64_t additive_exponent(const FiniteRing& r) {
  std::uint64_t m = 1;
  for (Elem a : r.elements()) {
    std::uint64_t k = 1;
    Elem acc = a;
    while (acc != 0) {
      acc = r.add(acc, a);
      ++k;
    }
    m = std::lcm(m, k);
  }
  return m;
}

namespace {

Subset one_sided(const FiniteRing& r, bool left, bool right) {
  const Elem one = r.unit();
  Subset out(r.order());
  for (Elem u : r.elements()) {
    for (Elem v : r.elements()) {
      const bool l = !left || r.mul(v, u) == one;
      const bool rt = !right || r.mul(u, v) == one;
      if (l && rt) {
        out.insert(u);
        break;
      }
    }
  }
  return out;
}

}  // namespace

Subset units(const FiniteRing& r) { return one_sided(r, true, true); }
Subset left_invertibles(const FiniteRing& r) { return one_sided(r, true, false); }
Subset right_invertibles(const FiniteRing& r) { return one_sided(r, false, true); }

Elem inverse(const FiniteRing& r, Elem u) {
  const Elem one = r.unit();
  for (Elem v : r.elements())
    if (r.mul(u, v) == one && r.mul(v, u) == one) return v;
  throw Error(ErrorCode::NotAUnit, "element " + std::to_string(u) + " is not invertible");
}

FiniteRing opposite(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = r.mul_table()[b * n + a];
  return FiniteRing(r.label() + "^op", n, std::vector<Elem>(r.add_table().begin(), r.add_table().end()),
                    std::move(mul), r.one());
}

Subring restrict_to(const FiniteRing& r, const Subset& members, std::string label) {
  std::vector<Elem> emb = members.elements();
  if (emb.empty() || emb.front() != 0)
    throw Error(ErrorCode::MalformedSpec, "subring must contain 0");
  std::vector<Elem> local(r.order(), 0);
  for (std::size_t i = 0; i < emb.size(); ++i) local[emb[i]] = static_cast<Elem>(i);
  const std::size_t m = emb.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Elem s = r.add(emb[i], emb[j]);
      const Elem p = r.mul(emb[i], emb[j]);
      if (!members.contains(s) || !members.contains(p))
        throw Error(ErrorCode::MalformedSpec, "subset is not closed under ring operations");
      add[i * m + j] = local[s];
      mul[i * m + j] = local[p];
    }
  }
  auto one = find_identity(m, mul);
  return Subring{FiniteRing(std::move(label), m, std::move(add), std::move(mul), one),
                 std::move(emb)};
}

}  // namespace qbr
