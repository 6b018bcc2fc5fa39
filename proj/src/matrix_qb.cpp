#include "qbr/matrix_qb.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "qbr/closure.hpp"
#include "qbr/error.hpp"
#include "qbr/quasi.hpp"
#include "qbr/regular.hpp"

namespace qbr {

Mat2Ops::Mat2Ops(const FiniteRing& base) : r_(&base) {
  (void)base.unit();
  if (std::uint64_t n = base.order(); n * n * n * n > (1ULL << 24))
    throw Error(ErrorCode::ScaleCapExceeded, "M2 over a ring of order " + std::to_string(n));
}

Mat2 Mat2Ops::one() const { return make(r_->unit(), 0, 0, r_->unit()); }

Mat2 Mat2Ops::unit(int i, int j, Elem rho) const {
  Mat2 m;
  m.e[static_cast<std::size_t>(2 * i + j)] = rho;
  return m;
}

Mat2 Mat2Ops::add(const Mat2& x, const Mat2& y) const {
  Mat2 m;
  for (std::size_t k = 0; k < 4; ++k) m.e[k] = r_->add(x.e[k], y.e[k]);
  return m;
}

Mat2 Mat2Ops::sub(const Mat2& x, const Mat2& y) const {
  Mat2 m;
  for (std::size_t k = 0; k < 4; ++k) m.e[k] = r_->sub(x.e[k], y.e[k]);
  return m;
}

Mat2 Mat2Ops::mul(const Mat2& x, const Mat2& y) const {
  const FiniteRing& r = *r_;
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m.e[static_cast<std::size_t>(2 * i + j)] =
          r.add(r.mul(x(i, 0), y(0, j)), r.mul(x(i, 1), y(1, j)));
  return m;
}

bool Mat2Ops::orthogonal(const Mat2& x, const Mat2& y) const {
  const Mat2 z = zero();
  if (mul(x, y) != z || mul(y, x) != z) return false;
  for (Elem rho : r_->elements())
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Mat2 g = unit(i, j, rho);
        if (mul(mul(x, g), y) != z || mul(mul(y, g), x) != z) return false;
      }
  return true;
}

bool Mat2Ops::is_quasi_inverse(const Mat2& m, const Mat2& w) const {
  return mul(mul(m, w), m) == m && mul(mul(w, m), w) == w &&
         orthogonal(one_minus(mul(m, w)), one_minus(mul(w, m)));
}

std::uint32_t Mat2Ops::size() const {
  const std::uint32_t n = static_cast<std::uint32_t>(r_->order());
  return n * n * n * n;
}

std::uint32_t Mat2Ops::key(const Mat2& m) const {
  const std::uint32_t n = static_cast<std::uint32_t>(r_->order());
  return m.e[0] + n * (m.e[1] + n * (m.e[2] + n * static_cast<std::uint32_t>(m.e[3])));
}

Mat2 Mat2Ops::from_key(std::uint32_t k) const {
  const std::uint32_t n = static_cast<std::uint32_t>(r_->order());
  Mat2 m;
  for (auto& x : m.e) {
    x = static_cast<Elem>(k % n);
    k /= n;
  }
  return m;
}

Elem Mat2Ops::encode(const Mat2& m) const {
  const std::uint32_t k = key(m);
  if (size() > 65535) throw Error(ErrorCode::OrderCapExceeded, "M2 table ring too large");
  return static_cast<Elem>(k);
}

Mat2 Mat2Ops::decode(Elem idx) const { return from_key(idx); }

std::optional<Mat2> Mat2Ops::inverse(const Mat2& m) const {
  const Mat2 id = one();
  for (std::uint32_t k = 0; k < size(); ++k) {
    const Mat2 w = from_key(k);
    if (mul(m, w) == id && mul(w, m) == id) return w;
  }
  return std::nullopt;
}

void check_certificate(const Mat2Ops& m, const UnimodularRow& row) {
  if (m.add(m.mul(row.a, row.x), m.mul(row.b, row.y)) != m.one())
    throw Error(ErrorCode::PreconditionViolated, "AX + BY != 1");
}

std::optional<UnimodularRow> certify_row(const Mat2Ops& m, const Mat2& a, const Mat2& b) {
  constexpr std::uint32_t kNone = ~0U;
  std::vector<std::uint32_t> by(m.size(), kNone);
  for (std::uint32_t k = 0; k < m.size(); ++k) {
    const std::uint32_t v = m.key(m.mul(b, m.from_key(k)));
    if (by[v] == kNone) by[v] = k;
  }
  for (std::uint32_t k = 0; k < m.size(); ++k) {
    const Mat2 x = m.from_key(k);
    const std::uint32_t need = m.key(m.one_minus(m.mul(a, x)));
    if (by[need] != kNone) return UnimodularRow{a, b, x, m.from_key(by[need])};
  }
  return std::nullopt;
}

UnimodularRow row_transform(const Mat2Ops& m, const UnimodularRow& row, const Mat2& u,
                            const Mat2& u_inv, const Mat2& v, const Mat2& v_inv, const Mat2& c) {
  const Mat2 id = m.one();
  if (m.mul(u, u_inv) != id || m.mul(u_inv, u) != id)
    throw Error(ErrorCode::NotAUnit, "u is not invertible with the given inverse");
  if (m.mul(v, v_inv) != id || m.mul(v_inv, v) != id)
    throw Error(ErrorCode::NotAUnit, "v is not invertible with the given inverse");
  UnimodularRow out;
  out.a = m.add(m.mul(m.mul(v, row.a), u), m.mul(m.mul(v, row.b), c));
  out.b = m.mul(v, row.b);
  const Mat2 uix = m.mul(u_inv, row.x);
  out.x = m.mul(uix, v_inv);
  out.y = m.mul(m.sub(row.y, m.mul(c, uix)), v_inv);
  return out;
}

UnimodularRow row_transform(const Mat2Ops& m, const UnimodularRow& row, const Mat2& u,
                            const Mat2& v, const Mat2& c) {
  auto ui = m.inverse(u);
  if (!ui) throw Error(ErrorCode::NotAUnit, "u is not a unit of M2(R)");
  auto vi = m.inverse(v);
  if (!vi) throw Error(ErrorCode::NotAUnit, "v is not a unit of M2(R)");
  return row_transform(m, row, u, *ui, v, *vi, c);
}

UnimodularRow random_unimodular_row(const Mat2Ops& m, std::mt19937_64& rng) {
  const FiniteRing& r = m.base();
  const auto n = static_cast<std::uint32_t>(r.order());
  const auto us = units(r).elements();
  auto elem = [&] { return static_cast<Elem>(rng() % n); };
  const Mat2 a = m.from_key(static_cast<std::uint32_t>(rng() % m.size()));
  const Mat2 x = m.from_key(static_cast<std::uint32_t>(rng() % m.size()));
  const Elem d1 = us[rng() % us.size()], d2 = us[rng() % us.size()];
  const Elem one = r.unit();
  Mat2 v = m.make(d1, 0, 0, d2);
  Mat2 v_inv = m.make(inverse(r, d1), 0, 0, inverse(r, d2));
  for (int k = 0; k < 3; ++k) {
    const Elem t = elem();
    const bool upper = k % 2 == 0;
    const Mat2 e = upper ? m.make(one, t, 0, one) : m.make(one, 0, t, one);
    const Mat2 e_inv = upper ? m.make(one, r.neg(t), 0, one) : m.make(one, 0, r.neg(t), one);
    v = m.mul(v, e);
    v_inv = m.mul(e_inv, v_inv);
  }
  return UnimodularRow{a, m.mul(m.one_minus(m.mul(a, x)), v), x, v_inv};
}

namespace {

struct Transform {
  Mat2 u, u_inv, v, v_inv, c;
};

class Reducer {
 public:
  Reducer(const Mat2Ops& m, const UnimodularRow& row, const ReduceOptions& opts)
      : m_(m), r_(m.base()), row_(row), qinv_(quasi_invertibles(r_)) {
    order_.resize(r_.order());
    std::iota(order_.begin(), order_.end(), Elem{0});
    if (opts.shuffle_seed) {
      std::mt19937_64 rng(*opts.shuffle_seed);
      for (std::size_t i = order_.size(); i > 1; --i)
        std::swap(order_[i - 1], order_[rng() % i]);
    }
  }

  Reduction run() {
    const UnimodularRow original = row_;
    stage_diagonal_entry(0);
    stage_clear_cross_terms_a();
    stage_diagonal_entry(1);
    stage_clear_cross_terms_d();
    stage_corner(true);
    stage_corner(false);
    Reduction out;
    out.w = assemble();
    out.y = m_.zero();
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      out.y = m_.mul(m_.add(it->c, out.y), it->u_inv);
      out.w = m_.mul(m_.mul(it->u, out.w), it->v);
    }
    const Mat2 reduced = m_.add(original.a, m_.mul(original.b, out.y));
    if (!m_.is_quasi_inverse(reduced, out.w))
      throw Error(ErrorCode::ConstructionFailed, "unwound witness fails on the original row");
    out.trace = std::move(trace_);
    return out;
  }

 private:
  // Entries of A, X and N = BY.
  Elem a() const { return row_.a(0, 0); }
  Elem b() const { return row_.a(0, 1); }
  Elem c() const { return row_.a(1, 0); }
  Elem d() const { return row_.a(1, 1); }

  Mat2 n() const { return m_.mul(row_.b, row_.y); }
  Elem one() const { return r_.unit(); }
  Elem mul(Elem p, Elem q) const { return r_.mul(p, q); }
  Elem mul(Elem p, Elem q, Elem s) const { return r_.mul(r_.mul(p, q), s); }

  Mat2 lower(Elem m) const { return m_.make(one(), 0, m, one()); }
  Mat2 upper(Elem m) const { return m_.make(one(), m, 0, one()); }

  StageRecord& begin(std::string name) {
    trace_.push_back(StageRecord{std::move(name), false, m_.one(), m_.one(), m_.zero(), {}, {}});
    return trace_.back();
  }

  void check(StageRecord& rec, bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::ConstructionFailed, rec.stage + ": " + what);
    rec.invariants.push_back(what);
  }

  void apply(StageRecord& rec, const Mat2& u, const Mat2& u_inv, const Mat2& v, const Mat2& v_inv,
             const Mat2& k_or_c, bool k_is_multiplier) {
    // The construction multiplies N = BY by K; as a transform that is c = YK.
    const Mat2 c = k_is_multiplier ? m_.mul(row_.y, k_or_c) : k_or_c;
    row_ = row_transform(m_, row_, u, u_inv, v, v_inv, c);
    check_certificate(m_, row_);
    stack_.push_back(Transform{u, u_inv, v, v_inv, c});
    rec.applied = !(u == m_.one() && v == m_.one() && c == m_.zero());
    rec.u = u;
    rec.v = v;
    rec.c = c;
  }

  Elem find(const std::string& stage, auto pred) const {
    for (Elem z : order_)
      if (pred(z)) return z;
    throw Error(ErrorCode::StageWitnessNotFound, stage);
  }

  Elem qinverse(Elem u) const {
    auto w = quasi_invertible(r_, u);
    return w->v;
  }

  // i = 0: a + (bc' + e)z1; i = 1: d + (cb' + h)z2.
  void stage_diagonal_entry(int i) {
    auto& rec = begin(i == 0 ? "diagonal-11" : "diagonal-22");
    const Mat2 nn = n();
    const Elem base = i == 0 ? a() : d();
    const Elem coeff = i == 0 ? r_.add(mul(b(), row_.x(1, 0)), nn(0, 0))
                              : r_.add(mul(c(), row_.x(0, 1)), nn(1, 1));
    const Elem z = find(rec.stage, [&](Elem t) { return qinv_.contains(r_.add(base, mul(coeff, t))); });
    rec.witnesses.emplace_back(i == 0 ? "z1" : "z2", z);
    const Elem col_before = i == 0 ? b() : c();
    const Elem diag_before = i == 0 ? d() : a();
    if (i == 0) {
      const Elem s = mul(row_.x(1, 0), z);
      apply(rec, lower(s), lower(r_.neg(s)), m_.one(), m_.one(), m_.make(z, 0, 0, 0), true);
      check(rec, qinv_.contains(a()), "a quasi-invertible");
      check(rec, b() == col_before && d() == diag_before, "second column unchanged");
    } else {
      const Elem s = mul(row_.x(0, 1), z);
      const Elem ax = mul(a(), x_);
      apply(rec, upper(s), upper(r_.neg(s)), m_.one(), m_.one(), m_.make(0, 0, 0, z), true);
      check(rec, qinv_.contains(d()), "d quasi-invertible");
      check(rec, a() == diag_before && c() == col_before, "first column unchanged");
      check(rec, mul(ax, b()) == 0, "axb = 0");
      check(rec, mul(c(), x_, a()) == 0, "cxa = 0");
    }
  }

  void stage_clear_cross_terms_a() {
    auto& rec = begin("clear-a");
    x_ = qinverse(a());
    rec.witnesses.emplace_back("x", x_);
    const Elem a0 = a();
    const Elem xb = mul(x_, b());
    const Elem cx = mul(c(), x_);
    apply(rec, upper(r_.neg(xb)), upper(xb), lower(r_.neg(cx)), lower(cx), m_.zero(), false);
    check(rec, a() == a0, "a unchanged");
    check(rec, mul(a(), x_, b()) == 0, "axb = 0");
    check(rec, mul(c(), x_, a()) == 0, "cxa = 0");
  }

  void stage_clear_cross_terms_d() {
    auto& rec = begin("clear-d");
    y_ = qinverse(d());
    rec.witnesses.emplace_back("y", y_);
    const Elem a0 = a(), d0 = d();
    const Elem by = mul(b(), y_);
    const Elem yc = mul(y_, c());
    apply(rec, lower(r_.neg(yc)), lower(yc), upper(r_.neg(by)), upper(by), m_.zero(), false);
    // The (1,1) entry becomes a - byc; it stays a because the cross terms vanish.
    check(rec, a() == a0, "a unchanged");
    check(rec, d() == d0, "d unchanged");
    check(rec, mul(a(), x_, b()) == 0 && mul(b(), y_, d()) == 0, "axb = 0 = byd");
    check(rec, mul(c(), x_, a()) == 0 && mul(d(), y_, c()) == 0, "cxa = 0 = dyc");
  }

  // upper = true works on b in (1-ax)R(1-yd); false on c in (1-dy)R(1-xa).
  void stage_corner(bool upper_corner) {
    auto& rec = begin(upper_corner ? "corner-b" : "corner-c");
    const Elem p = upper_corner ? r_.one_minus(mul(a(), x_)) : r_.one_minus(mul(d(), y_));
    const Elem q = upper_corner ? r_.one_minus(mul(y_, d())) : r_.one_minus(mul(x_, a()));
    const Subset corner_set = corner(r_, p, q);
    const Elem entry = upper_corner ? b() : c();
    if (corner_set.count() <= 1) {
      check(rec, entry == 0, upper_corner ? "corner zero and b = 0" : "corner zero and c = 0");
      return;
    }
    const Subset cq = skew_corner_qinvs(r_, p, q);
    const Mat2 nn = n();
    const Elem pep = upper_corner ? mul(p, nn(0, 0), p) : mul(p, nn(1, 1), p);
    const Elem z = find(rec.stage, [&](Elem t) {
      return corner_set.contains(t) && cq.contains(r_.add(entry, mul(pep, t)));
    });
    rec.witnesses.emplace_back(upper_corner ? "z3" : "z4", z);
    if (upper_corner) {
      const Elem s = r_.neg(mul(x_, nn(0, 0), z));
      apply(rec, upper(s), upper(r_.neg(s)), m_.one(), m_.one(), m_.make(0, z, 0, 0), true);
      check(rec, cq.contains(b()), "b corner quasi-invertible");
      check(rec, is_qi_witness(r_, d(), y_), "y quasi-inverse of d");
      check(rec, mul(a(), x_, b()) == 0 && mul(b(), y_, d()) == 0, "axb = 0 = byd");
      check(rec, mul(d(), y_, c()) == 0, "dyc = 0");
    } else {
      const Elem s = r_.neg(mul(y_, nn(1, 1), z));
      apply(rec, lower(s), lower(r_.neg(s)), m_.one(), m_.one(), m_.make(0, 0, z, 0), true);
      check(rec, cq.contains(c()), "c corner quasi-invertible");
      check(rec, is_qi_witness(r_, a(), x_), "x quasi-inverse of a");
    }
  }

  Mat2 assemble() {
    auto& rec = begin("assemble");
    auto corner_inverse = [&](Elem entry, Elem p, Elem q, const char* name) -> Elem {
      if (entry == 0) return 0;
      auto w = skew_corner_qinv(r_, p, q, entry);
      if (!w) throw Error(ErrorCode::StageWitnessNotFound, rec.stage + ": " + name);
      return *w;
    };
    const Elem s = corner_inverse(b(), r_.one_minus(mul(a(), x_)), r_.one_minus(mul(y_, d())), "s");
    const Elem t = corner_inverse(c(), r_.one_minus(mul(d(), y_)), r_.one_minus(mul(x_, a())), "t");
    rec.witnesses.emplace_back("s", s);
    rec.witnesses.emplace_back("t", t);
    Mat2 w = m_.make(x_, t, s, y_);
    const Mat2 aw = m_.mul(row_.a, w);
    const Mat2 wa = m_.mul(w, row_.a);
    check(rec, aw(0, 1) == 0 && aw(1, 0) == 0, "AW diagonal");
    check(rec, wa(0, 1) == 0 && wa(1, 0) == 0, "WA diagonal");
    w = m_.mul(wa, w);
    check(rec, m_.is_quasi_inverse(row_.a, w), "W quasi-inverse of A");
    return w;
  }

  const Mat2Ops& m_;
  const FiniteRing& r_;
  UnimodularRow row_;
  Subset qinv_;
  std::vector<Elem> order_;
  std::vector<Transform> stack_;
  std::vector<StageRecord> trace_;
  Elem x_ = 0, y_ = 0;
};

}  // namespace

Reduction reduce_row_m2(const Mat2Ops& m, const UnimodularRow& row, const ReduceOptions& opts) {
  check_certificate(m, row);
  return Reducer(m, row, opts).run();
}

ComplementCornerReport complement_corner(const FiniteRing& r, Elem u, Elem x, Elem v, Elem y) {
  if (!is_qi_witness(r, u, x) || !is_qi_witness(r, v, y))
    throw Error(ErrorCode::PreconditionViolated, "(u, x) and (v, y) must be quasi-inverse pairs");
  ComplementCornerReport rep;
  const Elem p = r.one_minus(r.mul(u, x));
  const Elem q = r.one_minus(r.mul(y, v));
  const Subset cs = corner(r, p, q);
  const Subset qinv = quasi_invertibles(r);
  const Subset both = cl(r, qinv) & cr(r, qinv);
  const Elem uv = r.mul(u, v);
  rep.hypothesis = true;
  for (Elem t : cs.elements())
    if (!both.contains(r.add(uv, t))) rep.hypothesis = false;
  rep.zero = cs.count() <= 1;
  if (!rep.zero) rep.qb_corner = skew_corner_closures(r, p, q).qb_corner();
  return rep;
}

}  // namespace qbr
