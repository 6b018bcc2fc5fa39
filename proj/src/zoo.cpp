#include "qbr/zoo.hpp"

#include "qbr/ideals.hpp"
#include "qbr/ring_spec.hpp"

namespace qbr {

std::vector<ZooRing> base_zoo(std::size_t max_order) {
  std::vector<ZooRing> out;
  auto add = [&](std::string name, auto make) {
    FiniteRing r = make();
    if (r.order() <= max_order) out.push_back(ZooRing{std::move(name), std::move(r)});
  };
  for (std::size_t n = 2; n <= 12; ++n) add("Z" + std::to_string(n), [n] { return make_zn(n); });
  for (std::size_t q : {4, 8, 9}) add("F" + std::to_string(q), [q] { return make_gf(q); });
  const FiniteRing f2 = make_zn(2), f3 = make_zn(3), z4 = make_zn(4), z6 = make_zn(6);
  for (const FiniteRing* b : {&f2, &f3, &z4, &z6}) {
    if (b->order() * b->order() * b->order() * b->order() > max_order) continue;
    const std::string bn = b == &f2 ? "F2" : b == &f3 ? "F3" : b == &z4 ? "Z4" : "Z6";
    add("M2(" + bn + ")", [b] { return make_matrix(2, *b); });
  }
  for (const FiniteRing* b : {&f2, &f3}) {
    const std::string bn = b == &f2 ? "F2" : "F3";
    add("T2(" + bn + ")", [b] { return make_upper_triangular(2, *b); });
    add("T3(" + bn + ")", [b] { return make_upper_triangular(3, *b); });
  }
  add("F2xF3", [&] { return make_product({f2, f3}); });
  add("F2xF2", [&] { return make_product({f2, f2}); });
  add("F4xT2(F2)", [&] { return make_product({make_gf(4), make_upper_triangular(2, f2)}); });
  return out;
}

std::vector<ZooRing> proper_quotients(const ZooRing& r) {
  std::vector<ZooRing> out;
  const auto lat = enumerate_ideals(r.ring);
  std::size_t k = 0;
  for (const auto& i : lat.ideals) {
    if (i.size() == 1 || i.size() == r.ring.order()) continue;
    out.push_back(ZooRing{r.name + "/I" + std::to_string(++k) + "[" + std::to_string(i.size()) + "]",
                          quotient(r.ring, i).ring});
  }
  return out;
}

std::vector<ZooRing> unital_zoo(std::size_t max_order) {
  std::vector<ZooRing> out = base_zoo(max_order);
  const std::size_t base_count = out.size();
  for (std::size_t k = 0; k < base_count; ++k)
    for (auto& q : proper_quotients(out[k])) out.push_back(std::move(q));
  return out;
}

std::vector<ZooRing> nonunital_zoo() {
  std::vector<ZooRing> out;
  auto ideal = [&](std::string name, const FiniteRing& r, std::vector<Elem> gens) {
    out.push_back(ZooRing{std::move(name), make_ideal_ring(r, gens)});
  };
  ideal("2Z4", make_zn(4), {2});
  ideal("2Z8", make_zn(8), {2});
  ideal("3Z9", make_zn(9), {3});
  ideal("2Z12", make_zn(12), {2});
  // Strictly upper triangular parts: the Jacobson radicals.
  const FiniteRing t2 = make_upper_triangular(2, make_zn(2));
  out.push_back(ZooRing{"J(T2(F2))", ideal_as_ring(t2, jacobson_radical(t2)).ring});
  const FiniteRing t3 = make_upper_triangular(3, make_zn(2));
  out.push_back(ZooRing{"J(T3(F2))", ideal_as_ring(t3, jacobson_radical(t3)).ring});
  const FiniteRing m2z4 = make_matrix(2, make_zn(4));
  ideal("M2(2Z4)", m2z4, {matrix_encode(make_zn(4), 2, {2, 0, 0, 2})});
  return out;
}

}  // namespace qbr
