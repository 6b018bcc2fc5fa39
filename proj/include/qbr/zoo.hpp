#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qbr/ring.hpp"

namespace qbr {

struct ZooRing {
  std::string name;
  FiniteRing ring;
};

/// Z2..Z12, GF(4), GF(8), GF(9), M2 over {F2, F3, Z4, Z6}, T2 and T3 over
/// {F2, F3} and three products, keeping those of order <= max_order.
[[nodiscard]] std::vector<ZooRing> base_zoo(std::size_t max_order = 4096);
/// Quotients of `r` by every ideal other than 0 and R.
[[nodiscard]] std::vector<ZooRing> proper_quotients(const ZooRing& r);
/// base_zoo plus all proper quotients of its members.
[[nodiscard]] std::vector<ZooRing> unital_zoo(std::size_t max_order = 4096);
/// Rings without identity: 2Z4, 2Z8, 3Z9, 2Z12, radicals of triangular rings
/// and M2(2Z4).
[[nodiscard]] std::vector<ZooRing> nonunital_zoo();

}  // namespace qbr
