#pragma once

#include <mutex>

#include "qbr/ideals.hpp"
#include "qbr/ring.hpp"
#include "qbr/subset.hpp"

namespace qbr {

/// Lazily computed, thread-safe sets of a unital ring. Share one instance
/// across a sweep so workers do not recompute the closures.
class RingFacts {
 public:
  explicit RingFacts(const FiniteRing& r) : r_(r) {}
  RingFacts(const RingFacts&) = delete;
  RingFacts& operator=(const RingFacts&) = delete;

  [[nodiscard]] const FiniteRing& ring() const noexcept { return r_; }
  [[nodiscard]] const Subset& units() const;
  [[nodiscard]] const Subset& qinv() const;
  [[nodiscard]] const Subset& cl_qinv() const;
  [[nodiscard]] const Subset& cr_qinv() const;
  [[nodiscard]] const Subset& regular() const;
  [[nodiscard]] const Subset& idempotents() const;
  [[nodiscard]] const Ideal& radical() const;
  [[nodiscard]] const IdealLattice& ideals() const;

 private:
  const FiniteRing& r_;
  mutable std::once_flag f_units_, f_qinv_, f_cl_, f_cr_, f_reg_, f_idem_, f_rad_, f_ideals_;
  mutable Subset units_, qinv_, cl_, cr_, reg_, idem_;
  mutable Ideal rad_;
  mutable IdealLattice ideals_;
};

}  // namespace qbr
