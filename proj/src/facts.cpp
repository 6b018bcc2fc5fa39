#include "qbr/facts.hpp"

#include "qbr/closure.hpp"
#include "qbr/quasi.hpp"
#include "qbr/regular.hpp"

namespace qbr {

const Subset& RingFacts::units() const {
  std::call_once(f_units_, [&] { units_ = qbr::units(r_); });
  return units_;
}
const Subset& RingFacts::qinv() const {
  std::call_once(f_qinv_, [&] { qinv_ = quasi_invertibles(r_); });
  return qinv_;
}
const Subset& RingFacts::cl_qinv() const {
  std::call_once(f_cl_, [&] { cl_ = cl(r_, qinv()); });
  return cl_;
}
const Subset& RingFacts::cr_qinv() const {
  std::call_once(f_cr_, [&] { cr_ = cr(r_, qinv()); });
  return cr_;
}
const Subset& RingFacts::regular() const {
  std::call_once(f_reg_, [&] { reg_ = regular_elements(r_); });
  return reg_;
}
const Subset& RingFacts::idempotents() const {
  std::call_once(f_idem_, [&] { idem_ = qbr::idempotents(r_); });
  return idem_;
}
const Ideal& RingFacts::radical() const {
  std::call_once(f_rad_, [&] { rad_ = jacobson_radical(r_); });
  return rad_;
}
const IdealLattice& RingFacts::ideals() const {
  std::call_once(f_ideals_, [&] { ideals_ = enumerate_ideals(r_); });
  return ideals_;
}

}  // namespace qbr
