#pragma once

#include <cstdint>

namespace qbr {

/// Index of an element in its ring's operation tables. Index 0 is always zero.
using Elem = std::uint16_t;

}  // namespace qbr
