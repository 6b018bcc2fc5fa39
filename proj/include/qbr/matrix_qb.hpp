#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qbr/ring.hpp"

namespace qbr {

/// A 2x2 matrix over a base ring, entries {11, 12, 21, 22}.
struct Mat2 {
  std::array<Elem, 4> e{};
  [[nodiscard]] Elem operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Arithmetic in M2(R) without building its tables.
class Mat2Ops {
 public:
  explicit Mat2Ops(const FiniteRing& base);
  [[nodiscard]] const FiniteRing& base() const noexcept { return *r_; }
  [[nodiscard]] Mat2 make(Elem a, Elem b, Elem c, Elem d) const { return Mat2{{a, b, c, d}}; }
  [[nodiscard]] Mat2 zero() const { return Mat2{}; }
  [[nodiscard]] Mat2 one() const;
  /// rho at position (i, j), zero elsewhere.
  [[nodiscard]] Mat2 unit(int i, int j, Elem rho) const;
  [[nodiscard]] Mat2 add(const Mat2& x, const Mat2& y) const;
  [[nodiscard]] Mat2 sub(const Mat2& x, const Mat2& y) const;
  [[nodiscard]] Mat2 mul(const Mat2& x, const Mat2& y) const;
  [[nodiscard]] Mat2 one_minus(const Mat2& x) const { return sub(one(), x); }
  /// xRy = yRx = 0 in M2(R), tested on the additive generators E_ij(rho).
  [[nodiscard]] bool orthogonal(const Mat2& x, const Mat2& y) const;
  /// w is a quasi-inverse of m: mwm = m, wmw = w, (1-mw) orthogonal to (1-wm).
  [[nodiscard]] bool is_quasi_inverse(const Mat2& m, const Mat2& w) const;
  /// Exhaustive search over M2(R); |R|^4 candidates.
  [[nodiscard]] std::optional<Mat2> inverse(const Mat2& m) const;
  /// Index in the table ring make_matrix(2, base).
  [[nodiscard]] Elem encode(const Mat2& m) const;
  [[nodiscard]] Mat2 decode(Elem idx) const;
  /// Dense index in [0, |R|^4) used for hashing; works beyond the table cap.
  [[nodiscard]] std::uint32_t key(const Mat2& m) const;
  [[nodiscard]] Mat2 from_key(std::uint32_t k) const;
  [[nodiscard]] std::uint32_t size() const;

 private:
  const FiniteRing* r_;
};

/// Right unimodular row (A, B) over M2(R) with certificate AX + BY = 1.
struct UnimodularRow {
  Mat2 a, b, x, y;
};

/// Throws PreconditionViolated unless AX + BY = 1.
void check_certificate(const Mat2Ops& m, const UnimodularRow& row);

/// Finds X, Y with AX + BY = 1, if the row is unimodular.
[[nodiscard]] std::optional<UnimodularRow> certify_row(const Mat2Ops& m, const Mat2& a,
                                                       const Mat2& b);

/// (vAu + vBc, vB) with certificate X' = u^-1 X v^-1, Y' = (Y - c u^-1 X) v^-1.
/// Throws NotAUnit.
[[nodiscard]] UnimodularRow row_transform(const Mat2Ops& m, const UnimodularRow& row,
                                          const Mat2& u, const Mat2& v, const Mat2& c);
/// Same with the inverses supplied; they are verified.
[[nodiscard]] UnimodularRow row_transform(const Mat2Ops& m, const UnimodularRow& row,
                                          const Mat2& u, const Mat2& u_inv, const Mat2& v,
                                          const Mat2& v_inv, const Mat2& c);

/// Row (A, (1-AX)V) with certificate (X, V^-1): A and X uniform, V a
/// diagonal unit matrix times three elementary matrices, so V^-1 is known.
[[nodiscard]] UnimodularRow random_unimodular_row(const Mat2Ops& m, std::mt19937_64& rng);

struct StageRecord {
  std::string stage;
  bool applied = false;  // false when the stage had nothing to do
  Mat2 u, v, c;          // transform used, identity when not applied
  std::vector<std::pair<std::string, Elem>> witnesses;
  std::vector<std::string> invariants;  // each one checked at this stage
};

struct Reduction {
  Mat2 y;  // A + BY is quasi-invertible in M2(R)
  Mat2 w;  // its quasi-inverse
  std::vector<StageRecord> trace;
};

struct ReduceOptions {
  /// Scan witness candidates in a seeded random order instead of by index.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Staged reduction of a certified row over M2(R): makes the diagonal
/// quasi-invertible, clears the off-diagonal cross terms, reduces the
/// off-diagonal entries inside their corners, then assembles the 2x2
/// quasi-inverse. Every transform is composed back onto the original row and
/// the final witness is checked there.
/// Throws StageWitnessNotFound, ConstructionFailed (an invariant broke) or
/// PreconditionViolated (bad certificate).
[[nodiscard]] Reduction reduce_row_m2(const Mat2Ops& m, const UnimodularRow& row,
                                      const ReduceOptions& opts = {});

struct ComplementCornerReport {
  bool hypothesis = false;  // uv + (1-ux)R(1-yv) inside cl and cr of R_q^-1
  bool zero = false;        // (1-ux)R(1-yv) = 0
  bool qb_corner = false;   // both corner closures are the whole corner
  [[nodiscard]] bool conclusion() const noexcept { return zero || qb_corner; }
};
/// For quasi-invertible u, v with quasi-inverses x, y: the corner
/// (1-ux)R(1-yv) is zero or a QB-corner. Throws PreconditionViolated unless
/// (u, x) and (v, y) are quasi-inverse pairs.
[[nodiscard]] ComplementCornerReport complement_corner(const FiniteRing& r, Elem u, Elem x, Elem v,
                                                       Elem y);

}  // namespace qbr
