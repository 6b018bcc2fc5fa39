#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qbr::jacobson {

/// Element of F_p<x, y | xy = 1> in normal form sum c_ij y^i x^j.
class JElement {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (i, j) for y^i x^j

  explicit JElement(unsigned p);
  static JElement monomial(unsigned p, unsigned i, unsigned j, unsigned coeff = 1);
  static JElement one(unsigned p) { return monomial(p, 0, 0); }
  static JElement x(unsigned p) { return monomial(p, 0, 1); }
  static JElement y(unsigned p) { return monomial(p, 1, 0); }

  [[nodiscard]] unsigned characteristic() const noexcept { return p_; }
  [[nodiscard]] const std::map<Monomial, unsigned>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  JElement& operator+=(const JElement& o);
  JElement& operator-=(const JElement& o);
  friend JElement operator+(JElement a, const JElement& b) { return a += b; }
  friend JElement operator-(JElement a, const JElement& b) { return a -= b; }
  friend JElement operator*(const JElement& a, const JElement& b);
  friend bool operator==(const JElement&, const JElement&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(Monomial m, unsigned c);
  unsigned p_;
  std::map<Monomial, unsigned> terms_;
};

/// (y^i x^j)(y^k x^l) = y^i x^(j-k+l) if j >= k, else y^(i+k-j) x^l.
[[nodiscard]] JElement::Monomial monomial_product(JElement::Monomial a, JElement::Monomial b);

/// Laurent polynomial over F_p: exponent -> nonzero coefficient.
using Laurent = std::map<int, unsigned>;
/// y^i x^j -> t^(i-j); the kernel is the span of the matrix units.
[[nodiscard]] Laurent laurent_image(const JElement& u);
[[nodiscard]] Laurent laurent_mul(const Laurent& a, const Laurent& b, unsigned p);
[[nodiscard]] std::string laurent_to_string(const Laurent& a);

/// e_ij = y^i (1 - yx) x^j.
[[nodiscard]] JElement matrix_unit(unsigned p, unsigned i, unsigned j);
/// e_ij e_kl = delta_jk e_il for all indices <= bound; returns the number of
/// violations.
[[nodiscard]] std::size_t matrix_unit_violations(unsigned p, unsigned bound);

/// Parses literals such as "y^2 x + 3 y x^0 - 1". A term is an optional
/// integer coefficient followed by a word in x, y (each with an optional
/// ^exponent) or the constant 1; words are multiplied out. Throws
/// MalformedSpec.
[[nodiscard]] JElement parse(const std::string& text, unsigned p);

struct Claim {
  std::string name;
  bool pass = false;
  bool bounded = false;  // checked on a generating family up to the bound only
  std::string detail;
};
/// Exact checks of the one-sided inverse phenomena; `seed` drives the sampled
/// homomorphism and ideal checks. Throws MalformedSpec unless p is prime.
[[nodiscard]] std::vector<Claim> demo_claims(unsigned p, unsigned bound = 6,
                                             std::uint64_t seed = 1);

}  // namespace qbr::jacobson
