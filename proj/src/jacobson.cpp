#include "qbr/jacobson.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <vector>

#include "qbr/error.hpp"

namespace qbr::jacobson {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Laurent laurent_add(Laurent a, const Laurent& b, unsigned p) {
  for (const auto& [e, c] : b) {
    const unsigned v = (a[e] + c) % p;
    if (v == 0)
      a.erase(e);
    else
      a[e] = v;
  }
  return a;
}

}  // namespace

JElement::JElement(unsigned p) : p_(p) {
  if (!is_prime(p) || p > 65521)
    throw Error(ErrorCode::MalformedSpec, "characteristic must be a prime below 2^16");
}

JElement JElement::monomial(unsigned p, unsigned i, unsigned j, unsigned coeff) {
  JElement e(p);
  e.add_term({i, j}, coeff % p);
  return e;
}

void JElement::add_term(Monomial m, unsigned c) {
  c %= p_;
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second = (it->second + c) % p_;
  if (it->second == 0) terms_.erase(it);
}

JElement& JElement::operator+=(const JElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

JElement& JElement::operator-=(const JElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, p_ - c);
  return *this;
}

JElement::Monomial monomial_product(JElement::Monomial a, JElement::Monomial b) {
  const auto [i, j] = a;
  const auto [k, l] = b;
  if (j >= k) return {i, j - k + l};
  return {i + k - j, l};
}

JElement operator*(const JElement& a, const JElement& b) {
  JElement out(a.p_);
  for (const auto& [m, c] : a.terms_)
    for (const auto& [n, d] : b.terms_)
      out.add_term(monomial_product(m, n),
                   static_cast<unsigned>(static_cast<std::uint64_t>(c) * d % a.p_));
  return out;
}

std::string JElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::vector<std::string> parts;
    if (c != 1 || (m.first == 0 && m.second == 0)) parts.push_back(std::to_string(c));
    auto power = [&](const char* v, unsigned e) {
      if (e == 1) parts.emplace_back(v);
      if (e > 1) parts.push_back(std::string(v) + "^" + std::to_string(e));
    };
    power("y", m.first);
    power("x", m.second);
    if (!out.empty()) out += " + ";
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " " : "") + parts[k];
  }
  return out;
}

Laurent laurent_image(const JElement& u) {
  Laurent out;
  const unsigned p = u.characteristic();
  for (const auto& [m, c] : u.terms()) {
    const int e = static_cast<int>(m.first) - static_cast<int>(m.second);
    const unsigned v = (out[e] + c) % p;
    if (v == 0)
      out.erase(e);
    else
      out[e] = v;
  }
  return out;
}

Laurent laurent_mul(const Laurent& a, const Laurent& b, unsigned p) {
  Laurent out;
  for (const auto& [e, c] : a)
    for (const auto& [f, d] : b) {
      const unsigned v = static_cast<unsigned>((out[e + f] + static_cast<std::uint64_t>(c) * d) % p);
      if (v == 0)
        out.erase(e + f);
      else
        out[e + f] = v;
    }
  return out;
}

std::string laurent_to_string(const Laurent& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << ' ';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

JElement matrix_unit(unsigned p, unsigned i, unsigned j) {
  const JElement middle = JElement::one(p) - JElement::y(p) * JElement::x(p);
  return JElement::monomial(p, i, 0) * middle * JElement::monomial(p, 0, j);
}

std::size_t matrix_unit_violations(unsigned p, unsigned bound) {
  std::vector<std::vector<JElement>> e(bound + 1);
  for (unsigned i = 0; i <= bound; ++i)
    for (unsigned j = 0; j <= bound; ++j) e[i].push_back(matrix_unit(p, i, j));
  std::size_t bad = 0;
  const JElement zero(p);
  for (unsigned i = 0; i <= bound; ++i)
    for (unsigned j = 0; j <= bound; ++j)
      for (unsigned k = 0; k <= bound; ++k)
        for (unsigned l = 0; l <= bound; ++l)
          if (e[i][j] * e[k][l] != (j == k ? e[i][l] : zero)) ++bad;
  return bad;
}

JElement parse(const std::string& text, unsigned p) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> JElement {
    throw Error(ErrorCode::MalformedSpec,
                "bad element literal at offset " + std::to_string(pos) + ": " + why);
  };
  auto number = [&]() -> std::uint64_t {
    std::uint64_t v = 0;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned>(text[pos] - '0');
      if (v > 1'000'000'000ULL) fail("number too large");
      ++pos;
    }
    if (pos == start) fail("expected a number");
    return v;
  };

  JElement out(p);
  bool negative = false;
  skip();
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  while (true) {
    skip();
    std::uint64_t coeff = 1;
    bool any = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = number();
      any = true;
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    JElement term = JElement::monomial(p, 0, 0, static_cast<unsigned>(coeff % p));
    while (true) {
      skip();
      if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'y')) break;
      const char v = text[pos++];
      std::uint64_t e = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        e = number();
        if (e > 4096) fail("exponent too large");
      }
      const auto k = static_cast<unsigned>(e);
      term = term * (v == 'y' ? JElement::monomial(p, k, 0) : JElement::monomial(p, 0, k));
      any = true;
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    if (!any) fail("expected a term");
    if (negative)
      out -= term;
    else
      out += term;
    skip();
    if (pos >= text.size()) break;
    if (text[pos] == '+')
      negative = false;
    else if (text[pos] == '-')
      negative = true;
    else
      fail(std::string("unexpected '") + text[pos] + "'");
    ++pos;
  }
  return out;
}

std::vector<Claim> demo_claims(unsigned p, unsigned bound, std::uint64_t seed) {
  const JElement one = JElement::one(p), x = JElement::x(p), y = JElement::y(p), zero(p);
  std::vector<Claim> out;
  auto claim = [&](std::string name, bool pass, std::string detail, bool bounded = false) {
    out.push_back(Claim{std::move(name), pass, bounded, std::move(detail)});
  };

  const JElement xy = x * y, yx = y * x;
  claim("xy = 1", xy == one, "xy = " + xy.to_string());
  claim("yx != 1", yx != one, "yx = " + yx.to_string());
  const JElement e00 = one - yx;
  claim("1 - yx is an idempotent matrix unit", e00 * e00 == e00 && e00 == matrix_unit(p, 0, 0),
        "1 - yx = " + e00.to_string());

  const std::size_t bad = matrix_unit_violations(p, bound);
  claim("e_ij e_kl = delta_jk e_il", bad == 0,
        std::to_string(bad) + " violations for indices <= " + std::to_string(bound));

  // wx = 1 forces w = w(xy) = (wx)y = y, and yx != 1: no left inverse.
  claim("x is right invertible but not invertible", xy == one && yx != one,
        "a left inverse w would equal w(xy) = (wx)y = y");

  // x is quasi-invertible with quasi-inverse y: 1 - xy = 0 is orthogonal to
  // everything; symmetrically for y with the idempotent e00 against 0.
  claim("x and y are quasi-inverse partial inverses",
        x * y * x == x && y * x * y == y, "xyx = x, yxy = y");
  std::size_t orth_bad = 0;
  const JElement s = one - xy, t = one - yx;  // s = 0, t = e00
  for (unsigned i = 0; i <= bound; ++i)
    for (unsigned j = 0; j <= bound; ++j) {
      const JElement m = JElement::monomial(p, i, j);
      const JElement eij = matrix_unit(p, i, j);
      for (const JElement* mid : {&m, &eij})
        if (!(s * *mid * t).is_zero() || !(t * *mid * s).is_zero()) ++orth_bad;
    }
  claim("(1 - xy) orthogonal to (1 - yx)", orth_bad == 0,
        "middles y^i x^j and e_ij for i, j <= " + std::to_string(bound), true);
  claim("quasi-invertibles exceed units", orth_bad == 0 && yx != one,
        "x is quasi-invertible without being invertible", true);

  std::size_t assoc_bad = 0;
  for (unsigned a = 0; a <= bound; ++a)
    for (unsigned b = 0; b <= bound; ++b)
      for (unsigned c = 0; c <= bound; ++c)
        for (unsigned d = 0; d <= bound; ++d)
          for (unsigned e = 0; e <= bound; ++e)
            for (unsigned f = 0; f <= bound; ++f)
              if (monomial_product(monomial_product({a, b}, {c, d}), {e, f}) !=
                  monomial_product({a, b}, monomial_product({c, d}, {e, f})))
                ++assoc_bad;
  claim("monomial product is associative", assoc_bad == 0,
        "all triples with exponents <= " + std::to_string(bound), true);

  std::mt19937_64 rng(seed);
  auto random_element = [&] {
    JElement u(p);
    const unsigned terms = 1 + static_cast<unsigned>(rng() % 4);
    for (unsigned k = 0; k < terms; ++k)
      u += JElement::monomial(p, static_cast<unsigned>(rng() % (bound + 1)),
                              static_cast<unsigned>(rng() % (bound + 1)),
                              static_cast<unsigned>(rng() % p));
    return u;
  };
  std::size_t hom_bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const JElement u = random_element(), v = random_element();
    if (laurent_image(u * v) != laurent_mul(laurent_image(u), laurent_image(v), p)) ++hom_bad;
    if (laurent_image(u + v) != laurent_add(laurent_image(u), laurent_image(v), p)) ++hom_bad;
  }
  claim("Laurent image is a ring homomorphism", hom_bad == 0, "1000 seeded pairs", true);
  claim("1 - yx maps to 0", laurent_image(e00).empty(), laurent_to_string(laurent_image(e00)));

  std::size_t ideal_bad = 0;
  for (int k = 0; k < 200; ++k) {
    // Elements with zero Laurent image: combinations of matrix units.
    JElement m(p);
    for (int t2 = 0; t2 < 3; ++t2)
      m += matrix_unit(p, static_cast<unsigned>(rng() % (bound + 1)),
                       static_cast<unsigned>(rng() % (bound + 1)));
    const JElement r = random_element();
    if (!laurent_image(m).empty() || !laurent_image(r * m).empty() ||
        !laurent_image(m * r).empty() || !laurent_image(m + m).empty())
      ++ideal_bad;
  }
  claim("kernel of the Laurent image absorbs products", ideal_bad == 0, "200 seeded samples", true);
  return out;
}

}  // namespace qbr::jacobson
