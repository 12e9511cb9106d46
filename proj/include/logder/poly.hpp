#pragma once

#include "logder/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logder {

/// Number of coordinates: a1, a2 and the coning coordinate z.
inline constexpr std::size_t kNumVars = 3;

/// Exponent triple of the power product a1^e1 * a2^e2 * z^ez.
struct Monomial {
  std::array<std::uint32_t, kNumVars> e{0, 0, 0};

  std::uint32_t total_degree() const { return e[0] + e[1] + e[2]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with a1 > a2 > z, arranged so that larger
/// monomials sort first and map iteration starts at the leading term.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const std::uint32_t da = a.total_degree();
    const std::uint32_t db = b.total_degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

/// Sparse polynomial in (a1, a2, z) with exact rational coefficients.
/// Zero coefficients are never stored, so map equality is value equality.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  Poly(int c) : Poly(Rational(c)) {}

  static Poly variable(std::size_t index) {
    if (index >= kNumVars) throw std::invalid_argument("Poly::variable: index out of range");
    Monomial m;
    m.e[index] = 1;
    return monomial(Rational(1), m);
  }

  static Poly monomial(const Rational& c, const Monomial& m) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total_degree());
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

  /// The value of a constant polynomial.
  Rational constant_value() const {
    if (!is_constant()) throw std::invalid_argument("Poly::constant_value: polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  /// True when all terms share one total degree (the zero polynomial counts).
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint32_t d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
      if (m.total_degree() != d) return false;
    return true;
  }

  /// Common degree of a nonzero homogeneous polynomial; nullopt otherwise.
  std::optional<std::uint32_t> homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.total_degree();
  }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Monomial leading_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("Poly::leading_monomial: zero polynomial");
    return terms_.begin()->first;
  }

  Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (std::size_t i = 0; i < kNumVars; ++i) m.e[i] = ma.e[i] + mb.e[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Rational& c, const Poly& p) {
    Poly out;
    if (c == 0) return out;
    out.terms_ = p.terms_;
    for (auto& [m, v] : out.terms_) v *= c;
    return out;
  }
  friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

  Poly pow(std::uint32_t n) const {
    Poly out(1);
    for (std::uint32_t i = 0; i < n; ++i) out *= *this;
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// Formal partial derivative with respect to coordinate `var`.
inline Poly partial(const Poly& p, std::size_t var) {
  if (var >= kNumVars) throw std::invalid_argument("partial: variable index out of range");
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.e[var] == 0) continue;
    Monomial n = m;
    n.e[var] -= 1;
    out += Poly::monomial(c * m.e[var], n);
  }
  return out;
}

/// Simultaneous substitution of the three coordinates.
inline Poly substitute(const Poly& p, const std::array<Poly, kNumVars>& images) {
  std::array<std::vector<Poly>, kNumVars> powers;
  for (std::size_t v = 0; v < kNumVars; ++v) powers[v].push_back(Poly(1));
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly term{c};
    for (std::size_t v = 0; v < kNumVars; ++v) {
      while (powers[v].size() <= m.e[v]) powers[v].push_back(powers[v].back() * images[v]);
      if (m.e[v] > 0) term *= powers[v][m.e[v]];
    }
    out += term;
  }
  return out;
}

/// Specialization z -> 0.
inline Poly at_z0(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms())
    if (m.e[2] == 0) out += Poly::monomial(c, m);
  return out;
}

/// Exact division. Returns the quotient when d divides p and nullopt when it
/// does not; non-divisibility is an ordinary answer here, not an error.
inline std::optional<Poly> divexact(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::invalid_argument("divexact: division by the zero polynomial");
  Poly rem = p;
  Poly quot;
  const Monomial dm = d.leading_monomial();
  const Rational dc = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial rm = rem.leading_monomial();
    Monomial qm;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (rm.e[i] < dm.e[i]) return std::nullopt;
      qm.e[i] = rm.e[i] - dm.e[i];
    }
    const Poly t = Poly::monomial(rem.leading_coefficient() / dc, qm);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

/// Positive rational c such that p/c has coprime integer coefficients;
/// zero for the zero polynomial.
inline Rational rational_content(const Poly& p) {
  if (p.is_zero()) return Rational(0);
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& [m, c] : p.terms()) {
    g = gcd(g, BigInt(abs(numerator(c))));
    l = lcm(l, BigInt(denominator(c)));
  }
  return make_rational(g, l);
}

/// Deterministic ordering on polynomials (leading terms compared first);
/// used only to keep form sets and printed output stable.
inline bool poly_less(const Poly& a, const Poly& b) {
  const MonomialOrder before;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return before(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

/// Renders terms in the fixed monomial order, e.g. "a1^2*a2 - 3*z".
inline std::string poly_to_string(const Poly& p,
                                  const std::array<std::string, kNumVars>& names = {"a1", "a2", "z"}) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    std::string vars;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (m.e[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[v];
      if (m.e[v] > 1) vars += "^" + std::to_string(m.e[v]);
    }
    if (vars.empty()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) {
        const bool integral = denominator(mag) == 1;
        out += integral ? rational_to_string(mag) : "(" + rational_to_string(mag) + ")";
        out += "*";
      }
      out += vars;
    }
  }
  return out;
}

}  // namespace logder
