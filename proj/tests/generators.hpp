#pragma once

// Deterministic bounded-degree generators for the randomized property
// suites. Seeds are fixed so failures reproduce.

#include "logder/derivation.hpp"
#include "logder/ratfunc.hpp"

#include <cstdint>
#include <random>

namespace logder::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  Rational coefficient() {
    int n = uniform(-9, 9);
    if (n == 0) n = 1;
    const int d = uniform(1, 4);
    return make_rational(n, d);
  }

  Monomial monomial(int max_exp) {
    Monomial m;
    for (std::size_t v = 0; v < kNumVars; ++v)
      m.e[v] = static_cast<std::uint32_t>(uniform(0, max_exp));
    return m;
  }

  Poly poly(int max_terms = 5, int max_exp = 2) {
    Poly p;
    const int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) p += Poly::monomial(coefficient(), monomial(max_exp));
    return p;
  }

  Poly nonzero_poly(int max_terms = 5, int max_exp = 2) {
    while (true) {
      Poly p = poly(max_terms, max_exp);
      if (!p.is_zero()) return p;
    }
  }

  /// Random polynomial of degree at most one, as needed for substitution
  /// images.
  Poly linear() {
    Poly p;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (uniform(0, 1)) p += Rational(uniform(-3, 3)) * Poly::variable(v);
    }
    if (uniform(0, 1)) p += Poly(Rational(uniform(-3, 3)));
    return p;
  }

  Poly homogeneous(std::uint32_t degree, int max_terms = 4) {
    Poly p;
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      std::uint32_t left = degree;
      for (std::size_t v = 0; v + 1 < kNumVars; ++v) {
        m.e[v] = static_cast<std::uint32_t>(uniform(0, static_cast<int>(left)));
        left -= m.e[v];
      }
      m.e[kNumVars - 1] = left;
      p += Poly::monomial(coefficient(), m);
    }
    return p;
  }

  Derivation derivation(int max_terms = 4, int max_exp = 2) {
    return {poly(max_terms, max_exp), poly(max_terms, max_exp), poly(max_terms, max_exp)};
  }

  GroupElement group_element() {
    const auto pick = [&]() {
      switch (uniform(0, 4)) {
        case 0: return GroupElement::s1();
        case 1: return GroupElement::s2();
        case 2: return GroupElement::s0();
        case 3: return GroupElement::tau();
        default: return GroupElement::identity();
      }
    };
    GroupElement g = pick();
    const int extra = uniform(0, 2);
    for (int i = 0; i < extra; ++i) g = compose(g, pick());
    return g;
  }

  /// Quotient whose denominator mixes reduction-basis forms with a random
  /// nonzero factor, so reduction has genuine work to do.
  RatFunc ratfunc() {
    Poly den(Rational(uniform(1, 5)));
    for (const Poly& f : reduction_basis())
      for (int i = uniform(0, 2); i > 0; --i) den *= f;
    if (uniform(0, 1)) den *= nonzero_poly(3, 1);
    Poly num = poly(4, 2);
    if (uniform(0, 1)) num *= den;  // force a cancellable factor sometimes
    return RatFunc(num, den);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace logder::testing
