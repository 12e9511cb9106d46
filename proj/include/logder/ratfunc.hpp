#pragma once

#include "logder/poly.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>

namespace logder {

/// The linear forms that generate every denominator of the invariant-theory
/// layer: a1, a2 and a1+a2. Cancelling these (plus integer content) keeps
/// quotients small without a general multivariate gcd; equality is always
/// decided by cross-multiplication, so under-reduction is harmless.
inline const std::array<Poly, 3>& reduction_basis() {
  static const std::array<Poly, 3> basis = {
      Poly::variable(0),
      Poly::variable(1),
      Poly::variable(0) + Poly::variable(1),
  };
  return basis;
}

/// Quotient of two polynomials, normalized so that numerator and denominator
/// are integer polynomials with coprime contents, the denominator has a
/// positive leading coefficient, and no reduction-basis form divides both.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(Poly numerator) : num_(std::move(numerator)), den_(1) { normalize(); }
  RatFunc(const Rational& c) : RatFunc(Poly(c)) {}
  RatFunc(int c) : RatFunc(Poly(c)) {}
  RatFunc(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  /// Value equality via cross-multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc reciprocal() const {
    if (is_zero()) throw std::invalid_argument("RatFunc: reciprocal of zero");
    return RatFunc(den_, num_);
  }

  /// Cancels any of the given extra forms dividing both sides, on top of the
  /// always-applied default normalization. Idempotent.
  RatFunc reduced(std::span<const Poly> extra_forms = {}) const {
    RatFunc out = *this;
    out.cancel_common_factors(extra_forms);
    out.normalize();
    return out;
  }

  /// Polynomial value if the quotient is exact, nullopt otherwise.
  std::optional<Poly> to_poly() const {
    if (den_.is_constant()) return (Rational(1) / den_.constant_value()) * num_;
    return divexact(num_, den_);
  }

  /// Quotient-rule partial derivative with respect to coordinate `var`.
  RatFunc partial_derivative(std::size_t var) const {
    return RatFunc(partial(num_, var) * den_ - num_ * partial(den_, var), den_ * den_);
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    const Rational cn = rational_content(num_);
    const Rational cd = rational_content(den_);
    const Rational scale = cn / cd;
    num_ = (Rational(numerator(scale)) / cn) * num_;
    den_ = (Rational(denominator(scale)) / cd) * den_;
    if (den_.leading_coefficient() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    cancel_common_factors({});
  }

  void cancel_common_factors(std::span<const Poly> extra_forms) {
    if (num_.is_zero()) return;
    bool changed = true;
    while (changed) {
      changed = false;
      const auto try_cancel = [&](const Poly& f) {
        if (f.is_constant()) return;
        while (true) {
          auto qn = divexact(num_, f);
          if (!qn) break;
          auto qd = divexact(den_, f);
          if (!qd) break;
          num_ = std::move(*qn);
          den_ = std::move(*qd);
          changed = true;
        }
      };
      for (const Poly& f : reduction_basis()) try_cancel(f);
      for (const Poly& f : extra_forms) try_cancel(f);
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace logder
