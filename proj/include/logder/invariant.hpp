#pragma once

#include "logder/construction.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace logder {

/// Basic invariants of the A2 Weyl group:
///   P1 = a1^2 + a1 a2 + a2^2,
///   P2 = (2/27) (a1 - a2)(a1 + 2 a2)(2 a1 + a2).
struct BasicInvariants {
  Poly p1;
  Poly p2;
};

inline BasicInvariants basic_invariants() {
  const Poly a1 = Poly::variable(0), a2 = Poly::variable(1);
  BasicInvariants inv;
  inv.p1 = a1 * a1 + a1 * a2 + a2 * a2;
  inv.p2 = make_rational(2, 27) * ((a1 - a2) * (a1 + Rational(2) * a2) * (Rational(2) * a1 + a2));
  return inv;
}

/// The primitive derivation, normalized so that D(P1) = 0 and D(P2) = 1/3:
///   D = [ (a1 + 2 a2) d/da1 - (2 a1 + a2) d/da2 ] / (6 a1 a2 (a1 + a2)).
/// The normalization is proven at construction time, not assumed.
class PrimitiveDerivation {
 public:
  PrimitiveDerivation() {
    const Poly a1 = Poly::variable(0), a2 = Poly::variable(1);
    const Poly six_q = Rational(6) * RootSystemA2::weyl_defining_polynomial();
    d1_ = RatFunc(a1 + Rational(2) * a2, six_q);
    d2_ = RatFunc(-(Rational(2) * a1 + a2), six_q);
    const auto inv = basic_invariants();
    if (!(apply(RatFunc(inv.p1)) == RatFunc(0)))
      throw std::logic_error("PrimitiveDerivation: D(P1) != 0");
    if (!(apply(RatFunc(inv.p2)) == RatFunc(Rational(make_rational(1, 3)))))
      throw std::logic_error("PrimitiveDerivation: D(P2) != 1/3");
  }

  const RatFunc& d1() const { return d1_; }
  const RatFunc& d2() const { return d2_; }

  RatFunc apply(const RatFunc& f) const {
    return (d1_ * f.partial_derivative(0) + d2_ * f.partial_derivative(1)).reduced();
  }

  RatFunc apply_power(const Poly& f, int k) const {
    if (k < 0) throw std::invalid_argument("PrimitiveDerivation::apply_power: k must be non-negative");
    RatFunc out{f};
    for (int i = 0; i < k; ++i) out = apply(out);
    return out;
  }

 private:
  RatFunc d1_;
  RatFunc d2_;
};

/// J(f1, f2) = (d f_j / d a_i): rows indexed by the simple-root coordinates,
/// columns by the functions. z never enters this layer.
inline RatMatrix jacobian(const RatFunc& f1, const RatFunc& f2) {
  RatMatrix j(2, 2);
  j.at(0, 0) = f1.partial_derivative(0).reduced();
  j.at(0, 1) = f2.partial_derivative(0).reduced();
  j.at(1, 0) = f1.partial_derivative(1).reduced();
  j.at(1, 1) = f2.partial_derivative(1).reduced();
  return j;
}

/// J = J(P1, P2) as a polynomial matrix.
inline PolyMatrix jacobian_basic_invariants() {
  const auto inv = basic_invariants();
  PolyMatrix j(2, 2);
  j.at(0, 0) = partial(inv.p1, 0);
  j.at(0, 1) = partial(inv.p2, 0);
  j.at(1, 0) = partial(inv.p1, 1);
  j.at(1, 1) = partial(inv.p2, 1);
  return j;
}

/// D applied entrywise to J, cross-checked against the closed form
/// (1 / (18 Q)) [[9 a2, 4 a2 (2 a1 + a2)], [-9 a1, 4 a1 (a1 + 2 a2)]].
inline RatMatrix matrix_DJ() {
  const PrimitiveDerivation d;
  const RatMatrix dj = jacobian_basic_invariants().map([&](const Poly& p) { return d.apply(RatFunc(p)); });
  const Poly a1 = Poly::variable(0), a2 = Poly::variable(1);
  const Poly q18 = Rational(18) * RootSystemA2::weyl_defining_polynomial();
  const RatMatrix display{
      {RatFunc(Rational(9) * a2, q18), RatFunc(Rational(4) * a2 * (Rational(2) * a1 + a2), q18)},
      {RatFunc(Rational(-9) * a1, q18), RatFunc(Rational(4) * a1 * (a1 + Rational(2) * a2), q18)},
  };
  if (!(dj == display)) throw std::logic_error("matrix_DJ: computed D[J] deviates from the closed form");
  return dj;
}

/// Terao's matrix B = J^T A D[J]; the product collapses to the constant
/// matrix [[0,2],[1,0]].
inline PolyMatrix matrix_B() {
  const RatMatrix b_rat =
      to_rat(jacobian_basic_invariants().transpose() * inner_product_matrix()) * matrix_DJ();
  const auto b = to_poly(b_rat);
  if (!b) throw std::logic_error("matrix_B: non-polynomial entry");
  const PolyMatrix expected{{Poly(0), Poly(2)}, {Poly(1), Poly(0)}};
  if (!(*b == expected)) throw std::logic_error("matrix_B: computed B deviates from [[0,2],[1,0]]");
  return *b;
}

/// B^(k) = k B + (k-1) B^T = [[0, 3k-1], [3k-2, 0]].
inline PolyMatrix matrix_Bk(int k) {
  if (k < 1) throw std::invalid_argument("matrix_Bk: k must be positive");
  const PolyMatrix b = matrix_B();
  return b.scaled(Poly(k)) + b.transpose().scaled(Poly(k - 1));
}

/// R_{2k} = (-1)^k J(D^k(a1), D^k(a2))^{-1}.
inline RatMatrix matrix_R(int k) {
  if (k < 0) throw std::invalid_argument("matrix_R: k must be non-negative");
  const PrimitiveDerivation d;
  const RatMatrix jk = jacobian(d.apply_power(Poly::variable(0), k), d.apply_power(Poly::variable(1), k));
  const RatMatrix inv = inverse2(jk);
  return (k % 2 == 0) ? inv : inv.scaled(RatFunc(-1));
}

struct CheckReport {
  bool pass = false;
  std::string detail;
};

/// Theorem 3.9 cross-check: the z = 0 restriction of the pipeline SRB+ must
/// equal [d1, d2] A R_{2k} A^{-1} computed from the primitive derivation.
/// The two sides share no code path beyond the base arithmetic.
inline CheckReport verify_restriction_identity(int k, const PolyMatrix& srb_plus_coeffs) {
  const PolyMatrix lhs = at_z0(srb_plus_coeffs);
  const RatMatrix rhs =
      to_rat(inner_product_matrix()) * matrix_R(k) * to_rat(inner_product_inverse());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!(RatFunc(lhs.at(i, j)) == rhs.at(i, j)))
        return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") differs between pipeline restriction and A R_{2k} A^{-1} at k = " +
                           std::to_string(k)};
  return {true, "restriction identity holds at k = " + std::to_string(k)};
}

inline CheckReport verify_restriction_identity(int k) {
  return verify_restriction_identity(k, srb_plus_matrix(k));
}

/// Prop 3.10 cross-check: the symbolic product
///   (M_k|_{z=0})^{-1} A J (B^(k+1))^{-1} J^T A (N_{k+1}|_{z=0})^{-1}
/// must collapse to diag(1/(3k+1), 1/(3k+2)).
inline CheckReport verify_Tk_closed_form(int k) {
  if (k < 0) throw std::invalid_argument("verify_Tk_closed_form: k must be non-negative");
  const PolyMatrix j = jacobian_basic_invariants();
  const PolyMatrix a = inner_product_matrix();
  const RatMatrix rhs = inverse2(at_z0(matrix_M(k))) * to_rat(a * j) * inverse2(matrix_Bk(k + 1)) *
                        to_rat(j.transpose() * a) * inverse2(at_z0(matrix_N(k + 1)));
  const RatFunc zero;
  if (!(rhs.at(0, 1) == zero) || !(rhs.at(1, 0) == zero))
    return {false, "off-diagonal entry of the T_k closed form is nonzero at k = " + std::to_string(k)};
  if (!(rhs.at(0, 0) == RatFunc(make_rational(1, 3 * k + 1))) ||
      !(rhs.at(1, 1) == RatFunc(make_rational(1, 3 * k + 2))))
    return {false, "diagonal of the T_k closed form differs from (1/(3k+1), 1/(3k+2)) at k = " +
                       std::to_string(k)};
  return {true, "T_k closed form reproduces diag(1/(3k+1), 1/(3k+2)) at k = " + std::to_string(k)};
}

}  // namespace logder
