#pragma once

#include "logder/arrangement.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace logder {

/// A derivation c1*d/da1 + c2*d/da2 + cz*d/dz with polynomial coefficients.
/// Members of D_0 have cz = 0.
struct Derivation {
  Poly c1;
  Poly c2;
  Poly cz;
  std::string label;

  Derivation() = default;
  Derivation(Poly c1_, Poly c2_, Poly cz_, std::string label_ = {})
      : c1(std::move(c1_)), c2(std::move(c2_)), cz(std::move(cz_)), label(std::move(label_)) {}

  /// Leibniz action via coordinates: c1*df/da1 + c2*df/da2 + cz*df/dz.
  Poly apply(const Poly& f) const {
    return c1 * partial(f, 0) + c2 * partial(f, 1) + cz * partial(f, 2);
  }

  const Poly& coefficient(std::size_t var) const {
    switch (var) {
      case 0:
        return c1;
      case 1:
        return c2;
      case 2:
        return cz;
      default:
        throw std::invalid_argument("Derivation::coefficient: index out of range");
    }
  }

  bool is_zero() const { return c1.is_zero() && c2.is_zero() && cz.is_zero(); }

  /// Maximum total degree of the coefficients; for a homogeneous derivation
  /// this is its degree as a basis element.
  int degree() const { return std::max({c1.degree(), c2.degree(), cz.degree()}); }

  /// All nonzero coefficients homogeneous of one common degree.
  bool is_homogeneous() const {
    if (!c1.is_homogeneous() || !c2.is_homogeneous() || !cz.is_homogeneous()) return false;
    std::optional<std::uint32_t> d;
    for (const Poly* c : {&c1, &c2, &cz}) {
      const auto cd = c->homogeneous_degree();
      if (!cd) continue;
      if (d && *d != *cd) return false;
      d = cd;
    }
    return true;
  }

  bool equals_up_to_label(const Derivation& o) const {
    return c1 == o.c1 && c2 == o.c2 && cz == o.cz;
  }

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    return {a.c1 + b.c1, a.c2 + b.c2, a.cz + b.cz};
  }
  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    return {a.c1 - b.c1, a.c2 - b.c2, a.cz - b.cz};
  }
  Derivation operator-() const { return {-c1, -c2, -cz, label}; }
  friend Derivation operator*(const Poly& f, const Derivation& d) {
    return {f * d.c1, f * d.c2, f * d.cz};
  }
  friend Derivation operator*(const Rational& c, const Derivation& d) { return Poly(c) * d; }
};

inline Derivation euler_derivation() {
  return {Poly::variable(0), Poly::variable(1), Poly::variable(2), "theta_E"};
}

/// The dual-basis derivation d/da1, d/da2 or d/dz.
inline Derivation partial_derivation(std::size_t var) {
  Derivation d;
  d.label = var == 0 ? "d1" : var == 1 ? "d2" : "dz";
  (var == 0 ? d.c1 : var == 1 ? d.c2 : d.cz) = Poly(1);
  return d;
}

/// An element of the group generated by the simple reflections s1, s2, the
/// reflection s0 of a1+a2 and the reflection tau of z, given by its
/// substitution images on the coordinates. Inverse images are carried along
/// so that the action on derivations needs no matrix inversion.
struct GroupElement {
  std::string name;
  std::array<Poly, kNumVars> images;
  std::array<Poly, kNumVars> inverse_images;

  Poly act(const Poly& f) const { return substitute(f, images); }
  Poly act_inverse(const Poly& f) const { return substitute(f, inverse_images); }

  static GroupElement identity() {
    const auto id = coordinate_images();
    return {"id", id, id};
  }
  static GroupElement s1() {
    const Poly a1 = Poly::variable(0), a2 = Poly::variable(1), zz = Poly::variable(2);
    const std::array<Poly, 3> img = {-a1, a1 + a2, zz};
    return {"s1", img, img};
  }
  static GroupElement s2() {
    const Poly a1 = Poly::variable(0), a2 = Poly::variable(1), zz = Poly::variable(2);
    const std::array<Poly, 3> img = {a1 + a2, -a2, zz};
    return {"s2", img, img};
  }
  static GroupElement s0() {
    const Poly a1 = Poly::variable(0), a2 = Poly::variable(1), zz = Poly::variable(2);
    const std::array<Poly, 3> img = {-a2, -a1, zz};
    return {"s0", img, img};
  }
  static GroupElement tau() {
    const Poly a1 = Poly::variable(0), a2 = Poly::variable(1), zz = Poly::variable(2);
    const std::array<Poly, 3> img = {a1, a2, -zz};
    return {"tau", img, img};
  }

  static std::array<Poly, kNumVars> coordinate_images() {
    return {Poly::variable(0), Poly::variable(1), Poly::variable(2)};
  }
};

/// Composite acting as g after h: act(gh, f) = act(g, act(h, f)).
inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
  GroupElement out;
  out.name = g.name + "*" + h.name;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    out.images[v] = g.act(h.images[v]);
    out.inverse_images[v] = h.act_inverse(g.inverse_images[v]);
  }
  return out;
}

inline GroupElement tau_s0() { return compose(GroupElement::tau(), GroupElement::s0()); }

/// The action on derivations, computed from the defining identity
/// (g theta)(f) = g(theta(g^{-1} f)) evaluated on the three coordinates.
inline Derivation weyl_act(const GroupElement& g, const Derivation& theta) {
  Derivation out;
  out.label = g.name + "." + theta.label;
  out.c1 = g.act(theta.apply(g.inverse_images[0]));
  out.c2 = g.act(theta.apply(g.inverse_images[1]));
  out.cz = g.act(theta.apply(g.inverse_images[2]));
  return out;
}

/// Outcome of a divisibility membership test; on failure `witness` is the
/// offending form.
struct MembershipResult {
  bool pass = false;
  std::optional<Poly> witness;
};

/// theta in D(A): theta(alpha_H) divisible by alpha_H for every H.
inline MembershipResult is_logarithmic(const Derivation& theta, const Arrangement& arr) {
  for (const auto& h : arr.hyperplanes()) {
    if (!divexact(theta.apply(h.form), h.form)) return {false, h.form};
  }
  return {true, std::nullopt};
}

/// theta(alpha)^ divisible by alpha^{m(alpha)} for each positive root; the
/// multiarrangement membership used by Ziegler restriction.
inline MembershipResult multi_membership(const Derivation& theta, const MultiplicityMap& multi) {
  const auto roots = RootSystemA2::positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (multi.m[i] == 0) continue;
    if (!divexact(theta.apply(roots[i]), roots[i].pow(multi.m[i]))) return {false, roots[i]};
  }
  return {true, std::nullopt};
}

/// Specialization z -> 0 of a member of D_0 (requires cz = 0).
inline Derivation restrict_z0(const Derivation& theta) {
  if (!theta.cz.is_zero())
    throw std::invalid_argument("restrict_z0: derivation must satisfy theta(z) = 0");
  Derivation out;
  out.label = theta.label + "|z=0";
  out.c1 = at_z0(theta.c1);
  out.c2 = at_z0(theta.c2);
  return out;
}

/// Saito certificate: the basis passes iff the coefficient determinant is a
/// nonzero constant multiple of Q(A). The constant's sign depends on row
/// order and is recorded, never asserted.
struct SaitoCertificate {
  std::string arrangement_id;
  std::array<std::string, 3> labels;
  Poly determinant;
  Rational quotient_constant = 0;
  std::array<int, 3> degrees{0, 0, 0};
  bool pass = false;
  std::string failure;               // empty on success
  std::optional<Poly> witness;       // offending form for membership failures
};

inline PolyMatrix coefficient_rows(const std::array<Derivation, 3>& basis) {
  PolyMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = basis[i].coefficient(j);
  return m;
}

inline SaitoCertificate saito_check(const std::array<Derivation, 3>& basis, const Arrangement& arr) {
  SaitoCertificate cert;
  cert.arrangement_id = arr.id();
  for (std::size_t i = 0; i < 3; ++i) {
    cert.labels[i] = basis[i].label;
    cert.degrees[i] = basis[i].degree();
  }
  for (const auto& theta : basis) {
    const auto member = is_logarithmic(theta, arr);
    if (!member.pass) {
      cert.failure = "not_logarithmic(" + theta.label + ")";
      cert.witness = member.witness;
      return cert;
    }
  }
  cert.determinant = coefficient_rows(basis).det();
  const auto quotient = divexact(cert.determinant, arr.defining_polynomial());
  if (!quotient || !quotient->is_constant() || quotient->is_zero()) {
    cert.failure = "determinant_not_constant_multiple_of_Q";
    return cert;
  }
  cert.quotient_constant = quotient->constant_value();
  cert.pass = true;
  return cert;
}

}  // namespace logder
