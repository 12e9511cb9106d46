#pragma once

#include "logder/matrix.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logder {

/// Root data of type A2 in the coordinates (a1, a2): simple roots a1, a2,
/// positive roots a1, a2, a1+a2, and the inner-product matrix A.
struct RootSystemA2 {
  static constexpr int coxeter_number = 3;

  static std::array<Poly, 2> simple_roots() {
    return {Poly::variable(0), Poly::variable(1)};
  }

  static std::array<Poly, 3> positive_roots() {
    return {Poly::variable(0), Poly::variable(1), Poly::variable(0) + Poly::variable(1)};
  }

  static PolyMatrix cartan_matrix() {
    return PolyMatrix{{Poly(2), Poly(-1)}, {Poly(-1), Poly(2)}};
  }

  /// Q = a1*a2*(a1+a2), the defining polynomial of the Weyl arrangement.
  static Poly weyl_defining_polynomial() {
    const auto roots = positive_roots();
    return roots[0] * roots[1] * roots[2];
  }
};

/// A hyperplane through the origin of the cone, stored as its degree-1 form
/// normalized so the first nonzero coefficient (order a1, a2, z) is positive.
struct Hyperplane {
  Poly form;

  explicit Hyperplane(Poly f) : form(std::move(f)) {
    if (form.is_zero() || form.homogeneous_degree() != 1u)
      throw std::invalid_argument("Hyperplane: form must be homogeneous of degree 1");
    for (std::size_t v = 0; v < kNumVars; ++v) {
      Monomial m;
      m.e[v] = 1;
      const Rational c = form.coeff(m);
      if (c == 0) continue;
      if (c < 0) form = -form;
      break;
    }
  }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

enum class Family { shi, cat, weyl_cone, custom };

/// The cone over an extended Shi or Catalan arrangement (or an ad-hoc set of
/// forms), together with the exponents its derivation module is expected to
/// realize.
class Arrangement {
 public:
  Arrangement(Family family, int k, std::vector<Hyperplane> hyperplanes,
              std::array<int, 3> expected_exponents)
      : family_(family), k_(k), hyperplanes_(std::move(hyperplanes)), exponents_(expected_exponents) {
    int sum = 0;
    for (int e : exponents_) sum += e;
    if (sum != static_cast<int>(hyperplanes_.size()))
      throw std::invalid_argument("Arrangement: exponent sum must equal the hyperplane count");
    std::set<Poly, PolyLess> distinct;
    for (const auto& h : hyperplanes_) distinct.insert(h.form);
    if (distinct.size() != hyperplanes_.size())
      throw std::invalid_argument("Arrangement: hyperplanes must be pairwise non-proportional");
  }

  static Arrangement custom(std::vector<Poly> forms, std::array<int, 3> expected_exponents) {
    std::vector<Hyperplane> hs;
    hs.reserve(forms.size());
    for (auto& f : forms) hs.emplace_back(std::move(f));
    return Arrangement(Family::custom, 0, std::move(hs), expected_exponents);
  }

  Family family() const { return family_; }
  int k() const { return k_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::array<int, 3>& expected_exponents() const { return exponents_; }

  std::string id() const {
    switch (family_) {
      case Family::shi:
        return "Shi^" + std::to_string(k_);
      case Family::cat:
        return "Cat^" + std::to_string(k_);
      case Family::weyl_cone:
        return "WeylCone";
      case Family::custom:
        return "custom";
    }
    return "?";
  }

  /// Q(A), the product of all hyperplane forms.
  Poly defining_polynomial() const {
    Poly q(1);
    for (const auto& h : hyperplanes_) q *= h.form;
    return q;
  }

  bool contains_form(const Poly& f) const {
    const Hyperplane probe{f};
    for (const auto& h : hyperplanes_)
      if (h.form == probe.form) return true;
    return false;
  }

  std::set<Poly, PolyLess> form_set() const {
    std::set<Poly, PolyLess> s;
    for (const auto& h : hyperplanes_) s.insert(h.form);
    return s;
  }

 private:
  Family family_;
  int k_;
  std::vector<Hyperplane> hyperplanes_;
  std::array<int, 3> exponents_;
};

namespace detail {
inline std::vector<Hyperplane> coned_translates(int level_lo, int level_hi) {
  const Poly zz = Poly::variable(2);
  std::vector<Hyperplane> hs;
  for (const Poly& root : RootSystemA2::positive_roots())
    for (int i = level_lo; i <= level_hi; ++i) hs.emplace_back(root - Rational(i) * zz);
  hs.emplace_back(zz);
  return hs;
}
}  // namespace detail

/// Cone over Shi^k: {alpha - i*z | -k+1 <= i <= k} plus the infinite
/// hyperplane z. Exponents (1, 3k, 3k).
inline Arrangement build_shi_cone(int k) {
  if (k < 0) throw std::invalid_argument("build_shi_cone: k must be non-negative");
  return Arrangement(Family::shi, k, detail::coned_translates(-k + 1, k), {1, 3 * k, 3 * k});
}

/// Cone over Cat^k: {alpha - i*z | |i| <= k} plus z. Exponents
/// (1, 3k+1, 3k+2).
inline Arrangement build_cat_cone(int k) {
  if (k < 0) throw std::invalid_argument("build_cat_cone: k must be non-negative");
  return Arrangement(Family::cat, k, detail::coned_translates(-k, k), {1, 3 * k + 1, 3 * k + 2});
}

/// Constant multiplicity on the three positive roots, indexed like
/// RootSystemA2::positive_roots().
struct MultiplicityMap {
  std::array<unsigned, 3> m{0, 0, 0};

  friend bool operator==(const MultiplicityMap&, const MultiplicityMap&) = default;
};

/// The Ziegler-restriction target: every positive root carries multiplicity 2k.
inline MultiplicityMap weyl_multiarrangement(int k) {
  if (k < 0) throw std::invalid_argument("weyl_multiarrangement: k must be non-negative");
  const unsigned mk = static_cast<unsigned>(2 * k);
  return MultiplicityMap{{mk, mk, mk}};
}

}  // namespace logder
