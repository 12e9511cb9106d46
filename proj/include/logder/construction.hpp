#pragma once

#include "logder/derivation.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logder {

// The recursion below realizes the matrix pipeline
//
//   [phi_1^(k), phi_2^(k)] = [d1, d2] * prod_{i<k} (M_i T_i N_{i+1} A^{-1})
//
// over coefficient matrices: a pair of derivations in D_0 is the 2x2 matrix
// whose column j holds the d/da1- and d/da2-coefficients of the j-th member,
// and right multiplication composes pipeline steps.

inline PolyMatrix matrix_M(int n) {
  if (n < 0) throw std::invalid_argument("matrix_M: n must be non-negative");
  const Poly a1 = Poly::variable(0), a2 = Poly::variable(1), zz = Poly::variable(2);
  const Poly nz = Rational(n) * zz;
  return PolyMatrix{
      {a1 + nz, (Rational(2) * a1 + Rational(4) * a2 + Rational(3) * nz) * (a1 + nz)},
      {a2 + nz, -((Rational(4) * a1 + Rational(2) * a2 + Rational(3) * nz) * (a2 + nz))},
  };
}

/// N_n as displayed; also rebuilt as swap * M_n^T|_{z -> -z} and compared,
/// so a transcription slip in either route cannot survive.
inline PolyMatrix matrix_N(int n) {
  if (n < 0) throw std::invalid_argument("matrix_N: n must be non-negative");
  const Poly a1 = Poly::variable(0), a2 = Poly::variable(1), zz = Poly::variable(2);
  const Poly nz = Rational(n) * zz;
  const PolyMatrix display{
      {(Rational(2) * a1 + Rational(4) * a2 - Rational(3) * nz) * (a1 - nz),
       -((Rational(4) * a1 + Rational(2) * a2 - Rational(3) * nz) * (a2 - nz))},
      {a1 - nz, a2 - nz},
  };
  const PolyMatrix swap{{Poly(0), Poly(1)}, {Poly(1), Poly(0)}};
  const PolyMatrix flipped =
      substitute(matrix_M(n).transpose(), {a1, a2, -zz});
  if (!(display == swap * flipped))
    throw std::logic_error("matrix_N: display disagrees with the flip-transpose of M_n");
  return display;
}

/// T_n = diag(1/(3n+1), 1/(3n+2)); constant and z-free.
inline PolyMatrix matrix_T(int n) {
  if (n < 0) throw std::invalid_argument("matrix_T: n must be non-negative");
  return PolyMatrix{
      {Poly(make_rational(1, 3 * n + 1)), Poly(0)},
      {Poly(0), Poly(make_rational(1, 3 * n + 2))},
  };
}

/// A = [I*(alpha_i, alpha_j)] = [[2,-1],[-1,2]].
inline PolyMatrix inner_product_matrix() { return RootSystemA2::cartan_matrix(); }

/// A^{-1} = (1/3) [[2,1],[1,2]]; constant rational entries, so the pipeline
/// stays inside the polynomial ring.
inline PolyMatrix inner_product_inverse() {
  const Rational third = make_rational(1, 3);
  return PolyMatrix{
      {Poly(third * 2), Poly(third)},
      {Poly(third), Poly(third * 2)},
  };
}

inline PolyMatrix srb_step_matrix(int i) {
  return matrix_M(i) * matrix_T(i) * matrix_N(i + 1) * inner_product_inverse();
}

/// The level-n matrix data of the recursion, with the determinant display
/// re-proved on construction.
struct StepMatrices {
  int n = 0;
  PolyMatrix M{2, 2};
  PolyMatrix N{2, 2};
  PolyMatrix T{2, 2};
  PolyMatrix A{2, 2};

  static StepMatrices at(int n) {
    StepMatrices s{n, matrix_M(n), matrix_N(n), matrix_T(n), inner_product_matrix()};
    const Poly a1 = Poly::variable(0), a2 = Poly::variable(1);
    const Poly nz = Rational(n) * Poly::variable(2);
    if (!(s.M.det() == Rational(-6) * ((a1 + nz) * (a2 + nz) * (a1 + a2 + nz))))
      throw std::logic_error("StepMatrices: det M_n deviates from -6(a1+nz)(a2+nz)(a1+a2+nz)");
    return s;
  }
};

namespace detail {

inline void require_homogeneous_columns(const PolyMatrix& m, int degree, const std::string& what) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& p = m.at(i, j);
      if (p.is_zero()) continue;
      const auto d = p.homogeneous_degree();
      if (!d || static_cast<int>(*d) != degree)
        throw std::logic_error(what + ": entry is not homogeneous of degree " + std::to_string(degree));
    }
}

/// Prop 2.8(1): phi_i^(k)(a_j + k z) lies in (a_j + k z) S_z for i != j.
inline bool srb_plus_characterization_holds(const PolyMatrix& phi, int k) {
  const auto roots = RootSystemA2::simple_roots();
  const Poly kz = Rational(k) * Poly::variable(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (i == j) continue;
      if (!divexact(phi.at(j, i), roots[j] + kz)) return false;
    }
  return true;
}

/// Prop 2.8(2): both coefficients of psi_i^(k) divisible by (a_i - k z).
/// Holds for k >= 1 only; at k = 0 the SRB- is the constant pair [d1,d2] A.
inline bool srb_minus_characterization_holds(const PolyMatrix& psi, int k) {
  if (k == 0) return true;
  const auto roots = RootSystemA2::simple_roots();
  const Poly kz = Rational(k) * Poly::variable(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t row = 0; row < 2; ++row)
      if (!divexact(psi.at(row, i), roots[i] - kz)) return false;
  return true;
}

}  // namespace detail

/// Coefficient matrices of the SRB+ pairs for levels 0..k_max, each step
/// validated against the Prop 2.8(1) characterization so a defect names the
/// first bad level.
inline std::vector<PolyMatrix> srb_plus_chain(int k_max) {
  if (k_max < 0) throw std::invalid_argument("srb_plus_chain: k_max must be non-negative");
  std::vector<PolyMatrix> chain;
  chain.reserve(static_cast<std::size_t>(k_max) + 1);
  chain.push_back(PolyMatrix::identity(2));
  for (int k = 1; k <= k_max; ++k) {
    PolyMatrix next = chain.back() * srb_step_matrix(k - 1);
    detail::require_homogeneous_columns(next, 3 * k, "srb_plus_chain: level " + std::to_string(k));
    if (!detail::srb_plus_characterization_holds(next, k))
      throw std::logic_error("srb_plus_chain: SRB+ characterization fails at level " + std::to_string(k));
    chain.push_back(std::move(next));
  }
  return chain;
}

inline PolyMatrix srb_plus_matrix(int k) { return srb_plus_chain(k).back(); }

inline std::array<Derivation, 2> derivation_pair(const PolyMatrix& coeffs, const std::string& stem, int k) {
  std::array<Derivation, 2> pair;
  for (std::size_t j = 0; j < 2; ++j) {
    pair[j].c1 = coeffs.at(0, j);
    pair[j].c2 = coeffs.at(1, j);
    pair[j].label = stem + std::to_string(j + 1) + "_k" + std::to_string(k);
  }
  return pair;
}

inline PolyMatrix coefficient_matrix(const std::array<Derivation, 2>& pair) {
  PolyMatrix m(2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    if (!pair[j].cz.is_zero())
      throw std::invalid_argument("coefficient_matrix: pair must lie in D_0");
    m.at(0, j) = pair[j].c1;
    m.at(1, j) = pair[j].c2;
  }
  return m;
}

/// The simple-root basis plus of D_0(Shi^k).
inline std::array<Derivation, 2> build_srb_plus(int k) {
  return derivation_pair(srb_plus_matrix(k), "phi", k);
}

/// [psi] = [phi] A; validated against the Prop 2.8(2) divisibility.
inline std::array<Derivation, 2> srb_minus_from_plus(const std::array<Derivation, 2>& srb_plus, int k) {
  const PolyMatrix psi = coefficient_matrix(srb_plus) * inner_product_matrix();
  if (!detail::srb_minus_characterization_holds(psi, k))
    throw std::logic_error("srb_minus_from_plus: SRB- divisibility fails at level " + std::to_string(k));
  return derivation_pair(psi, "psi", k);
}

/// [theta] = [phi] M_k, the W-invariant basis of D_0(Cat^k); theta_1 is the
/// k-Euler derivation.
inline std::array<Derivation, 2> cat_basis_from_srb_plus(const std::array<Derivation, 2>& srb_plus, int k) {
  const PolyMatrix theta = coefficient_matrix(srb_plus) * matrix_M(k);
  auto pair = derivation_pair(theta, "theta", k);
  const Arrangement cat = build_cat_cone(k);
  for (const auto& t : pair) {
    const auto member = is_logarithmic(t, cat);
    if (!member.pass)
      throw std::logic_error("cat_basis_from_srb_plus: membership fails on " + cat.id() + " for " + t.label);
  }
  return pair;
}

inline std::array<Derivation, 2> build_cat_basis(int k) {
  return cat_basis_from_srb_plus(build_srb_plus(k), k);
}

/// [eta^(k)] = [psi^(k+1)] N_{k+1}^{-1}; the inverse is rational, so every
/// entry must cancel back to a polynomial.
inline std::array<Derivation, 2> eta_basis_from_srb_minus(const std::array<Derivation, 2>& srb_minus_next,
                                                          int k) {
  if (k < 0) throw std::invalid_argument("eta_basis_from_srb_minus: k must be non-negative");
  const RatMatrix eta_rat =
      to_rat(coefficient_matrix(srb_minus_next)) * inverse2(matrix_N(k + 1));
  const auto eta = to_poly(eta_rat);
  if (!eta)
    throw std::logic_error("eta_basis_from_srb_minus: non-polynomial entry at level " + std::to_string(k));
  detail::require_homogeneous_columns(PolyMatrix{{eta->at(0, 0)}, {eta->at(1, 0)}}, 3 * k + 1,
                                      "eta_basis_from_srb_minus: first column");
  detail::require_homogeneous_columns(PolyMatrix{{eta->at(0, 1)}, {eta->at(1, 1)}}, 3 * k + 2,
                                      "eta_basis_from_srb_minus: second column");
  auto pair = derivation_pair(*eta, "eta", k);
  const Arrangement cat = build_cat_cone(k);
  for (const auto& t : pair) {
    const auto member = is_logarithmic(t, cat);
    if (!member.pass)
      throw std::logic_error("eta_basis_from_srb_minus: membership fails on " + cat.id() + " for " + t.label);
  }
  return pair;
}

/// Everything the pipeline produces for one level k.
struct BasisBundle {
  int k = 0;
  std::array<Derivation, 2> srb_plus;    // phi, degree 3k each
  std::array<Derivation, 2> srb_minus;   // psi, degree 3k each
  std::array<Derivation, 2> cat_basis;   // theta, degrees 3k+1, 3k+2
  std::array<Derivation, 2> eta_basis;   // eta,   degrees 3k+1, 3k+2
};

/// Runs the recursion once up to level k_max+1 and assembles the bundles,
/// re-validating the cross-links ([psi] = [phi] A, [eta] = [theta] T_k) on
/// the way.
inline std::vector<BasisBundle> build_all(int k_max) {
  if (k_max < 0) throw std::invalid_argument("build_all: k_max must be non-negative");
  const auto chain = srb_plus_chain(k_max + 1);
  std::vector<BasisBundle> bundles;
  bundles.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    BasisBundle b;
    b.k = k;
    b.srb_plus = derivation_pair(chain[static_cast<std::size_t>(k)], "phi", k);
    b.srb_minus = srb_minus_from_plus(b.srb_plus, k);
    b.cat_basis = cat_basis_from_srb_plus(b.srb_plus, k);
    const auto psi_next =
        srb_minus_from_plus(derivation_pair(chain[static_cast<std::size_t>(k) + 1], "phi", k + 1), k + 1);
    b.eta_basis = eta_basis_from_srb_minus(psi_next, k);
    const PolyMatrix theta_t = coefficient_matrix(b.cat_basis) * matrix_T(k);
    if (!(theta_t == coefficient_matrix(b.eta_basis)))
      throw std::logic_error("build_all: [eta] != [theta] T_k at level " + std::to_string(k));
    bundles.push_back(std::move(b));
  }
  return bundles;
}

}  // namespace logder
