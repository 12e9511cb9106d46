#pragma once

#include "logder/construction.hpp"

#include <json.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace logder {

using nlohmann::json;

// JSON conventions: a polynomial is a list of [e1, e2, ez, "num/den"]
// records in the fixed monomial order; rationals are decimal-free strings;
// a derivation is an object with keys d_a1, d_a2, d_z. Stable key and term
// order keeps identical inputs byte-identical.

inline json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back(json::array({m.e[0], m.e[1], m.e[2], rational_to_string(c)}));
  return terms;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
  Poly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4)
      throw std::invalid_argument("poly_from_json: term must be [e1, e2, ez, coeff]");
    Monomial m;
    for (std::size_t v = 0; v < kNumVars; ++v) m.e[v] = t[v].get<std::uint32_t>();
    p += Poly::monomial(rational_from_string(t[3].get<std::string>()), m);
  }
  return p;
}

inline json derivation_to_json(const Derivation& d) {
  return json{{"label", d.label},
              {"d_a1", poly_to_json(d.c1)},
              {"d_a2", poly_to_json(d.c2)},
              {"d_z", poly_to_json(d.cz)}};
}

inline Derivation derivation_from_json(const json& j) {
  Derivation d;
  d.label = j.at("label").get<std::string>();
  d.c1 = poly_from_json(j.at("d_a1"));
  d.c2 = poly_from_json(j.at("d_a2"));
  d.cz = poly_from_json(j.at("d_z"));
  return d;
}

inline json arrangement_to_json(const Arrangement& arr) {
  json forms = json::array();
  for (const auto& h : arr.hyperplanes()) forms.push_back(poly_to_json(h.form));
  return json{{"id", arr.id()},
              {"k", arr.k()},
              {"hyperplanes", forms},
              {"expected_exponents", arr.expected_exponents()}};
}

inline json bundle_to_json(const BasisBundle& b) {
  const auto pair_json = [](const std::array<Derivation, 2>& pair) {
    return json::array({derivation_to_json(pair[0]), derivation_to_json(pair[1])});
  };
  return json{{"k", b.k},
              {"euler", derivation_to_json(euler_derivation())},
              {"srb_plus", pair_json(b.srb_plus)},
              {"srb_minus", pair_json(b.srb_minus)},
              {"cat_basis", pair_json(b.cat_basis)},
              {"eta_basis", pair_json(b.eta_basis)}};
}

inline BasisBundle bundle_from_json(const json& j) {
  const auto pair_from = [](const json& a) {
    return std::array<Derivation, 2>{derivation_from_json(a.at(0)), derivation_from_json(a.at(1))};
  };
  BasisBundle b;
  b.k = j.at("k").get<int>();
  b.srb_plus = pair_from(j.at("srb_plus"));
  b.srb_minus = pair_from(j.at("srb_minus"));
  b.cat_basis = pair_from(j.at("cat_basis"));
  b.eta_basis = pair_from(j.at("eta_basis"));
  return b;
}

inline json certificate_to_json(const SaitoCertificate& cert) {
  json j{{"arrangement", cert.arrangement_id},
         {"labels", cert.labels},
         {"degrees", cert.degrees},
         {"verdict", cert.pass ? "pass" : "fail"}};
  j["determinant"] = poly_to_json(cert.determinant);
  if (cert.pass) j["c"] = rational_to_string(cert.quotient_constant);
  if (!cert.failure.empty()) j["failure"] = cert.failure;
  if (cert.witness) j["witness"] = poly_to_json(*cert.witness);
  return j;
}

/// Human-readable rendering in the paper's alpha-notation.
inline std::string poly_to_text(const Poly& p) { return poly_to_string(p, {"α1", "α2", "z"}); }

inline std::string derivation_to_text(const Derivation& d) {
  std::string out = d.label.empty() ? "θ" : d.label;
  out += " = (" + poly_to_text(d.c1) + ")∂1 + (" + poly_to_text(d.c2) + ")∂2";
  if (!d.cz.is_zero()) out += " + (" + poly_to_text(d.cz) + ")∂z";
  return out;
}

}  // namespace logder
