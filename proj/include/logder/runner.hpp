#pragma once

#include "logder/invariant.hpp"
#include "logder/io.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace logder {

inline constexpr const char* kToolName = "logder";
inline constexpr const char* kToolVersion = "1.0.0";

/// D-iterate depth cap: the restriction and invariant suites apply D up to
/// k+1 times, and expression swell past this level buys nothing at desk
/// scale.
inline constexpr int kPrimitiveDepthCap = 6;

enum class Command { build, verify, certify };
enum class FamilySelection { shi, cat, both };
enum class Suite { saito, srb, weyl, swap, restriction, invariant };
enum class OutputFormat { json, text };

inline std::string to_string(FamilySelection f) {
  switch (f) {
    case FamilySelection::shi: return "shi";
    case FamilySelection::cat: return "cat";
    case FamilySelection::both: return "both";
  }
  return "?";
}

inline std::string to_string(Suite s) {
  switch (s) {
    case Suite::saito: return "saito";
    case Suite::srb: return "srb";
    case Suite::weyl: return "weyl";
    case Suite::swap: return "swap";
    case Suite::restriction: return "restriction";
    case Suite::invariant: return "invariant";
  }
  return "?";
}

inline std::string to_string(Command c) {
  switch (c) {
    case Command::build: return "build";
    case Command::verify: return "verify";
    case Command::certify: return "certify";
  }
  return "?";
}

inline std::optional<FamilySelection> parse_family(const std::string& s) {
  if (s == "shi") return FamilySelection::shi;
  if (s == "cat") return FamilySelection::cat;
  if (s == "both") return FamilySelection::both;
  return std::nullopt;
}

inline std::optional<Suite> parse_suite(const std::string& s) {
  if (s == "saito") return Suite::saito;
  if (s == "srb") return Suite::srb;
  if (s == "weyl") return Suite::weyl;
  if (s == "swap") return Suite::swap;
  if (s == "restriction") return Suite::restriction;
  if (s == "invariant") return Suite::invariant;
  return std::nullopt;
}

inline const std::set<Suite>& all_suites() {
  static const std::set<Suite> all = {Suite::saito,  Suite::srb,         Suite::weyl,
                                      Suite::swap,   Suite::restriction, Suite::invariant};
  return all;
}

struct RunConfig {
  Command command = Command::verify;
  int k = 0;                                   // build / certify level
  int k_max = 4;                               // verify range 0..k_max
  FamilySelection family = FamilySelection::both;
  std::set<Suite> suites = all_suites();
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out_path;
  int k_cap = 8;
};

/// One verification record; `detail` carries the witness or constant.
struct Record {
  std::string suite;
  std::string name;
  int k = 0;
  bool pass = false;
  std::string detail;
  double wall_ms = 0.0;
};

struct Report {
  std::vector<Record> records;
  bool overall_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
};

namespace detail {

class RecordSink {
 public:
  explicit RecordSink(Report& report) : report_(report) {}

  /// Runs `body` (returning pass/detail) under a wall clock; exceptions
  /// become failing records rather than aborting the whole run.
  void timed(const std::string& suite, const std::string& name, int k,
             const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Record rec;
    rec.suite = suite;
    rec.name = name;
    rec.k = k;
    try {
      auto [pass, detail_text] = body();
      rec.pass = pass;
      rec.detail = std::move(detail_text);
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.detail = std::string("exception: ") + e.what();
    }
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.records.push_back(std::move(rec));
  }

 private:
  Report& report_;
};

inline std::string degrees_text(const std::array<int, 3>& d) {
  return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

inline std::pair<bool, std::string> saito_record(const std::array<Derivation, 3>& basis,
                                                 const Arrangement& arr,
                                                 const std::array<int, 3>& expected_degrees) {
  const SaitoCertificate cert = saito_check(basis, arr);
  if (!cert.pass) return {false, cert.failure};
  if (cert.degrees != expected_degrees)
    return {false, "degrees " + degrees_text(cert.degrees) + " != expected " + degrees_text(expected_degrees)};
  return {true, "c = " + rational_to_string(cert.quotient_constant) + ", degrees " + degrees_text(cert.degrees)};
}

inline void run_saito_suite(const std::vector<BasisBundle>& bundles, FamilySelection family,
                            RecordSink& sink) {
  const Derivation euler = euler_derivation();
  for (const auto& b : bundles) {
    if (family != FamilySelection::cat) {
      sink.timed("saito", "shi-basis", b.k, [&] {
        return saito_record({euler, b.srb_plus[0], b.srb_plus[1]}, build_shi_cone(b.k),
                            {1, 3 * b.k, 3 * b.k});
      });
    }
    if (family != FamilySelection::shi) {
      sink.timed("saito", "cat-basis", b.k, [&] {
        return saito_record({euler, b.cat_basis[0], b.cat_basis[1]}, build_cat_cone(b.k),
                            {1, 3 * b.k + 1, 3 * b.k + 2});
      });
    }
  }
}

inline void run_srb_suite(const std::vector<BasisBundle>& bundles, RecordSink& sink) {
  for (const auto& b : bundles) {
    const int k = b.k;
    const auto roots = RootSystemA2::simple_roots();
    const Poly kz = Rational(k) * Poly::variable(2);
    sink.timed("srb", "plus-characterization", k, [&]() -> std::pair<bool, std::string> {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          if (i == j) continue;
          if (!divexact(b.srb_plus[i].apply(roots[j] + kz), roots[j] + kz))
            return {false, "phi_" + std::to_string(i + 1) + "(a" + std::to_string(j + 1) + "+kz) not divisible"};
        }
      return {true, "phi_i(a_j + kz) in (a_j + kz)S_z for i != j"};
    });
    if (k >= 1) {
      sink.timed("srb", "minus-characterization", k, [&]() -> std::pair<bool, std::string> {
        for (std::size_t i = 0; i < 2; ++i) {
          const Poly form = roots[i] - kz;
          if (!divexact(b.srb_minus[i].c1, form) || !divexact(b.srb_minus[i].c2, form))
            return {false, "psi_" + std::to_string(i + 1) + " not in (a_i - kz)Der(S_z)"};
        }
        return {true, "psi_i in (a_i - kz)Der(S_z)"};
      });
    }
    sink.timed("srb", "a-transform-round-trip", k, [&]() -> std::pair<bool, std::string> {
      const PolyMatrix back = coefficient_matrix(b.srb_minus) * inner_product_inverse();
      if (!(back == coefficient_matrix(b.srb_plus))) return {false, "[psi]A^{-1} != [phi]"};
      return {true, "[psi]A^{-1} = [phi]"};
    });
    sink.timed("srb", "eta-equals-theta-Tk", k, [&]() -> std::pair<bool, std::string> {
      if (!(coefficient_matrix(b.cat_basis) * matrix_T(k) == coefficient_matrix(b.eta_basis)))
        return {false, "[eta] != [theta]T_k"};
      return {true, "[eta] = [theta]T_k"};
    });
  }
}

inline void run_weyl_suite(const std::vector<BasisBundle>& bundles, RecordSink& sink) {
  const std::array<GroupElement, 3> fixing = {GroupElement::s1(), GroupElement::s2(),
                                              GroupElement::tau()};
  for (const auto& b : bundles) {
    const int k = b.k;
    sink.timed("weyl", "cat-basis-invariance", k, [&]() -> std::pair<bool, std::string> {
      for (const auto& g : fixing)
        for (const auto* pair : {&b.cat_basis, &b.eta_basis})
          for (const auto& theta : *pair)
            if (!weyl_act(g, theta).equals_up_to_label(theta))
              return {false, g.name + " moves " + theta.label};
      return {true, "theta_i, eta_i fixed by s1, s2, tau"};
    });
    sink.timed("weyl", "reflection-fixes-other-phi", k, [&]() -> std::pair<bool, std::string> {
      const std::array<GroupElement, 2> s = {GroupElement::s1(), GroupElement::s2()};
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          if (i == j) continue;
          if (!weyl_act(s[i], b.srb_plus[j]).equals_up_to_label(b.srb_plus[j]))
            return {false, s[i].name + " moves " + b.srb_plus[j].label};
        }
      return {true, "s_i phi_j = phi_j for i != j"};
    });
    sink.timed("weyl", "reflection-psi-identity", k, [&]() -> std::pair<bool, std::string> {
      const std::array<GroupElement, 2> s = {GroupElement::s1(), GroupElement::s2()};
      const auto roots = RootSystemA2::simple_roots();
      const Poly kz = Rational(k) * Poly::variable(2);
      for (std::size_t i = 0; i < 2; ++i) {
        const Poly form = roots[i] - kz;
        const Derivation lhs = form * weyl_act(s[i], b.srb_minus[i]);
        const Derivation rhs = s[i].act(form) * b.srb_minus[i];
        if (!lhs.equals_up_to_label(rhs))
          return {false, "(a_i - kz) s_i(psi_i) != s_i(a_i - kz) psi_i for i = " + std::to_string(i + 1)};
      }
      return {true, "(a_i - kz) s_i(psi_i) = s_i(a_i - kz) psi_i"};
    });
  }
}

inline void run_swap_suite(const std::vector<BasisBundle>& bundles, RecordSink& sink) {
  const GroupElement ts = tau_s0();
  for (const auto& b : bundles) {
    sink.timed("swap", "tau-s0-swaps-srb", b.k, [&]() -> std::pair<bool, std::string> {
      for (const auto* pair : {&b.srb_plus, &b.srb_minus}) {
        if (!weyl_act(ts, (*pair)[0]).equals_up_to_label(-(*pair)[1]))
          return {false, "tau s0 (" + (*pair)[0].label + ") != -" + (*pair)[1].label};
        if (!weyl_act(ts, (*pair)[1]).equals_up_to_label(-(*pair)[0]))
          return {false, "tau s0 (" + (*pair)[1].label + ") != -" + (*pair)[0].label};
      }
      return {true, "tau s0 swaps phi_1 <-> -phi_2 and psi_1 <-> -psi_2"};
    });
  }
}

inline void run_restriction_suite(const std::vector<BasisBundle>& bundles, RecordSink& sink) {
  for (const auto& b : bundles) {
    const int k = b.k;
    if (k <= kPrimitiveDepthCap) {
      sink.timed("restriction", "dual-path-identity", k, [&]() -> std::pair<bool, std::string> {
        const CheckReport r = verify_restriction_identity(k, coefficient_matrix(b.srb_plus));
        return {r.pass, r.detail};
      });
    }
    sink.timed("restriction", "ziegler-image", k, [&]() -> std::pair<bool, std::string> {
      const MultiplicityMap multi = weyl_multiarrangement(k);
      const std::array<Derivation, 2> restricted = {restrict_z0(b.srb_plus[0]),
                                                    restrict_z0(b.srb_plus[1])};
      for (const auto& theta : restricted) {
        const auto member = multi_membership(theta, multi);
        if (!member.pass) return {false, theta.label + " leaves D(A_Phi, 2k)"};
      }
      const Poly det = coefficient_matrix(restricted).det();
      const Poly target = RootSystemA2::weyl_defining_polynomial().pow(static_cast<std::uint32_t>(2 * k));
      const auto q = divexact(det, target);
      if (!q || !q->is_constant() || q->is_zero())
        return {false, "restricted determinant is not c * Q^{2k}"};
      return {true, "restriction lands in D(A_Phi, 2k); det = " +
                        rational_to_string(q->constant_value()) + " * Q^{2k}"};
    });
  }
}

inline void run_invariant_suite(int k_max, RecordSink& sink) {
  sink.timed("invariant", "det-M-display", 0, [&]() -> std::pair<bool, std::string> {
    const Poly a1 = Poly::variable(0), a2 = Poly::variable(1), zz = Poly::variable(2);
    for (int k = 0; k <= k_max; ++k) {
      const Poly kz = Rational(k) * zz;
      const Poly expected = Rational(-6) * ((a1 + kz) * (a2 + kz) * (a1 + a2 + kz));
      if (!(matrix_M(k).det() == expected)) return {false, "det M_k mismatch at k = " + std::to_string(k)};
    }
    return {true, "det M_k = -6(a1+kz)(a2+kz)(a1+a2+kz) for k = 0.." + std::to_string(k_max)};
  });
  sink.timed("invariant", "N-flip-transpose", 0, [&]() -> std::pair<bool, std::string> {
    const Poly a1 = Poly::variable(0), a2 = Poly::variable(1), zz = Poly::variable(2);
    for (int k = 0; k <= k_max + 1; ++k) {
      const PolyMatrix n = matrix_N(k);  // throws if the display deviates from the flip-transpose
      const Poly kz = Rational(k) * zz;
      const Poly expected = Rational(6) * ((a1 - kz) * (a2 - kz) * (a1 + a2 - kz));
      if (!(n.det() == expected)) return {false, "det N_k mismatch at k = " + std::to_string(k)};
    }
    return {true, "N_k = swap M_k^T|_{z->-z}; det N_k = 6(a1-kz)(a2-kz)(a1+a2-kz)"};
  });
  sink.timed("invariant", "B-display", 0, [&]() -> std::pair<bool, std::string> {
    matrix_B();  // throws on deviation from [[0,2],[1,0]]
    return {true, "B = J^T A D[J] = [[0,2],[1,0]]"};
  });
  sink.timed("invariant", "Bk-display", 0, [&]() -> std::pair<bool, std::string> {
    for (int k = 1; k <= 6; ++k) {
      const PolyMatrix expected{{Poly(0), Poly(3 * k - 1)}, {Poly(3 * k - 2), Poly(0)}};
      if (!(matrix_Bk(k) == expected)) return {false, "B^(k) mismatch at k = " + std::to_string(k)};
    }
    return {true, "B^(k) = [[0,3k-1],[3k-2,0]] for k = 1..6"};
  });
  sink.timed("invariant", "DJ-display", 0, [&]() -> std::pair<bool, std::string> {
    matrix_DJ();  // throws on deviation from the closed form
    return {true, "D[J] matches (1/(18Q))[[9a2, 4a2(2a1+a2)],[-9a1, 4a1(a1+2a2)]]"};
  });
  sink.timed("invariant", "primitive-normalization", 0, [&]() -> std::pair<bool, std::string> {
    const PrimitiveDerivation d;  // throws unless D(P1) = 0 and D(P2) = 1/3
    const auto inv = basic_invariants();
    const bool ok = d.apply(RatFunc(inv.p1)) == RatFunc(0) &&
                    d.apply(RatFunc(inv.p2)) == RatFunc(make_rational(1, 3));
    return {ok, "D(P1) = 0 and D(P2) = 1/3"};
  });
  for (int k = 0; k <= k_max; ++k) {
    sink.timed("invariant", "Tk-closed-form", k, [&, k]() -> std::pair<bool, std::string> {
      const CheckReport r = verify_Tk_closed_form(k);
      return {r.pass, r.detail};
    });
  }
  for (int k = 0; k + 1 <= std::min(k_max + 1, kPrimitiveDepthCap - 1); ++k) {
    sink.timed("invariant", "R-recurrence", k, [&, k]() -> std::pair<bool, std::string> {
      const RatMatrix lhs = inverse2(matrix_R(k)) * matrix_R(k + 1);
      const PolyMatrix j = jacobian_basic_invariants();
      const RatMatrix rhs = to_rat(j) * inverse2(matrix_Bk(k + 1)) *
                            to_rat(j.transpose() * inner_product_matrix());
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
          if (!(lhs.at(r, c) == rhs.at(r, c)))
            return {false, "R_{2k}^{-1} R_{2k+2} != J (B^(k+1))^{-1} J^T A at k = " + std::to_string(k)};
      return {true, "R_{2k}^{-1} R_{2k+2} = J (B^(k+1))^{-1} J^T A"};
    });
  }
}

}  // namespace detail

struct RunResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

inline std::optional<std::string> validate(const RunConfig& cfg) {
  if (cfg.k_cap < 0) return "k-cap must be non-negative";
  switch (cfg.command) {
    case Command::build:
    case Command::certify:
      if (cfg.k < 0) return "k must be non-negative";
      if (cfg.k > cfg.k_cap)
        return "k = " + std::to_string(cfg.k) + " exceeds the cap " + std::to_string(cfg.k_cap);
      break;
    case Command::verify:
      if (cfg.k_max < 0) return "k-max must be non-negative";
      if (cfg.k_max > cfg.k_cap)
        return "k-max = " + std::to_string(cfg.k_max) + " exceeds the cap " + std::to_string(cfg.k_cap);
      if (cfg.suites.empty()) return "verify requires a non-empty suite selection";
      break;
  }
  return std::nullopt;
}

inline json config_to_json(const RunConfig& cfg) {
  json suites = json::array();
  for (const Suite s : cfg.suites) suites.push_back(to_string(s));
  json j{{"command", to_string(cfg.command)},
         {"family", to_string(cfg.family)},
         {"format", cfg.format == OutputFormat::json ? "json" : "text"},
         {"k_cap", cfg.k_cap}};
  if (cfg.command == Command::verify) {
    j["k_max"] = cfg.k_max;
    j["suites"] = suites;
  } else {
    j["k"] = cfg.k;
  }
  return j;
}

inline json report_to_json(const RunConfig& cfg, const Report& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back(json{{"suite", r.suite},
                           {"name", r.name},
                           {"k", r.k},
                           {"verdict", r.pass ? "pass" : "fail"},
                           {"detail", r.detail},
                           {"wall_ms", r.wall_ms}});
  }
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"config", config_to_json(cfg)},
              {"records", records},
              {"overall", report.overall_pass() ? "pass" : "fail"}};
}

inline std::string report_to_text(const RunConfig& cfg, const Report& report) {
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << " " << to_string(cfg.command)
      << " k-max=" << cfg.k_max << " family=" << to_string(cfg.family) << "\n";
  for (const auto& r : report.records) {
    out << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.suite << "/" << r.name << " k=" << r.k
        << "  " << r.detail << "  (" << r.wall_ms << " ms)\n";
  }
  out << "overall: " << (report.overall_pass() ? "pass" : "FAIL") << "\n";
  return out.str();
}

/// Builds the level-k bundle and serializes the requested bases.
inline RunResult run_build(const RunConfig& cfg) {
  const BasisBundle bundle = build_all(cfg.k).back();
  RunResult res;
  if (cfg.format == OutputFormat::json) {
    json out{{"tool", kToolName}, {"version", kToolVersion}, {"config", config_to_json(cfg)}};
    json content{{"k", bundle.k}, {"euler", derivation_to_json(euler_derivation())}};
    const auto pair_json = [](const std::array<Derivation, 2>& pair) {
      return json::array({derivation_to_json(pair[0]), derivation_to_json(pair[1])});
    };
    if (cfg.family != FamilySelection::cat) {
      content["srb_plus"] = pair_json(bundle.srb_plus);
      content["srb_minus"] = pair_json(bundle.srb_minus);
    }
    if (cfg.family != FamilySelection::shi) {
      content["cat_basis"] = pair_json(bundle.cat_basis);
      content["eta_basis"] = pair_json(bundle.eta_basis);
    }
    out["bundle"] = content;
    res.output = out.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << kToolName << " " << kToolVersion << " build k=" << bundle.k
        << " family=" << to_string(cfg.family) << "\n";
    out << derivation_to_text(euler_derivation()) << "\n";
    if (cfg.family != FamilySelection::cat)
      for (const auto* pair : {&bundle.srb_plus, &bundle.srb_minus})
        for (const auto& d : *pair) out << derivation_to_text(d) << "\n";
    if (cfg.family != FamilySelection::shi)
      for (const auto* pair : {&bundle.cat_basis, &bundle.eta_basis})
        for (const auto& d : *pair) out << derivation_to_text(d) << "\n";
    res.output = out.str();
  }
  return res;
}

inline RunResult run_verify(const RunConfig& cfg) {
  Report report;
  detail::RecordSink sink(report);
  const std::vector<BasisBundle> bundles = build_all(cfg.k_max);
  if (cfg.suites.contains(Suite::saito)) detail::run_saito_suite(bundles, cfg.family, sink);
  if (cfg.suites.contains(Suite::srb)) detail::run_srb_suite(bundles, sink);
  if (cfg.suites.contains(Suite::weyl)) detail::run_weyl_suite(bundles, sink);
  if (cfg.suites.contains(Suite::swap)) detail::run_swap_suite(bundles, sink);
  if (cfg.suites.contains(Suite::restriction)) detail::run_restriction_suite(bundles, sink);
  if (cfg.suites.contains(Suite::invariant)) detail::run_invariant_suite(cfg.k_max, sink);
  RunResult res;
  res.output = cfg.format == OutputFormat::json ? report_to_json(cfg, report).dump(2) + "\n"
                                                : report_to_text(cfg, report);
  res.exit_code = report.overall_pass() ? 0 : 1;
  return res;
}

/// Certificate with per-hyperplane quotients of the determinant, so each
/// divisibility claim can be rechecked independently.
inline json certify_one(const std::array<Derivation, 3>& basis, const Arrangement& arr) {
  const SaitoCertificate cert = saito_check(basis, arr);
  json j = certificate_to_json(cert);
  json quotients = json::array();
  if (cert.pass) {
    for (const auto& h : arr.hyperplanes()) {
      const auto q = divexact(cert.determinant, h.form);
      quotients.push_back(json{{"form", poly_to_json(h.form)},
                               {"quotient", q ? poly_to_json(*q) : json()}});
    }
  }
  j["hyperplane_quotients"] = quotients;
  j["expected_exponents"] = arr.expected_exponents();
  return j;
}

inline RunResult run_certify(const RunConfig& cfg) {
  const BasisBundle bundle = build_all(cfg.k).back();
  const Derivation euler = euler_derivation();
  std::vector<json> certs;
  bool all_pass = true;
  if (cfg.family != FamilySelection::cat) {
    certs.push_back(certify_one({euler, bundle.srb_plus[0], bundle.srb_plus[1]}, build_shi_cone(cfg.k)));
    all_pass = all_pass && certs.back().at("verdict") == "pass";
  }
  if (cfg.family != FamilySelection::shi) {
    certs.push_back(certify_one({euler, bundle.cat_basis[0], bundle.cat_basis[1]}, build_cat_cone(cfg.k)));
    all_pass = all_pass && certs.back().at("verdict") == "pass";
  }
  RunResult res;
  if (cfg.format == OutputFormat::json) {
    json out{{"tool", kToolName},
             {"version", kToolVersion},
             {"config", config_to_json(cfg)},
             {"bundle", bundle_to_json(bundle)},
             {"certificates", certs},
             {"overall", all_pass ? "pass" : "fail"}};
    res.output = out.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << kToolName << " " << kToolVersion << " certify k=" << cfg.k << "\n";
    for (const auto& c : certs) {
      out << c.at("arrangement").get<std::string>() << ": " << c.at("verdict").get<std::string>();
      if (c.contains("c")) out << " (c = " << c.at("c").get<std::string>() << ")";
      const auto& d = c.at("degrees");
      out << " degrees (" << d.at(0).get<int>() << "," << d.at(1).get<int>() << ","
          << d.at(2).get<int>() << ")\n";
    }
    out << "overall: " << (all_pass ? "pass" : "FAIL") << "\n";
    res.output = out.str();
  }
  res.exit_code = all_pass ? 0 : 1;
  return res;
}

/// Dispatches a validated config; exit code 2 flags an invalid config, 1 an
/// internal failure or failed verification, 0 success.
inline RunResult run(const RunConfig& cfg) {
  if (const auto problem = validate(cfg)) return {2, "", "invalid config: " + *problem};
  try {
    switch (cfg.command) {
      case Command::build:
        return run_build(cfg);
      case Command::verify:
        return run_verify(cfg);
      case Command::certify:
        return run_certify(cfg);
    }
  } catch (const std::exception& e) {
    return {1, "", std::string("internal check failure: ") + e.what()};
  }
  return {2, "", "invalid config: unknown command"};
}

}  // namespace logder
