#include "hyperherm/report.hpp"

#include <sstream>

#include "hyperherm/lie_family.hpp"
#include "hyperherm/structure_analysis.hpp"

namespace hyperherm::report {

namespace {

template <Scalar S>
Json index_json(const Index& idx) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

/// Nonzero components as [{indices: [1-based], value: "..."}].
template <Scalar S>
Json components(const Tensor<S>& t) {
  Json out = Json::array();
  for (const auto& [idx, v] : t.nonzero_entries()) {
    Json e;
    e["indices"] = index_json<S>(idx);
    e["value"] = v.to_string();
    out.push_back(std::move(e));
  }
  return out;
}

template <Scalar S>
Json triple(const std::array<S, 3>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

Json bool_triple(const std::array<bool, 3>& xs) { return Json::array({xs[0], xs[1], xs[2]}); }

Json class_json(const ClassVerdict& v) {
  Json out;
  out["classification"] = v.hermitian ? "hermitian" : "norden";
  Json sat = Json::array();
  for (WClass c : v.satisfied()) sat.push_back(to_string(c));
  out["satisfied"] = std::move(sat);
  const auto basic = v.basic_class();
  out["basic_class"] = basic ? Json(to_string(*basic)) : Json(nullptr);
  out["kaehler"] = v.satisfies(WClass::W0);
  return out;
}

template <Scalar S>
Json audit_json(const CurvatureAudit<S>& audit) {
  Json out;
  Json entries = Json::array();
  for (const auto& e : audit.entries) {
    Json j;
    j["indices"] = e.index;
    j["listed"] = e.listed.to_string();
    j["computed"] = e.computed.to_string();
    j["status"] = to_string(e.status);
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  out["summary"] = {{"listed", audit.entries.size()},
                    {"match", audit.count(AuditStatus::Match)},
                    {"sign_flip", audit.count(AuditStatus::SignFlip)},
                    {"mismatch", audit.count(AuditStatus::Mismatch)}};
  Json unlisted = Json::array();
  for (const auto& [idx, v] : audit.unlisted_nonzero)
    unlisted.push_back({{"indices", index_json<S>(idx)}, {"value", v.to_string()}});
  out["unlisted_nonzero"] = std::move(unlisted);
  out["ricci"] = components(audit.ricci);
  out["tau_consistency"] = {
      {"closed_form", audit.tau_closed_form.to_string()},
      {"from_computed", audit.tau_computed.to_string()},
      {"from_listed", audit.tau_from_listed.to_string()},
      {"from_listed_sign_flips_corrected", audit.tau_from_listed_with_flips.to_string()},
      {"computed_consistent", audit.tau_computed == audit.tau_closed_form},
      {"listed_consistent", audit.tau_from_listed == audit.tau_closed_form},
  };
  return out;
}

template <Scalar S>
Json build_report(const FamilyAnalysis<S>& fa, const CurvatureAudit<S>& audit, Mode mode) {
  const auto& r = fa.report;
  const auto& st = fa.structure;
  Json doc;

  Json lam = Json::array();
  for (const auto& l : fa.family.lambda) lam.push_back(l.to_string());
  doc["parameters"] = {{"mode", mode == Mode::Symbolic ? "symbolic" : "numeric"}, {"lambda", std::move(lam)}};
  doc["brackets"] = components(fa.family.algebra.c);
  doc["connection"] = components(fa.gamma);
  doc["curvature"] = {{"components", components(fa.curvature.R)}, {"audit", audit_json(audit)}};
  doc["scalars"] = {{"tau", r.tau.to_string()}, {"tau_star", triple(r.tau_star)}};
  doc["structure_tensors"] = {
      {"F1", components(st.F[0])},
      {"F2", components(st.F[1])},
      {"F3", components(st.F[2])},
      {"theta", {{"theta1", components(st.theta[0])}, {"theta2", components(st.theta[1])}, {"theta3", components(st.theta[2])}}},
      {"d_theta1", components(r.d_theta1)},
  };
  doc["nijenhuis"] = {
      {"components", {{"N1", components(fa.nijenhuis.N[0])}, {"N2", components(fa.nijenhuis.N[1])}, {"N3", components(fa.nijenhuis.N[2])}}},
      {"norms", triple(r.nijenhuis_norm)},
  };
  doc["norms"] = {{"nablaJ", triple(r.isotropic.nabla_j_norm)}};
  doc["classes"] = {{"J1", class_json(r.classes[0])}, {"J2", class_json(r.classes[1])}, {"J3", class_json(r.classes[2])}};
  doc["flags"] = {
      {"kaehler", bool_triple(r.kaehler)},
      {"pseudo_hyper_kaehler", r.pseudo_hyper_kaehler},
      {"isotropic", bool_triple(r.isotropic.isotropic)},
      {"isotropic_hyper", r.isotropic.isotropic_hyper},
      {"j1_invariance", r.j1_invariance},
      {"theta1_closed", r.d_theta1.is_zero()},
  };

  Json warnings = Json::array();
  for (const auto& w : fa.warnings) warnings.push_back(w);
  for (const auto& e : audit.entries) {
    if (e.status == AuditStatus::Match) continue;
    std::string idx;
    for (int i : e.index) idx += std::to_string(i);
    warnings.push_back("curvature component R" + idx + " " + to_string(e.status) + ": listed " + e.listed.to_string() +
                       ", computed " + e.computed.to_string());
  }
  doc["warnings"] = std::move(warnings);
  return doc;
}

}  // namespace

ParameterPoint parse_lambda(std::string_view text) {
  ParameterPoint out;
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (count == out.size()) throw UsageError("expected exactly 4 comma-separated parameters");
    try {
      out[count++] = Rational::parse(item);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad parameter: ") + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (count != out.size()) throw UsageError("expected exactly 4 comma-separated parameters");
  return out;
}

Json analyze(const AnalysisRequest& request) {
  if (request.mode == Mode::Symbolic) {
    const auto lam = symbolic_parameters();
    const auto fa = analyze_family(lam);
    const auto audit = audit_curvature<Poly>(fa.curvature, fa.hg.metric, lam, [](const Poly& p) { return p; });
    return build_report(fa, audit, Mode::Symbolic);
  }
  if (!request.lambda) throw UsageError("numeric mode requires concrete parameters");
  const ParameterPoint point = *request.lambda;
  const auto fa = analyze_family<Rational>(point);
  const auto audit =
      audit_curvature<Rational>(fa.curvature, fa.hg.metric, point, [&](const Poly& p) { return p.eval(point); });
  return build_report(fa, audit, Mode::Numeric);
}

std::string to_json_string(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string join_components(const Json& comps, const std::string& symbol) {
  std::ostringstream os;
  if (comps.empty()) {
    os << "    (all zero)\n";
    return os.str();
  }
  for (const auto& c : comps) {
    os << "    " << symbol << "_";
    for (const auto& i : c["indices"]) os << i.get<int>();
    os << " = " << c["value"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string join_strings(const Json& arr) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].get<std::string>();
  }
  return out;
}

std::string join_bools(const Json& arr) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].get<bool>() ? "true" : "false";
  }
  return out;
}

}  // namespace

std::string render_analysis_text(const Json& r) {
  std::ostringstream os;
  os << "mode: " << r["parameters"]["mode"].get<std::string>() << "\n";
  os << "lambda: (" << join_strings(r["parameters"]["lambda"]) << ")\n";
  os << "basis X1..X4, metric diag(1, 1, -1, -1); indices are 1-based\n\n";

  os << "brackets c(i,j,k) = X_k-component of [X_i,X_j]:\n" << join_components(r["brackets"], "c");
  os << "\nconnection Gamma(i,j,k) = X_k-component of nabla_{X_i} X_j:\n" << join_components(r["connection"], "Gamma");
  os << "\ncurvature R_ijks:\n" << join_components(r["curvature"]["components"], "R");

  const auto& audit = r["curvature"]["audit"];
  os << "\ncurvature table audit: " << audit["summary"]["match"].get<int>() << " match, "
     << audit["summary"]["sign_flip"].get<int>() << " sign-flip, " << audit["summary"]["mismatch"].get<int>()
     << " mismatch of " << audit["summary"]["listed"].get<int>() << " listed\n";
  for (const auto& e : audit["entries"]) {
    os << "    R_";
    for (const auto& i : e["indices"]) os << i.get<int>();
    os << "  " << e["status"].get<std::string>() << "  listed " << e["listed"].get<std::string>() << "  computed "
       << e["computed"].get<std::string>() << "\n";
  }
  const auto& tc = audit["tau_consistency"];
  os << "    tau closed form:                 " << tc["closed_form"].get<std::string>() << "\n";
  os << "    tau from computed R:             " << tc["from_computed"].get<std::string>() << "\n";
  os << "    tau from listed table:           " << tc["from_listed"].get<std::string>() << "\n";
  os << "    tau from table, flips corrected: " << tc["from_listed_sign_flips_corrected"].get<std::string>() << "\n";
  os << "  Ricci rho_jk = g^is R_ijks:\n" << join_components(audit["ricci"], "rho");

  os << "\ntau = " << r["scalars"]["tau"].get<std::string>() << "\n";
  os << "tau* = (" << join_strings(r["scalars"]["tau_star"]) << ")\n";

  const auto& st = r["structure_tensors"];
  for (const char* f : {"F1", "F2", "F3"}) os << "\n" << f << ":\n" << join_components(st[f], f);
  for (const char* t : {"theta1", "theta2", "theta3"}) os << "\n" << t << ":\n" << join_components(st["theta"][t], t);
  os << "\nd theta1:\n" << join_components(st["d_theta1"], "dtheta1");

  for (const char* n : {"N1", "N2", "N3"})
    os << "\n" << n << ":\n" << join_components(r["nijenhuis"]["components"][n], n);
  os << "\n||N_a||     = (" << join_strings(r["nijenhuis"]["norms"]) << ")\n";
  os << "||nabla J_a|| = (" << join_strings(r["norms"]["nablaJ"]) << ")\n";

  os << "\nclasses:\n";
  for (const char* j : {"J1", "J2", "J3"}) {
    const auto& c = r["classes"][j];
    os << "    " << j << " (" << c["classification"].get<std::string>() << "): satisfied {";
    for (std::size_t i = 0; i < c["satisfied"].size(); ++i) os << (i ? ", " : "") << c["satisfied"][i].get<std::string>();
    os << "}, basic class " << (c["basic_class"].is_null() ? "none" : c["basic_class"].get<std::string>()) << "\n";
  }

  const auto& fl = r["flags"];
  os << "\nflags:\n";
  os << "    kaehler:              " << join_bools(fl["kaehler"]) << "\n";
  os << "    pseudo_hyper_kaehler: " << (fl["pseudo_hyper_kaehler"].get<bool>() ? "true" : "false") << "\n";
  os << "    isotropic:            " << join_bools(fl["isotropic"]) << "\n";
  os << "    isotropic_hyper:      " << (fl["isotropic_hyper"].get<bool>() ? "true" : "false") << "\n";
  os << "    j1_invariance:        " << (fl["j1_invariance"].get<bool>() ? "true" : "false") << "\n";
  os << "    theta1_closed:        " << (fl["theta1_closed"].get<bool>() ? "true" : "false") << "\n";

  os << "\nwarnings:\n";
  if (r["warnings"].empty()) os << "    none\n";
  for (const auto& w : r["warnings"]) os << "    " << w.get<std::string>() << "\n";
  return os.str();
}

}  // namespace hyperherm::report
