#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hyperherm/lie_family.hpp"
#include "hyperherm/report.hpp"
#include "hyperherm/structure_analysis.hpp"
#include "verify_baseline.hpp"

namespace hyperherm::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Flag: return "FLAG";
    case Status::Fail: return "FAIL";
  }
  return "?";
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<VerifyItem>& out) : out_(out) {}

  void suite(std::string name) { suite_ = std::move(name); }

  void check(std::string name, bool ok, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
  }

  void add(std::string name, Status s, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), s, std::move(detail)});
  }

 private:
  std::vector<VerifyItem>& out_;
  std::string suite_;
};

std::string violation_text(const std::optional<std::string>& v) { return v ? *v : std::string{}; }

template <std::size_t N>
std::string tuple_text(const std::optional<std::array<std::size_t, N>>& v) {
  if (!v) return {};
  std::string s = "at (";
  for (std::size_t i = 0; i < N; ++i) s += (i ? "," : "") + std::to_string((*v)[i] + 1);
  return s + ")";
}

std::string idx_text(const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) s += std::to_string(i);
  return s;
}

Status status_of(AuditStatus s) {
  switch (s) {
    case AuditStatus::Match: return Status::Pass;
    case AuditStatus::SignFlip: return Status::Flag;
    case AuditStatus::Mismatch: return Status::Fail;
  }
  return Status::Fail;
}

/// Lazily computed symbolic analysis shared by the family suites.
const FamilyAnalysis<Poly>& symbolic_analysis() {
  static const FamilyAnalysis<Poly> fa = analyze_family(symbolic_parameters());
  return fa;
}

Poly quadric() { return neutral_quadric(symbolic_parameters()); }

void suite_quaternion(Recorder& r) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto h = standard_structure<Rational>(n);
    const auto pack = standard_metric(h);
    const std::string sfx = "n=" + std::to_string(n);
    const auto q = quaternion_identity_violation(h.J);
    r.check("quaternion-relations " + sfx, !q, violation_text(q));
    const auto m = pseudo_hermitian_metric_violation(h.J, pack.g.gram);
    r.check("metric-compatibility " + sfx, !m, violation_text(m));
    r.check("g-in-B1 " + sfx, hermitian_type(pack.g, h).in_class[1], hermitian_type(pack.g, h).label());
    r.check("phi-in-B0 " + sfx, hermitian_type(pack.phi, h).in_class[0], hermitian_type(pack.phi, h).label());
  }
  const auto hg = family_structure<Rational>();
  const auto q = quaternion_identity_violation(hg.J);
  r.check("quaternion-relations family", !q, violation_text(q));
  const auto m = pseudo_hermitian_metric_violation(hg.J, hg.metric.gram);
  r.check("metric-compatibility family", !m, violation_text(m));
}

void suite_projectors(Recorder& r) {
  std::mt19937_64 rng(20240611);
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto h = standard_structure<Rational>(n);
    const Matrix<Rational> zero(4 * n);
    std::string failure;
    constexpr int kForms = 100;
    for (int t = 0; t < kForms && failure.empty(); ++t) {
      const auto f = random_form(n, rng);
      std::array<BilinearForm<Rational>, 4> parts;
      Matrix<Rational> sum(4 * n);
      for (int a = 0; a < 4; ++a) {
        parts[a] = project(f, h, a);
        sum = sum + parts[a].gram;
      }
      if (!(sum == f.gram)) failure = "sum of projections differs from the form";
      for (int a = 0; a < 4 && failure.empty(); ++a) {
        if (!(project(parts[a], h, a) == parts[a])) failure = "projector " + std::to_string(a) + " not idempotent";
        for (int b = 0; b < 4 && failure.empty(); ++b)
          if (b != a && !(project(parts[a], h, b).gram == zero))
            failure = "projectors " + std::to_string(b) + "," + std::to_string(a) + " do not annihilate";
        if (failure.empty() && !hermitian_type(parts[a], h).in_class[a])
          failure = "image of projector " + std::to_string(a) + " not in B" + std::to_string(a);
      }
      if (!failure.empty()) failure += " (form #" + std::to_string(t) + ")";
    }
    r.check("decomposition n=" + std::to_string(n), failure.empty(),
            failure.empty() ? std::to_string(kForms) + " random forms" : failure);
  }
}

void suite_structural_group(Recorder& r) {
  std::mt19937_64 rng(7);
  const std::array<std::pair<Rational, Rational>, 5> unit = {{{1, 0}, {0, -1}, {Rational(3, 5), Rational(4, 5)},
                                                              {Rational(-5, 13), Rational(12, 13)},
                                                              {Rational(8, 17), Rational(-15, 17)}}};
  auto small = [&] { return Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1); };
  std::size_t members = 0, non_members = 0, disagreements = 0;
  constexpr int kBlocks = 200;
  for (int t = 0; t < kBlocks; ++t) {
    Rational a, b, c, d;
    if (rng() % 2 == 0) {
      std::tie(a, b) = unit[rng() % unit.size()];
    } else {
      a = small();
      b = small();
    }
    c = rng() % 3 == 0 ? small() : Rational(0);
    d = rng() % 3 == 0 ? small() : Rational(0);
    const bool expected = a * a + b * b == Rational(1) && c.is_zero() && d.is_zero();
    const bool got = structural_group_member(quaternion_block(a, b, c, d)).member();
    disagreements += expected != got;
    (expected ? members : non_members) += 1;
  }
  r.check("criterion", disagreements == 0,
          std::to_string(kBlocks) + " blocks, " + std::to_string(disagreements) + " disagreements");
  r.check("both-directions", members > 0 && non_members > 0,
          std::to_string(members) + " members, " + std::to_string(non_members) + " non-members");
}

void suite_jacobi(Recorder& r) {
  const auto& alg = symbolic_analysis().family.algebra;
  const auto bad = jacobi_violation(alg);
  r.check("jacobi-symbolic", !bad, tuple_text(bad));
  r.check("antisymmetry", is_antisymmetric(alg));
}

void suite_connection(Recorder& r) {
  const auto& fa = symbolic_analysis();
  const auto& alg = fa.family.algebra;
  const auto& m = fa.hg.metric;
  const auto inv = invariance_violation(alg, m);
  r.check("ad-invariance", !inv, tuple_text(inv));
  r.check("koszul-equals-half-bracket", koszul_connection(alg, m) == fa.gamma);
  const auto mc = metric_compatibility_violation(fa.gamma, m);
  r.check("metric-compatibility", !mc, tuple_text(mc));
  const auto tv = torsion_violation(fa.gamma, alg);
  r.check("torsion-free", !tv, tuple_text(tv));
}

void suite_riemann(Recorder& r) {
  const auto bad = riemann_symmetry_violation(symbolic_analysis().curvature.R);
  r.check("symmetries", !bad, violation_text(bad));
}

void suite_curvature_table(Recorder& r) {
  const auto& fa = symbolic_analysis();
  const auto audit = audit_curvature<Poly>(fa.curvature, fa.hg.metric, symbolic_parameters(),
                                           [](const Poly& p) { return p; });
  for (const auto& e : audit.entries) {
    std::string detail = "computed " + e.computed.to_string();
    if (e.status != AuditStatus::Match) detail += ", listed " + e.listed.to_string();
    r.add("R" + idx_text(e.index), status_of(e.status), detail);
  }
  std::string unlisted;
  for (const auto& [idx, v] : audit.unlisted_nonzero) {
    unlisted += unlisted.empty() ? "R" : ", R";
    for (auto i : idx) unlisted += std::to_string(i + 1);
  }
  r.check("unlisted-zero", unlisted.empty(), unlisted);
  const bool consistent =
      audit.tau_computed == audit.tau_closed_form && audit.tau_from_listed_with_flips == audit.tau_closed_form;
  r.check("tau-consistency", consistent,
          "listed table gives tau = " + audit.tau_from_listed.to_string() + "; with flips corrected " +
              audit.tau_from_listed_with_flips.to_string());
}

void suite_scalar_curvature(Recorder& r) {
  const auto& fa = symbolic_analysis();
  const Poly expected = scalar_curvature_closed_form(symbolic_parameters());
  r.check("tau", fa.curvature.tau == expected, "tau = " + fa.curvature.tau.to_string());
}

void suite_structure_tables(Recorder& r) {
  const auto& fa = symbolic_analysis();
  for (int a = 0; a < 3; ++a) {
    const auto audit = audit_structure<Poly>(fa.structure.F[a], a + 1, [](const Poly& p) { return p; });
    const std::string name = "F" + std::to_string(a + 1);
    std::string detail;
    bool hard_failure = false;
    for (std::size_t k = 0; k < audit.entries.size(); ++k) {
      const auto& e = audit.entries[k];
      if (e.status == AuditStatus::Match) continue;
      if (!detail.empty()) detail += "; ";
      detail += name + "_" + idx_text(e.index) + " computed " + e.computed.to_string() + ", listed " +
                e.listed.to_string();
      if (audit.ratio[k]) detail += " (ratio " + audit.ratio[k]->to_string() + ")";
      else hard_failure = true;
    }
    for (const auto& [idx, v] : audit.unlisted_nonzero) {
      if (!detail.empty()) detail += "; ";
      detail += "unlisted " + name + "_" + std::to_string(idx[0] + 1) + std::to_string(idx[1] + 1) +
                std::to_string(idx[2] + 1) + " = " + v.to_string();
      hard_failure = true;
    }
    const std::size_t matched = audit.count(AuditStatus::Match);
    const Status s = detail.empty() ? Status::Pass : hard_failure ? Status::Fail : Status::Flag;
    r.add(name + "-table", s,
          std::to_string(matched) + "/" + std::to_string(audit.entries.size()) + " listed entries match" +
              (detail.empty() ? "" : ": " + detail));
  }
}

void suite_lee_forms(Recorder& r) {
  const auto& fa = symbolic_analysis();
  const auto lam = symbolic_parameters();
  const auto& [l1, l2, l3, l4] = lam;
  const auto& th = fa.structure.theta;
  const std::array<Poly, 4> expected = {-l4, l3, -l2, l1};
  bool ok = true;
  for (std::size_t k = 0; k < 4; ++k) ok = ok && th[0].at({k}) == expected[k];
  std::string got;
  for (std::size_t k = 0; k < 4; ++k) got += (k ? ", " : "") + th[0].at({k}).to_string();
  r.check("theta1", ok, "(" + got + ")");
  r.check("theta2-zero", th[1].is_zero());
  r.check("theta3-zero", th[2].is_zero());

  const auto& d = fa.report.d_theta1;
  struct Entry {
    std::size_t i, j;
    Poly value;
  };
  const std::vector<Entry> table = {
      {0, 1, l1 * l1 + l2 * l2},  {1, 3, l1 * l4 + l2 * l3}, {2, 0, l1 * l4 + l2 * l3},
      {2, 3, -l3 * l3 - l4 * l4}, {0, 3, l1 * l3 - l2 * l4}, {1, 2, l1 * l3 - l2 * l4},
  };
  for (const auto& e : table) {
    const Poly& v = d.at({e.i, e.j});
    r.check("d-theta1(X" + std::to_string(e.i + 1) + ",X" + std::to_string(e.j + 1) + ")", v == e.value,
            "computed " + v.to_string());
  }
  bool skew = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) skew = skew && d.at({i, j}) == -d.at({j, i});
  r.check("d-theta1-skew", skew);
}

void suite_identities(Recorder& r) {
  const auto& fa = symbolic_analysis();
  const auto link = linking_identity_violation(fa.structure.F, fa.hg.J);
  r.check("linking", !link, violation_text(link));
  const auto sym = symmetry_identity_violation(fa.structure.F, fa.hg.J);
  r.check("slot-symmetries", !sym, violation_text(sym));
}

void suite_classes(Recorder& r) {
  const auto& rep = symbolic_analysis().report;
  auto sat = [](const ClassVerdict& v) {
    std::string s;
    for (WClass c : v.satisfied()) s += (s.empty() ? "" : ",") + to_string(c);
    return "satisfied {" + s + "}";
  };
  r.check("J1-W4", rep.classes[0].satisfies(WClass::W4) && !rep.classes[0].satisfies(WClass::W0), sat(rep.classes[0]));
  r.check("J2-W3", rep.classes[1].satisfies(WClass::W3) && !rep.classes[1].satisfies(WClass::W0), sat(rep.classes[1]));
  r.check("J3-W3", rep.classes[2].satisfies(WClass::W3) && !rep.classes[2].satisfies(WClass::W0), sat(rep.classes[2]));
  r.check("not-hyper-kaehler", !rep.pseudo_hyper_kaehler);
  r.check("J1-invariance", rep.j1_invariance);
  r.check("N1-zero", symbolic_analysis().nijenhuis.N[0].is_zero());
}

void suite_norms(Recorder& r) {
  const auto& fa = symbolic_analysis();
  const auto& rep = fa.report;
  const auto lam = symbolic_parameters();
  const auto& [l1, l2, l3, l4] = lam;
  const Poly q = quadric();
  const Poly four_q = Poly(Rational(4)) * q;
  const auto& nj = rep.isotropic.nabla_j_norm;
  r.check("nablaJ", Poly(Rational(-2)) * nj[0] == four_q && nj[1] == four_q && nj[2] == four_q,
          "(" + nj[0].to_string() + ", " + nj[1].to_string() + ", " + nj[2].to_string() + ")");
  const Poly theta_norm = square_norm(fa.structure.theta[0], fa.hg.metric);
  r.check("tau-star1-theta1", Poly(Rational(2)) * rep.tau_star[0] == -theta_norm && -theta_norm == q,
          "tau*1 = " + rep.tau_star[0].to_string() + ", ||theta1|| = " + theta_norm.to_string());
  r.check("tau-star2", rep.tau_star[1] == l1 * l3 + l2 * l4, rep.tau_star[1].to_string());
  r.check("tau-star3", rep.tau_star[2] == l1 * l4 - l2 * l3, rep.tau_star[2].to_string());

  const Poly listed = Poly(Rational(32)) * q;
  const auto& nn = rep.nijenhuis_norm;
  r.check("N1-norm", nn[0].is_zero(), nn[0].to_string());
  for (int a = 1; a < 3; ++a) {
    const auto factor = nn[a].ratio_to(listed);
    std::string detail = "||N" + std::to_string(a + 1) + "|| = " + nn[a].to_string();
    if (factor && *factor != Rational(1))
      detail += "; constant factor " + factor->to_string() + " relative to the listed 32*(l1^2 + l2^2 - l3^2 - l4^2)";
    r.check("N" + std::to_string(a + 1) + "-norm", factor.has_value() && !factor->is_zero(), detail);
  }
}

void suite_isotropic(Recorder& r) {
  {
    const ParameterPoint p = {Rational(1), Rational(2), Rational(2), Rational(1)};
    const auto fa = analyze_family<Rational>(p);
    const auto& iso = fa.report.isotropic;
    r.check("lambda=(1,2,2,1)",
            fa.report.tau.is_zero() && iso.isotropic[0] && iso.isotropic[1] && iso.isotropic[2] && iso.isotropic_hyper,
            "tau = " + fa.report.tau.to_string());
  }
  {
    const ParameterPoint p = {Rational(1), Rational(0), Rational(0), Rational(0)};
    const auto fa = analyze_family<Rational>(p);
    const auto& iso = fa.report.isotropic;
    r.check("lambda=(1,0,0,0)",
            fa.report.tau == Rational(-3, 2) && !iso.isotropic[0] && !iso.isotropic[1] && !iso.isotropic[2] &&
                !iso.isotropic_hyper,
            "tau = " + fa.report.tau.to_string());
  }
  const auto& rep = symbolic_analysis().report;
  const Poly q = quadric();
  const auto t = rep.tau.ratio_to(q);
  const auto n2 = rep.nijenhuis_norm[1].ratio_to(q);
  const auto nj = rep.isotropic.nabla_j_norm[1].ratio_to(q);
  const bool ok = t && n2 && nj && !t->is_zero() && !n2->is_zero() && !nj->is_zero();
  r.check("equivalence-symbolic", ok,
          ok ? "tau, ||N2||, ||nabla J2|| = (" + t->to_string() + ", " + n2->to_string() + ", " + nj->to_string() +
                   ") * (l1^2 + l2^2 - l3^2 - l4^2)"
             : std::string("not proportional to the neutral quadric"));
}

using SuiteFn = void (*)(Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"quaternion", suite_quaternion},
      {"projectors", suite_projectors},
      {"structural-group", suite_structural_group},
      {"jacobi", suite_jacobi},
      {"connection", suite_connection},
      {"riemann-symmetries", suite_riemann},
      {"curvature-table", suite_curvature_table},
      {"scalar-curvature", suite_scalar_curvature},
      {"structure-tables", suite_structure_tables},
      {"lee-forms", suite_lee_forms},
      {"identities", suite_identities},
      {"classes", suite_classes},
      {"norms", suite_norms},
      {"isotropic", suite_isotropic},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::set<std::string> parse_baseline(std::string_view text) {
  std::set<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.insert(line.substr(b, e - b + 1));
  }
  return out;
}

std::set<std::string> default_baseline() { return parse_baseline(kVerifyBaseline); }

VerifySummary run_verify(const VerifyOptions& options) {
  const auto& known = verify_suites();
  for (const auto& s : options.skip)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw UsageError("unknown suite: " + s);

  VerifySummary summary;
  Recorder rec(summary.items);
  for (const auto& [name, fn] : suite_table()) {
    if (options.skip.contains(name)) continue;
    rec.suite(name);
    try {
      fn(rec);
    } catch (const std::exception& e) {
      rec.add("suite", Status::Fail, std::string("exception: ") + e.what());
    }
  }

  for (const auto& item : summary.items) {
    switch (item.status) {
      case Status::Pass: ++summary.passed; break;
      case Status::Flag:
        ++summary.flagged;
        if (!options.expected_flags.contains(item.key())) summary.unexpected_flags.push_back(item.key());
        break;
      case Status::Fail: ++summary.failed; break;
    }
  }
  const bool bad = summary.failed > 0 || !summary.unexpected_flags.empty() || (options.strict && summary.flagged > 0);
  summary.exit_code = bad ? kExitVerification : kExitOk;
  return summary;
}

std::string render_verify_text(const VerifySummary& summary) {
  std::ostringstream os;
  for (const auto& item : summary.items) {
    os << to_string(item.status) << "  " << item.key();
    if (!item.detail.empty()) os << "  " << item.detail;
    os << "\n";
  }
  os << "\n" << summary.passed << " passed, " << summary.flagged << " flagged, " << summary.failed << " failed\n";
  for (const auto& k : summary.unexpected_flags) os << "unexpected flag: " << k << "\n";
  return os.str();
}

Json verify_to_json(const VerifySummary& summary) {
  Json items = Json::array();
  for (const auto& item : summary.items)
    items.push_back(
        {{"suite", item.suite}, {"name", item.name}, {"status", to_string(item.status)}, {"detail", item.detail}});
  return {{"items", std::move(items)},
          {"passed", summary.passed},
          {"flagged", summary.flagged},
          {"failed", summary.failed},
          {"unexpected_flags", summary.unexpected_flags},
          {"exit_code", summary.exit_code}};
}

}  // namespace hyperherm::report
