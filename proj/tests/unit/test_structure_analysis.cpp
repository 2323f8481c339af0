#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperherm/structure_analysis.hpp"
#include "test_support.hpp"

using namespace hyperherm;
using hyperherm::testing::make_rng;
using hyperherm::testing::random_point;
using hyperherm::testing::random_vector;

namespace {

const Parameters<Poly> kLam = symbolic_parameters();
const Poly& l1 = kLam[0];
const Poly& l2 = kLam[1];
const Poly& l3 = kLam[2];
const Poly& l4 = kLam[3];

const FamilyAnalysis<Poly>& symbolic() {
  static const auto fa = analyze_family(kLam);
  return fa;
}

template <Scalar S>
std::vector<S> combine(const std::vector<S>& a, const S& sa, const std::vector<S>& b, const S& sb) {
  std::vector<S> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sa * a[i] + sb * b[i];
  return out;
}

/// (nabla_A J) v for the bi-invariant connection nabla_A B = 1/2 [A, B].
template <Scalar S>
std::vector<S> nabla_J(const LieAlgebra<S>& alg, const Matrix<S>& J, const std::vector<S>& a, const std::vector<S>& v) {
  const S h(Rational(1, 2));
  return combine(alg.bracket(a, J.apply(v)), h, J.apply(alg.bracket(a, v)), -h);
}

/// F(x,y,z) = g((nabla_x J) y, z) from brackets alone.
template <Scalar S>
Tensor<S> structure_oracle(const LieAlgebra<S>& alg, const Matrix<S>& J, const MetricPair<S>& m) {
  Tensor<S> F = Tensor<S>::covariant(4, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto v = nabla_J(alg, J, basis_vector<S>(4, i), basis_vector<S>(4, j));
      for (std::size_t k = 0; k < 4; ++k) F.at({i, j, k}) = m.apply(v, basis_vector<S>(4, k));
    }
  return F;
}

/// N(X,Y) = (nabla_JX J)Y - (nabla_JY J)X - J(nabla_X J)Y + J(nabla_Y J)X, valid for torsion-free nabla.
template <Scalar S>
std::vector<S> nijenhuis_oracle(const LieAlgebra<S>& alg, const Matrix<S>& J, std::size_t i, std::size_t j) {
  const auto x = basis_vector<S>(4, i), y = basis_vector<S>(4, j);
  const S one(Rational(1));
  auto out = combine(nabla_J(alg, J, J.apply(x), y), one, nabla_J(alg, J, J.apply(y), x), -one);
  out = combine(out, one, J.apply(nabla_J(alg, J, x, y)), -one);
  return combine(out, one, J.apply(nabla_J(alg, J, y, x)), one);
}

/// sum g^ii' g^jj' g^kk' T_ijk T_i'j'k' for a diagonal metric.
Poly diagonal_norm(const Tensor<Poly>& T, const MetricPair<Poly>& m) {
  Poly sum;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        const Rational w = m.gram_inv(i, i) * m.gram_inv(j, j) * m.gram_inv(k, k);
        sum += Poly(w) * T.at({i, j, k}) * T.at({i, j, k});
      }
  return sum;
}

}  // namespace

TEST_CASE("structure tensors match the bracket oracle") {
  const auto& fa = symbolic();
  for (int a = 0; a < 3; ++a) CHECK(fa.structure.F[a] == structure_oracle(fa.family.algebra, fa.hg.J[a], fa.hg.metric));
}

TEST_CASE("selected structure tensor components") {
  const auto& F = symbolic().structure.F;
  // (F3)_211 is listed as -1/4*l1; the computation gives -l1.
  CHECK(F[2].at({1, 0, 0}) == -l1);
  CHECK(F[2].at({0, 1, 1}) == l2);
  CHECK(F[2].at({2, 0, 0}) == l4);
}

TEST_CASE("structure table audits") {
  const auto& F = symbolic().structure.F;
  const auto id = [](const Poly& p) { return p; };
  const auto a1 = audit_structure<Poly>(F[0], 1, id);
  CHECK(a1.entries.size() == 32);
  CHECK(a1.count(AuditStatus::Match) == 32);
  CHECK(a1.unlisted_nonzero.empty());
  const auto a2 = audit_structure<Poly>(F[1], 2, id);
  CHECK(a2.entries.size() == 40);
  CHECK(a2.count(AuditStatus::Match) == 40);
  CHECK(a2.unlisted_nonzero.empty());
  const auto a3 = audit_structure<Poly>(F[2], 3, id);
  CHECK(a3.entries.size() == 40);
  CHECK(a3.count(AuditStatus::Match) == 32);
  CHECK(a3.unlisted_nonzero.empty());
  for (std::size_t k = 0; k < a3.entries.size(); ++k) {
    if (a3.entries[k].status == AuditStatus::Match) continue;
    REQUIRE(a3.ratio[k].has_value());
    CHECK(*a3.ratio[k] == Rational(4));
  }
}

TEST_CASE("Lee forms") {
  const auto& fa = symbolic();
  const auto& th = fa.structure.theta;
  CHECK(th[0].at({0}) == -l4);
  CHECK(th[0].at({1}) == l3);
  CHECK(th[0].at({2}) == -l2);
  CHECK(th[0].at({3}) == l1);
  CHECK(th[1].is_zero());
  CHECK(th[2].is_zero());
  // theta(X_k) = g^ij F(X_i, X_j, X_k) for the diagonal metric.
  for (std::size_t k = 0; k < 4; ++k) {
    Poly s;
    for (std::size_t i = 0; i < 4; ++i) s += Poly(fa.hg.metric.gram_inv(i, i)) * fa.structure.F[0].at({i, i, k});
    CHECK(s == th[0].at({k}));
  }
}

TEST_CASE("exterior derivative of the Lee form") {
  const auto& fa = symbolic();
  const auto& d = fa.report.d_theta1;
  CHECK(d.at({0, 1}) == l1 * l1 + l2 * l2);
  CHECK(d.at({1, 3}) == l1 * l4 + l2 * l3);
  CHECK(d.at({2, 0}) == l1 * l4 + l2 * l3);
  CHECK(d.at({2, 3}) == -(l3 * l3) - l4 * l4);
  CHECK(d.at({0, 3}) == l1 * l3 - l2 * l4);
  CHECK(d.at({1, 2}) == l1 * l3 - l2 * l4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto br = fa.family.algebra.bracket(basis_vector<Poly>(4, i), basis_vector<Poly>(4, j));
      Poly v;
      for (std::size_t k = 0; k < 4; ++k) v -= br[k] * fa.structure.theta[0].at({k});
      CHECK(d.at({i, j}) == v);
    }
}

TEST_CASE("linking and slot identities") {
  const auto& fa = symbolic();
  CHECK_FALSE(linking_identity_violation(fa.structure.F, fa.hg.J).has_value());
  CHECK_FALSE(symmetry_identity_violation(fa.structure.F, fa.hg.J).has_value());
}

TEST_CASE("linking identities at random parameters force F3 = 0 when F1 = F2 = 0") {
  auto rng = make_rng(40);
  const auto hg = family_structure<Rational>();
  const auto& [J1, J2, J3] = hg.J;
  for (int t = 0; t < 20; ++t) {
    const auto p = random_point(rng);
    const auto fa = analyze_family<Rational>({p[0], p[1], p[2], p[3]});
    const auto& F = fa.structure.F;
    CHECK_FALSE(linking_identity_violation(F, hg.J).has_value());
    // F3 is determined by F1 and F2.
    CHECK(F[2] == compose_slots(F[0], {nullptr, &J2, nullptr}) - compose_slots(F[1], {nullptr, nullptr, &J1}));
  }
  const auto flat = analyze_family<Rational>({Rational(0), Rational(0), Rational(0), Rational(0)});
  for (const auto& F : flat.structure.F) CHECK(F.is_zero());
  CHECK(flat.report.pseudo_hyper_kaehler);
  CHECK_FALSE(flat.warnings.empty());
}

TEST_CASE("class verdicts for the family") {
  const auto& r = symbolic().report;
  CHECK(r.classes[0].hermitian);
  CHECK(r.classes[0].satisfies(WClass::W4));
  CHECK_FALSE(r.classes[0].satisfies(WClass::W3));
  CHECK_FALSE(r.classes[0].satisfies(WClass::W0));
  CHECK(r.classes[0].basic_class() == WClass::W4);
  for (int a = 1; a < 3; ++a) {
    CHECK_FALSE(r.classes[a].hermitian);
    CHECK(r.classes[a].satisfies(WClass::W3));
    CHECK_FALSE(r.classes[a].satisfies(WClass::W1));
    CHECK_FALSE(r.classes[a].satisfies(WClass::W2));
    CHECK(r.classes[a].basic_class() == WClass::W3);
  }
  CHECK(r.j1_invariance);
  CHECK_FALSE(r.pseudo_hyper_kaehler);
}

TEST_CASE("Lee model tensors reproduce their Lee form") {
  auto rng = make_rng(41);
  const auto hg = family_structure<Rational>();
  const auto& m = hg.metric;
  for (int t = 0; t < 10; ++t) {
    const auto theta = Tensor<Rational>::covector(random_vector(rng, 4));
    const auto herm = lee_model_tensor(theta, hg.J[0], m, Rational(1, 2), true);
    CHECK(lee_form(herm, m) == theta);
    const auto vh = classify_hermitian(herm, lee_form(herm, m), hg.J[0], m, 1);
    CHECK(vh.satisfies(WClass::W4));
    CHECK_FALSE(vh.satisfies(WClass::W3));
    for (int a = 1; a < 3; ++a) {
      const auto nord = lee_model_tensor(theta, hg.J[a], m, Rational(1, 4), false);
      CHECK(lee_form(nord, m) == theta);
      CHECK(classify_norden(nord, lee_form(nord, m), hg.J[a], m, 1).satisfies(WClass::W1));
    }
  }
}

TEST_CASE("zero structure tensor is in every class") {
  const auto hg = family_structure<Rational>();
  const auto zero = Tensor<Rational>::covariant(4, 3);
  const auto th = Tensor<Rational>::covariant(4, 1);
  const auto v = classify_hermitian(zero, th, hg.J[0], hg.metric, 1);
  for (auto c : {WClass::W0, WClass::W1, WClass::W2, WClass::W3, WClass::W4}) CHECK(v.satisfies(c));
  CHECK_FALSE(v.basic_class().has_value());
}

TEST_CASE("Nijenhuis tensors match the connection form") {
  const auto& fa = symbolic();
  for (int a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const auto expected = nijenhuis_oracle(fa.family.algebra, fa.hg.J[a], i, j);
        for (std::size_t k = 0; k < 4; ++k) CHECK(fa.nijenhuis.N[a].at({i, j, k}) == expected[k]);
      }
  CHECK(fa.nijenhuis.N[0].is_zero());
}

TEST_CASE("norms") {
  const auto& fa = symbolic();
  const auto& r = fa.report;
  const Poly q = neutral_quadric(kLam);
  for (int a = 0; a < 3; ++a) CHECK(r.isotropic.nabla_j_norm[a] == diagonal_norm(fa.structure.F[a], fa.hg.metric));
  CHECK(r.isotropic.nabla_j_norm[0] == Rational(-2) * q);
  CHECK(r.isotropic.nabla_j_norm[1] == Rational(4) * q);
  CHECK(r.isotropic.nabla_j_norm[2] == Rational(4) * q);
  CHECK(square_norm(fa.structure.theta[0], fa.hg.metric) == -q);
  CHECK(Rational(2) * r.tau_star[0] == -square_norm(fa.structure.theta[0], fa.hg.metric));

  // The listed value is +32q; the contraction g^ij g^kl g(N(e_i,e_k), N(e_j,e_l)) gives -32q.
  CHECK(r.nijenhuis_norm[0].is_zero());
  CHECK(r.nijenhuis_norm[1] == Rational(-32) * q);
  CHECK(r.nijenhuis_norm[2] == Rational(-32) * q);
  for (int a = 1; a < 3; ++a) {
    const auto lowered = lower_index(fa.nijenhuis.N[a], 2, fa.hg.metric);
    CHECK(diagonal_norm(lowered, fa.hg.metric) == r.nijenhuis_norm[a]);
  }
}

TEST_CASE("isotropic flags at sample parameters") {
  const auto iso = analyze_family<Rational>({Rational(1), Rational(2), Rational(2), Rational(1)});
  CHECK(iso.report.tau.is_zero());
  CHECK(iso.report.isotropic.isotropic_hyper);
  CHECK(iso.report.nijenhuis_norm[1].is_zero());
  const auto non = analyze_family<Rational>({Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(non.report.tau == Rational(-3, 2));
  for (bool f : non.report.isotropic.isotropic) CHECK_FALSE(f);
  CHECK_FALSE(non.report.isotropic.isotropic_hyper);
}

TEST_CASE("isotropic Kaehler for one structure implies all three") {
  auto rng = make_rng(42);
  for (int t = 0; t < 30; ++t) {
    // Points on the neutral quadric: l1 = l3, l2 = l4 scaled independently.
    auto p = random_point(rng);
    if (t % 2 == 0) {
      p[2] = p[0];
      p[3] = p[1];
    }
    const auto fa = analyze_family<Rational>({p[0], p[1], p[2], p[3]});
    const auto& iso = fa.report.isotropic.isotropic;
    CHECK(iso[0] == iso[1]);
    CHECK(iso[1] == iso[2]);
    CHECK(iso[0] == fa.report.tau.is_zero());
  }
}
