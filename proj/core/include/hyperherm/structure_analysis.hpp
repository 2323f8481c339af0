#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperherm/lie_family.hpp"
#include "hyperherm/matrix.hpp"
#include "hyperherm/scalar.hpp"
#include "hyperherm/tensor.hpp"

namespace hyperherm {

template <Scalar S>
struct StructureTensors {
  std::array<Tensor<S>, 3> F;      ///< F_a(X_i,X_j,X_k) = g((nabla_{X_i} J_a) X_j, X_k)
  std::array<Tensor<S>, 3> theta;  ///< theta_a(X_k) = g^ij F_a(X_i,X_j,X_k)
};

/// theta(z) = g^ij F(e_i, e_j, z).
template <Scalar S>
Tensor<S> lee_form(const Tensor<S>& F, const MetricPair<S>& m) {
  return contract(m.g_inv, F, {{0, 0}, {1, 1}});
}

template <Scalar S>
Tensor<S> structure_tensor(const Connection<S>& gamma, const Matrix<S>& J, const MetricPair<S>& m) {
  const std::size_t d = gamma.dim();
  Tensor<S> F = Tensor<S>::covariant(d, 3);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // (nabla_i J) X_j = nabla_i (J X_j) - J (nabla_i X_j)
      const auto a = covariant_derivative(gamma, i, J.column(j));
      const auto b = J.apply(covariant_derivative(gamma, i, basis_vector<S>(d, j)));
      std::vector<S> v(d);
      for (std::size_t p = 0; p < d; ++p) v[p] = a[p] - b[p];
      for (std::size_t k = 0; k < d; ++k) F.at({i, j, k}) = m.apply(v, basis_vector<S>(d, k));
    }
  return F;
}

template <Scalar S>
StructureTensors<S> compute_F(const HGStructure4<S>& hg, const Connection<S>& gamma) {
  StructureTensors<S> st;
  for (int a = 0; a < 3; ++a) {
    st.F[a] = structure_tensor(gamma, hg.J[a], hg.metric);
    st.theta[a] = lee_form(st.F[a], hg.metric);
  }
  return st;
}

/// T'(e_i, e_j, e_k) = T(A0 e_i, A1 e_j, A2 e_k); a null slot means identity.
template <Scalar S>
Tensor<S> compose_slots(const Tensor<S>& T, const std::array<const Matrix<S>*, 3>& maps) {
  Tensor<S> out = T;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const Matrix<S>* A = maps[axis];
    if (A == nullptr) continue;
    Tensor<S> next = Tensor<S>::covariant(T.dim(), 3);
    Index src(3);
    for_each_index(T.dim(), 3, [&](const Index& idx) {
      src = idx;
      S sum;
      for (std::size_t b = 0; b < T.dim(); ++b) {
        const S& coeff = (*A)(b, idx[axis]);
        if (coeff.is_zero()) continue;
        src[axis] = b;
        const S& x = out.at(src);
        if (!x.is_zero()) sum += coeff * x;
      }
      next.at(idx) = std::move(sum);
    });
    out = std::move(next);
  }
  return out;
}

/// T'(x,y,z) = T(y,z,x) etc.; perm[a] names which argument feeds slot a.
template <Scalar S>
Tensor<S> permute_slots(const Tensor<S>& T, const std::array<std::size_t, 3>& perm) {
  Tensor<S> out = Tensor<S>::covariant(T.dim(), 3);
  for_each_index(T.dim(), 3, [&](const Index& idx) {
    out.at(idx) = T.at({idx[perm[0]], idx[perm[1]], idx[perm[2]]});
  });
  return out;
}

/// S_{x,y,z} T(x,y,z) = T(x,y,z) + T(y,z,x) + T(z,x,y).
template <Scalar S>
Tensor<S> cyclic_sum(const Tensor<S>& T) {
  return T + permute_slots(T, {1, 2, 0}) + permute_slots(T, {2, 0, 1});
}

/// First basis triple (1-based) where two tensors differ.
template <Scalar S>
std::optional<std::string> first_difference(const Tensor<S>& a, const Tensor<S>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a.data()[k] == b.data()[k])) {
      const Index idx = a.unflatten(k);
      std::string s = "(";
      for (std::size_t x : idx) s += std::to_string(x + 1);
      return s + ")";
    }
  return std::nullopt;
}

/// The three linking identities between F1, F2, F3:
///   F1(x,y,z) = F2(x,J3y,z) + F3(x,y,J2z)
///   F2(x,y,z) = F3(x,J1y,z) + F1(x,y,J3z)
///   F3(x,y,z) = F1(x,J2y,z) - F2(x,y,J1z)
template <Scalar S>
std::optional<std::string> linking_identity_violation(const std::array<Tensor<S>, 3>& F,
                                                      const std::array<Matrix<S>, 3>& J) {
  const auto& [F1, F2, F3] = F;
  const auto& [J1, J2, J3] = J;
  const std::array<std::pair<Tensor<S>, Tensor<S>>, 3> checks = {{
      {F1, compose_slots(F2, {nullptr, &J3, nullptr}) + compose_slots(F3, {nullptr, nullptr, &J2})},
      {F2, compose_slots(F3, {nullptr, &J1, nullptr}) + compose_slots(F1, {nullptr, nullptr, &J3})},
      {F3, compose_slots(F1, {nullptr, &J2, nullptr}) - compose_slots(F2, {nullptr, nullptr, &J1})},
  }};
  for (int a = 0; a < 3; ++a)
    if (auto at = first_difference(checks[a].first, checks[a].second))
      return "linking identity for F" + std::to_string(a + 1) + " fails at " + *at;
  return std::nullopt;
}

/// F1 skew in its last two slots with F1(x,J1y,J1z) = -F1(x,y,z); F2, F3
/// symmetric there with F_a(x,J_a y,J_a z) = F_a(x,y,z).
template <Scalar S>
std::optional<std::string> symmetry_identity_violation(const std::array<Tensor<S>, 3>& F,
                                                       const std::array<Matrix<S>, 3>& J) {
  for (int a = 0; a < 3; ++a) {
    const Tensor<S> swapped = permute_slots(F[a], {0, 2, 1});
    const Tensor<S> jj = compose_slots(F[a], {nullptr, &J[a], &J[a]});
    const bool hermitian = a == 0;
    const std::string name = "F" + std::to_string(a + 1);
    if (auto at = first_difference(F[a], hermitian ? -swapped : swapped)) return name + " slot symmetry fails at " + *at;
    if (auto at = first_difference(F[a], hermitian ? -jj : jj)) return name + " J-compatibility fails at " + *at;
  }
  return std::nullopt;
}

enum class WClass { W0 = 0, W1, W2, W3, W4 };

std::string to_string(WClass c);

/// Satisfied defining identities. Classes overlap; W0 implies every other.
struct ClassVerdict {
  std::array<bool, 5> holds{};
  bool hermitian = true;  ///< false: Norden classification (W1..W3 only)

  [[nodiscard]] bool satisfies(WClass c) const { return holds[static_cast<std::size_t>(c)]; }
  [[nodiscard]] std::vector<WClass> satisfied() const;
  /// The unique non-W0 class satisfied when W0 fails; nullopt otherwise.
  [[nodiscard]] std::optional<WClass> basic_class() const;
};

/// (g(x, J e_j))_ij = (g J)_ij.
template <Scalar S>
Matrix<S> gram_with(const MetricPair<S>& m, const Matrix<S>& J) {
  return lift_matrix<S>(m.gram) * J;
}

/// The W4-type (Hermitian, sign -1) or W1-type (Norden, sign +1) tensor
///   coeff { g(x,y)th(z) +- g(x,z)th(y) +- g(x,Jy)th(Jz) + g(x,Jz)th(Jy) }.
template <Scalar S>
Tensor<S> lee_model_tensor(const Tensor<S>& theta, const Matrix<S>& J, const MetricPair<S>& m, const S& coeff,
                           bool hermitian) {
  const std::size_t d = theta.dim();
  const Matrix<S> g = lift_matrix<S>(m.gram);
  const Matrix<S> gJ = gram_with(m, J);
  std::vector<S> th(d), thJ(d);
  for (std::size_t k = 0; k < d; ++k) th[k] = theta.at({k});
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t p = 0; p < d; ++p)
      if (!J(p, k).is_zero()) thJ[k] += J(p, k) * th[p];
  const S sgn(Rational(hermitian ? -1 : 1));
  Tensor<S> out = Tensor<S>::covariant(d, 3);
  for_each_index(d, 3, [&](const Index& idx) {
    const std::size_t x = idx[0], y = idx[1], z = idx[2];
    S v = g(x, y) * th[z] + sgn * g(x, z) * th[y] + sgn * gJ(x, y) * thJ[z] + gJ(x, z) * thJ[y];
    out.at(idx) = coeff * v;
  });
  return out;
}

/// F(Jx, Jy, z) = F(x, y, z).
template <Scalar S>
bool j_invariance_holds(const Tensor<S>& F, const Matrix<S>& J) {
  return F == compose_slots(F, {&J, &J, nullptr});
}

/// Hermitian classes for dimension 4n.
template <Scalar S>
ClassVerdict classify_hermitian(const Tensor<S>& F, const Tensor<S>& theta, const Matrix<S>& J,
                                const MetricPair<S>& m, std::size_t n) {
  ClassVerdict v;
  v.hermitian = true;
  v.holds[0] = F.is_zero();
  v.holds[1] = F == -permute_slots(F, {1, 0, 2});
  v.holds[2] = cyclic_sum(F).is_zero();
  v.holds[3] = j_invariance_holds(F, J) && theta.is_zero();
  const S coeff(Rational(1, static_cast<long>(2 * (2 * n - 1))));
  v.holds[4] = F == lee_model_tensor(theta, J, m, coeff, true);
  return v;
}

/// Norden-metric classes W1..W3 for dimension 4n.
template <Scalar S>
ClassVerdict classify_norden(const Tensor<S>& F, const Tensor<S>& theta, const Matrix<S>& J,
                             const MetricPair<S>& m, std::size_t n) {
  ClassVerdict v;
  v.hermitian = false;
  v.holds[0] = F.is_zero();
  const S coeff(Rational(1, static_cast<long>(4 * n)));
  v.holds[1] = F == lee_model_tensor(theta, J, m, coeff, false);
  v.holds[2] = cyclic_sum(compose_slots(F, {nullptr, nullptr, &J})).is_zero() && theta.is_zero();
  v.holds[3] = cyclic_sum(F).is_zero();
  return v;
}

/// Left-invariant exterior derivative: dtheta(X_i, X_j) = -theta([X_i, X_j]).
template <Scalar S>
Tensor<S> exterior_d_theta(const Tensor<S>& theta, const LieAlgebra<S>& alg) {
  const std::size_t d = alg.dim();
  Tensor<S> out = Tensor<S>::covariant(d, 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      S sum;
      for (std::size_t k = 0; k < d; ++k) {
        const S& c = alg.c.at({i, j, k});
        if (!c.is_zero()) sum += c * theta.at({k});
      }
      out.at({i, j}) = -sum;
    }
  return out;
}

template <Scalar S>
struct NijenhuisData {
  std::array<Tensor<S>, 3> N;  ///< N_a(X_i, X_j) components, variance (co, co, contra)
  std::array<S, 3> norms;      ///< g^ij g^kl g(N(e_i,e_k), N(e_j,e_l))
};

/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y].
template <Scalar S>
Tensor<S> nijenhuis_tensor(const LieAlgebra<S>& alg, const Matrix<S>& J) {
  const std::size_t d = alg.dim();
  Tensor<S> N(d, {Variance::Covariant, Variance::Covariant, Variance::Contravariant});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto x = basis_vector<S>(d, i), y = basis_vector<S>(d, j);
      const auto jx = J.column(i), jy = J.column(j);
      const auto a = alg.bracket(jx, jy);
      const auto b = J.apply(alg.bracket(jx, y));
      const auto c = J.apply(alg.bracket(x, jy));
      const auto e = alg.bracket(x, y);
      for (std::size_t k = 0; k < d; ++k) N.at({i, j, k}) = a[k] - b[k] - c[k] - e[k];
    }
  return N;
}

template <Scalar S>
NijenhuisData<S> compute_nijenhuis(const LieAlgebra<S>& alg, const HGStructure4<S>& hg) {
  NijenhuisData<S> out;
  for (int a = 0; a < 3; ++a) {
    out.N[a] = nijenhuis_tensor(alg, hg.J[a]);
    out.norms[a] = square_norm(lower_index(out.N[a], 2, hg.metric), hg.metric);
  }
  return out;
}

template <Scalar S>
struct IsotropicReport {
  std::array<S, 3> nabla_j_norm;  ///< ||nabla J_a||, computed as ||F_a||
  std::array<bool, 3> isotropic{};
  bool isotropic_hyper = false;
};

template <Scalar S>
IsotropicReport<S> isotropic_flags(const StructureTensors<S>& st, const MetricPair<S>& m) {
  IsotropicReport<S> r;
  for (int a = 0; a < 3; ++a) {
    r.nabla_j_norm[a] = square_norm(st.F[a], m);
    r.isotropic[a] = r.nabla_j_norm[a].is_zero();
  }
  r.isotropic_hyper = r.isotropic[0] && r.isotropic[1] && r.isotropic[2];
  return r;
}

/// Everything computed for one parameter choice of the family.
template <Scalar S>
struct ClassReport {
  std::array<ClassVerdict, 3> classes;
  std::array<bool, 3> kaehler{};  ///< W0 per structure
  bool pseudo_hyper_kaehler = false;
  bool j1_invariance = false;  ///< F1(J1x,J1y,z) = F1(x,y,z)
  IsotropicReport<S> isotropic;
  S tau;
  std::array<S, 3> tau_star;
  std::array<S, 3> nijenhuis_norm;
  Tensor<S> d_theta1;
};

template <Scalar S>
struct FamilyAnalysis {
  LieFamily<S> family;
  HGStructure4<S> hg;
  Connection<S> gamma;
  CurvatureData<S> curvature;
  StructureTensors<S> structure;
  NijenhuisData<S> nijenhuis;
  ClassReport<S> report;
  std::vector<std::string> warnings;
};

/// Runs the full pipeline on the family at the given parameters.
template <Scalar S>
FamilyAnalysis<S> analyze_family(const Parameters<S>& lam) {
  FamilyAnalysis<S> fa{build_family(lam), family_structure<S>(), {}, {}, {}, {}, {}, {}};
  fa.gamma = levi_civita(fa.family.algebra, fa.hg.metric);
  fa.curvature = curvature(fa.family.algebra, fa.gamma, fa.hg);
  fa.structure = compute_F(fa.hg, fa.gamma);
  fa.nijenhuis = compute_nijenhuis(fa.family.algebra, fa.hg);

  auto& r = fa.report;
  const auto& m = fa.hg.metric;
  r.classes[0] = classify_hermitian(fa.structure.F[0], fa.structure.theta[0], fa.hg.J[0], m, 1);
  for (int a = 1; a < 3; ++a)
    r.classes[a] = classify_norden(fa.structure.F[a], fa.structure.theta[a], fa.hg.J[a], m, 1);
  for (int a = 0; a < 3; ++a) r.kaehler[a] = r.classes[a].satisfies(WClass::W0);
  r.pseudo_hyper_kaehler = r.kaehler[0] && r.kaehler[1] && r.kaehler[2];
  r.j1_invariance = j_invariance_holds(fa.structure.F[0], fa.hg.J[0]);
  r.isotropic = isotropic_flags(fa.structure, m);
  r.tau = fa.curvature.tau;
  r.tau_star = fa.curvature.tau_star;
  r.nijenhuis_norm = fa.nijenhuis.norms;
  r.d_theta1 = exterior_d_theta(fa.structure.theta[0], fa.family.algebra);

  if (fa.family.degenerate)
    fa.warnings.push_back("all parameters are zero: the algebra is abelian and the structure is flat");
  return fa;
}

// ---------------------------------------------------------------------------
// Comparison against the published component tables of F1, F2, F3.

/// One published entry of F_alpha, 1-based indices.
struct ReferenceStructureComponent {
  int alpha = 1;
  std::array<int, 3> index{};
  Poly value;
};

/// Published nonzero components of F_alpha (alpha in 1..3).
const std::vector<ReferenceStructureComponent>& reference_structure_components(int alpha);

template <Scalar S>
struct StructureAudit {
  int alpha = 1;
  std::vector<ComponentCheck<S>> entries;
  std::vector<std::pair<Index, S>> unlisted_nonzero;
  /// computed / listed for entries that differ by a constant factor.
  std::vector<std::optional<Rational>> ratio;

  [[nodiscard]] std::size_t count(AuditStatus s) const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.status == s;
    return n;
  }
};

std::optional<Rational> constant_ratio(const Poly& computed, const Poly& listed);
std::optional<Rational> constant_ratio(const Rational& computed, const Rational& listed);

template <Scalar S>
StructureAudit<S> audit_structure(const Tensor<S>& F, int alpha, const std::function<S(const Poly&)>& to_scalar) {
  StructureAudit<S> audit;
  audit.alpha = alpha;
  std::vector<bool> covered(F.size(), false);
  for (const auto& ref : reference_structure_components(alpha)) {
    const std::size_t i = ref.index[0] - 1, j = ref.index[1] - 1, k = ref.index[2] - 1;
    ComponentCheck<S> c;
    c.index.assign(ref.index.begin(), ref.index.end());
    c.listed = to_scalar(ref.value);
    c.computed = F.at({i, j, k});
    c.status = compare_component(c.computed, c.listed);
    audit.ratio.push_back(c.status == AuditStatus::Match ? std::optional<Rational>(Rational(1))
                                                         : constant_ratio(c.computed, c.listed));
    covered[(i * F.dim() + j) * F.dim() + k] = true;
    audit.entries.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < F.size(); ++k)
    if (!covered[k] && !F.data()[k].is_zero()) audit.unlisted_nonzero.emplace_back(F.unflatten(k), F.data()[k]);
  return audit;
}

}  // namespace hyperherm
