#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperherm/errors.hpp"
#include "hyperherm/hypercomplex_space.hpp"
#include "hyperherm/matrix.hpp"
#include "hyperherm/scalar.hpp"
#include "hyperherm/tensor.hpp"

namespace hyperherm {

template <Scalar S>
using Parameters = std::array<S, 4>;

/// l1..l4 as polynomial variables.
Parameters<Poly> symbolic_parameters();

/// Lie algebra given by structure constants on a basis X_1..X_d.
template <Scalar S>
struct LieAlgebra {
  /// c(i,j,k): coefficient of X_k in [X_i, X_j]. Variance (co, co, contra).
  Tensor<S> c;

  explicit LieAlgebra(std::size_t dim = 4)
      : c(dim, {Variance::Covariant, Variance::Covariant, Variance::Contravariant}) {}

  [[nodiscard]] std::size_t dim() const { return c.dim(); }

  /// Sets [X_i, X_j] = sum_k v_k X_k and [X_j, X_i] = -[X_i, X_j].
  void set_bracket(std::size_t i, std::size_t j, const std::vector<S>& v) {
    for (std::size_t k = 0; k < dim(); ++k) {
      c.at({i, j, k}) = v[k];
      c.at({j, i, k}) = -v[k];
    }
  }

  [[nodiscard]] std::vector<S> bracket_basis(std::size_t i, std::size_t j) const {
    std::vector<S> out(dim());
    for (std::size_t k = 0; k < dim(); ++k) out[k] = c.at({i, j, k});
    return out;
  }

  [[nodiscard]] std::vector<S> bracket(const std::vector<S>& x, const std::vector<S>& y) const {
    std::vector<S> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        const S xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) {
          const S& ck = c.at({i, j, k});
          if (!ck.is_zero()) out[k] += xy * ck;
        }
      }
    }
    return out;
  }
};

template <Scalar S>
std::vector<S> basis_vector(std::size_t dim, std::size_t i) {
  std::vector<S> v(dim);
  v[i] = S(Rational(1));
  return v;
}

/// First (i,j,k) where [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] != 0.
template <Scalar S>
std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra<S>& alg) {
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const auto xi = basis_vector<S>(d, i), xj = basis_vector<S>(d, j), xk = basis_vector<S>(d, k);
        auto sum = alg.bracket(alg.bracket(xi, xj), xk);
        const auto b = alg.bracket(alg.bracket(xj, xk), xi);
        const auto e = alg.bracket(alg.bracket(xk, xi), xj);
        for (std::size_t m = 0; m < d; ++m) {
          sum[m] += b[m];
          sum[m] += e[m];
          if (!sum[m].is_zero()) return std::array{i, j, k};
        }
      }
  return std::nullopt;
}

template <Scalar S>
bool is_antisymmetric(const LieAlgebra<S>& alg) {
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!(alg.c.at({i, j, k}) == -alg.c.at({j, i, k}))) return false;
  return true;
}

/// The four-parameter family of 4-dimensional Lie algebras.
template <Scalar S>
struct LieFamily {
  Parameters<S> lambda;
  LieAlgebra<S> algebra;
  bool degenerate = false;  ///< all parameters zero (abelian, flat)
};

/// Fills the structure constants from the six defining brackets.
/// Throws InvariantViolation if the Jacobi identity fails.
template <Scalar S>
LieFamily<S> build_family(const Parameters<S>& lam) {
  const S zero;
  const auto& [l1, l2, l3, l4] = lam;
  LieFamily<S> fam{lam, LieAlgebra<S>(4), false};
  auto& alg = fam.algebra;
  alg.set_bracket(0, 2, {zero, l2, zero, l4});   // [X1,X3] = l2 X2 + l4 X4
  alg.set_bracket(1, 3, {l1, zero, l3, zero});   // [X2,X4] = l1 X1 + l3 X3
  alg.set_bracket(1, 2, {-l2, zero, zero, -l3}); // [X2,X3] = -l2 X1 - l3 X4
  alg.set_bracket(2, 3, {-l4, l3, zero, zero});  // [X3,X4] = -l4 X1 + l3 X2
  alg.set_bracket(3, 0, {zero, l1, l4, zero});   // [X4,X1] = l1 X2 + l4 X3
  alg.set_bracket(1, 0, {zero, zero, -l2, l1});  // [X2,X1] = -l2 X3 + l1 X4
  if (auto bad = jacobi_violation(alg)) {
    throw InvariantViolation("build_family: Jacobi identity fails for (X" + std::to_string((*bad)[0] + 1) + ",X" +
                             std::to_string((*bad)[1] + 1) + ",X" + std::to_string((*bad)[2] + 1) + ")");
  }
  fam.degenerate = l1.is_zero() && l2.is_zero() && l3.is_zero() && l4.is_zero();
  return fam;
}

/// Almost hypercomplex structure and invariant metric on the family.
/// J[1] is the Norden structure X1->X3, X2->X4; J[0] is X1->X2, X3->-X4;
/// J[2] = J[0] J[1]. The metric is diag(1, 1, -1, -1).
template <Scalar S>
struct HGStructure4 {
  std::array<Matrix<S>, 3> J;
  MetricPair<S> metric;
};

Matrix<Rational> family_metric_gram();
std::array<Matrix<Rational>, 3> family_structures();

template <Scalar S>
HGStructure4<S> family_structure() {
  const auto j = family_structures();
  return {{lift_matrix<S>(j[0]), lift_matrix<S>(j[1]), lift_matrix<S>(j[2])},
          MetricPair<S>::from_gram(family_metric_gram())};
}

/// Connection coefficients: gamma(i,j,k) is the X_k component of nabla_{X_i} X_j.
template <Scalar S>
using Connection = Tensor<S>;

template <Scalar S>
Connection<S> make_connection(std::size_t dim) {
  return Connection<S>(dim, {Variance::Covariant, Variance::Covariant, Variance::Contravariant});
}

/// g([X_a, X_b], X_c)
template <Scalar S>
S bracket_pairing(const LieAlgebra<S>& alg, const MetricPair<S>& m, std::size_t a, std::size_t b, std::size_t c) {
  S out;
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    const Rational& gkc = m.gram(k, c);
    if (gkc.is_zero()) continue;
    const S& ck = alg.c.at({a, b, k});
    if (!ck.is_zero()) out += ck * S(gkc);
  }
  return out;
}

/// First (i,j,k) with g([X_i,X_j],X_k) + g([X_i,X_k],X_j) != 0.
template <Scalar S>
std::optional<std::array<std::size_t, 3>> invariance_violation(const LieAlgebra<S>& alg, const MetricPair<S>& m) {
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!(bracket_pairing(alg, m, i, j, k) + bracket_pairing(alg, m, i, k, j)).is_zero()) return std::array{i, j, k};
  return std::nullopt;
}

/// Levi-Civita connection of an ad-invariant metric: nabla_{X_i} X_j = 1/2 [X_i, X_j].
/// Throws PreconditionError naming the first violating (i,j,k), 1-based.
template <Scalar S>
Connection<S> levi_civita(const LieAlgebra<S>& alg, const MetricPair<S>& m) {
  if (auto bad = invariance_violation(alg, m)) {
    throw PreconditionError("levi_civita: metric is not ad-invariant at (i,j,k) = (" + std::to_string((*bad)[0] + 1) +
                            "," + std::to_string((*bad)[1] + 1) + "," + std::to_string((*bad)[2] + 1) + ")");
  }
  Connection<S> gamma = alg.c;
  gamma *= S(Rational(1, 2));
  return gamma;
}

/// Levi-Civita connection of any left-invariant metric from the Koszul formula
///   2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
template <Scalar S>
Connection<S> koszul_connection(const LieAlgebra<S>& alg, const MetricPair<S>& m) {
  const std::size_t d = alg.dim();
  Connection<S> gamma = make_connection<S>(d);
  const S half(Rational(1, 2));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<S> lowered(d);  // g(nabla_i X_j, X_l)
      for (std::size_t l = 0; l < d; ++l) {
        lowered[l] = half * (bracket_pairing(alg, m, i, j, l) - bracket_pairing(alg, m, j, l, i) +
                             bracket_pairing(alg, m, l, i, j));
      }
      for (std::size_t k = 0; k < d; ++k) {
        S sum;
        for (std::size_t l = 0; l < d; ++l) {
          const Rational& gkl = m.gram_inv(k, l);
          if (!gkl.is_zero() && !lowered[l].is_zero()) sum += S(gkl) * lowered[l];
        }
        gamma.at({i, j, k}) = std::move(sum);
      }
    }
  return gamma;
}

/// nabla_{X_i} v for a constant-coefficient vector v.
template <Scalar S>
std::vector<S> covariant_derivative(const Connection<S>& gamma, std::size_t i, const std::vector<S>& v) {
  const std::size_t d = gamma.dim();
  std::vector<S> out(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k) {
      const S& g = gamma.at({i, j, k});
      if (!g.is_zero()) out[k] += v[j] * g;
    }
  }
  return out;
}

/// First (i,j,k) where g(nabla_i X_j, X_k) + g(X_j, nabla_i X_k) != 0.
template <Scalar S>
std::optional<std::array<std::size_t, 3>> metric_compatibility_violation(const Connection<S>& gamma,
                                                                         const MetricPair<S>& m) {
  const std::size_t d = gamma.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto a = covariant_derivative(gamma, i, basis_vector<S>(d, j));
        const auto b = covariant_derivative(gamma, i, basis_vector<S>(d, k));
        if (!(m.apply(a, basis_vector<S>(d, k)) + m.apply(basis_vector<S>(d, j), b)).is_zero())
          return std::array{i, j, k};
      }
  return std::nullopt;
}

/// First (i,j) where nabla_i X_j - nabla_j X_i != [X_i, X_j].
template <Scalar S>
std::optional<std::array<std::size_t, 2>> torsion_violation(const Connection<S>& gamma, const LieAlgebra<S>& alg) {
  const std::size_t d = gamma.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!(gamma.at({i, j, k}) - gamma.at({j, i, k}) == alg.c.at({i, j, k}))) return std::array{i, j};
  return std::nullopt;
}

template <Scalar S>
struct CurvatureData {
  Tensor<S> R;      ///< R_ijks = g(R(X_i,X_j)X_k, X_s), fully covariant
  Tensor<S> ricci;  ///< rho_jk = g^is R_ijks
  S tau;            ///< g^jk rho_jk
  std::array<S, 3> tau_star;
};

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, lowered in the last slot.
template <Scalar S>
Tensor<S> riemann_tensor(const LieAlgebra<S>& alg, const Connection<S>& gamma, const MetricPair<S>& m) {
  const std::size_t d = alg.dim();
  Tensor<S> R = Tensor<S>::covariant(d, 4);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto xk = basis_vector<S>(d, k);
        const auto a = covariant_derivative(gamma, i, covariant_derivative(gamma, j, xk));
        const auto b = covariant_derivative(gamma, j, covariant_derivative(gamma, i, xk));
        std::vector<S> v(d);
        for (std::size_t p = 0; p < d; ++p) v[p] = a[p] - b[p];
        for (std::size_t q = 0; q < d; ++q) {
          const S& cq = alg.c.at({i, j, q});
          if (cq.is_zero()) continue;
          for (std::size_t p = 0; p < d; ++p) {
            const S& gq = gamma.at({q, k, p});
            if (!gq.is_zero()) v[p] -= cq * gq;
          }
        }
        for (std::size_t s = 0; s < d; ++s) R.at({i, j, k, s}) = m.apply(v, basis_vector<S>(d, s));
      }
  return R;
}

/// Value of R on arbitrary component vectors.
template <Scalar S>
S riemann_on(const Tensor<S>& R, const std::vector<S>& x, const std::vector<S>& y, const std::vector<S>& z,
             const std::vector<S>& w) {
  const std::size_t d = R.dim();
  S out;
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y[b].is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) {
        if (z[c].is_zero()) continue;
        for (std::size_t e = 0; e < d; ++e) {
          if (w[e].is_zero()) continue;
          const S& r = R.at({a, b, c, e});
          if (!r.is_zero()) out += x[a] * y[b] * z[c] * w[e] * r;
        }
      }
    }
  }
  return out;
}

template <Scalar S>
CurvatureData<S> curvature(const LieAlgebra<S>& alg, const Connection<S>& gamma, const HGStructure4<S>& hg) {
  const auto& m = hg.metric;
  const std::size_t d = alg.dim();
  CurvatureData<S> cd;
  cd.R = riemann_tensor(alg, gamma, m);
  cd.ricci = contract(m.g_inv, cd.R, {{0, 0}, {1, 3}});
  cd.tau = contract(m.g_inv, cd.ricci, {{0, 0}, {1, 1}}).value();

  // tau*_1 = 1/2 g^ij g^kl R(X_i, J1 X_j, X_k, J1 X_l)
  // tau*_a = g^ij g^kl R(X_i, X_k, J_a X_l, X_j), a = 2, 3
  S t1;
  std::array<S, 2> t23;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& gij = m.gram_inv(i, j);
      if (gij.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          const Rational& gkl = m.gram_inv(k, l);
          if (gkl.is_zero()) continue;
          const S w(gij * gkl);
          const auto xi = basis_vector<S>(d, i), xj = basis_vector<S>(d, j), xk = basis_vector<S>(d, k);
          t1 += w * riemann_on(cd.R, xi, hg.J[0].column(j), xk, hg.J[0].column(l));
          for (int a = 1; a < 3; ++a) t23[a - 1] += w * riemann_on(cd.R, xi, xk, hg.J[a].column(l), xj);
        }
    }
  cd.tau_star = {t1 * S(Rational(1, 2)), t23[0], t23[1]};
  return cd;
}

/// First failing Riemann symmetry (pair skewness, pair interchange, first Bianchi), or nullopt.
template <Scalar S>
std::optional<std::string> riemann_symmetry_violation(const Tensor<S>& R) {
  const std::size_t d = R.dim();
  std::optional<std::string> bad;
  for_each_index(d, 4, [&](const Index& x) {
    if (bad) return;
    const std::size_t i = x[0], j = x[1], k = x[2], s = x[3];
    const S& r = R.at(x);
    auto where = [&] {
      return " at (" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1) + std::to_string(s + 1) + ")";
    };
    if (!(r == -R.at({j, i, k, s}))) bad = "R_ijks != -R_jiks" + where();
    else if (!(r == -R.at({i, j, s, k}))) bad = "R_ijks != -R_ijsk" + where();
    else if (!(r == R.at({k, s, i, j}))) bad = "R_ijks != R_ksij" + where();
    else if (!(r + R.at({j, k, i, s}) + R.at({k, i, j, s})).is_zero()) bad = "first Bianchi identity fails" + where();
  });
  return bad;
}

/// -3/2 (l1^2 + l2^2 - l3^2 - l4^2), the closed form of the scalar curvature.
template <Scalar S>
S scalar_curvature_closed_form(const Parameters<S>& lam) {
  const auto& [l1, l2, l3, l4] = lam;
  return S(Rational(-3, 2)) * (l1 * l1 + l2 * l2 - l3 * l3 - l4 * l4);
}

/// l1^2 + l2^2 - l3^2 - l4^2.
template <Scalar S>
S neutral_quadric(const Parameters<S>& lam) {
  const auto& [l1, l2, l3, l4] = lam;
  return l1 * l1 + l2 * l2 - l3 * l3 - l4 * l4;
}

// ---------------------------------------------------------------------------
// Comparison against the published component table of R.

/// One published curvature component, 1-based indices.
struct ReferenceComponent {
  std::array<int, 4> index;
  Poly value;
};

/// The 18 published entries of R_ijks for the family.
const std::vector<ReferenceComponent>& reference_curvature_components();

enum class AuditStatus { Match, SignFlip, Mismatch };

std::string to_string(AuditStatus s);

template <Scalar S>
AuditStatus compare_component(const S& computed, const S& listed) {
  if (computed == listed) return AuditStatus::Match;
  if (computed == -listed) return AuditStatus::SignFlip;
  return AuditStatus::Mismatch;
}

template <Scalar S>
struct ComponentCheck {
  std::vector<int> index;  ///< 1-based
  S listed;
  S computed;
  AuditStatus status = AuditStatus::Match;
};

template <Scalar S>
struct CurvatureAudit {
  std::vector<ComponentCheck<S>> entries;
  /// Nonzero computed components that no listed entry generates by symmetry.
  std::vector<std::pair<Index, S>> unlisted_nonzero;
  Tensor<S> ricci;
  S tau_computed;      ///< contraction of the computed R
  S tau_from_listed;   ///< same contraction of R rebuilt from the listed table
  S tau_from_listed_with_flips;  ///< as above, with every sign-flip entry negated
  S tau_closed_form;

  [[nodiscard]] std::size_t count(AuditStatus s) const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.status == s;
    return n;
  }
};

/// The eight index tuples related to (i,j,k,s) by pair skewness and
/// interchange, with the sign relating each to R_ijks.
std::vector<std::pair<std::array<std::size_t, 4>, int>> riemann_orbit(const std::array<std::size_t, 4>& idx);

/// Audits computed curvature against the reference table. to_scalar maps
/// a listed polynomial into S (identity for Poly, evaluation for Rational).
template <Scalar S>
CurvatureAudit<S> audit_curvature(const CurvatureData<S>& cd, const MetricPair<S>& m, const Parameters<S>& lam,
                                  const std::function<S(const Poly&)>& to_scalar) {
  CurvatureAudit<S> audit;
  const std::size_t d = cd.R.dim();
  Tensor<S> rebuilt = Tensor<S>::covariant(d, 4);
  Tensor<S> rebuilt_fixed = Tensor<S>::covariant(d, 4);
  std::vector<bool> covered(cd.R.size(), false);

  for (const auto& ref : reference_curvature_components()) {
    const std::array<std::size_t, 4> idx{static_cast<std::size_t>(ref.index[0] - 1), static_cast<std::size_t>(ref.index[1] - 1),
                                         static_cast<std::size_t>(ref.index[2] - 1), static_cast<std::size_t>(ref.index[3] - 1)};
    ComponentCheck<S> check;
    check.index.assign(ref.index.begin(), ref.index.end());
    check.listed = to_scalar(ref.value);
    check.computed = cd.R.at(std::span<const std::size_t>(idx));
    check.status = compare_component(check.computed, check.listed);
    const S fixed = check.status == AuditStatus::SignFlip ? -check.listed : check.listed;
    for (const auto& [o, sign] : riemann_orbit(idx)) {
      const std::span<const std::size_t> oi(o);
      const S sg{Rational(sign)};
      rebuilt.at(oi) = sg * check.listed;
      rebuilt_fixed.at(oi) = sg * fixed;
      covered[(((o[0] * d) + o[1]) * d + o[2]) * d + o[3]] = true;
    }
    audit.entries.push_back(std::move(check));
  }
  for (std::size_t k = 0; k < cd.R.size(); ++k)
    if (!covered[k] && !cd.R.data()[k].is_zero()) audit.unlisted_nonzero.emplace_back(cd.R.unflatten(k), cd.R.data()[k]);

  auto tau_of = [&](const Tensor<S>& r) {
    return contract(m.g_inv, contract(m.g_inv, r, {{0, 0}, {1, 3}}), {{0, 0}, {1, 1}}).value();
  };
  audit.ricci = cd.ricci;
  audit.tau_computed = cd.tau;
  audit.tau_from_listed = tau_of(rebuilt);
  audit.tau_from_listed_with_flips = tau_of(rebuilt_fixed);
  audit.tau_closed_form = scalar_curvature_closed_form(lam);
  return audit;
}

}  // namespace hyperherm
