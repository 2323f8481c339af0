#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperherm/errors.hpp"
#include "hyperherm/matrix.hpp"
#include "hyperherm/scalar.hpp"

// Linear model on V = R^{4n}. Basis vectors are interleaved per quaternionic
// index i: (d/dx^i, d/dy^i, d/du^i, d/dv^i) sit at positions 4i..4i+3, so the
// structure matrices are block diagonal with one 4x4 block per index. The
// metric is negative on the x,y directions and positive on u,v.

namespace hyperherm {

inline constexpr std::size_t kX = 0;
inline constexpr std::size_t kY = 1;
inline constexpr std::size_t kU = 2;
inline constexpr std::size_t kV = 3;

/// (J1, J2, J3) with J_a^2 = -Id and J1 J2 = -J2 J1 = J3 (cyclically).
/// J[a] is the column-action matrix of J_{a+1}.
template <Scalar S>
struct HypercomplexStructure {
  std::size_t n = 1;
  std::array<Matrix<S>, 3> J;

  [[nodiscard]] std::size_t dim() const { return 4 * n; }
};

template <Scalar S>
struct BilinearForm {
  std::size_t n = 1;
  Matrix<S> gram;  ///< f(e_i, e_j)

  [[nodiscard]] std::size_t dim() const { return 4 * n; }
  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// g together with its associated forms Phi = g(J1.,.), g2 = g(J2.,.), g3 = g(J3.,.).
template <Scalar S>
struct PseudoHermitianMetricPack {
  BilinearForm<S> g;
  BilinearForm<S> phi;
  BilinearForm<S> g2;
  BilinearForm<S> g3;
};

/// The standard 4x4 blocks in the row convention (row k = image of basis vector k).
Matrix<Rational> standard_block(int alpha);

template <Scalar S>
Matrix<S> block_diagonal(std::size_t n, const Matrix<S>& block) {
  const std::size_t b = block.size();
  Matrix<S> out(n * b);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) out(k * b + i, k * b + j) = block(i, j);
  return out;
}

template <Scalar S>
HypercomplexStructure<S> standard_structure(std::size_t n) {
  if (n == 0) throw PreconditionError("standard_structure: n must be positive");
  HypercomplexStructure<S> h;
  h.n = n;
  // The printed blocks list images as rows; transpose to column action.
  h.J[0] = block_diagonal(n, lift_matrix<S>(standard_block(1).transpose()));
  h.J[1] = block_diagonal(n, lift_matrix<S>(standard_block(2).transpose()));
  h.J[2] = h.J[0] * h.J[1];
  return h;
}

/// Gram matrix f(Ax, Ay) = A^T F A.
template <Scalar S>
Matrix<S> pullback(const Matrix<S>& f, const Matrix<S>& a) {
  return a.transpose() * f * a;
}

template <Scalar S>
Matrix<S> standard_metric_gram(std::size_t n) {
  Matrix<S> g(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(4 * i + kX, 4 * i + kX) = S(Rational(-1));
    g(4 * i + kY, 4 * i + kY) = S(Rational(-1));
    g(4 * i + kU, 4 * i + kU) = S(Rational(1));
    g(4 * i + kV, 4 * i + kV) = S(Rational(1));
  }
  return g;
}

template <Scalar S>
PseudoHermitianMetricPack<S> standard_metric(const HypercomplexStructure<S>& h) {
  PseudoHermitianMetricPack<S> pack;
  const Matrix<S> g = standard_metric_gram<S>(h.n);
  pack.g = {h.n, g};
  pack.phi = {h.n, h.J[0].transpose() * g};
  pack.g2 = {h.n, h.J[1].transpose() * g};
  pack.g3 = {h.n, h.J[2].transpose() * g};
  return pack;
}

template <Scalar S>
PseudoHermitianMetricPack<S> standard_metric(std::size_t n) {
  return standard_metric(standard_structure<S>(n));
}

/// First failing quaternion identity among J_a^2 = -Id and the three
/// cyclic product relations, or nullopt.
template <Scalar S>
std::optional<std::string> quaternion_identity_violation(const std::array<Matrix<S>, 3>& J) {
  const std::size_t d = J[0].size();
  const Matrix<S> minus_id = -Matrix<S>::identity(d);
  for (int a = 0; a < 3; ++a)
    if (!(J[a] * J[a] == minus_id)) return "J" + std::to_string(a + 1) + "^2 != -Id";
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    if (!(J[a] * J[b] == J[c])) return "J" + std::to_string(a + 1) + "J" + std::to_string(b + 1) + " != J" + std::to_string(c + 1);
    if (!(J[b] * J[a] == -J[c])) return "J" + std::to_string(b + 1) + "J" + std::to_string(a + 1) + " != -J" + std::to_string(c + 1);
  }
  return std::nullopt;
}

/// Checks g(J1x,J1y) = -g(J2x,J2y) = -g(J3x,J3y) = g(x,y).
template <Scalar S>
std::optional<std::string> pseudo_hermitian_metric_violation(const std::array<Matrix<S>, 3>& J, const Matrix<S>& g) {
  if (!(pullback(g, J[0]) == g)) return "g(J1x,J1y) != g(x,y)";
  if (!(pullback(g, J[1]) == -g)) return "g(J2x,J2y) != -g(x,y)";
  if (!(pullback(g, J[2]) == -g)) return "g(J3x,J3y) != -g(x,y)";
  return std::nullopt;
}

/// Per-structure behaviour of a bilinear form and the induced class memberships.
struct HermitianVerdict {
  std::array<bool, 3> hermitian{};       ///< f(J_a x, J_a y) = f(x, y)
  std::array<bool, 3> skew_hermitian{};  ///< f(J_a x, J_a y) = -f(x, y)
  std::array<bool, 4> in_class{};        ///< membership in B0 (Hermitian), B1, B2, B3

  /// "B0", "B1".."B3", "all" (zero form), or "unclassified".
  [[nodiscard]] std::string label() const;
};

template <Scalar S>
HermitianVerdict hermitian_type(const BilinearForm<S>& f, const HypercomplexStructure<S>& h) {
  if (f.dim() != h.dim() || f.gram.size() != h.dim()) throw DimensionError("hermitian_type: shape mismatch");
  HermitianVerdict v;
  for (int a = 0; a < 3; ++a) {
    const Matrix<S> pulled = pullback(f.gram, h.J[a]);
    v.hermitian[a] = pulled == f.gram;
    v.skew_hermitian[a] = pulled == -f.gram;
  }
  v.in_class[0] = v.hermitian[0] && v.hermitian[1] && v.hermitian[2];
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    v.in_class[a + 1] = v.hermitian[a] && v.skew_hermitian[b] && v.skew_hermitian[c];
  }
  return v;
}

/// Projection onto B_alpha, alpha in {0,1,2,3}.
template <Scalar S>
BilinearForm<S> project(const BilinearForm<S>& f, const HypercomplexStructure<S>& h, int alpha) {
  if (alpha < 0 || alpha > 3) throw PreconditionError("project: alpha must be in {0,1,2,3}");
  if (f.dim() != h.dim() || f.gram.size() != h.dim()) throw DimensionError("project: shape mismatch");
  Matrix<S> sum = f.gram;
  for (int a = 0; a < 3; ++a) {
    const Matrix<S> pulled = pullback(f.gram, h.J[a]);
    const bool plus = alpha == 0 || a + 1 == alpha;
    if (plus) {
      sum += pulled;
    } else {
      sum -= pulled;
    }
  }
  return {f.n, sum * S(Rational(1, 4))};
}

/// Parameters of a 4x4 block [[P, Q], [-Q, P]] with P = [[a, b], [-b, a]] and
/// Q = [[c, d], [d, -c]].
template <Scalar S>
struct QuaternionBlock {
  std::size_t row = 0;  ///< block row (0-based)
  std::size_t col = 0;  ///< block column (0-based)
  S a, b, c, d;
};

template <Scalar S>
Matrix<S> quaternion_block(const S& a, const S& b, const S& c, const S& d) {
  Matrix<S> m(4);
  const S rows[4][4] = {{a, b, c, d}, {-b, a, d, -c}, {-c, -d, a, b}, {-d, c, -b, a}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  return m;
}

template <Scalar S>
struct StructuralGroupVerdict {
  bool quaternionic = false;       ///< A J_a = J_a A for a = 1,2,3
  bool metric_preserving = false;  ///< A^T g A = g
  /// Per-block (a,b,c,d) when every 4x4 block has the quaternionic form.
  std::optional<std::vector<QuaternionBlock<S>>> blocks;

  [[nodiscard]] bool member() const { return quaternionic && metric_preserving; }
};

template <Scalar S>
std::optional<std::vector<QuaternionBlock<S>>> extract_quaternion_blocks(const Matrix<S>& a) {
  if (a.size() % 4 != 0) return std::nullopt;
  const std::size_t n = a.size() / 4;
  std::vector<QuaternionBlock<S>> out;
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t bj = 0; bj < n; ++bj) {
      QuaternionBlock<S> q{bi, bj, a(4 * bi, 4 * bj), a(4 * bi, 4 * bj + 1), a(4 * bi, 4 * bj + 2),
                           a(4 * bi, 4 * bj + 3)};
      const Matrix<S> expected = quaternion_block(q.a, q.b, q.c, q.d);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (!(a(4 * bi + i, 4 * bj + j) == expected(i, j))) return std::nullopt;
      out.push_back(std::move(q));
    }
  return out;
}

template <Scalar S>
StructuralGroupVerdict<S> structural_group_member(const Matrix<S>& a) {
  if (a.size() == 0 || a.size() % 4 != 0) throw DimensionError("structural_group_member: side must be 4n");
  const std::size_t n = a.size() / 4;
  const auto h = standard_structure<S>(n);
  const Matrix<S> g = standard_metric_gram<S>(n);
  StructuralGroupVerdict<S> v;
  v.quaternionic = true;
  for (const auto& j : h.J)
    if (!(a * j == j * a)) v.quaternionic = false;
  v.metric_preserving = pullback(g, a) == g;
  v.blocks = extract_quaternion_blocks(a);
  return v;
}

/// Basis (e_1..e_n; J1e_1..J1e_n; J2e_1..; J3e_1..) with e_i = d/dx^i.
template <Scalar S>
std::vector<std::vector<S>> admissible_basis(const HypercomplexStructure<S>& h) {
  std::vector<std::vector<S>> e;
  for (std::size_t i = 0; i < h.n; ++i) {
    std::vector<S> v(h.dim());
    v[4 * i + kX] = S(Rational(1));
    e.push_back(std::move(v));
  }
  std::vector<std::vector<S>> basis = e;
  for (const auto& j : h.J)
    for (const auto& v : e) basis.push_back(j.apply(v));
  return basis;
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric rational matrix by congruence diagonalization.
/// Throws PreconditionError if the matrix is not symmetric.
Signature signature(const Matrix<Rational>& sym);

/// Random rational form with entries p/q, |p| <= 9, 1 <= q <= 5.
template <class Rng>
BilinearForm<Rational> random_form(std::size_t n, Rng& rng) {
  BilinearForm<Rational> f{n, Matrix<Rational>(4 * n)};
  for (std::size_t i = 0; i < 4 * n; ++i)
    for (std::size_t j = 0; j < 4 * n; ++j) {
      const long p = static_cast<long>(rng() % 19) - 9;
      const long q = static_cast<long>(rng() % 5) + 1;
      f.gram(i, j) = Rational(p, q);
    }
  return f;
}

}  // namespace hyperherm
