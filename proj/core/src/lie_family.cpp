#include "hyperherm/lie_family.hpp"

#include <set>

namespace hyperherm {

Parameters<Poly> symbolic_parameters() {
  return {Poly::variable(0), Poly::variable(1), Poly::variable(2), Poly::variable(3)};
}

Matrix<Rational> family_metric_gram() {
  return Matrix<Rational>::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
}

std::array<Matrix<Rational>, 3> family_structures() {
  // Columns are images: J1 X1 = X2, J1 X2 = -X1, J1 X3 = -X4, J1 X4 = X3.
  Matrix<Rational> j1 = Matrix<Rational>::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  // J2 X1 = X3, J2 X2 = X4, J2 X3 = -X1, J2 X4 = -X2.
  Matrix<Rational> j2 = Matrix<Rational>::from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  Matrix<Rational> j3 = j1 * j2;
  return {j1, j2, j3};
}

const std::vector<ReferenceComponent>& reference_curvature_components() {
  static const std::vector<ReferenceComponent> table = [] {
    const auto [l1, l2, l3, l4] = symbolic_parameters();
    const Rational q(1, 4);
    const Rational mq(-1, 4);
    return std::vector<ReferenceComponent>{
        {{1, 2, 2, 1}, mq * (l1 * l1 + l2 * l2)},
        {{1, 3, 3, 1}, q * (l2 * l2 - l4 * l4)},
        {{1, 4, 4, 1}, mq * (l1 * l1 - l4 * l4)},
        {{2, 3, 3, 2}, q * (l2 * l2 - l3 * l3)},
        {{2, 4, 4, 2}, q * (l1 * l1 - l3 * l3)},
        {{3, 4, 4, 3}, q * (l3 * l3 + l4 * l4)},
        {{1, 3, 4, 1}, mq * (l1 * l2)},
        {{2, 3, 4, 2}, mq * (l1 * l2)},
        {{2, 1, 3, 2}, q * (l1 * l3)},
        {{4, 1, 3, 4}, mq * (l1 * l3)},
        {{1, 2, 3, 1}, q * (l1 * l4)},
        {{4, 2, 3, 4}, mq * (l1 * l4)},
        {{2, 1, 4, 2}, q * (l2 * l3)},
        {{3, 1, 4, 3}, mq * (l2 * l3)},
        {{1, 2, 4, 1}, q * (l2 * l4)},
        {{3, 2, 4, 3}, mq * (l2 * l4)},
        {{3, 1, 2, 3}, q * (l3 * l4)},
        {{4, 1, 2, 4}, q * (l3 * l4)},
    };
  }();
  return table;
}

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Match:
      return "match";
    case AuditStatus::SignFlip:
      return "sign-flip";
    case AuditStatus::Mismatch:
      return "mismatch";
  }
  return "unknown";
}

std::vector<std::pair<std::array<std::size_t, 4>, int>> riemann_orbit(const std::array<std::size_t, 4>& idx) {
  std::vector<std::pair<std::array<std::size_t, 4>, int>> out;
  std::set<std::array<std::size_t, 4>> seen;
  const auto [i, j, k, s] = idx;
  const std::pair<std::array<std::size_t, 4>, int> candidates[] = {
      {{i, j, k, s}, 1},  {{j, i, k, s}, -1}, {{i, j, s, k}, -1}, {{j, i, s, k}, 1},
      {{k, s, i, j}, 1},  {{s, k, i, j}, -1}, {{k, s, j, i}, -1}, {{s, k, j, i}, 1},
  };
  for (const auto& c : candidates)
    if (seen.insert(c.first).second) out.push_back(c);
  return out;
}

}  // namespace hyperherm
