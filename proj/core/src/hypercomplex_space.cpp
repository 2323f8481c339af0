#include "hyperherm/hypercomplex_space.hpp"

#include <utility>

namespace hyperherm {

Matrix<Rational> standard_block(int alpha) {
  switch (alpha) {
    case 1:
      return Matrix<Rational>::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
    case 2:
      return Matrix<Rational>::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    case 3:
      // Row images of J3 = J1 J2.
      return Matrix<Rational>::from_rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
    default:
      throw PreconditionError("standard_block: alpha must be 1, 2 or 3");
  }
}

std::string HermitianVerdict::label() const {
  if (in_class[0] && in_class[1] && in_class[2] && in_class[3]) return "all";
  if (in_class[0]) return "B0";
  for (int a = 1; a <= 3; ++a)
    if (in_class[a]) return "B" + std::to_string(a);
  return "unclassified";
}

Signature signature(const Matrix<Rational>& sym) {
  if (!sym.is_symmetric()) throw PreconditionError("signature: matrix is not symmetric");
  Matrix<Rational> a = sym;
  const std::size_t n = a.size();

  auto swap_both = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  // row_i += row_j, col_i += col_j
  auto add_both = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
    for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // No diagonal pivot; a nonzero off-diagonal entry a(i,j) makes
      // a(i,i) + 2a(i,j) + a(j,j) = 2a(i,j) a usable pivot.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (!a(i, j).is_zero()) {
            add_both(i, j);
            p = i;
            found = true;
          }
      if (!found) {
        sig.zero += n - k;
        break;
      }
    }
    if (p != k) swap_both(p, k);
    const Rational pivot = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const Rational f = a(r, k) / pivot;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = 0; c < n; ++c) a(c, r) -= f * a(c, k);
    }
    if (pivot.sign() > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

}  // namespace hyperherm
