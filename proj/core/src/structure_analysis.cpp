#include "hyperherm/structure_analysis.hpp"

#include <stdexcept>

namespace hyperherm {

std::string to_string(WClass c) { return "W" + std::to_string(static_cast<int>(c)); }

std::vector<WClass> ClassVerdict::satisfied() const {
  std::vector<WClass> out;
  for (int k = 0; k < 5; ++k)
    if (holds[k]) out.push_back(static_cast<WClass>(k));
  return out;
}

std::optional<WClass> ClassVerdict::basic_class() const {
  if (holds[0]) return std::nullopt;
  std::optional<WClass> found;
  for (int k = 1; k < 5; ++k) {
    if (!holds[k]) continue;
    if (found) return std::nullopt;
    found = static_cast<WClass>(k);
  }
  return found;
}

std::optional<Rational> constant_ratio(const Poly& computed, const Poly& listed) { return computed.ratio_to(listed); }

std::optional<Rational> constant_ratio(const Rational& computed, const Rational& listed) {
  if (listed.is_zero()) return computed.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  return computed / listed;
}

namespace {

// A published row "c1*F_{ijk} = c2*F_{lmn} = ... = factor * l_m".
struct TableRow {
  int lambda;  // 1..4
  Rational factor;
  std::vector<std::pair<int, int>> terms;  // (coefficient, ijk as a three-digit number)
};

std::vector<ReferenceStructureComponent> expand(int alpha, const std::vector<TableRow>& rows) {
  const auto lam = symbolic_parameters();
  std::vector<ReferenceStructureComponent> out;
  for (const auto& row : rows) {
    const Poly rhs = row.factor * lam[row.lambda - 1];
    for (const auto& [coeff, ijk] : row.terms) {
      out.push_back({alpha, {ijk / 100, (ijk / 10) % 10, ijk % 10}, rhs * Rational(1, coeff)});
    }
  }
  return out;
}

}  // namespace

const std::vector<ReferenceStructureComponent>& reference_structure_components(int alpha) {
  const Rational h(1, 2);
  static const std::vector<ReferenceStructureComponent> f1 = expand(
      1, {
             {1, h, {{1, 114}, {-1, 123}, {1, 132}, {-1, 141}, {1, 213}, {1, 224}, {-1, 231}, {-1, 242}}},
             {2, h, {{-1, 113}, {-1, 124}, {1, 131}, {1, 142}, {1, 214}, {-1, 223}, {1, 232}, {-1, 241}}},
             {3, h, {{-1, 314}, {1, 323}, {-1, 332}, {1, 341}, {1, 413}, {1, 424}, {-1, 431}, {-1, 442}}},
             {4, h, {{-1, 313}, {-1, 324}, {1, 331}, {1, 342}, {-1, 414}, {1, 423}, {-1, 432}, {1, 441}}},
         });
  static const std::vector<ReferenceStructureComponent> f2 = expand(
      2, {
             {1, Rational(1),
              {{-1, 122}, {-1, 144}, {2, 212}, {2, 221}, {2, 234}, {2, 243}, {2, 414}, {-2, 423}, {-2, 432}, {2, 441}}},
             {2, Rational(1),
              {{2, 112}, {2, 121}, {2, 134}, {2, 143}, {-1, 211}, {-1, 233}, {-2, 314}, {2, 323}, {2, 332}, {-2, 341}}},
             {3, Rational(1),
              {{2, 214}, {-2, 223}, {-2, 232}, {2, 241}, {1, 322}, {1, 344}, {-2, 412}, {-2, 421}, {-2, 434}, {-2, 443}}},
             {4, Rational(1),
              {{-2, 114}, {2, 123}, {2, 132}, {-2, 141}, {-2, 312}, {-2, 321}, {-2, 334}, {-2, 343}, {1, 411}, {1, 433}}},
         });
  static const std::vector<ReferenceStructureComponent> f3 = expand(
      3, {
             {1, h, {{1, 112}, {1, 121}, {-1, 134}, {-1, 143}, {-2, 211}, {-2, 244}, {1, 413}, {1, 431}, {1, 424}, {1, 442}}},
             {2, h, {{2, 122}, {2, 133}, {-1, 212}, {-1, 221}, {1, 234}, {1, 243}, {-1, 313}, {-1, 331}, {-1, 324}, {-1, 342}}},
             {3, h, {{1, 213}, {1, 231}, {1, 224}, {1, 242}, {-1, 312}, {-1, 321}, {1, 343}, {1, 334}, {-2, 422}, {-2, 433}}},
             {4, h, {{-1, 113}, {-1, 124}, {-1, 131}, {-1, 142}, {2, 311}, {2, 344}, {1, 412}, {1, 421}, {-1, 434}, {-1, 443}}},
         });
  switch (alpha) {
    case 1:
      return f1;
    case 2:
      return f2;
    case 3:
      return f3;
    default:
      throw std::out_of_range("reference_structure_components: alpha must be 1, 2 or 3");
  }
}

}  // namespace hyperherm
