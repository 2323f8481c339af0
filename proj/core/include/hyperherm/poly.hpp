#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "hyperherm/rational.hpp"

namespace hyperherm {

/// Polynomial in the four family parameters l1..l4 with rational coefficients.
///
/// Terms are kept in a map ordered by descending graded-lex order on the
/// exponent vector, and zero coefficients are never stored, so two equal
/// polynomials always have identical term maps.
class Poly {
 public:
  static constexpr std::size_t kVariables = 4;
  using Exponents = std::array<std::uint16_t, kVariables>;

  /// Strict weak order placing higher total degree first, then
  /// lexicographically larger exponent vectors (l1 > l2 > l3 > l4).
  struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  Poly() = default;
  explicit Poly(const Rational& constant);

  /// The variable l_{index+1}; index is 0-based.
  static Poly variable(std::size_t index);
  static Poly monomial(const Exponents& exponents, const Rational& coefficient);

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] int total_degree() const;

  /// Substitutes l_i := point[i-1].
  [[nodiscard]] Rational eval(std::span<const Rational, kVariables> point) const;

  /// Returns r with *this == r * other, if such a rational r exists.
  /// Undefined ratio (other == 0) yields nullopt unless *this is also zero,
  /// in which case 0 is returned.
  [[nodiscard]] std::optional<Rational> ratio_to(const Poly& other) const;

  /// Deterministic rendering, e.g. "-1/4*(l1^2 + l2^2)", "1/2*l1", "0".
  [[nodiscard]] std::string to_string() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hyperherm
