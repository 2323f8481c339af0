#pragma once

#include <array>
#include <concepts>
#include <span>
#include <string>

#include "hyperherm/poly.hpp"
#include "hyperherm/rational.hpp"

namespace hyperherm {

/// Exact commutative ring with rational constants. Both Rational and Poly
/// model it, so every geometric computation can run symbolically (Poly) or
/// at a concrete parameter point (Rational).
template <class S>
concept Scalar = std::regular<S> && requires(S a, const S& b, const Rational& r) {
  S(r);
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -b } -> std::convertible_to<S>;
  a += b;
  a -= b;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.to_string() } -> std::convertible_to<std::string>;
};

static_assert(Scalar<Rational>);
static_assert(Scalar<Poly>);

template <Scalar S>
S lift(const Rational& r) {
  return S(r);
}

using ParameterPoint = std::array<Rational, Poly::kVariables>;

inline Rational evaluate(const Poly& p, const ParameterPoint& point) { return p.eval(point); }
inline Rational evaluate(const Rational& r, const ParameterPoint&) { return r; }

}  // namespace hyperherm
