#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "hyperherm/poly.hpp"
#include "hyperherm/rational.hpp"
#include "hyperherm/scalar.hpp"

namespace hyperherm::testing {

/// Fixed-seed source for the property tests; every test builds its own.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'2024ULL + salt); }

inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 6) {
  const long p = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * max_num + 1)) - max_num;
  const long q = static_cast<long>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
  return {p, q};
}

inline ParameterPoint random_point(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

/// Random polynomial of total degree <= max_degree with up to max_terms terms.
inline Poly random_poly(std::mt19937_64& rng, int max_terms = 4, int max_degree = 3) {
  Poly p;
  const int terms = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
  for (int t = 0; t < terms; ++t) {
    Poly::Exponents e{};
    int budget = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    while (budget-- > 0) ++e[rng() % Poly::kVariables];
    p += Poly::monomial(e, random_rational(rng));
  }
  return p;
}

inline std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t d) {
  std::vector<Rational> v(d);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

}  // namespace hyperherm::testing
