#include "hyperherm/poly.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hyperherm {

namespace {

int degree_of(const Poly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string render_monomial(const Poly::Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'l' + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

// coefficient * monomial for one term; coefficient sign included.
std::string render_term(const Poly::Exponents& e, const Rational& c) {
  const std::string mono = render_monomial(e);
  if (mono.empty()) return c.to_string();
  if (c == Rational(1)) return mono;
  if (c == Rational(-1)) return "-" + mono;
  return c.to_string() + "*" + mono;
}

}  // namespace

bool Poly::GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Poly Poly::variable(std::size_t index) {
  if (index >= kVariables) throw std::out_of_range("Poly::variable: index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(e, Rational(1));
}

Poly Poly::monomial(const Exponents& exponents, const Rational& coefficient) {
  Poly p;
  p.add_term(exponents, coefficient);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.begin()->first); }

Rational Poly::eval(std::span<const Rational, kVariables> point) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kVariables; ++i) {
      for (std::uint16_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::optional<Rational> Poly::ratio_to(const Poly& other) const {
  if (is_zero()) return Rational(0);
  if (other.is_zero()) return std::nullopt;
  const auto& [lead_e, lead_c] = *other.terms_.begin();
  auto it = terms_.find(lead_e);
  if (it == terms_.end()) return std::nullopt;
  Rational r = it->second / lead_c;
  if (*this == other * r) return r;
  return std::nullopt;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1) return render_term(terms_.begin()->first, terms_.begin()->second);

  // Pull out a rational content so the remaining coefficients are coprime
  // integers with a positive leading coefficient.
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  Rational content(mpq_class(num_gcd, den_lcm));
  if (terms_.begin()->second.sign() < 0) content = -content;

  std::string inner;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational k = c / content;
    if (first) {
      inner = render_term(e, k);
      first = false;
    } else if (k.sign() < 0) {
      inner += " - " + render_term(e, -k);
    } else {
      inner += " + " + render_term(e, k);
    }
  }
  if (content == Rational(1)) return inner;
  if (content == Rational(-1)) return "-(" + inner + ")";
  return content.to_string() + "*(" + inner + ")";
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Poly::Exponents e{};
      for (std::size_t i = 0; i < Poly::kVariables; ++i) {
        e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace hyperherm
