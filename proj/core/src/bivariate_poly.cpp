#include "involution_lab/bivariate_poly.hpp"

#include <vector>

namespace involution_lab {

BivariatePoly BivariatePoly::constant(Dyadic c) { return monomial(0, 0, std::move(c)); }

BivariatePoly BivariatePoly::monomial(std::uint32_t x_degree, std::uint32_t y_degree, Dyadic c) {
  BivariatePoly p;
  p.add_term({x_degree, y_degree}, c);
  return p;
}

Dyadic BivariatePoly::coefficient(std::uint32_t x_degree, std::uint32_t y_degree) const {
  auto it = terms_.find({x_degree, y_degree});
  return it == terms_.end() ? Dyadic() : it->second;
}

bool BivariatePoly::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

void BivariatePoly::add_term(Monomial m, const Dyadic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

// powers[i] = base^i for i <= max_degree.
std::vector<Dyadic> powers_of(const Dyadic& base, std::uint32_t max_degree) {
  std::vector<Dyadic> powers;
  powers.reserve(max_degree + 1);
  powers.emplace_back(1);
  for (std::uint32_t i = 1; i <= max_degree; ++i) powers.push_back(powers.back() * base);
  return powers;
}

}  // namespace

Dyadic BivariatePoly::evaluate(const Dyadic& x, const Dyadic& y) const {
  std::uint32_t max_x = 0;
  std::uint32_t max_y = 0;
  for (const auto& [m, c] : terms_) {
    max_x = std::max(max_x, m.x_degree);
    max_y = std::max(max_y, m.y_degree);
  }
  const auto xs = powers_of(x, max_x);
  const auto ys = powers_of(y, max_y);
  Dyadic sum;
  for (const auto& [m, c] : terms_) sum += c * xs[m.x_degree] * ys[m.y_degree];
  return sum;
}

BivariatePoly BivariatePoly::scaled(const Dyadic& c) const {
  BivariatePoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
  return out;
}

BivariatePoly BivariatePoly::shifted(std::uint32_t dx, std::uint32_t dy) const {
  BivariatePoly out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(Monomial{m.x_degree + dx, m.y_degree + dy}, coeff);
  return out;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (m.x_degree > 0) out += "*x^" + std::to_string(m.x_degree);
    if (m.y_degree > 0) out += "*y^" + std::to_string(m.y_degree);
  }
  return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
  BivariatePoly out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term({ma.x_degree + mb.x_degree, ma.y_degree + mb.y_degree}, ca * cb);
    }
  }
  return out;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& rhs) { return *this = *this * rhs; }

}  // namespace involution_lab
