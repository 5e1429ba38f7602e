#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "involution_lab/dyadic.hpp"

namespace involution_lab {

/// Exponent pair of a monomial x^x_degree y^y_degree.
struct Monomial {
  std::uint32_t x_degree = 0;
  std::uint32_t y_degree = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in x and y with dyadic coefficients. Zero coefficients
/// are never stored, so equality is structural.
class BivariatePoly {
 public:
  using TermMap = std::map<Monomial, Dyadic>;

  BivariatePoly() = default;

  static BivariatePoly constant(Dyadic c);
  static BivariatePoly monomial(std::uint32_t x_degree, std::uint32_t y_degree, Dyadic c = Dyadic(1));
  static BivariatePoly x() { return monomial(1, 0); }
  static BivariatePoly y() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Dyadic coefficient(std::uint32_t x_degree, std::uint32_t y_degree) const;
  bool has_integer_coefficients() const;

  Dyadic evaluate(const Dyadic& x, const Dyadic& y) const;

  /// Multiplies every coefficient by c.
  BivariatePoly scaled(const Dyadic& c) const;
  /// Multiplies by the monomial x^dx y^dy.
  BivariatePoly shifted(std::uint32_t dx, std::uint32_t dy) const;

  void add_term(Monomial m, const Dyadic& c);

  std::string to_string() const;

  BivariatePoly& operator+=(const BivariatePoly& rhs);
  BivariatePoly& operator-=(const BivariatePoly& rhs);
  BivariatePoly& operator*=(const BivariatePoly& rhs);

  friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }
  friend BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }
  friend BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  TermMap terms_;
};

inline Dyadic poly_eval(const BivariatePoly& p, const Dyadic& x, const Dyadic& y) { return p.evaluate(x, y); }

}  // namespace involution_lab
