#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "implicount/formula.hpp"

namespace implicount {

// Truncated power series c_0 + c_1 x + ... + c_N x^N with exact rational
// coefficients. Every operation is exact modulo x^(N+1); combining series of
// different orders truncates to the smaller order.
class RationalSeries {
 public:
  explicit RationalSeries(unsigned order);
  // Missing coefficients are zero; extra ones are dropped.
  RationalSeries(unsigned order, std::vector<mpq_class> coefficients);

  static RationalSeries constant(unsigned order, const mpq_class& c);
  // c * x^power.
  static RationalSeries monomial(unsigned order, unsigned power, const mpq_class& c = 1);

  unsigned order() const noexcept { return static_cast<unsigned>(coefficients_.size() - 1); }
  const mpq_class& operator[](unsigned k) const { return coefficients_.at(k); }
  const std::vector<mpq_class>& coefficients() const noexcept { return coefficients_; }

  RationalSeries truncated(unsigned order) const;
  bool is_zero() const;
  std::optional<unsigned> first_nonzero() const;
  bool is_integral() const;
  // Throws SeriesError unless every coefficient has denominator 1.
  std::vector<BigCount> integer_coefficients() const;

  RationalSeries operator-() const;
  RationalSeries& operator+=(const RationalSeries& other);
  RationalSeries& operator-=(const RationalSeries& other);
  RationalSeries& operator*=(const mpq_class& scalar);

  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(RationalSeries a, const mpq_class& s) { return a *= s; }
  friend RationalSeries operator*(const mpq_class& s, RationalSeries a) { return a *= s; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  // Requires b[0] != 0.
  friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b);

 private:
  std::vector<mpq_class> coefficients_;
};

// The series s with s * s = a and s[0] = +sqrt(a[0]). Throws SeriesError
// when a[0] is not the square of a positive rational.
RationalSeries series_sqrt(const RationalSeries& a);

// G(x) = (1 - sqrt(1 - 8x)) / 2, total truth-table rows.
RationalSeries g_series(unsigned order);
// F(x) = (-1 - sqrt(1 - 8x) + sqrt(2 + 2 sqrt(1 - 8x) + 8x)) / 4, false rows.
RationalSeries f_series(unsigned order);

struct FunctionalEquationReport {
  unsigned order = 0;
  // First nonzero coefficient of F - x - F (G - F), if any.
  std::optional<unsigned> implicit_first_nonzero;
  // First nonzero coefficient of 2F^2 + F (1 + sqrt(1 - 8x)) - 2x, if any.
  std::optional<unsigned> quadratic_first_nonzero;

  bool ok() const { return !implicit_first_nonzero && !quadratic_first_nonzero; }
};

FunctionalEquationReport check_functional_equation(unsigned order);

// "n,coefficient" rows; integral coefficients print as integers, others as p/q.
void write_coefficients_csv(std::ostream& out, const RationalSeries& series);

}  // namespace implicount
