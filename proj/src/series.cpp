#include "implicount/series.hpp"

#include <algorithm>
#include <ostream>

#include "implicount/errors.hpp"

namespace implicount {

RationalSeries::RationalSeries(unsigned order) : coefficients_(static_cast<std::size_t>(order) + 1) {}

RationalSeries::RationalSeries(unsigned order, std::vector<mpq_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(static_cast<std::size_t>(order) + 1);
  for (auto& c : coefficients_) c.canonicalize();
}

RationalSeries RationalSeries::constant(unsigned order, const mpq_class& c) {
  RationalSeries s(order);
  s.coefficients_[0] = c;
  return s;
}

RationalSeries RationalSeries::monomial(unsigned order, unsigned power, const mpq_class& c) {
  RationalSeries s(order);
  if (power <= order) s.coefficients_[power] = c;
  return s;
}

RationalSeries RationalSeries::truncated(unsigned order) const {
  RationalSeries s(*this);
  s.coefficients_.resize(static_cast<std::size_t>(std::min(order, this->order())) + 1);
  return s;
}

bool RationalSeries::is_zero() const { return !first_nonzero(); }

std::optional<unsigned> RationalSeries::first_nonzero() const {
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (sgn(coefficients_[k]) != 0) return static_cast<unsigned>(k);
  }
  return std::nullopt;
}

bool RationalSeries::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

std::vector<BigCount> RationalSeries::integer_coefficients() const {
  std::vector<BigCount> out;
  out.reserve(coefficients_.size());
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k].get_den() != 1) {
      throw SeriesError("coefficient of x^" + std::to_string(k) + " is not an integer: " + coefficients_[k].get_str());
    }
    out.push_back(coefficients_[k].get_num());
  }
  return out;
}

RationalSeries RationalSeries::operator-() const {
  RationalSeries s(*this);
  for (auto& c : s.coefficients_) c = -c;
  return s;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other) {
  coefficients_.resize(std::min(coefficients_.size(), other.coefficients_.size()));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& other) {
  coefficients_.resize(std::min(coefficients_.size(), other.coefficients_.size()));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const mpq_class& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  RationalSeries out(order);
  mpq_class term;
  for (unsigned k = 0; k <= order; ++k) {
    mpq_class& acc = out.coefficients_[k];
    for (unsigned i = 0; i <= k; ++i) {
      if (sgn(a.coefficients_[i]) == 0 || sgn(b.coefficients_[k - i]) == 0) continue;
      mpq_mul(term.get_mpq_t(), a.coefficients_[i].get_mpq_t(), b.coefficients_[k - i].get_mpq_t());
      acc += term;
    }
  }
  return out;
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
  if (sgn(b.coefficients_[0]) == 0) throw SeriesError("division by a series with zero constant term");
  const unsigned order = std::min(a.order(), b.order());
  RationalSeries q(order);
  mpq_class term;
  for (unsigned k = 0; k <= order; ++k) {
    mpq_class acc = a.coefficients_[k];
    for (unsigned i = 1; i <= k; ++i) {
      mpq_mul(term.get_mpq_t(), b.coefficients_[i].get_mpq_t(), q.coefficients_[k - i].get_mpq_t());
      acc -= term;
    }
    q.coefficients_[k] = acc / b.coefficients_[0];
  }
  return q;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) { return a.coefficients_ == b.coefficients_; }

namespace {

// +sqrt of a nonnegative integer, if it is a perfect square.
std::optional<mpz_class> exact_sqrt(const mpz_class& v) {
  if (sgn(v) < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root;
}

}  // namespace

RationalSeries series_sqrt(const RationalSeries& a) {
  const mpq_class& a0 = a[0];
  if (sgn(a0) <= 0) throw SeriesError("square root needs a positive constant term, got " + a0.get_str());
  const auto num = exact_sqrt(a0.get_num());
  const auto den = exact_sqrt(a0.get_den());
  if (!num || !den) throw SeriesError("constant term " + a0.get_str() + " has no rational square root");

  // s_0^2 = a_0 and, for k >= 1, 2 s_0 s_k = a_k - sum_{i=1}^{k-1} s_i s_{k-i}.
  const unsigned order = a.order();
  std::vector<mpq_class> s(static_cast<std::size_t>(order) + 1);
  s[0] = mpq_class(*num, *den);
  s[0].canonicalize();
  const mpq_class twice_s0 = 2 * s[0];
  mpq_class term;
  for (unsigned k = 1; k <= order; ++k) {
    mpq_class sum = 0;
    for (unsigned i = 1; 2 * i <= k; ++i) {
      if (i == k - i) {
        mpq_mul(term.get_mpq_t(), s[i].get_mpq_t(), s[i].get_mpq_t());
        sum += term;
      } else {
        mpq_mul(term.get_mpq_t(), s[i].get_mpq_t(), s[k - i].get_mpq_t());
        sum += 2 * term;
      }
    }
    s[k] = (a[k] - sum) / twice_s0;
  }
  return RationalSeries(order, std::move(s));
}

namespace {

// sqrt(1 - 8x).
RationalSeries inner_root(unsigned order) {
  return series_sqrt(RationalSeries::constant(order, 1) + RationalSeries::monomial(order, 1, -8));
}

}  // namespace

RationalSeries g_series(unsigned order) {
  RationalSeries g = (RationalSeries::constant(order, 1) - inner_root(order)) * mpq_class(1, 2);
  if (sgn(g[0]) != 0 || !g.is_integral()) throw SeriesError("G(x) lost integrality");
  return g;
}

RationalSeries f_series(unsigned order) {
  const RationalSeries root = inner_root(order);
  // 2 + 2 sqrt(1 - 8x) + 8x has constant term 4.
  const RationalSeries radicand =
      RationalSeries::constant(order, 2) + root * mpq_class(2) + RationalSeries::monomial(order, 1, 8);
  const RationalSeries outer = series_sqrt(radicand);
  RationalSeries f = (outer - root - RationalSeries::constant(order, 1)) * mpq_class(1, 4);
  if (sgn(f[0]) != 0 || !f.is_integral()) throw SeriesError("F(x) lost integrality");
  return f;
}

FunctionalEquationReport check_functional_equation(unsigned order) {
  const RationalSeries f = f_series(order);
  const RationalSeries g = g_series(order);
  const RationalSeries x = RationalSeries::monomial(order, 1);
  const RationalSeries one = RationalSeries::constant(order, 1);

  const RationalSeries implicit = f - x - f * (g - f);
  const RationalSeries quadratic = f * f * mpq_class(2) + f * (one + inner_root(order)) - x * mpq_class(2);
  return {order, implicit.first_nonzero(), quadratic.first_nonzero()};
}

void write_coefficients_csv(std::ostream& out, const RationalSeries& series) {
  out << "n,coefficient\n";
  for (unsigned k = 0; k <= series.order(); ++k) out << k << ',' << series[k].get_str() << '\n';
}

}  // namespace implicount
