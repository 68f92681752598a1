#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "implicount/asymptotics.hpp"
#include "implicount/errors.hpp"

using namespace implicount;

namespace {

// 2^(3n-2) / sqrt(pi n^3), evaluated independently from the library.
double g_closed_form(unsigned n) {
  return std::exp((3.0 * n - 2.0) * std::log(2.0) - 0.5 * std::log(std::numbers::pi * n * double(n) * n));
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma at -1/2 follows from the recursion") {
  // Gamma(1/2) = sqrt(pi) and Gamma(x + 1) = x Gamma(x).
  CHECK(gamma_of_minus_half() == doctest::Approx(std::sqrt(std::numbers::pi) / -0.5).epsilon(1e-15));
  CHECK(gamma_of_minus_half() == doctest::Approx(std::tgamma(-0.5)).epsilon(1e-14));
}

TEST_CASE("bender_term with the G parameters") {
  for (unsigned n : {1U, 2U, 10U, 20U, 100U, 300U}) {
    CAPTURE(n);
    CHECK(relative(bender_term(g_singularity(), n), g_closed_form(n)) < 1e-12);
  }
  CHECK(relative(bender_term(g_singularity(), 1), 2.0 / std::sqrt(std::numbers::pi)) < 1e-15);
}

TEST_CASE("bender_term with the F parameters") {
  const double k = (3.0 - std::sqrt(3.0)) / 6.0;
  for (unsigned n : {1U, 10U, 200U}) CHECK(relative(bender_term(f_singularity(), n), k * g_closed_form(n)) < 1e-12);
}

TEST_CASE("bender_log_term is finite for large n") {
  const double log_term = bender_log_term(g_singularity(), 5000);
  CHECK(std::isfinite(log_term));
  CHECK(relative(log_term, g_asymptotic(5000).log_value()) < 1e-13);
  CHECK(relative(bender_term(g_singularity(), 320), g_asymptotic(320).value()) < 1e-12);
}

TEST_CASE("bender_term only supports the algebraic branch") {
  SingularityData log_branch = g_singularity();
  log_branch.b = 1;
  CHECK_THROWS_AS(bender_term(log_branch, 10), UnsupportedBranchError);
  SingularityData integer_c = g_singularity();
  integer_c.c = 2;
  CHECK_THROWS_AS(bender_term(integer_c, 10), UnsupportedBranchError);
  CHECK_THROWS_AS(bender_term(g_singularity(), 0), RangeError);
}

TEST_CASE("bender_term with another exponent uses the general gamma function") {
  // c = 3/2: a_n ~ gamma n^(-5/2) / Gamma(-3/2) r^-n.
  SingularityData sd{mpq_class(1, 4), mpq_class(3, 2), 0, 1.0};
  const double expected = std::pow(10.0, -2.5) / std::tgamma(-1.5) * std::pow(4.0, 10);
  CHECK(relative(bender_term(sd, 10), expected) < 1e-13);
}

TEST_CASE("f_10 estimate regression") {
  // exact f_10 = 1101922; the estimate is about 8.2% low.
  CHECK(f_asymptotic(10).value() == doctest::Approx(1012081.6325852503).epsilon(1e-12));
  const double r = estimate_over_exact(SequenceKind::F, 10);
  CHECK(r > 0.85);
  CHECK(r < 1.0);
  CHECK(r == doctest::Approx(0.9184693949165624).epsilon(1e-12));
}

TEST_CASE("g estimates approach the exact values monotonically") {
  double previous = 0.0;
  for (unsigned n : {10U, 100U, 1000U}) {
    const double q = estimate_over_exact(SequenceKind::G, n);
    CHECK(std::abs(1.0 - q) < std::abs(1.0 - previous));
    previous = q;
  }
  CHECK(std::abs(1.0 - previous) < 1e-3);
}

TEST_CASE("f + t = g and t/f is constant") {
  const double expected_ratio = (3.0 + std::sqrt(3.0)) / (3.0 - std::sqrt(3.0));
  for (unsigned n : {1U, 7U, 50U, 300U, 301U, 2000U}) {
    CAPTURE(n);
    const auto f = f_asymptotic(n);
    const auto t = t_asymptotic(n);
    const auto g = g_asymptotic(n);
    REQUIRE(f.log_scale == g.log_scale);
    REQUIRE(t.log_scale == g.log_scale);
    CHECK(relative(f.coefficient + t.coefficient, g.coefficient) < 1e-12);
    CHECK(relative(t.coefficient / f.coefficient, expected_ratio) < 1e-12);
    if (n <= 300) {
      CHECK(relative(f.value() + t.value(), g.value()) < 1e-12);
      CHECK(relative(t.value() / f.value(), expected_ratio) < 1e-12);
    }
  }
}

TEST_CASE("exact and asymptotic f agree to within 1% by n = 1000") {
  const double at_1000 = estimate_over_exact(SequenceKind::F, 1000);
  const double at_2000 = estimate_over_exact(SequenceKind::F, 2000);
  CHECK(at_1000 >= 0.99);
  CHECK(at_1000 <= 1.01);
  CHECK(std::abs(1.0 - at_2000) < std::abs(1.0 - at_1000));
  // Values from an independent exact computation.
  CHECK(at_1000 == doctest::Approx(0.9991698045610052).epsilon(1e-9));
  CHECK(at_2000 == doctest::Approx(0.9995848656846843).epsilon(1e-9));
}

TEST_CASE("gamma_limit_f") {
  const GammaLimit g = gamma_limit_f();
  CHECK(g.exact == doctest::Approx(-0.10566243270259355).epsilon(1e-14));
  CHECK(std::abs(g.numeric - g.exact) < 1e-5);
  CHECK(-12.0 * g.exact == doctest::Approx(3.0 - std::sqrt(3.0)).epsilon(1e-15));
  CHECK(g.exact == doctest::Approx(f_singularity().gamma).epsilon(1e-15));
  // Shrinking v tightens the difference quotient until rounding takes over.
  CHECK(std::abs(gamma_limit_f(1e-3).numeric - g.exact) > std::abs(gamma_limit_f(1e-5).numeric - g.exact));
}

TEST_CASE("t singularity constant is the difference of G and F") {
  CHECK(t_singularity().gamma == doctest::Approx(g_singularity().gamma - f_singularity().gamma).epsilon(1e-15));
}

TEST_CASE("log_of big integers") {
  CHECK(log_of(BigCount(1)) == 0.0);
  CHECK(log_of(BigCount(1) << 5000) == doctest::Approx(5000 * std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(log_of(BigCount(0)), RangeError);
}

TEST_CASE("convergence report rows") {
  const auto rows = convergence_report(10);
  REQUIRE(rows.size() == 10);
  CHECK(rows[5].n == 6);
  CHECK(rows[5].ratio == "0.2284226190");
  CHECK(rows[5].f == 614);
  CHECK(rows[5].g == 2688);
  for (const auto& r : rows) CHECK(r.distance > 0.0);

  const unsigned ns[] = {10, 100, 1000};
  const auto sampled = convergence_report(ns);
  CHECK(sampled[2].ratio == "0.2114211279");
  CHECK(sampled[0].distance > sampled[1].distance);
  CHECK(sampled[1].distance > sampled[2].distance);
  CHECK(false_fraction_limit() == doctest::Approx(0.2113248654).epsilon(1e-10));
}

TEST_CASE("convergence report formats") {
  const unsigned ns[] = {1, 2};
  const auto rows = convergence_report(ns);
  std::ostringstream csv;
  write_convergence_csv(csv, rows);
  CHECK(csv.str().rfind("n,f_n,g_n,ratio,ratio_minus_limit,estimate_over_exact\n1,1,2,0.5000000000,", 0) == 0);
  std::ostringstream table;
  write_convergence_table(table, rows);
  CHECK(table.str().find("limit (3-sqrt3)/6 = 0.2113248654") != std::string::npos);
  std::ostringstream json;
  write_convergence_json(json, rows);
  CHECK(json.str().rfind("{\"limit\":0.2113248654,\"rows\":[\n  {\"n\":1,\"f_n\":1,\"g_n\":2,\"ratio\":0.5000000000", 0) == 0);
}
