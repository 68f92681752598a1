#include "implicount/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "implicount/errors.hpp"

namespace implicount {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
// Beyond this n the direct form risks overflowing 2^(3n).
constexpr unsigned kDirectLimit = 300;

double to_double(const mpq_class& q) { return q.get_d(); }

bool is_nonnegative_integer(const mpq_class& q) { return q.get_den() == 1 && sgn(q) >= 0; }

// Gamma(-c); the value at c = 1/2 is fixed rather than computed.
double gamma_of_negated(const mpq_class& c) {
  if (c == mpq_class(1, 2)) return gamma_of_minus_half();
  return std::tgamma(-to_double(c));
}

void check_branch(const SingularityData& sd, unsigned n) {
  if (sd.b != 0) throw UnsupportedBranchError("logarithmic branch (b != 0) is not supported");
  if (is_nonnegative_integer(sd.c)) throw UnsupportedBranchError("exponent c must not be a nonnegative integer");
  if (sgn(sd.r) <= 0) throw RangeError("radius of convergence must be positive");
  if (n == 0) throw RangeError("asymptotic terms need n >= 1");
}

}  // namespace

double false_fraction_limit() { return (3.0 - kSqrt3) / 6.0; }

double gamma_of_minus_half() { return -2.0 * std::sqrt(kPi); }

SingularityData g_singularity() { return {mpq_class(1, 8), mpq_class(1, 2), 0, -0.5}; }

SingularityData f_singularity() { return {mpq_class(1, 8), mpq_class(1, 2), 0, -(3.0 - kSqrt3) / 12.0}; }

SingularityData t_singularity() { return {mpq_class(1, 8), mpq_class(1, 2), 0, -(3.0 + kSqrt3) / 12.0}; }

double bender_term(const SingularityData& sd, unsigned n) {
  check_branch(sd, n);
  const double c = to_double(sd.c);
  const double gamma_c = gamma_of_negated(sd.c);
  if (n <= kDirectLimit) {
    return sd.gamma * std::pow(static_cast<double>(n), -c - 1.0) / gamma_c * std::pow(to_double(sd.r), -double(n));
  }
  const double sign = (sd.gamma < 0) == (gamma_c < 0) ? 1.0 : -1.0;
  return sign * std::exp(bender_log_term(sd, n));
}

double bender_log_term(const SingularityData& sd, unsigned n) {
  check_branch(sd, n);
  const double c = to_double(sd.c);
  return std::log(std::abs(sd.gamma)) - (c + 1.0) * std::log(double(n)) -
         std::log(std::abs(gamma_of_negated(sd.c))) - double(n) * std::log(to_double(sd.r));
}

double AsymptoticEstimate::log_value() const { return std::log(coefficient) + log_scale; }

double AsymptoticEstimate::value() const { return coefficient * std::exp(log_scale); }

namespace {

AsymptoticEstimate closed_form(double constant, unsigned n) {
  if (n == 0) throw RangeError("asymptotic estimates need n >= 1");
  const double nd = n;
  if (n <= kDirectLimit) {
    return {n, constant, std::log(std::ldexp(1.0, 3 * static_cast<int>(n) - 2) / std::sqrt(kPi * nd * nd * nd))};
  }
  return {n, constant, (3.0 * nd - 2.0) * kLn2 - 0.5 * std::log(kPi) - 1.5 * std::log(nd)};
}

}  // namespace

AsymptoticEstimate f_asymptotic(unsigned n) { return closed_form((3.0 - kSqrt3) / 6.0, n); }
AsymptoticEstimate g_asymptotic(unsigned n) { return closed_form(1.0, n); }
AsymptoticEstimate t_asymptotic(unsigned n) { return closed_form((3.0 + kSqrt3) / 6.0, n); }

AsymptoticEstimate asymptotic(SequenceKind kind, unsigned n) {
  switch (kind) {
    case SequenceKind::F: return f_asymptotic(n);
    case SequenceKind::G: return g_asymptotic(n);
    case SequenceKind::T: return t_asymptotic(n);
  }
  throw RangeError("unknown sequence kind");
}

double log_of(const BigCount& value) {
  if (sgn(value) <= 0) throw RangeError("log of a nonpositive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + double(exponent) * kLn2;
}

double estimate_over_exact(SequenceKind kind, unsigned n) {
  auto& cache = SequenceCache::instance();
  BigCount exact;
  switch (kind) {
    case SequenceKind::F: exact = cache.f(n); break;
    case SequenceKind::G: exact = cache.g(n); break;
    case SequenceKind::T: exact = cache.t(n); break;
  }
  return std::exp(asymptotic(kind, n).log_value() - log_of(exact));
}

GammaLimit gamma_limit_f(double v) {
  const double numeric = (-v + std::sqrt((1.0 + v) * (3.0 - v)) - kSqrt3) / (4.0 * v);
  return {-(3.0 - kSqrt3) / 12.0, numeric, v};
}

// ---------------------------------------------------------------------------

std::vector<ConvergenceRow> convergence_report(unsigned n_max) {
  std::vector<unsigned> ns;
  for (unsigned n = 1; n <= n_max; ++n) ns.push_back(n);
  return convergence_report(ns);
}

std::vector<ConvergenceRow> convergence_report(std::span<const unsigned> ns) {
  auto& cache = SequenceCache::instance();
  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (unsigned n : ns) {
    ConvergenceRow row;
    row.n = n;
    row.f = cache.f(n);
    row.g = cache.g(n);
    const mpq_class exact = cache.ratio(n);
    row.ratio = to_significant(exact, 10);
    row.distance = mpq_class(exact).get_d() - false_fraction_limit();
    row.estimate_over_exact = estimate_over_exact(SequenceKind::F, n);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Full digits when short, otherwise mantissa and decimal exponent.
std::string compact(const BigCount& v) {
  std::string digits = v.get_str();
  if (digits.size() <= 20) return digits;
  return digits.substr(0, 1) + "." + digits.substr(1, 9) + "e+" + std::to_string(digits.size() - 1);
}

std::string fixed(double v, int precision, const char* style) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, style, precision, v);
  return buffer;
}

}  // namespace

void write_convergence_table(std::ostream& out, std::span<const ConvergenceRow> rows) {
  std::size_t wn = 1, wf = 3, wg = 3;
  for (const auto& r : rows) {
    wn = std::max(wn, std::to_string(r.n).size());
    wf = std::max(wf, compact(r.f).size());
    wg = std::max(wg, compact(r.g).size());
  }
  const auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  out << pad("n", wn) << " | " << pad("f_n", wf) << " | " << pad("g_n", wg) << " | f_n/g_n      | ratio - limit | est/exact\n";
  for (const auto& r : rows) {
    out << pad(std::to_string(r.n), wn) << " | " << pad(compact(r.f), wf) << " | " << pad(compact(r.g), wg) << " | "
        << r.ratio << std::string(r.ratio.size() < 12 ? 12 - r.ratio.size() : 0, ' ') << " | "
        << fixed(r.distance, 6, "%13.*e") << " | " << fixed(r.estimate_over_exact, 10, "%.*f") << '\n';
  }
  out << "limit (3-sqrt3)/6 = " << fixed(false_fraction_limit(), 10, "%.*f") << '\n';
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
  out << "n,f_n,g_n,ratio,ratio_minus_limit,estimate_over_exact\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.f << ',' << r.g << ',' << r.ratio << ',' << fixed(r.distance, 10, "%.*e") << ','
        << fixed(r.estimate_over_exact, 12, "%.*f") << '\n';
  }
}

void write_convergence_json(std::ostream& out, std::span<const ConvergenceRow> rows) {
  out << "{\"limit\":" << fixed(false_fraction_limit(), 10, "%.*f") << ",\"rows\":[";
  bool first = true;
  for (const auto& r : rows) {
    out << (first ? "\n  " : ",\n  ");
    first = false;
    out << "{\"n\":" << r.n << ",\"f_n\":" << r.f << ",\"g_n\":" << r.g << ",\"ratio\":" << r.ratio
        << ",\"ratio_minus_limit\":" << fixed(r.distance, 10, "%.*e")
        << ",\"estimate_over_exact\":" << fixed(r.estimate_over_exact, 12, "%.*f") << '}';
  }
  out << (rows.empty() ? "]}\n" : "\n]}\n");
}

}  // namespace implicount
