#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "implicount/sequences.hpp"

namespace implicount {

// A(x) - A(r) ~ gamma * (-ln(1 - x/r))^b * (1 - x/r)^c near the dominant
// singularity x = r.
struct SingularityData {
  mpq_class r;
  mpq_class c;
  int b = 0;
  double gamma = 0.0;
};

// (3 - sqrt 3) / 6, the limit of f_n / g_n.
double false_fraction_limit();
// Gamma(-1/2) = -2 sqrt(pi).
double gamma_of_minus_half();

// Parameters at r = 1/8, c = 1/2, b = 0 for G, F and G - F.
SingularityData g_singularity();
SingularityData f_singularity();
SingularityData t_singularity();

// gamma * n^(-c-1) / Gamma(-c) * r^(-n). Only the b = 0 branch with c not a
// nonnegative integer is supported; anything else throws
// UnsupportedBranchError. Overflows to +-inf for large n; use
// bender_log_term there.
double bender_term(const SingularityData& sd, unsigned n);
// log |bender_term(sd, n)|, finite for every n >= 1.
double bender_log_term(const SingularityData& sd, unsigned n);

// coefficient * exp(log_scale), where exp(log_scale) = 2^(3n-2) / sqrt(pi n^3)
// is shared by the f, g and t estimates.
struct AsymptoticEstimate {
  unsigned n = 0;
  double coefficient = 0.0;
  double log_scale = 0.0;

  double log_value() const;
  // +inf once the estimate leaves double range (around n = 340).
  double value() const;
};

// K * 2^(3n-2) / sqrt(pi n^3) with K = (3-sqrt3)/6, 1 and (3+sqrt3)/6.
AsymptoticEstimate f_asymptotic(unsigned n);
AsymptoticEstimate g_asymptotic(unsigned n);
AsymptoticEstimate t_asymptotic(unsigned n);
AsymptoticEstimate asymptotic(SequenceKind kind, unsigned n);

// Natural log of a positive big integer without overflow.
double log_of(const BigCount& value);
// Asymptotic estimate divided by the exact value, computed in log space.
double estimate_over_exact(SequenceKind kind, unsigned n);

struct GammaLimit {
  double exact = 0.0;
  double numeric = 0.0;
  double v = 0.0;
};

// The limit constant for F at x = 1/8: exactly -(3 - sqrt 3)/12, and the
// difference quotient (-v + sqrt((1+v)(3-v)) - sqrt 3) / (4v) at small v.
GammaLimit gamma_limit_f(double v = 1e-6);

struct ConvergenceRow {
  unsigned n = 0;
  BigCount f;
  BigCount g;
  std::string ratio;           // 10 significant digits
  double distance = 0.0;       // exact ratio - (3 - sqrt 3)/6
  double estimate_over_exact = 0.0;
};

std::vector<ConvergenceRow> convergence_report(unsigned n_max);
std::vector<ConvergenceRow> convergence_report(std::span<const unsigned> ns);

void write_convergence_table(std::ostream& out, std::span<const ConvergenceRow> rows);
void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows);
void write_convergence_json(std::ostream& out, std::span<const ConvergenceRow> rows);

}  // namespace implicount
