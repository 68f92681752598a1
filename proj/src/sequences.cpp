#include "implicount/sequences.hpp"

#include <cmath>
#include <ostream>

#include "implicount/errors.hpp"

namespace implicount {

const char* to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::F: return "f";
    case SequenceKind::G: return "g";
    case SequenceKind::T: return "t";
  }
  return "?";
}

namespace {

BigCount g_value(unsigned n) {
  BigCount g = catalan(n);
  mpz_mul_2exp(g.get_mpz_t(), g.get_mpz_t(), n);
  return g;
}

}  // namespace

SequenceTable f_recurrence(unsigned n_max) {
  SequenceTable table{SequenceKind::F, std::vector<BigCount>(std::max(n_max, 1U) + 1)};
  auto& f = table.values;
  std::vector<BigCount> weight(f.size());  // 2^i C_i - f_i
  f[0] = 0;
  f[1] = 1;
  weight[1] = g_value(1) - f[1];
  BigCount term;
  for (unsigned n = 2; n <= n_max; ++n) {
    BigCount sum = 0;
    for (unsigned i = 1; i < n; ++i) {
      mpz_addmul(sum.get_mpz_t(), weight[i].get_mpz_t(), f[n - i].get_mpz_t());
    }
    f[n] = std::move(sum);
    weight[n] = g_value(n) - f[n];
  }
  table.values.resize(n_max + 1);
  return table;
}

SequenceTable g_sequence(unsigned n_max) {
  SequenceTable table{SequenceKind::G, {}};
  table.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) table.values.push_back(g_value(n));
  return table;
}

SequenceTable t_sequence(unsigned n_max) {
  const SequenceTable f = f_recurrence(n_max);
  const SequenceTable g = g_sequence(n_max);
  SequenceTable table{SequenceKind::T, {}};
  table.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) table.values.push_back(g[n] - f[n]);
  return table;
}

// ---------------------------------------------------------------------------

SequenceCache& SequenceCache::instance() {
  static SequenceCache cache;
  return cache;
}

void SequenceCache::extend(unsigned n_max) {
  if (n_max < f_.size()) return;
  const std::size_t old = f_.size();
  f_.resize(n_max + 1);
  g_.resize(n_max + 1);
  t_.resize(n_max + 1);
  for (std::size_t n = old; n <= n_max; ++n) {
    BigCount sum = 0;
    for (std::size_t i = 1; i < n; ++i) mpz_addmul(sum.get_mpz_t(), t_[i].get_mpz_t(), f_[n - i].get_mpz_t());
    f_[n] = std::move(sum);
    g_[n] = g_value(static_cast<unsigned>(n));
    t_[n] = g_[n] - f_[n];
  }
}

BigCount SequenceCache::f(unsigned n) {
  std::lock_guard lock(mutex_);
  extend(n);
  return f_[n];
}

BigCount SequenceCache::g(unsigned n) {
  std::lock_guard lock(mutex_);
  extend(n);
  return g_[n];
}

BigCount SequenceCache::t(unsigned n) {
  std::lock_guard lock(mutex_);
  extend(n);
  return t_[n];
}

SequenceTable SequenceCache::table(SequenceKind kind, unsigned n_max) {
  std::lock_guard lock(mutex_);
  extend(n_max);
  SequenceTable out{kind, {}};
  out.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    switch (kind) {
      case SequenceKind::F: out.values.push_back(f_[n]); break;
      case SequenceKind::G: out.values.push_back(g_[n]); break;
      case SequenceKind::T: out.values.push_back(t_[n]); break;
    }
  }
  return out;
}

mpq_class SequenceCache::ratio(unsigned n) {
  if (n == 0) throw RangeError("ratio f_n/g_n needs n >= 1");
  std::lock_guard lock(mutex_);
  extend(n);
  mpq_class q(f_[n], g_[n]);
  q.canonicalize();
  return q;
}

mpq_class ratio_exact(unsigned n) { return SequenceCache::instance().ratio(n); }

std::string ratio(unsigned n, unsigned significant_digits) {
  return to_significant(ratio_exact(n), significant_digits);
}

std::string to_significant(const mpq_class& value, unsigned significant_digits) {
  if (significant_digits == 0) throw RangeError("need at least one significant digit");
  if (sgn(value) < 0) throw RangeError("only nonnegative values are formatted");
  if (sgn(value) == 0) return "0";

  // Decimal exponent e with 10^e <= value < 10^(e+1).
  long e = static_cast<long>(std::floor(std::log10(value.get_d())));
  const auto pow10 = [](long k) {
    mpq_class p(1);
    mpz_class ten_k;
    mpz_ui_pow_ui(ten_k.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) {
      p = mpq_class(ten_k);
    } else {
      p = mpq_class(mpz_class(1), ten_k);
      p.canonicalize();
    }
    return p;
  };
  while (value < pow10(e)) --e;
  while (value >= pow10(e + 1)) ++e;

  const long d = static_cast<long>(significant_digits);
  mpq_class scaled = value * pow10(d - 1 - e) + mpq_class(1, 2);
  mpz_class digits_value = scaled.get_num() / scaled.get_den();  // floor, scaled > 0
  mpz_class limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, significant_digits);
  if (digits_value >= limit) {
    digits_value /= 10;
    ++e;
  }
  const std::string digits = digits_value.get_str();

  std::string out;
  if (e < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  } else if (e >= d - 1) {
    out = digits + std::string(static_cast<std::size_t>(e - d + 1), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." + digits.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

void write_sequence_csv(std::ostream& out, unsigned n_max) {
  auto& cache = SequenceCache::instance();
  out << "n,f_n,g_n,t_n,ratio\n";
  for (unsigned n = 1; n <= n_max; ++n) {
    out << n << ',' << cache.f(n) << ',' << cache.g(n) << ',' << cache.t(n) << ',' << ratio(n) << '\n';
  }
}

void write_sequence_json(std::ostream& out, unsigned n_max) {
  // Integers are written as exact JSON number literals; they outgrow 64 bits.
  auto& cache = SequenceCache::instance();
  out << '[';
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) out << ',';
    out << "\n  {\"n\":" << n << ",\"f_n\":" << cache.f(n) << ",\"g_n\":" << cache.g(n) << ",\"t_n\":" << cache.t(n)
        << ",\"ratio\":" << ratio(n) << '}';
  }
  out << (n_max > 0 ? "\n]\n" : "]\n");
}

}  // namespace implicount
