#pragma once

#include <iosfwd>
#include <mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "implicount/formula.hpp"

namespace implicount {

enum class SequenceKind { F, G, T };

const char* to_string(SequenceKind kind);

// values[n] for n = 0 .. n_max.
struct SequenceTable {
  SequenceKind kind = SequenceKind::F;
  std::vector<BigCount> values;

  unsigned n_max() const { return values.empty() ? 0 : static_cast<unsigned>(values.size() - 1); }
  const BigCount& operator[](unsigned n) const { return values.at(n); }
};

// False rows summed over all bracketings:
//   f_0 = 0, f_1 = 1, f_n = sum_{i=1}^{n-1} (2^i C_i - f_i) f_{n-i}.
SequenceTable f_recurrence(unsigned n_max);
// Total rows, g_n = 2^n C_n.
SequenceTable g_sequence(unsigned n_max);
// True rows, t_n = g_n - f_n.
SequenceTable t_sequence(unsigned n_max);

// f_n, g_n, t_n on demand, extended incrementally and kept for the life of
// the process. Thread-safe; returned values are copies.
class SequenceCache {
 public:
  static SequenceCache& instance();

  BigCount f(unsigned n);
  BigCount g(unsigned n);
  BigCount t(unsigned n);
  // Tables for 0 .. n_max, consistent with the free functions above.
  SequenceTable table(SequenceKind kind, unsigned n_max);
  mpq_class ratio(unsigned n);

 private:
  SequenceCache() = default;
  // Pre: mutex_ held.
  void extend(unsigned n_max);

  std::mutex mutex_;
  std::vector<BigCount> f_{0, 1};
  std::vector<BigCount> g_{0, 2};
  std::vector<BigCount> t_{0, 1};
};

// f_n / g_n exactly. Requires n >= 1.
mpq_class ratio_exact(unsigned n);
// f_n / g_n rounded half-up to `significant_digits` significant digits.
std::string ratio(unsigned n, unsigned significant_digits = 10);

// Positive rational to a fixed number of significant digits, half-up,
// trailing zeros kept ("0.5000000000").
std::string to_significant(const mpq_class& value, unsigned significant_digits);

// n,f_n,g_n,t_n,ratio for n = 1 .. n_max.
void write_sequence_csv(std::ostream& out, unsigned n_max);
void write_sequence_json(std::ostream& out, unsigned n_max);

}  // namespace implicount
