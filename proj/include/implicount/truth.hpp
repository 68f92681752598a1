#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "implicount/formula.hpp"
#include "implicount/limits.hpp"

namespace implicount {

// Assignment of 0/1 to p1 .. pn.
class Valuation {
 public:
  // All variables true.
  explicit Valuation(unsigned n);
  // bits[i] is the value of p_{i+1}.
  explicit Valuation(std::vector<std::uint8_t> bits);
  // The valuation stored at truth-column position `row`: p_i is bit (n - i) of row.
  static Valuation from_row(unsigned n, std::uint64_t row);
  // Parses "1010"-style strings, p1 first.
  static Valuation from_string(std::string_view bits);

  unsigned n() const noexcept { return static_cast<unsigned>(bits_.size()); }
  // Value of p_i, 1 <= i <= n. Throws RangeError outside that range.
  bool operator[](std::uint32_t i) const;
  void set(std::uint32_t i, bool value);
  // Truth-column position; requires n <= 63.
  std::uint64_t row() const;
  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

bool evaluate(const Formula& f, const Valuation& v);

// Packed truth function over n variables. Position k holds the value under
// Valuation::from_row(n, k); padding bits past 2^n are zero.
class TruthColumn {
 public:
  TruthColumn(unsigned n, std::vector<std::uint64_t> words);

  unsigned n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  bool operator[](std::uint64_t row) const { return (words_[row >> 6] >> (row & 63)) & 1U; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::uint64_t count_true() const;
  std::uint64_t count_false() const { return size() - count_true(); }
  // Values in display order (descending row, i.e. 1..1 first), as '0'/'1'.
  std::string display_bits() const;

  friend bool operator==(const TruthColumn&, const TruthColumn&) = default;
  friend auto operator<=>(const TruthColumn&, const TruthColumn&) = default;

 private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

struct TruthColumnHash {
  std::size_t operator()(const TruthColumn& c) const noexcept;
};

// Word-parallel evaluator for a fixed variable count. Holds the precomputed
// variable masks so repeated evaluations allocate nothing per node.
class ColumnEvaluator {
 public:
  explicit ColumnEvaluator(unsigned n, const Limits& limits = Limits::global());

  unsigned n() const noexcept { return n_; }
  std::size_t word_count() const noexcept { return words_; }

  // Column of f; variable p_i of f reads the mask of variable remap[i - 1]
  // when remap is non-empty (used for permuted formulas).
  TruthColumn column(const Formula& f, std::span<const std::uint32_t> remap = {});
  std::uint64_t count_false(const Formula& f, std::span<const std::uint32_t> remap = {});

 private:
  const std::uint64_t* mask(std::uint32_t variable) const;
  void eval(const Formula& f, std::span<const std::uint32_t> remap, std::uint64_t* out, std::uint64_t* scratch);
  void compute(const Formula& f, std::span<const std::uint32_t> remap);

  unsigned n_;
  std::size_t words_;
  std::uint64_t valid_;  // mask for the last (only) word when n < 6
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> scratch_;
};

// n is max(f.max_index(), n_vars).
TruthColumn truth_column(const Formula& f, unsigned n_vars = 0, const Limits& limits = Limits::global());
BigCount count_false(const Formula& f, const Limits& limits = Limits::global());

// Total false rows over every bracketing of n variables. threads == 0 uses
// the available hardware parallelism; the result does not depend on it.
BigCount brute_force_f(unsigned n, unsigned threads = 0, const Limits& limits = Limits::global());
// Total rows over every bracketing, counted the same way (sanity companion).
BigCount brute_force_rows(unsigned n, const Limits& limits = Limits::global());

// nu_i: every variable true except p_i.
Valuation probe_nu(unsigned n, std::uint32_t i);
// nu_{i,j}: every variable true except p_i and p_j, i < j.
Valuation probe_nu2(unsigned n, std::uint32_t i, std::uint32_t j);

struct TruthOracle {
  unsigned n = 0;
  std::function<bool(const Valuation&)> query;
};

TruthOracle oracle_of(const Formula& f);
TruthOracle oracle_of(const TruthColumn& column);

// Reconstructs the bracketing whose truth function the oracle answers.
// Throws InconsistentOracleError when the answers cannot come from a
// bracketed implication (nu_n is true, or no split point exists).
Formula recover_bracketing(const TruthOracle& oracle);

// Merged truth table over n = max variable index, one row per valuation
// from 1..1 down to 0..0:
//   p1 p2 p3 | p1->(p2->p3) | (p1->p2)->p3
void write_truth_table(std::ostream& out, std::span<const Formula> formulas, const Limits& limits = Limits::global());
void write_truth_table_csv(std::ostream& out, std::span<const Formula> formulas,
                           const Limits& limits = Limits::global());
// {"n":..., "formula":..., "false_rows":[...], "false_count":...}; an array
// of such objects when more than one formula is given.
void write_truth_table_json(std::ostream& out, std::span<const Formula> formulas,
                            const Limits& limits = Limits::global());

// Reads a truth function back: either a table as written by
// write_truth_table (one "bits | value" row per valuation, rows in any order,
// header lines ignored), or a single line of 2^n 0/1 characters in display
// order. Throws SyntaxError on malformed input.
TruthColumn read_truth_table(std::istream& in, unsigned n);

}  // namespace implicount
