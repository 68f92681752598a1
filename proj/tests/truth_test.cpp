#include <doctest.h>

#include <set>
#include <sstream>

#include "implicount/errors.hpp"
#include "implicount/sequences.hpp"
#include "implicount/truth.hpp"

using namespace implicount;

namespace {

// False rows of f by 2^n individual evaluations.
std::uint64_t count_false_by_rows(const Formula& f, unsigned n) {
  std::uint64_t zeros = 0;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) zeros += !evaluate(f, Valuation::from_row(n, row));
  return zeros;
}

Valuation vals(std::vector<std::uint8_t> bits) { return Valuation(std::move(bits)); }

}  // namespace

TEST_CASE("evaluate follows implication semantics") {
  const Formula left = parse("(p1->p2)->p3");
  const Formula right = parse("p1->(p2->p3)");
  CHECK(evaluate(left, vals({0, 1, 0})) == false);
  CHECK(evaluate(right, vals({0, 1, 0})) == true);
  CHECK(evaluate(parse("p1"), vals({1})) == true);
  CHECK_THROWS_AS(evaluate(parse("p1->p2"), vals({1})), RangeError);
}

TEST_CASE("merged n = 3 truth table") {
  // Rows 111, 110, 101, 100, 011, 010, 001, 000.
  const TruthColumn right = truth_column(parse("p1->(p2->p3)"));
  const TruthColumn left = truth_column(parse("(p1->p2)->p3"));
  CHECK(right.display_bits() == "10111111");
  CHECK(left.display_bits() == "10111010");
  CHECK(right.count_false() == 1);
  CHECK(left.count_false() == 3);
  CHECK_FALSE(right[Valuation::from_string("110").row()]);
  for (const char* row : {"110", "010", "000"}) CHECK_FALSE(left[Valuation::from_string(row).row()]);
}

TEST_CASE("single variable column") {
  const TruthColumn c = truth_column(parse("p1"));
  CHECK(c.display_bits() == "10");
  CHECK(c.words()[0] == 0b10);
}

TEST_CASE("valuation row layout puts p1 in the high bit") {
  const Valuation v = Valuation::from_row(4, 0b1010);
  CHECK(v.to_string() == "1010");
  CHECK(v[1]);
  CHECK_FALSE(v[2]);
  CHECK(v.row() == 0b1010);
  CHECK_THROWS_AS(Valuation::from_row(3, 8), RangeError);
  CHECK_THROWS_AS(Valuation::from_string("102"), RangeError);
}

TEST_CASE("count_false matches the examples") {
  CHECK(count_false(parse("p1->(p2->p3)")) == 1);
  CHECK(count_false(parse("(p1->p2)->p3")) == 3);
  CHECK(count_false(parse("p1")) == 1);
}

TEST_CASE("word-parallel columns agree with per-row evaluation") {
  for (unsigned n = 1; n <= 8; ++n) {
    ColumnEvaluator evaluator(n);
    for_each_bracketing(n, [&](const Formula& f) {
      const TruthColumn column = evaluator.column(f);
      for (std::uint64_t row = 0; row < column.size(); ++row) {
        REQUIRE(column[row] == evaluate(f, Valuation::from_row(n, row)));
      }
      CHECK(evaluator.count_false(f) == count_false_by_rows(f, n));
    });
  }
}

TEST_CASE("padding bits stay zero") {
  for (unsigned n = 1; n <= 5; ++n) {
    for_each_bracketing(n, [&](const Formula& f) {
      const TruthColumn c = truth_column(f);
      CHECK((c.words()[0] >> (1U << n)) == 0);
    });
  }
}

TEST_CASE("columns over n >= 7 span several words") {
  const Formula f = parse("p1->(p2->(p3->(p4->(p5->(p6->(p7->(p8->p9)))))))");
  const TruthColumn c = truth_column(f);
  CHECK(c.words().size() == 8);
  CHECK(c.count_false() == 1);
  CHECK_FALSE(c[Valuation::from_string("111111110").row()]);
}

TEST_CASE("extra variables widen the column") {
  const TruthColumn c = truth_column(parse("p1->p2"), 3);
  CHECK(c.n() == 3);
  CHECK(c.display_bits() == "11001111");
}

TEST_CASE("column guard") {
  Limits tight;
  tight.column_max_n = 4;
  CHECK_THROWS_AS(truth_column(parse("(p1->p2)->((p3->p4)->p5)"), 0, tight), ResourceLimitError);
}

TEST_CASE("all-true valuation satisfies every bracketing") {
  for (unsigned n = 1; n <= 9; ++n) {
    for_each_bracketing(n, [&](const Formula& f) { CHECK(evaluate(f, Valuation(n))); });
  }
}

TEST_CASE("probe valuations") {
  CHECK(probe_nu(3, 3).to_string() == "110");
  CHECK(probe_nu(1, 1).to_string() == "0");
  CHECK(probe_nu2(4, 2, 4).to_string() == "1010");
  CHECK(probe_nu2(2, 1, 2).to_string() == "00");
  CHECK_THROWS_AS(probe_nu(3, 0), RangeError);
  CHECK_THROWS_AS(probe_nu(3, 4), RangeError);
  CHECK_THROWS_AS(probe_nu2(3, 2, 2), RangeError);
  CHECK_THROWS_AS(probe_nu2(3, 3, 1), RangeError);
  CHECK_THROWS_AS(probe_nu2(3, 1, 4), RangeError);
}

TEST_CASE("probe properties hold for every bracketing") {
  for (unsigned n = 1; n <= 10; ++n) {
    for_each_bracketing(n, [&](const Formula& f) {
      CHECK_FALSE(evaluate(f, probe_nu(n, n)));
      for (unsigned i = 1; i < n; ++i) CHECK(evaluate(f, probe_nu(n, i)));
      if (n >= 2) {
        const unsigned split = f.antecedent().leaves();
        for (unsigned i = 1; i < split; ++i) CHECK_FALSE(evaluate(f, probe_nu2(n, i, n)));
        CHECK(evaluate(f, probe_nu2(n, split, n)));
      }
    });
  }
}

TEST_CASE("truth columns are pairwise distinct") {
  for (unsigned n = 1; n <= 9; ++n) {
    ColumnEvaluator evaluator(n);
    std::set<TruthColumn> seen;
    for_each_bracketing(n, [&](const Formula& f) { seen.insert(evaluator.column(f)); });
    CHECK(seen.size() == catalan_u64(n));
  }
}

TEST_CASE("recover_bracketing examples") {
  CHECK(recover_bracketing(oracle_of(truth_column(parse("(p1->p2)->p3")))) == parse("(p1->p2)->p3"));
  CHECK(recover_bracketing(oracle_of(parse("p1"))) == parse("p1"));
  // A permuted formula shares its function with p1->(p2->p3), which is what
  // recovery returns.
  CHECK(recover_bracketing(oracle_of(parse("p2->(p1->p3)", VariableMode::Free))) == parse("p1->(p2->p3)"));
}

TEST_CASE("recover_bracketing roundtrips every bracketing") {
  for (unsigned n = 1; n <= 9; ++n) {
    ColumnEvaluator evaluator(n);
    for_each_bracketing(n, [&](const Formula& f) { CHECK(recover_bracketing(oracle_of(evaluator.column(f))) == f); });
  }
}

TEST_CASE("recover_bracketing works beyond materializable tables") {
  // 40 variables: far too many rows to tabulate, so query the formula directly.
  Formula tail = Formula::var(5);
  for (std::uint32_t i = 6; i <= 40; ++i) {
    if (i % 3 == 0 && i < 40) {
      tail = Formula::implies(tail, Formula::implies(Formula::var(i), Formula::var(i + 1)));
      ++i;
    } else {
      tail = Formula::implies(tail, Formula::var(i));
    }
  }
  Formula right = Formula::var(40);
  for (std::uint32_t i = 39; i >= 5; --i) right = Formula::implies(Formula::var(i), right);
  for (const Formula& rest : {tail, right}) {
    const Formula f = Formula::implies(parse("(p1->p2)->(p3->p4)"), rest);
    REQUIRE(f.is_standard());
    CHECK(recover_bracketing(oracle_of(f)) == f);
  }
}

TEST_CASE("recover_bracketing rejects inconsistent oracles") {
  CHECK_THROWS_AS(recover_bracketing({3, [](const Valuation&) { return true; }}), InconsistentOracleError);
  CHECK_THROWS_AS(recover_bracketing({3, [](const Valuation&) { return false; }}), InconsistentOracleError);
  // p3 alone: false at nu_3 and at every nu_{i,3}, so no split point.
  CHECK_THROWS_AS(recover_bracketing({3, [](const Valuation& v) { return v[3]; }}), InconsistentOracleError);
  // A non-standard variable order is not a standard bracketing function.
  CHECK_THROWS_AS(recover_bracketing(oracle_of(parse("p3->(p1->p2)", VariableMode::Free))), InconsistentOracleError);
}

TEST_CASE("brute_force_f small values") {
  CHECK(brute_force_f(1) == 1);
  CHECK(brute_force_f(3) == 4);
  CHECK(brute_force_f(4) == 19);
  CHECK(brute_force_f(7) == 3816);
}

TEST_CASE("brute_force_f does not depend on the thread count") {
  const BigCount reference = brute_force_f(9, 1);
  for (unsigned threads : {2U, 3U, 7U, 64U}) CHECK(brute_force_f(9, threads) == reference);
}

TEST_CASE("brute force totals match the other routes") {
  const SequenceTable f = f_recurrence(11);
  const SequenceTable g = g_sequence(11);
  for (unsigned n = 1; n <= 11; ++n) {
    CHECK(brute_force_f(n) == f[n]);
    CHECK(brute_force_rows(n) == g[n]);
  }
}

TEST_CASE("brute force guard") {
  Limits tight;
  tight.brute_force_max_n = 6;
  CHECK_THROWS_AS(brute_force_f(7, 1, tight), ResourceLimitError);
}

TEST_CASE("truth table text layout") {
  const std::vector<Formula> fs{parse("p1->(p2->p3)"), parse("(p1->p2)->p3")};
  std::ostringstream out;
  write_truth_table(out, fs);
  CHECK(out.str() ==
        "p1 p2 p3 | p1->(p2->p3) | (p1->p2)->p3\n"
        " 1  1  1 |            1 |            1\n"
        " 1  1  0 |            0 |            0\n"
        " 1  0  1 |            1 |            1\n"
        " 1  0  0 |            1 |            1\n"
        " 0  1  1 |            1 |            1\n"
        " 0  1  0 |            1 |            0\n"
        " 0  0  1 |            1 |            1\n"
        " 0  0  0 |            1 |            0\n");
}

TEST_CASE("truth table json") {
  const std::vector<Formula> fs{parse("(p1->p2)->p3")};
  std::ostringstream out;
  write_truth_table_json(out, fs);
  CHECK(out.str() == "{\"n\":3,\"formula\":\"(p1->p2)->p3\",\"false_rows\":[\"110\",\"010\",\"000\"],\"false_count\":3}\n");
}

TEST_CASE("truth table csv") {
  const std::vector<Formula> fs{parse("p1->p2")};
  std::ostringstream out;
  write_truth_table_csv(out, fs);
  CHECK(out.str() == "p1,p2,p1->p2\n1,1,1\n1,0,0\n0,1,1\n0,0,1\n");
}

TEST_CASE("read_truth_table accepts written tables and plain columns") {
  const Formula f = parse("(p1->(p2->p3))->p4");
  const std::vector<Formula> fs{f};
  std::ostringstream written;
  write_truth_table(written, fs);
  std::istringstream table(written.str());
  CHECK(read_truth_table(table, 4) == truth_column(f));

  std::istringstream plain(truth_column(f).display_bits() + "\n");
  CHECK(read_truth_table(plain, 4) == truth_column(f));
}

TEST_CASE("read_truth_table rejects malformed input") {
  std::istringstream short_column("1011\n");
  CHECK_THROWS_AS(read_truth_table(short_column, 3), SyntaxError);
  std::istringstream missing("1 1 | 1\n1 0 | 0\n0 1 | 1\n");
  CHECK_THROWS_AS(read_truth_table(missing, 2), SyntaxError);
  std::istringstream duplicate("1 1 | 1\n1 1 | 0\n0 1 | 1\n0 0 | 1\n");
  CHECK_THROWS_AS(read_truth_table(duplicate, 2), SyntaxError);
  std::istringstream garbage("1 1 | x\n");
  CHECK_THROWS_AS(read_truth_table(garbage, 2), SyntaxError);
}
