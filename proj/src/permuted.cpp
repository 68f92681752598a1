#include "implicount/permuted.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <thread>
#include <unordered_set>

#include "implicount/errors.hpp"
#include "implicount/truth.hpp"

namespace implicount {

namespace {

void check_guard(unsigned n, const Limits& limits) {
  if (n == 0) throw RangeError("permuted formulas need n >= 1");
  if (n > limits.permuted_max_n) throw ResourceLimitError("permuted formulas", n, limits.permuted_max_n);
}

Formula rename(const Formula& f, std::span<const std::uint32_t> perm) {
  if (f.is_var()) return Formula::var(perm[f.index() - 1]);
  return Formula::implies(rename(f.antecedent(), perm), rename(f.consequent(), perm));
}

std::vector<std::uint32_t> identity(unsigned n) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1U);
  return perm;
}

BigCount big(std::uint64_t v) {
  BigCount out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

Formula PermutedFormula::formula() const { return rename(base, perm); }

void for_each_permuted(unsigned n, const std::function<void(const PermutedFormula&)>& visit, const Limits& limits) {
  check_guard(n, limits);
  PermutedFormula current{Formula::var(1), identity(n)};
  for_each_bracketing(
      n,
      [&](const Formula& shape) {
        current.base = shape;
        std::iota(current.perm.begin(), current.perm.end(), 1U);
        do {
          visit(current);
        } while (std::next_permutation(current.perm.begin(), current.perm.end()));
      },
      limits);
}

std::vector<PermutedFormula> enumerate_permuted(unsigned n, const Limits& limits) {
  std::vector<PermutedFormula> out;
  for_each_permuted(n, [&](const PermutedFormula& p) { out.push_back(p); }, limits);
  return out;
}

PermutedFindings explore_permuted(unsigned n, unsigned threads, const Limits& limits) {
  check_guard(n, limits);
  const std::uint64_t shapes = catalan_u64(n);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, shapes));

  struct Partial {
    std::uint64_t formulas = 0;
    std::uint64_t false_rows = 0;
    std::unordered_set<TruthColumn, TruthColumnHash> columns;
  };
  std::vector<Partial> partial(threads);

  auto work = [&](unsigned t) {
    Partial& mine = partial[t];
    ColumnEvaluator evaluator(n, limits);
    std::vector<std::uint32_t> perm(n);
    for_each_bracketing(
        n, shapes * t / threads, shapes * (t + 1) / threads,
        [&](const Formula& shape) {
          std::iota(perm.begin(), perm.end(), 1U);
          do {
            TruthColumn column = evaluator.column(shape, perm);
            ++mine.formulas;
            mine.false_rows += column.count_false();
            mine.columns.insert(std::move(column));
          } while (std::next_permutation(perm.begin(), perm.end()));
        },
        limits);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  Partial& merged = partial[0];
  for (unsigned t = 1; t < threads; ++t) {
    merged.formulas += partial[t].formulas;
    merged.false_rows += partial[t].false_rows;
    merged.columns.merge(partial[t].columns);
    partial[t].columns.clear();
  }
  std::uint64_t distinct_false = 0;
  for (const auto& column : merged.columns) distinct_false += column.count_false();

  return {n, big(merged.formulas), big(merged.columns.size()), big(merged.false_rows), big(distinct_false)};
}

BigCount count_distinct_functions(unsigned n, unsigned threads, const Limits& limits) {
  return explore_permuted(n, threads, limits).distinct_functions;
}

PermutedFalseTotals permuted_false_total(unsigned n, unsigned threads, const Limits& limits) {
  auto findings = explore_permuted(n, threads, limits);
  return {std::move(findings.false_total_all), std::move(findings.false_total_distinct)};
}

BigCount identity_false_total(unsigned n, const Limits& limits) {
  check_guard(n, limits);
  ColumnEvaluator evaluator(n, limits);
  const std::vector<std::uint32_t> perm = identity(n);
  std::uint64_t total = 0;
  for_each_bracketing(n, [&](const Formula& shape) { total += evaluator.count_false(shape, perm); }, limits);
  return big(total);
}

void write_findings_csv(std::ostream& out, std::span<const PermutedFindings> rows) {
  out << "n,total_formulae,distinct_functions,false_total_all,false_total_distinct\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.total_formulae << ',' << r.distinct_functions << ',' << r.false_total_all << ','
        << r.false_total_distinct << '\n';
  }
}

}  // namespace implicount
