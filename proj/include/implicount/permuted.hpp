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

// A bracketing shape whose k-th leaf holds variable p_{perm[k-1]}.
struct PermutedFormula {
  Formula base;
  std::vector<std::uint32_t> perm;

  // The shape with its leaves renamed, e.g. p2->(p1->p3).
  Formula formula() const;
};

// All C_n * n! permuted formulas: bracketing rank major, permutations in
// lexicographic order minor. The visitor's argument is only valid during the
// call.
void for_each_permuted(unsigned n, const std::function<void(const PermutedFormula&)>& visit,
                       const Limits& limits = Limits::global());
std::vector<PermutedFormula> enumerate_permuted(unsigned n, const Limits& limits = Limits::global());

struct PermutedFindings {
  unsigned n = 0;
  BigCount total_formulae;
  BigCount distinct_functions;
  BigCount false_total_all;       // summed over every permuted formula
  BigCount false_total_distinct;  // summed over distinct truth functions
};

// One pass over every permuted formula. threads == 0 uses the available
// hardware parallelism; totals do not depend on the thread count.
PermutedFindings explore_permuted(unsigned n, unsigned threads = 0, const Limits& limits = Limits::global());

BigCount count_distinct_functions(unsigned n, unsigned threads = 0, const Limits& limits = Limits::global());

struct PermutedFalseTotals {
  BigCount all;
  BigCount distinct;
};
PermutedFalseTotals permuted_false_total(unsigned n, unsigned threads = 0, const Limits& limits = Limits::global());

// False rows summed over the identity permutation of every shape.
BigCount identity_false_total(unsigned n, const Limits& limits = Limits::global());

void write_findings_csv(std::ostream& out, std::span<const PermutedFindings> rows);

}  // namespace implicount
