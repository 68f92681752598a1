#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "implicount/limits.hpp"

namespace implicount {

using BigCount = mpz_class;

// A bracketed implication: either a variable p<i> or antecedent -> consequent.
// Immutable; subtrees are shared, so copies are cheap and thread-safe.
class Formula {
 public:
  static Formula var(std::uint32_t index);
  static Formula implies(Formula antecedent, Formula consequent);

  bool is_var() const noexcept { return node_->left == nullptr; }
  // Variable index; only meaningful when is_var().
  std::uint32_t index() const noexcept { return node_->index; }
  Formula antecedent() const;
  Formula consequent() const;

  std::uint32_t leaves() const noexcept { return node_->leaves; }
  std::uint32_t max_index() const noexcept { return node_->max_index; }
  // In-order sequence of variable indices.
  std::vector<std::uint32_t> variables() const;
  // True when the in-order variables are exactly 1, 2, ..., leaves().
  bool is_standard() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    std::uint32_t index = 0;
    std::uint32_t leaves = 1;
    std::uint32_t max_index = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Node* a, const Node* b);

  std::shared_ptr<const Node> node_;
};

// Stable address of one bracketing under the canonical order.
struct BracketingIndex {
  unsigned n = 1;
  std::uint64_t rank = 0;
  friend bool operator==(const BracketingIndex&, const BracketingIndex&) = default;
};

// Bracketings of n terms: C_0 = 0, C_1 = C_2 = 1, C_n = binom(2n-2, n-1)/n.
BigCount catalan(unsigned n);
// Same value as a machine word; throws RangeError when it does not fit.
std::uint64_t catalan_u64(unsigned n);

// Canonical order: root split point r ascending (antecedent holds p1..pr),
// then antecedent order, then consequent order.
std::vector<Formula> enumerate_bracketings(unsigned n, const Limits& limits = Limits::global());

// Streams the bracketings with ranks in [first, last) in canonical order
// without materializing them. `last` is clamped to C_n.
void for_each_bracketing(unsigned n, std::uint64_t first, std::uint64_t last,
                         const std::function<void(const Formula&)>& visit,
                         const Limits& limits = Limits::global());
void for_each_bracketing(unsigned n, const std::function<void(const Formula&)>& visit,
                         const Limits& limits = Limits::global());

Formula unrank_bracketing(const BracketingIndex& index);
// Pre: f is standard. Throws VariableOrderError otherwise.
BracketingIndex rank_bracketing(const Formula& f);

enum class VariableMode {
  Standard,  // variables must read p1, p2, ..., pn left to right
  Free,      // any positive indices
};

// Grammar:
//   formula  := term | term "->" term
//   term     := variable | "(" formula ")"
//   variable := "p" digits
// "→" is accepted for "->". Whitespace between tokens is ignored.
Formula parse(std::string_view text, VariableMode mode = VariableMode::Standard);

// Minimal brackets: the outermost implication is bare, every inner one is
// parenthesized.
std::string render(const Formula& f);

}  // namespace implicount
