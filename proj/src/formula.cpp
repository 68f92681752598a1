#include "implicount/formula.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>

#include "implicount/errors.hpp"

namespace implicount {

Formula Formula::var(std::uint32_t index) {
  if (index == 0) throw RangeError("variable indices start at 1");
  auto node = std::make_shared<Node>();
  node->index = index;
  node->max_index = index;
  return Formula(std::move(node));
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->leaves = antecedent.leaves() + consequent.leaves();
  node->max_index = std::max(antecedent.max_index(), consequent.max_index());
  node->left = std::move(antecedent.node_);
  node->right = std::move(consequent.node_);
  return Formula(std::move(node));
}

Formula Formula::antecedent() const {
  if (is_var()) throw RangeError("a variable has no antecedent");
  return Formula(node_->left);
}

Formula Formula::consequent() const {
  if (is_var()) throw RangeError("a variable has no consequent");
  return Formula(node_->right);
}

std::vector<std::uint32_t> Formula::variables() const {
  std::vector<std::uint32_t> out;
  out.reserve(leaves());
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->left == nullptr) {
      out.push_back(n->index);
    } else {
      stack.push_back(n->right.get());
      stack.push_back(n->left.get());
    }
  }
  return out;
}

bool Formula::is_standard() const {
  const auto vars = variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] != i + 1) return false;
  }
  return true;
}

bool Formula::equal(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->leaves != b->leaves) return false;
  if (a->left == nullptr || b->left == nullptr) {
    return a->left == nullptr && b->left == nullptr && a->index == b->index;
  }
  return equal(a->left.get(), b->left.get()) && equal(a->right.get(), b->right.get());
}

bool operator==(const Formula& a, const Formula& b) { return Formula::equal(a.node_.get(), b.node_.get()); }

BigCount catalan(unsigned n) {
  if (n == 0) return 0;
  BigCount c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * (n - 1), n - 1);
  return c / n;
}

std::uint64_t catalan_u64(unsigned n) {
  const BigCount c = catalan(n);
  if (mpz_sizeinbase(c.get_mpz_t(), 2) > 64) {
    throw RangeError("C_" + std::to_string(n) + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, c.get_mpz_t());
  return out;
}

namespace {

void check_enumeration_guard(unsigned n, const Limits& limits) {
  if (n == 0) throw RangeError("bracketings need n >= 1");
  if (n > limits.enumerate_max_n) throw ResourceLimitError("enumerate bracketings", n, limits.enumerate_max_n);
}

using Visitor = std::function<void(const Formula&)>;

// Visits bracketings of variables lo .. lo+m-1 whose rank lies in [first, last),
// all relative to this sub-interval.
void visit_range(std::uint32_t lo, unsigned m, std::uint64_t first, std::uint64_t last,
                 const std::vector<std::uint64_t>& cat, const Visitor& visit) {
  if (first >= last) return;
  if (m == 1) {
    visit(Formula::var(lo));
    return;
  }
  std::uint64_t offset = 0;
  for (unsigned r = 1; r < m && offset < last; ++r) {
    const std::uint64_t right_count = cat[m - r];
    const std::uint64_t block = cat[r] * right_count;
    const std::uint64_t block_end = offset + block;
    if (block_end > first) {
      const std::uint64_t lo_rank = std::max(first, offset) - offset;
      const std::uint64_t hi_rank = std::min(last, block_end) - offset;
      const std::uint64_t left_first = lo_rank / right_count;
      const std::uint64_t left_last = (hi_rank + right_count - 1) / right_count;
      std::uint64_t left_rank = left_first;
      visit_range(lo, r, left_first, left_last, cat, [&](const Formula& left) {
        const std::uint64_t base = left_rank * right_count;
        const std::uint64_t right_first = lo_rank > base ? lo_rank - base : 0;
        const std::uint64_t right_last = std::min(hi_rank - base, right_count);
        visit_range(lo + r, m - r, right_first, right_last, cat,
                    [&](const Formula& right) { visit(Formula::implies(left, right)); });
        ++left_rank;
      });
    }
    offset = block_end;
  }
}

std::vector<std::uint64_t> catalan_table(unsigned n) {
  std::vector<std::uint64_t> cat(n + 1);
  for (unsigned k = 0; k <= n; ++k) cat[k] = catalan_u64(k);
  return cat;
}

}  // namespace

void for_each_bracketing(unsigned n, std::uint64_t first, std::uint64_t last,
                         const std::function<void(const Formula&)>& visit, const Limits& limits) {
  check_enumeration_guard(n, limits);
  const auto cat = catalan_table(n);
  visit_range(1, n, first, std::min(last, cat[n]), cat, visit);
}

void for_each_bracketing(unsigned n, const std::function<void(const Formula&)>& visit, const Limits& limits) {
  for_each_bracketing(n, 0, std::numeric_limits<std::uint64_t>::max(), visit, limits);
}

std::vector<Formula> enumerate_bracketings(unsigned n, const Limits& limits) {
  check_enumeration_guard(n, limits);
  std::vector<Formula> out;
  out.reserve(catalan_u64(n));
  for_each_bracketing(n, [&](const Formula& f) { out.push_back(f); }, limits);
  return out;
}

Formula unrank_bracketing(const BracketingIndex& index) {
  if (index.n == 0) throw RangeError("bracketings need n >= 1");
  const auto cat = catalan_table(index.n);
  if (index.rank >= cat[index.n]) {
    throw RangeError("rank " + std::to_string(index.rank) + " out of range for n = " + std::to_string(index.n));
  }
  std::optional<Formula> out;
  visit_range(1, index.n, index.rank, index.rank + 1, cat, [&](const Formula& f) { out = f; });
  return *out;
}

namespace {

std::uint64_t rank_of(const Formula& f, const std::vector<std::uint64_t>& cat) {
  if (f.is_var()) return 0;
  const Formula left = f.antecedent();
  const Formula right = f.consequent();
  const unsigned m = f.leaves();
  const unsigned r = left.leaves();
  std::uint64_t offset = 0;
  for (unsigned s = 1; s < r; ++s) offset += cat[s] * cat[m - s];
  return offset + rank_of(left, cat) * cat[m - r] + rank_of(right, cat);
}

}  // namespace

BracketingIndex rank_bracketing(const Formula& f) {
  if (!f.is_standard()) throw VariableOrderError("only standard-mode formulas have a rank");
  const auto cat = catalan_table(f.leaves());
  return {f.leaves(), rank_of(f, cat)};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_formula();
    skip_space();
    if (pos_ != text_.size()) {
      if (at_arrow()) throw AmbiguityError(pos_, "chained implication needs brackets");
      throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return f;
  }

 private:
  Formula parse_formula() {
    Formula left = parse_term();
    skip_space();
    if (!at_arrow()) return left;
    consume_arrow();
    Formula right = parse_term();
    skip_space();
    if (at_arrow()) throw AmbiguityError(pos_, "chained implication needs brackets");
    return Formula::implies(std::move(left), std::move(right));
  }

  Formula parse_term() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected a variable or '('");
    if (text_[pos_] == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Formula inner = parse_formula();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw SyntaxError(pos_, "missing ')' for '(' at offset " + std::to_string(open));
      }
      ++pos_;
      return inner;
    }
    if (text_[pos_] == 'p') return parse_variable();
    throw SyntaxError(pos_, "expected a variable or '('");
  }

  Formula parse_variable() {
    const std::size_t start = pos_++;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == digits) throw SyntaxError(start, "variable needs an index after 'p'");
    if (text_[digits] == '0') throw SyntaxError(start, "variable index must be positive without leading zeros");
    std::uint32_t index = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, index);
    if (ec != std::errc() || ptr != text_.data() + pos_) throw SyntaxError(start, "variable index too large");
    return Formula::var(index);
  }

  bool at_arrow() const {
    return text_.substr(pos_, 2) == "->" || text_.substr(pos_, kUnicodeArrow.size()) == kUnicodeArrow;
  }

  void consume_arrow() { pos_ += text_.substr(pos_, 2) == "->" ? 2 : kUnicodeArrow.size(); }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  static constexpr std::string_view kUnicodeArrow = "\xE2\x86\x92";  // U+2192

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, VariableMode mode) {
  Formula f = Parser(text).parse_all();
  if (mode == VariableMode::Standard && !f.is_standard()) {
    const auto vars = f.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] != i + 1) {
        throw VariableOrderError("expected p" + std::to_string(i + 1) + " as variable " + std::to_string(i + 1) +
                                 ", found p" + std::to_string(vars[i]));
      }
    }
  }
  return f;
}

namespace {

void render_into(const Formula& f, bool outer, std::string& out) {
  if (f.is_var()) {
    out += 'p';
    out += std::to_string(f.index());
    return;
  }
  if (!outer) out += '(';
  render_into(f.antecedent(), false, out);
  out += "->";
  render_into(f.consequent(), false, out);
  if (!outer) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, true, out);
  return out;
}

}  // namespace implicount
