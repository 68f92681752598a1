#include "implicount/truth.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "implicount/errors.hpp"

namespace implicount {

Valuation::Valuation(unsigned n) : bits_(n, 1) {}

Valuation::Valuation(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw RangeError("valuation entries must be 0 or 1");
  }
}

Valuation Valuation::from_row(unsigned n, std::uint64_t row) {
  if (n > 63) throw RangeError("row addressing supports at most 63 variables");
  if (row >> n) throw RangeError("row " + std::to_string(row) + " out of range for n = " + std::to_string(n));
  std::vector<std::uint8_t> bits(n);
  for (unsigned i = 1; i <= n; ++i) bits[i - 1] = (row >> (n - i)) & 1U;
  return Valuation(std::move(bits));
}

Valuation Valuation::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw RangeError("valuation strings contain only 0 and 1");
    bits.push_back(c == '1');
  }
  return Valuation(std::move(bits));
}

bool Valuation::operator[](std::uint32_t i) const {
  if (i == 0 || i > bits_.size()) {
    throw RangeError("variable p" + std::to_string(i) + " outside valuation of " + std::to_string(bits_.size()));
  }
  return bits_[i - 1] != 0;
}

void Valuation::set(std::uint32_t i, bool value) {
  if (i == 0 || i > bits_.size()) {
    throw RangeError("variable p" + std::to_string(i) + " outside valuation of " + std::to_string(bits_.size()));
  }
  bits_[i - 1] = value;
}

std::uint64_t Valuation::row() const {
  if (bits_.size() > 63) throw RangeError("row addressing supports at most 63 variables");
  std::uint64_t k = 0;
  for (auto b : bits_) k = (k << 1) | b;
  return k;
}

std::string Valuation::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out += b ? '1' : '0';
  return out;
}

bool evaluate(const Formula& f, const Valuation& v) {
  if (f.is_var()) return v[f.index()];
  return !evaluate(f.antecedent(), v) || evaluate(f.consequent(), v);
}

// ---------------------------------------------------------------------------

TruthColumn::TruthColumn(unsigned n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
  const std::size_t expected = n < 6 ? 1 : std::size_t{1} << (n - 6);
  if (words_.size() != expected) throw RangeError("truth column has the wrong number of words");
  if (n < 6) words_[0] &= (std::uint64_t{1} << (1U << n)) - 1;
}

std::uint64_t TruthColumn::count_true() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::string TruthColumn::display_bits() const {
  std::string out;
  out.reserve(size());
  for (std::uint64_t row = size(); row-- > 0;) out += (*this)[row] ? '1' : '0';
  return out;
}

std::size_t TruthColumnHash::operator()(const TruthColumn& c) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ c.n();
  for (auto w : c.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kInWordPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

void check_column_guard(unsigned n, const Limits& limits) {
  if (n == 0) throw RangeError("truth columns need n >= 1");
  if (n > limits.column_max_n) throw ResourceLimitError("truth column", n, limits.column_max_n);
}

}  // namespace

ColumnEvaluator::ColumnEvaluator(unsigned n, const Limits& limits) : n_(n) {
  check_column_guard(n, limits);
  words_ = n < 6 ? 1 : std::size_t{1} << (n - 6);
  valid_ = n < 6 ? (std::uint64_t{1} << (1U << n)) - 1 : ~std::uint64_t{0};
  masks_.resize(words_ * n);
  for (unsigned i = 1; i <= n; ++i) {
    const unsigned bit = n - i;
    std::uint64_t* m = masks_.data() + (i - 1) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      if (bit < 6) {
        m[w] = kInWordPattern[bit] & valid_;
      } else {
        m[w] = ((w >> (bit - 6)) & 1U) ? ~std::uint64_t{0} : 0;
      }
    }
  }
}

const std::uint64_t* ColumnEvaluator::mask(std::uint32_t variable) const {
  if (variable == 0 || variable > n_) {
    throw RangeError("variable p" + std::to_string(variable) + " outside evaluator of " + std::to_string(n_));
  }
  return masks_.data() + (variable - 1) * words_;
}

void ColumnEvaluator::eval(const Formula& f, std::span<const std::uint32_t> remap, std::uint64_t* out,
                           std::uint64_t* scratch) {
  if (f.is_var()) {
    std::uint32_t v = f.index();
    if (!remap.empty()) {
      if (v == 0 || v > remap.size()) throw RangeError("variable p" + std::to_string(v) + " has no remapping");
      v = remap[v - 1];
    }
    const std::uint64_t* m = mask(v);
    std::copy(m, m + words_, out);
    return;
  }
  eval(f.antecedent(), remap, out, scratch);
  eval(f.consequent(), remap, scratch, scratch + words_);
  for (std::size_t w = 0; w < words_; ++w) out[w] = (~out[w] | scratch[w]) & valid_;
}

void ColumnEvaluator::compute(const Formula& f, std::span<const std::uint32_t> remap) {
  scratch_.resize((static_cast<std::size_t>(f.leaves()) + 1) * words_);
  eval(f, remap, scratch_.data(), scratch_.data() + words_);
}

TruthColumn ColumnEvaluator::column(const Formula& f, std::span<const std::uint32_t> remap) {
  compute(f, remap);
  return TruthColumn(n_, std::vector<std::uint64_t>(scratch_.begin(), scratch_.begin() + words_));
}

std::uint64_t ColumnEvaluator::count_false(const Formula& f, std::span<const std::uint32_t> remap) {
  compute(f, remap);
  std::uint64_t ones = 0;
  for (std::size_t w = 0; w < words_; ++w) ones += std::popcount(scratch_[w]);
  return (std::uint64_t{1} << n_) - ones;
}

TruthColumn truth_column(const Formula& f, unsigned n_vars, const Limits& limits) {
  ColumnEvaluator evaluator(std::max(n_vars, f.max_index()), limits);
  return evaluator.column(f);
}

BigCount count_false(const Formula& f, const Limits& limits) {
  ColumnEvaluator evaluator(f.max_index(), limits);
  BigCount out;
  const std::uint64_t c = evaluator.count_false(f);
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(c), 0, 0, &c);
  return out;
}

namespace {

BigCount from_u64(std::uint64_t v) {
  BigCount out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

BigCount brute_force_f(unsigned n, unsigned threads, const Limits& limits) {
  if (n == 0) throw RangeError("brute force needs n >= 1");
  if (n > limits.brute_force_max_n) throw ResourceLimitError("brute-force f_n", n, limits.brute_force_max_n);
  check_column_guard(n, limits);
  const std::uint64_t total = catalan_u64(n);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned t) {
    const std::uint64_t first = total * t / threads;
    const std::uint64_t last = total * (t + 1) / threads;
    ColumnEvaluator evaluator(n, limits);
    std::uint64_t sum = 0;
    for_each_bracketing(n, first, last, [&](const Formula& f) { sum += evaluator.count_false(f); }, limits);
    partial[t] = sum;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  BigCount out = 0;
  for (auto p : partial) out += from_u64(p);
  return out;
}

BigCount brute_force_rows(unsigned n, const Limits& limits) {
  if (n > limits.brute_force_max_n) throw ResourceLimitError("brute-force row count", n, limits.brute_force_max_n);
  ColumnEvaluator evaluator(n, limits);
  std::uint64_t rows = 0;
  for_each_bracketing(n, [&](const Formula& f) { rows += evaluator.column(f).size(); }, limits);
  return from_u64(rows);
}

// ---------------------------------------------------------------------------

Valuation probe_nu(unsigned n, std::uint32_t i) {
  if (i == 0 || i > n) throw RangeError("probe index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  Valuation v(n);
  v.set(i, false);
  return v;
}

Valuation probe_nu2(unsigned n, std::uint32_t i, std::uint32_t j) {
  if (i == 0 || j > n || i >= j) {
    throw RangeError("probe pair (" + std::to_string(i) + ", " + std::to_string(j) + ") needs 1 <= i < j <= " +
                     std::to_string(n));
  }
  Valuation v(n);
  v.set(i, false);
  v.set(j, false);
  return v;
}

TruthOracle oracle_of(const Formula& f) {
  return {f.max_index(), [f](const Valuation& v) { return evaluate(f, v); }};
}

TruthOracle oracle_of(const TruthColumn& column) {
  return {column.n(), [column](const Valuation& v) {
            if (v.n() != column.n()) throw RangeError("valuation size does not match the truth column");
            return column[v.row()];
          }};
}

namespace {

using Query = std::function<bool(const Valuation&)>;

// Recovers the bracketing of the m variables answered by `query`, naming
// them p_{offset+1} .. p_{offset+m}.
Formula recover(unsigned m, const Query& query, std::uint32_t offset) {
  const auto where = [&] {
    return "p" + std::to_string(offset + 1) + "..p" + std::to_string(offset + m);
  };
  if (!query(Valuation(m))) throw InconsistentOracleError("all-true valuation is false over " + where());
  if (query(probe_nu(m, m))) throw InconsistentOracleError("last-variable probe is true over " + where());
  if (m == 1) return Formula::var(offset + 1);

  unsigned split = 0;
  for (unsigned i = 1; i < m; ++i) {
    if (query(probe_nu2(m, i, m))) {
      split = i;
      break;
    }
  }
  if (split == 0) throw InconsistentOracleError("no split point over " + where());

  // Antecedent true: the whole formula follows the consequent.
  const Query consequent = [&query, m, split](const Valuation& v) {
    Valuation full(m);
    for (unsigned k = 1; k <= m - split; ++k) full.set(split + k, v[k]);
    return query(full);
  };
  // Consequent false: the whole formula is the negated antecedent.
  const Query antecedent = [&query, m, split](const Valuation& v) {
    Valuation full(m);
    for (unsigned k = 1; k <= split; ++k) full.set(k, v[k]);
    full.set(m, false);
    return !query(full);
  };
  Formula left = recover(split, antecedent, offset);
  Formula right = recover(m - split, consequent, offset + split);
  return Formula::implies(std::move(left), std::move(right));
}

}  // namespace

Formula recover_bracketing(const TruthOracle& oracle) {
  if (oracle.n == 0) throw RangeError("oracle needs n >= 1");
  if (!oracle.query) throw RangeError("oracle has no query function");
  return recover(oracle.n, oracle.query, 0);
}

}  // namespace implicount
