#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "implicount/errors.hpp"
#include "implicount/truth.hpp"

namespace implicount {

namespace {

unsigned common_n(std::span<const Formula> formulas) {
  if (formulas.empty()) throw RangeError("no formulas given");
  unsigned n = 0;
  for (const auto& f : formulas) n = std::max(n, f.max_index());
  return n;
}

std::vector<TruthColumn> columns_of(std::span<const Formula> formulas, unsigned n, const Limits& limits) {
  ColumnEvaluator evaluator(n, limits);
  std::vector<TruthColumn> out;
  out.reserve(formulas.size());
  for (const auto& f : formulas) out.push_back(evaluator.column(f));
  return out;
}

std::string right(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

}  // namespace

void write_truth_table(std::ostream& out, std::span<const Formula> formulas, const Limits& limits) {
  const unsigned n = common_n(formulas);
  const auto columns = columns_of(formulas, n, limits);
  std::vector<std::string> names;
  std::vector<std::size_t> widths;
  for (const auto& f : formulas) {
    names.push_back(render(f));
    widths.push_back(names.back().size());
  }
  std::vector<std::size_t> var_widths;
  for (unsigned i = 1; i <= n; ++i) var_widths.push_back(1 + std::to_string(i).size());

  for (unsigned i = 1; i <= n; ++i) out << (i > 1 ? " " : "") << 'p' << i;
  for (const auto& name : names) out << " | " << name;
  out << '\n';
  const std::uint64_t rows = std::uint64_t{1} << n;
  for (std::uint64_t row = rows; row-- > 0;) {
    const Valuation v = Valuation::from_row(n, row);
    for (unsigned i = 1; i <= n; ++i) out << (i > 1 ? " " : "") << right(v[i] ? "1" : "0", var_widths[i - 1]);
    for (std::size_t c = 0; c < columns.size(); ++c) out << " | " << right(columns[c][row] ? "1" : "0", widths[c]);
    out << '\n';
  }
}

void write_truth_table_csv(std::ostream& out, std::span<const Formula> formulas, const Limits& limits) {
  const unsigned n = common_n(formulas);
  const auto columns = columns_of(formulas, n, limits);
  for (unsigned i = 1; i <= n; ++i) out << (i > 1 ? "," : "") << 'p' << i;
  for (const auto& f : formulas) out << ',' << render(f);
  out << '\n';
  for (std::uint64_t row = std::uint64_t{1} << n; row-- > 0;) {
    const Valuation v = Valuation::from_row(n, row);
    for (unsigned i = 1; i <= n; ++i) out << (i > 1 ? "," : "") << (v[i] ? '1' : '0');
    for (const auto& c : columns) out << ',' << (c[row] ? '1' : '0');
    out << '\n';
  }
}

void write_truth_table_json(std::ostream& out, std::span<const Formula> formulas, const Limits& limits) {
  const unsigned n = common_n(formulas);
  const auto columns = columns_of(formulas, n, limits);
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    nlohmann::ordered_json item;
    item["n"] = n;
    item["formula"] = render(formulas[c]);
    auto false_rows = nlohmann::ordered_json::array();
    for (std::uint64_t row = columns[c].size(); row-- > 0;) {
      if (!columns[c][row]) false_rows.push_back(Valuation::from_row(n, row).to_string());
    }
    item["false_rows"] = std::move(false_rows);
    item["false_count"] = columns[c].count_false();
    all.push_back(std::move(item));
  }
  out << (all.size() == 1 ? all[0] : all).dump() << '\n';
}

TruthColumn read_truth_table(std::istream& in, unsigned n) {
  if (n == 0 || n > 30) throw RangeError("truth tables are read for 1 <= n <= 30");
  const std::uint64_t rows = std::uint64_t{1} << n;
  const std::size_t words = n < 6 ? 1 : std::size_t{1} << (n - 6);
  std::vector<std::uint64_t> bits(words, 0);
  std::vector<bool> seen(rows, false);
  std::uint64_t filled = 0;

  std::string line;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find('p') != std::string::npos) continue;  // header
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    // Plain column: 2^n characters in display order.
    std::string compact;
    for (char c : line) {
      if (c == '0' || c == '1') compact += c;
    }
    const bool has_bar = line.find('|') != std::string::npos;
    if (!has_bar) {
      if (compact.size() != rows || filled != 0 ||
          line.find_first_not_of("01 \t") != std::string::npos) {
        throw SyntaxError(line_start, "line " + std::to_string(line_no) + ": expected " + std::to_string(rows) +
                                          " truth values or a 'bits | value' row");
      }
      for (std::uint64_t i = 0; i < rows; ++i) {
        const std::uint64_t row = rows - 1 - i;
        if (compact[i] == '1') bits[row >> 6] |= std::uint64_t{1} << (row & 63);
        seen[row] = true;
      }
      filled = rows;
      continue;
    }

    std::istringstream cells(line.substr(0, line.find('|')));
    std::string valuation;
    std::string cell;
    while (cells >> cell) valuation += cell;
    std::istringstream rest(line.substr(line.find('|') + 1));
    std::string value_text;
    rest >> value_text;
    std::string extra;
    if (valuation.size() != n || valuation.find_first_not_of("01") != std::string::npos ||
        (value_text != "0" && value_text != "1") || (rest >> extra)) {
      throw SyntaxError(line_start, "line " + std::to_string(line_no) + ": malformed truth-table row");
    }
    const std::uint64_t row = Valuation::from_string(valuation).row();
    if (seen[row]) throw SyntaxError(line_start, "line " + std::to_string(line_no) + ": duplicate valuation");
    seen[row] = true;
    ++filled;
    if (value_text == "1") bits[row >> 6] |= std::uint64_t{1} << (row & 63);
  }
  if (filled != rows) {
    throw SyntaxError(offset, "truth table has " + std::to_string(filled) + " of " + std::to_string(rows) + " rows");
  }
  return TruthColumn(n, std::move(bits));
}

}  // namespace implicount
