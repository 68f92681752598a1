// implicount: exact counting of false rows in bracketed implication truth tables.

#include <cmath>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "implicount/asymptotics.hpp"
#include "implicount/errors.hpp"
#include "implicount/formula.hpp"
#include "implicount/permuted.hpp"
#include "implicount/sequences.hpp"
#include "implicount/series.hpp"
#include "implicount/truth.hpp"

namespace {

using namespace implicount;

constexpr const char* kVersion = "implicount 1.0.0";

enum class Format { Table, Csv, Json };

struct Options {
  Format format = Format::Table;
  unsigned threads = 0;
};

enum ExitCode { kOk = 0, kDomain = 1, kUsage = 2, kGuard = 3 };

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string fixed(double v, int precision) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(precision);
  out << v;
  return out.str();
}

std::string scientific(double v, int precision) {
  std::ostringstream out;
  out.setf(std::ios::scientific);
  out.precision(precision);
  out << v;
  return out.str();
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts, bool free) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse(t, free ? VariableMode::Free : VariableMode::Standard));
  return out;
}

// ---------------------------------------------------------------------------

int run_seq(const Options& opt, const std::string& kind, unsigned n_max) {
  if (opt.format == Format::Csv) {
    write_sequence_csv(std::cout, n_max);
    return kOk;
  }
  if (opt.format == Format::Json) {
    write_sequence_json(std::cout, n_max);
    return kOk;
  }
  auto& cache = SequenceCache::instance();
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) std::cout << ',';
    if (kind == "f") std::cout << cache.f(n);
    if (kind == "g") std::cout << cache.g(n);
    if (kind == "t") std::cout << cache.t(n);
    if (kind == "ratio") std::cout << ratio(n);
  }
  std::cout << '\n';
  return kOk;
}

int run_enumerate(const Options& opt, unsigned n) {
  const Limits& limits = Limits::global();
  if (opt.format == Format::Json) {
    auto formulas = nlohmann::ordered_json::array();
    for_each_bracketing(n, [&](const Formula& f) { formulas.push_back(render(f)); }, limits);
    nlohmann::ordered_json out;
    out["n"] = n;
    out["count"] = formulas.size();
    out["formulas"] = std::move(formulas);
    std::cout << out.dump() << '\n';
    return kOk;
  }
  if (opt.format == Format::Csv) std::cout << "rank,formula\n";
  std::uint64_t rank = 0;
  const std::size_t width = std::to_string(catalan_u64(n) - 1).size();
  for_each_bracketing(
      n,
      [&](const Formula& f) {
        if (opt.format == Format::Csv) {
          std::cout << rank << ',' << render(f) << '\n';
        } else {
          std::cout << pad_left(std::to_string(rank), width) << "  " << render(f) << '\n';
        }
        ++rank;
      },
      limits);
  return kOk;
}

int run_table(const Options& opt, const std::vector<std::string>& texts, bool free) {
  const auto formulas = parse_all(texts, free);
  switch (opt.format) {
    case Format::Table: write_truth_table(std::cout, formulas); break;
    case Format::Csv: write_truth_table_csv(std::cout, formulas); break;
    case Format::Json: write_truth_table_json(std::cout, formulas); break;
  }
  return kOk;
}

int run_count(const Options& opt, const std::vector<std::string>& texts, bool free) {
  const auto formulas = parse_all(texts, free);
  if (opt.format == Format::Json) {
    auto all = nlohmann::ordered_json::array();
    for (const auto& f : formulas) {
      nlohmann::ordered_json item;
      item["n"] = f.max_index();
      item["formula"] = render(f);
      item["false_count"] = truth_column(f).count_false();
      all.push_back(std::move(item));
    }
    std::cout << (all.size() == 1 ? all[0] : all).dump() << '\n';
    return kOk;
  }
  if (opt.format == Format::Csv) std::cout << "formula,n,false_count\n";
  for (const auto& f : formulas) {
    const BigCount zeros = count_false(f);
    if (opt.format == Format::Csv) {
      std::cout << render(f) << ',' << f.max_index() << ',' << zeros << '\n';
    } else if (formulas.size() == 1) {
      std::cout << zeros << '\n';
    } else {
      std::cout << render(f) << "  " << zeros << '\n';
    }
  }
  return kOk;
}

int run_recover(const Options& opt, unsigned n, const std::string& path) {
  if (n > Limits::global().column_max_n) throw ResourceLimitError("truth table", n, Limits::global().column_max_n);
  TruthColumn column = [&] {
    if (path == "-") return read_truth_table(std::cin, n);
    std::ifstream in(path);
    if (!in) throw RangeError("cannot open " + path);
    return read_truth_table(in, n);
  }();
  const Formula f = recover_bracketing(oracle_of(column));
  // Recovery only probes O(n^2) rows; confirm the whole table.
  if (truth_column(f, n) != column) {
    throw InconsistentOracleError("table is not the truth function of any bracketing (closest: " + render(f) + ")");
  }
  if (opt.format == Format::Json) {
    nlohmann::ordered_json out;
    out["n"] = n;
    out["formula"] = render(f);
    out["rank"] = rank_bracketing(f).rank;
    std::cout << out.dump() << '\n';
  } else if (opt.format == Format::Csv) {
    std::cout << "n,rank,formula\n" << n << ',' << rank_bracketing(f).rank << ',' << render(f) << '\n';
  } else {
    std::cout << render(f) << '\n';
  }
  return kOk;
}

int run_series(const Options& opt, const std::string& kind, unsigned order) {
  const RationalSeries s = kind == "f" ? f_series(order) : g_series(order);
  if (opt.format == Format::Csv) {
    write_coefficients_csv(std::cout, s);
  } else if (opt.format == Format::Json) {
    std::cout << "{\"series\":\"" << kind << "\",\"order\":" << order << ",\"coefficients\":[";
    for (unsigned k = 0; k <= order; ++k) std::cout << (k ? "," : "") << s[k].get_str();
    std::cout << "]}\n";
  } else {
    const std::size_t width = std::to_string(order).size();
    for (unsigned k = 0; k <= order; ++k) std::cout << pad_left(std::to_string(k), width) << "  " << s[k] << '\n';
  }
  return kOk;
}

int run_asympt(const Options& opt, const std::string& kind, const std::vector<unsigned>& ns) {
  if (kind == "ratio") {
    const auto rows = convergence_report(ns);
    switch (opt.format) {
      case Format::Table: write_convergence_table(std::cout, rows); break;
      case Format::Csv: write_convergence_csv(std::cout, rows); break;
      case Format::Json: write_convergence_json(std::cout, rows); break;
    }
    return kOk;
  }
  const SequenceKind sk = kind == "f" ? SequenceKind::F : kind == "g" ? SequenceKind::G : SequenceKind::T;
  struct Row {
    unsigned n;
    double log_estimate;
    double estimate_over_exact;
  };
  std::vector<Row> rows;
  for (unsigned n : ns) rows.push_back({n, asymptotic(sk, n).log_value(), estimate_over_exact(sk, n)});

  const std::string name = std::string(to_string(sk)) + "_n";
  const auto estimate_text = [](double log_value) {
    // Decimal mantissa and exponent, valid past double range.
    const double log10_value = log_value / std::log(10.0);
    const double exponent = std::floor(log10_value);
    const double mantissa = std::pow(10.0, log10_value - exponent);
    std::ostringstream out;
    out << fixed(mantissa, 9) << "e+" << static_cast<long>(exponent);
    return out.str();
  };
  if (opt.format == Format::Csv) {
    std::cout << "n,log_estimate,estimate,estimate_over_exact\n";
    for (const auto& r : rows) {
      std::cout << r.n << ',' << scientific(r.log_estimate, 15) << ',' << estimate_text(r.log_estimate) << ','
                << fixed(r.estimate_over_exact, 12) << '\n';
    }
  } else if (opt.format == Format::Json) {
    std::cout << "{\"sequence\":\"" << to_string(sk) << "\",\"rows\":[";
    bool first = true;
    for (const auto& r : rows) {
      std::cout << (first ? "" : ",") << "{\"n\":" << r.n << ",\"log_estimate\":" << scientific(r.log_estimate, 15)
                << ",\"estimate\":\"" << estimate_text(r.log_estimate)
                << "\",\"estimate_over_exact\":" << fixed(r.estimate_over_exact, 12) << '}';
      first = false;
    }
    std::cout << "]}\n";
  } else {
    std::cout << pad_left("n", 6) << "  " << pad_left("estimate", 20) << "  estimate/" << name << '\n';
    for (const auto& r : rows) {
      std::cout << pad_left(std::to_string(r.n), 6) << "  " << pad_left(estimate_text(r.log_estimate), 20) << "  "
                << fixed(r.estimate_over_exact, 10) << '\n';
    }
  }
  return kOk;
}

int run_permuted(const Options& opt, unsigned n_max) {
  const Limits& limits = Limits::global();
  if (n_max > limits.permuted_max_n) throw ResourceLimitError("permuted formulas", n_max, limits.permuted_max_n);
  std::vector<PermutedFindings> rows;
  for (unsigned n = 1; n <= n_max; ++n) rows.push_back(explore_permuted(n, opt.threads, limits));

  if (opt.format == Format::Csv) {
    write_findings_csv(std::cout, rows);
  } else if (opt.format == Format::Json) {
    std::cout << '[';
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& r = rows[k];
      std::cout << (k ? "," : "") << "{\"n\":" << r.n << ",\"total_formulae\":" << r.total_formulae
                << ",\"distinct_functions\":" << r.distinct_functions << ",\"false_total_all\":" << r.false_total_all
                << ",\"false_total_distinct\":" << r.false_total_distinct << '}';
    }
    std::cout << "]\n";
  } else {
    std::cout << " n  total_formulae  distinct_functions  false_total_all  false_total_distinct\n";
    for (const auto& r : rows) {
      std::cout << pad_left(std::to_string(r.n), 2) << "  " << pad_left(r.total_formulae.get_str(), 14) << "  "
                << pad_left(r.distinct_functions.get_str(), 18) << "  " << pad_left(r.false_total_all.get_str(), 15)
                << "  " << pad_left(r.false_total_distinct.get_str(), 20) << '\n';
    }
  }
  return kOk;
}

int run_verify(const Options& opt, unsigned n, unsigned series_order) {
  const Limits& limits = Limits::global();
  if (n > limits.brute_force_max_n) throw ResourceLimitError("brute-force f_n", n, limits.brute_force_max_n);
  const unsigned order = std::max(n, series_order);
  const SequenceTable f = f_recurrence(order);
  const auto series = f_series(order).integer_coefficients();

  std::vector<std::string> failures;
  for (unsigned k = 1; k <= order; ++k) {
    if (series[k] != f[k]) {
      failures.push_back("series coefficient " + std::to_string(k) + " = " + series[k].get_str() +
                         " but recurrence gives " + f[k].get_str());
    }
  }
  for (unsigned k = 1; k <= n; ++k) {
    const BigCount brute = brute_force_f(k, opt.threads, limits);
    if (brute != f[k]) {
      failures.push_back("brute force f_" + std::to_string(k) + " = " + brute.get_str() + " but recurrence gives " +
                         f[k].get_str());
    }
  }
  const auto residuals = check_functional_equation(order);
  if (residuals.implicit_first_nonzero) {
    failures.push_back("F = x + F(G - F) fails at x^" + std::to_string(*residuals.implicit_first_nonzero));
  }
  if (residuals.quadratic_first_nonzero) {
    failures.push_back("quadratic for F fails at x^" + std::to_string(*residuals.quadratic_first_nonzero));
  }

  if (!failures.empty()) {
    for (const auto& f : failures) std::cout << "FAIL: " << f << '\n';
    std::cerr << "error: verify: " << failures.size() << " cross-route disagreement(s)\n";
    return kDomain;
  }
  std::cout << "OK: brute force = recurrence = series for n ≤ " << n << '\n';
  if (order > n) std::cout << "OK: recurrence = series for n ≤ " << order << '\n';
  std::cout << "OK: functional equations vanish modulo x^" << order + 1 << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Limits::set_global(Limits::from_environment());

  CLI::App app{"Exact counting of false rows in truth tables of bracketed implications."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Options opt;
  std::map<std::string, Format> formats{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats).description(""))
      ->type_name("{table,csv,json}");
  app.add_option("--threads", opt.threads, "Worker threads for brute-force reductions (0: all cores)");

  int status = kOk;
  const auto kinds = [](std::vector<std::string> allowed) { return CLI::IsMember(std::move(allowed)); };

  std::string seq_kind;
  unsigned seq_max = 10;
  auto* seq = app.add_subcommand("seq", "Exact sequences f_n, g_n, t_n or the ratio f_n/g_n");
  seq->add_option("kind", seq_kind, "f, g, t or ratio")->required()->check(kinds({"f", "g", "t", "ratio"}));
  seq->add_option("--max", seq_max, "Largest n")->check(CLI::Range(1U, 1000000U));
  seq->callback([&] { status = run_seq(opt, seq_kind, seq_max); });

  unsigned enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List every bracketing of p1 -> ... -> pn");
  enumerate->add_option("--n", enum_n, "Number of variables")->required()->check(CLI::PositiveNumber);
  enumerate->callback([&] { status = run_enumerate(opt, enum_n); });

  std::vector<std::string> table_formulas;
  bool table_free = false;
  auto* table = app.add_subcommand("table", "Truth table of one or more formulas");
  table->add_option("formula", table_formulas, "Formula text, e.g. \"p1->(p2->p3)\"")->required();
  table->add_flag("--free", table_free, "Allow any variable order");
  table->callback([&] { status = run_table(opt, table_formulas, table_free); });

  std::vector<std::string> count_formulas;
  bool count_free = false;
  auto* count = app.add_subcommand("count", "Number of false rows");
  count->add_option("formula", count_formulas, "Formula text")->required();
  count->add_flag("--free", count_free, "Allow any variable order");
  count->callback([&] { status = run_count(opt, count_formulas, count_free); });

  unsigned recover_n = 0;
  std::string recover_file;
  auto* recover = app.add_subcommand("recover", "Recover the bracketing from its truth table");
  recover->add_option("--n", recover_n, "Number of variables")->required()->check(CLI::PositiveNumber);
  recover->add_option("--from-table", recover_file, "Truth table file, or - for stdin")->required();
  recover->callback([&] { status = run_recover(opt, recover_n, recover_file); });

  std::string series_kind;
  unsigned series_order = 10;
  auto* series = app.add_subcommand("series", "Coefficients of F(x) or G(x)");
  series->add_option("kind", series_kind, "f or g")->required()->check(kinds({"f", "g"}));
  series->add_option("--order", series_order, "Truncation order")->check(CLI::Range(1U, 100000U));
  series->callback([&] { status = run_series(opt, series_kind, series_order); });

  std::string asympt_kind;
  std::vector<unsigned> asympt_ns;
  auto* asympt = app.add_subcommand("asympt", "Asymptotic estimates against exact values");
  asympt->add_option("kind", asympt_kind, "f, g, t or ratio")->required()->check(kinds({"f", "g", "t", "ratio"}));
  asympt->add_option("--n", asympt_ns, "One or more n")->required()->check(CLI::Range(1U, 1000000U));
  asympt->callback([&] { status = run_asympt(opt, asympt_kind, asympt_ns); });

  unsigned permuted_n = 0;
  auto* permuted = app.add_subcommand("permuted", "Brute-force data for permuted bracketed implications, n = 1..N");
  permuted->add_option("--n", permuted_n, "Largest n")->required()->check(CLI::PositiveNumber);
  permuted->callback([&] { status = run_permuted(opt, permuted_n); });

  unsigned verify_n = 10;
  unsigned verify_order = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check brute force, recurrence and series");
  verify->add_option("--n", verify_n, "Brute-force up to this n")->required()->check(CLI::PositiveNumber);
  verify->add_option("--series-order", verify_order, "Also compare the series up to this order");
  verify->callback([&] { status = run_verify(opt, verify_n, verify_order); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return kGuard;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return kDomain;
  }
  return status;
}
