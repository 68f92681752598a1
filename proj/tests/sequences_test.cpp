#include <doctest.h>

#include <sstream>

#include "implicount/asymptotics.hpp"
#include "implicount/errors.hpp"
#include "implicount/sequences.hpp"

using namespace implicount;

namespace {

// The 22 values listed for f_1 .. f_22.
const char* const kListedF[] = {
    "1",           "1",            "4",             "19",             "104",
    "614",         "3816",         "24595",         "162896",         "1101922",
    "7580904",     "52878654",     "373100272",     "2658188524",     "19096607120",
    "138182654595", "1006202473888", "7367648586954", "54214472633064", "400698865376842",
    "2973344993337520", "22142778865313364",
};

// t_0 .. t_10.
const unsigned long kListedT[] = {0, 1, 3, 12, 61, 344, 2074, 13080, 85229, 569264, 3876766};

}  // namespace

TEST_CASE("f_recurrence reproduces the listed values") {
  const SequenceTable f = f_recurrence(22);
  CHECK(f.kind == SequenceKind::F);
  CHECK(f.n_max() == 22);
  CHECK(f[0] == 0);
  for (unsigned n = 1; n <= 22; ++n) CHECK(f[n] == BigCount(kListedF[n - 1]));
}

TEST_CASE("f_recurrence small orders") {
  CHECK(f_recurrence(3)[3] == 4);
  CHECK(f_recurrence(10)[10] == 1101922);
  CHECK(f_recurrence(1).values.size() == 2);
  CHECK(f_recurrence(0).values.size() == 1);
}

TEST_CASE("g_sequence") {
  const SequenceTable g = g_sequence(10);
  CHECK(g[0] == 0);
  CHECK(g[1] == 2);
  CHECK(g[3] == 16);
  CHECK(g[8] == 109824);
  for (unsigned n = 1; n <= 10; ++n) CHECK(g[n] == catalan(n) * (BigCount(1) << n));
}

TEST_CASE("t_sequence reproduces the listed table") {
  const SequenceTable t = t_sequence(10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(t[n] == kListedT[n]);
  CHECK(t_sequence(0)[0] == 0);
}

TEST_CASE("0 < f_n < g_n and t_n = g_n - f_n") {
  const SequenceTable f = f_recurrence(300);
  const SequenceTable g = g_sequence(300);
  const SequenceTable t = t_sequence(300);
  for (unsigned n = 1; n <= 300; ++n) {
    CHECK(f[n] > 0);
    CHECK(f[n] < g[n]);
    CHECK(t[n] == g[n] - f[n]);
  }
}

TEST_CASE("the cache agrees with the fresh tables") {
  auto& cache = SequenceCache::instance();
  const SequenceTable f = f_recurrence(120);
  for (unsigned n : {0U, 1U, 2U, 17U, 120U, 50U}) CHECK(cache.f(n) == f[n]);
  const SequenceTable cached = cache.table(SequenceKind::T, 40);
  const SequenceTable fresh = t_sequence(40);
  CHECK(cached.values == fresh.values);
}

TEST_CASE("to_significant rounds half up and keeps trailing zeros") {
  CHECK(to_significant(mpq_class(1, 2), 10) == "0.5000000000");
  CHECK(to_significant(mpq_class(2, 3), 3) == "0.667");
  CHECK(to_significant(mpq_class(1, 8), 2) == "0.13");
  CHECK(to_significant(mpq_class(99999, 100000), 3) == "1.00");
  CHECK(to_significant(mpq_class(12345), 3) == "12300");
  CHECK(to_significant(mpq_class(314159, 100000), 4) == "3.142");
  CHECK(to_significant(mpq_class(1, 1000), 2) == "0.0010");
  CHECK(to_significant(mpq_class(0), 5) == "0");
  CHECK_THROWS_AS(to_significant(mpq_class(1), 0), RangeError);
}

TEST_CASE("ratio matches the printed convergence table") {
  // Printed digits with the trailing zeros the table drops.
  const std::pair<unsigned, const char*> rows[] = {
      {1, "0.5"},          {2, "0.25"},         {3, "0.25"},        {4, "0.2375"},       {5, "0.2321428571"},
      {6, "0.228422619"},  {7, "0.2258522727"}, {8, "0.2239492279"}, {9, "0.2224868881"}, {10, "0.2213277876"},
  };
  for (const auto& [n, printed] : rows) {
    CAPTURE(n);
    const std::string digits = std::string(printed).substr(2);
    const auto significant = static_cast<unsigned>(digits.size() - digits.find_first_not_of('0'));
    CHECK(ratio(n, significant) == printed);
  }
  CHECK(ratio(5) == "0.2321428571");
  CHECK(ratio(6) == "0.2284226190");
  CHECK(ratio(100) == "0.2122908650");
  CHECK(ratio(1000) == "0.2114211279");
  CHECK_THROWS_AS(ratio(0), RangeError);
}

TEST_CASE("ratio is monotone and above the limit") {
  const double limit = false_fraction_limit();
  mpq_class previous = ratio_exact(2);
  for (unsigned n = 3; n <= 1000; ++n) {
    const mpq_class current = ratio_exact(n);
    // f_2/g_2 = f_3/g_3 = 1/4; strict decrease starts at n = 3.
    if (n == 3) {
      CHECK(current == previous);
    } else {
      CHECK(current < previous);
    }
    CHECK(current.get_d() > limit);
    previous = current;
  }
}

TEST_CASE("csv and json exports") {
  std::ostringstream csv;
  write_sequence_csv(csv, 3);
  CHECK(csv.str() ==
        "n,f_n,g_n,t_n,ratio\n"
        "1,1,2,1,0.5000000000\n"
        "2,1,4,3,0.2500000000\n"
        "3,4,16,12,0.2500000000\n");
  std::ostringstream json;
  write_sequence_json(json, 2);
  CHECK(json.str() ==
        "[\n  {\"n\":1,\"f_n\":1,\"g_n\":2,\"t_n\":1,\"ratio\":0.5000000000},"
        "\n  {\"n\":2,\"f_n\":1,\"g_n\":4,\"t_n\":3,\"ratio\":0.2500000000}\n]\n");
}
