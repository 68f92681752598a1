#pragma once

#include <optional>

namespace implicount {

// Size guards for the exponential operations. All are knobs, not hard limits.
struct Limits {
  unsigned enumerate_max_n = 20;
  unsigned column_max_n = 30;
  unsigned brute_force_max_n = 14;
  unsigned permuted_max_n = 8;

  // Defaults, with every guard replaced by IMPLICOUNT_GUARD_N when that
  // variable holds a positive integer.
  static Limits from_environment();

  // Process-wide limits used by the overloads that take no Limits argument.
  // Not synchronized: set once at startup, before any worker threads exist.
  static const Limits& global();
  static void set_global(const Limits& limits);
};

std::optional<unsigned> guard_override_from_environment();

}  // namespace implicount
