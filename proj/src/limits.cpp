#include "implicount/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace implicount {

std::optional<unsigned> guard_override_from_environment() {
  const char* raw = std::getenv("IMPLICOUNT_GUARD_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return std::nullopt;
  return value;
}

Limits Limits::from_environment() {
  Limits limits;
  if (const auto n = guard_override_from_environment()) {
    limits.enumerate_max_n = *n;
    limits.column_max_n = *n;
    limits.brute_force_max_n = *n;
    limits.permuted_max_n = *n;
  }
  return limits;
}

namespace {

Limits& global_limits() {
  static Limits limits;
  return limits;
}

}  // namespace

const Limits& Limits::global() { return global_limits(); }

void Limits::set_global(const Limits& limits) { global_limits() = limits; }

}  // namespace implicount
