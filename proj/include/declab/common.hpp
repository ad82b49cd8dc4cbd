#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace declab {

// Verification failure: an asserted mathematical identity did not hold.
struct CheckError : std::runtime_error {
  explicit CheckError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the supported desk-scale limits.
struct ScaleGuardError : std::runtime_error {
  explicit ScaleGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw CheckError(msg); }

inline void check(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

// Cell limits may be raised via DECOMP_LAB_MAX_CELLS (expert use).
inline long long max_cells_override() {
  if (const char* env = std::getenv("DECOMP_LAB_MAX_CELLS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 0;
}

inline void guard_cells(long long cells, long long default_limit, const std::string& what) {
  long long limit = default_limit;
  if (long long ov = max_cells_override(); ov > 0) limit = ov;
  if (cells > limit)
    throw ScaleGuardError(what + ": size " + std::to_string(cells) + " exceeds limit " +
                          std::to_string(limit));
}

inline long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (1LL << 60) / base) throw ScaleGuardError("ipow overflow");
    r *= base;
  }
  return r;
}

inline bool is_small_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

}  // namespace declab
