#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace transcamp {

// Raised when a computation produces non-finite values (maps to CLI exit 3).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// --- logging -----------------------------------------------------------

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

// Level comes from TRANSCAMP_LOG (error|info|debug); default info.
LogLevel log_level();
void log_error(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

// --- deterministic summation -------------------------------------------

// Sums addends in ascending value order. The result depends only on the
// multiset of addends, never on their arrangement, which keeps reductions
// over graph neighborhoods invariant under node relabeling.
double stable_sum(std::span<const double> xs);

// --- random numbers ------------------------------------------------------

// Explicit algorithms on top of mt19937_64 so that streams are reproducible
// independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi);  // inclusive bounds

  // standard normal via Box-Muller
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::string shape_string(std::span<const int> shape);

}  // namespace transcamp
