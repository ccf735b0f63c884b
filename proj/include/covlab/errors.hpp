#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace covlab {

struct GroundTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfGround : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAnUltrafilter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All ground sets (points, index sets, position grounds) are capped here.
inline constexpr int kGroundLimit = 16;

inline void require_ground(int n) {
  if (n < 0 || n > kGroundLimit)
    throw GroundTooLarge("ground size " + std::to_string(n) + " exceeds limit " +
                         std::to_string(kGroundLimit));
}

// Enumeration budget. Checkers declare their full enumeration count up front
// and refuse (BudgetExceeded) instead of truncating.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 100'000'000ULL;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t n) {
    if (n > limit_ - used_ || used_ + n > limit_)
      throw BudgetExceeded("enumeration of " + std::to_string(n) +
                           " instances exceeds remaining budget " +
                           std::to_string(limit_ - used_));
    used_ += n;
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Saturating power, for declaring enumeration counts without overflow.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  constexpr std::uint64_t kCap = UINT64_MAX;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kCap / base) return kCap;
    r *= base;
  }
  return r;
}

}  // namespace covlab
