#pragma once

#include <cstdint>
#include <vector>

namespace covlab {

// Mixed-radix counter enumerating digit vectors in lexicographic order
// (position 0 most significant).  A zero radix with nonzero length yields
// no vectors; zero length yields exactly the empty vector.
class Odometer {
 public:
  explicit Odometer(std::vector<int> radices)
      : radix_(std::move(radices)), digits_(radix_.size(), 0) {
    for (int r : radix_)
      if (r <= 0) empty_ = true;
  }
  Odometer(int length, int radix) : Odometer(std::vector<int>(length, radix)) {}

  std::uint64_t total() const {
    if (empty_) return 0;
    std::uint64_t t = 1;
    for (int r : radix_) {
      if (t > UINT64_MAX / static_cast<std::uint64_t>(r)) return UINT64_MAX;
      t *= static_cast<std::uint64_t>(r);
    }
    return t;
  }

  bool valid() const { return !empty_ && !done_; }
  const std::vector<int>& digits() const { return digits_; }

  void next() {
    for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
      if (++digits_[i] < radix_[i]) return;
      digits_[i] = 0;
    }
    done_ = true;
  }

 private:
  std::vector<int> radix_;
  std::vector<int> digits_;
  bool empty_ = false;
  bool done_ = false;
};

}  // namespace covlab
