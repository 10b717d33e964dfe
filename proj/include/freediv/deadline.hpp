#ifndef FREEDIV_DEADLINE_HPP
#define FREEDIV_DEADLINE_HPP

#include <chrono>
#include <optional>

#include "freediv/numeric.hpp"

namespace freediv {

// Wall-clock budget for a computation.  Exceeding it raises
// ResourceExhausted, which is always a distinct outcome, never a wrong
// answer.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after_seconds(double s) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(s));
    return d;
  }
  static Deadline none() { return Deadline(); }

  bool expired() const {
    return at_ && std::chrono::steady_clock::now() > *at_;
  }
  void check(const char* what) const {
    if (expired()) throw ResourceExhausted(what);
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace freediv

#endif
