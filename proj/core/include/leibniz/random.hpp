#pragma once

#include <cstdint>
#include <random>

#include "leibniz/rational.hpp"

namespace leibniz {

// Seeded generator with a platform-independent output sequence.
// (std::uniform_int_distribution is implementation-defined.)
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace leibniz
