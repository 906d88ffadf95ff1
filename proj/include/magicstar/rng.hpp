#pragma once

#include <cstdint>

namespace magicstar {

// splitmix64 stream; platform-independent so sampled suites reproduce
// byte-identically for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform-enough in [0, n); the tiny modulo bias is irrelevant here,
  // determinism is what matters.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Derive an independent stream, e.g. per suite or worker.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
    Rng r(seed ^ (0x6a09e667f3bcc909ULL * (salt + 1)));
    r.next();
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace magicstar
