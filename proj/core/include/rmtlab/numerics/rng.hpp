#pragma once

#include <cmath>
#include <cstdint>

namespace rmtlab::numerics {

/// Counter-based random stream (Philox2x64-10).
///
/// The master seed is the Philox key and the stream index occupies the high
/// counter word, so streams with distinct indices draw from disjoint keyed
/// blocks: replicates can be assigned one stream each and reproduce
/// bit-for-bit no matter how they are scheduled. A stream is single-consumer;
/// concurrent callers must hold distinct stream indices.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : key_(master_seed), stream_(stream_index) {}

  std::uint64_t master_seed() const { return key_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint64_t next_u64() {
    if (buffered_) {
      buffered_ = false;
      return buffer_;
    }
    auto block = philox(counter_++, stream_, key_);
    buffer_ = block.second;
    buffered_ = true;
    return block.first;
  }

  /// Uniform on the open interval (0,1); never returns an endpoint.
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal deviate (Marsaglia polar method, spare cached).
  double next_gaussian() {
    if (have_gauss_) {
      have_gauss_ = false;
      return gauss_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    gauss_ = v * f;
    have_gauss_ = true;
    return u * f;
  }

 private:
  struct Block {
    std::uint64_t first;
    std::uint64_t second;
  };

  static Block philox(std::uint64_t ctr_lo, std::uint64_t ctr_hi,
                      std::uint64_t key) {
    constexpr std::uint64_t kMul = 0xD2B74407B1CE6E93ULL;
    constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;
    std::uint64_t x0 = ctr_lo;
    std::uint64_t x1 = ctr_hi;
    std::uint64_t k = key;
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 prod =
          static_cast<unsigned __int128>(x0) * kMul;
      const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
      const std::uint64_t lo = static_cast<std::uint64_t>(prod);
      x0 = hi ^ k ^ x1;
      x1 = lo;
      k += kWeyl;
    }
    return {x0, x1};
  }

  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::uint64_t buffer_ = 0;
  bool buffered_ = false;
  double gauss_ = 0.0;
  bool have_gauss_ = false;
};

}  // namespace rmtlab::numerics
