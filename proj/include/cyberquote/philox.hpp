#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace cyberquote::rng {

inline constexpr std::string_view kGeneratorName = "philox4x32-10";

// Philox4x32 with 10 rounds (Salmon et al., SC'11): a keyed bijection on 128-bit
// counters, so any block can be computed directly from (key, counter).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter counter, Key key) noexcept;
};

// Random stream for one simulation draw. Block j of the stream is
// Philox(key = seed, counter = {j, stream, index_lo, index_hi}), so every value depends
// only on (seed, stream, index) and never on evaluation order or thread count.
class Substream {
 public:
  Substream(std::uint64_t seed, std::uint32_t stream, std::uint64_t index) noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;
  // Uniform on the open interval (0, 1) with 53-bit resolution.
  double next_uniform() noexcept;

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter counter_;
  Philox4x32::Counter block_{};
  int used_ = 4;
};

}  // namespace cyberquote::rng
