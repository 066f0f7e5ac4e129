#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace carter {

// Thrown when an enumeration (subgroup closure, interval, Hurwitz orbit,
// coset table) would exceed its configured cap.  Callers can raise the cap
// explicitly; the CLI maps this to exit status 3.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;
inline constexpr std::size_t kDefaultIntervalCap = 1'000'000;
inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;
inline constexpr std::size_t kDefaultCosetCap = 1'000'000;

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

}  // namespace carter
