#ifndef POLARMAP_RNG_HPP
#define POLARMAP_RNG_HPP

#include <cstdint>

namespace polarmap {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Stateless counter-based generator: every (seed, index, draw) triple maps
// to one value, so results do not depend on evaluation order or threading.
struct CounterRng {
  std::uint64_t seed = 0;

  std::uint64_t bits(std::uint64_t index, std::uint64_t draw) const {
    return splitmix64(splitmix64(seed ^ 0x5851F42D4C957F2DULL) + splitmix64(index) +
                      0xD1B54A32D192ED03ULL * draw);
  }

  // Uniform on [0, 1).
  double uniform(std::uint64_t index, std::uint64_t draw) const {
    return static_cast<double>(bits(index, draw) >> 11) * 0x1.0p-53;
  }
};

}  // namespace polarmap

#endif
