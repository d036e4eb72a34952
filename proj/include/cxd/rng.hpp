#ifndef CXD_RNG_HPP
#define CXD_RNG_HPP

#include <cstdint>
#include <cstring>
#include <string_view>

namespace cxd {

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline constexpr std::uint64_t kFnvPrime  = 1099511628211ull;

inline std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed = kFnvOffset) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t hash = seed;
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= kFnvPrime;
    }
    return hash;
}

inline std::uint64_t fnv1a64(std::string_view text, std::uint64_t seed = kFnvOffset) {
    return fnv1a64(text.data(), text.size(), seed);
}

// splitmix64 finalizer applied to a keyed counter. Stateless: value(i) depends
// only on (seed, i), so grids can be filled in any order or in parallel and
// the stream stays bit-identical on every platform.
struct CounterRng {
    std::uint64_t seed = 0;

    std::uint64_t word(std::uint64_t index) const {
        std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // [0, 1) with 53 significant bits.
    double uniform01(std::uint64_t index) const {
        return static_cast<double>(word(index) >> 11) * 0x1.0p-53;
    }

    // Unit normal via a 12-uniform sum. Only additions of exact dyadic
    // doubles, so results are reproducible bit-for-bit everywhere, unlike
    // std::normal_distribution.
    double normal(std::uint64_t index) const {
        double sum = 0.0;
        for (std::uint64_t k = 0; k < 12; ++k) {
            sum += uniform01(index * 12 + k);
        }
        return sum - 6.0;
    }
};

}  // namespace cxd

#endif
