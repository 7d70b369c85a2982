#pragma once

#include <cstdint>
#include <string_view>

namespace contextsim {

/// Counter-derived random substream. Each (seed, stream tags..., counter)
/// tuple owns an independent generator, so results do not depend on
/// execution order or thread count.
class SubstreamRng {
  public:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t hash_tag(std::string_view tag) {
        std::uint64_t h = 0xCBF29CE484222325ULL; // FNV-1a
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001B3ULL;
        }
        return h;
    }

    SubstreamRng(std::uint64_t seed, std::string_view entity_tag, std::uint64_t pair_tag,
                 std::uint64_t counter)
        : state_(mix(mix(mix(seed ^ hash_tag(entity_tag)) ^ pair_tag) ^ counter)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

} // namespace contextsim
