#pragma once

#include <cstdint>
#include <vector>

namespace helly {

/// Deterministic 64-bit generator (splitmix64). Chosen over std::mt19937_64 +
/// <random> distributions because distribution output is not pinned by the
/// standard; this generator and the derived draws below are bit-identical on
/// every platform, which the reproducible-report contract requires.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection; n > 0.
    uint64_t below(uint64_t n) {
        const uint64_t limit = n * (UINT64_MAX / n);
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

    /// Derived independent stream; mixing the tag keeps sibling streams apart.
    Rng fork(uint64_t tag) {
        uint64_t s = next_u64();
        return Rng(s ^ (tag * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

} // namespace helly
