#pragma once

#include <cstdint>
#include <vector>

namespace qah {

/// Deterministic splitmix64 generator. Used everywhere randomness is needed
/// so that seeded runs produce identical bytes on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n = 0 returns 0.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        // rejection to avoid modulo bias; n is tiny in practice
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Child generator with decorrelated stream; used for per-case isolation.
    Rng split() { return Rng(next() ^ 0xd1b54a32d192ed03ull); }

private:
    std::uint64_t state_;
};

} // namespace qah
