#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "focal/scalar.hpp"

namespace focal {

/// Seeded deterministic pseudo-random stream. mt19937_64 output is pinned by
/// the standard, so identical seeds give identical draws on every platform.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        // Hand-rolled rejection sampling: uniform_int_distribution is not
        // bit-reproducible across standard library implementations.
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Random rational of small height: |numerator| <= num_bound,
    /// 1 <= denominator <= den_bound.
    Rat next_rat(std::int64_t num_bound = 40, std::int64_t den_bound = 7) {
        Int p(next_int(-num_bound, num_bound));
        Int q(next_int(1, den_bound));
        return Rat(p, q);
    }

    /// Random nonzero rational.
    Rat next_rat_nonzero(std::int64_t num_bound = 40, std::int64_t den_bound = 7) {
        for (;;) {
            Rat r = next_rat(num_bound, den_bound);
            if (!is_zero(r)) return r;
        }
    }

    /// Random parameter-space base point.
    std::pair<Rat, Rat> next_base(std::int64_t num_bound = 40, std::int64_t den_bound = 7) {
        Rat u = next_rat(num_bound, den_bound);
        Rat v = next_rat(num_bound, den_bound);
        return {u, v};
    }

    /// Derived independent stream; keeps sibling consumers from interleaving.
    SeedStream fork(std::uint64_t salt) {
        return SeedStream(eng_() ^ (salt * 0x9e3779b97f4a7c15ULL));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace focal
