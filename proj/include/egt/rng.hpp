#pragma once

#include "egt/bitset.hpp"
#include "egt/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace egt {

/// Seeded generator with self-contained sampling helpers, so that every
/// random construction is bit-exact for a fixed seed across platforms
/// (distribution classes from <random> are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t raw() { return eng_(); }

    /// Uniform in [0, n), rejection-sampled.
    std::uint64_t below(std::uint64_t n);

    /// True with probability exactly p (0 <= p <= 1).
    bool bernoulli(const Rational& p);

    /// Fisher-Yates.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    /// Uniform member of a nonempty set.
    int pick(const Bitset& s);

    /// k distinct elements of s, k <= |s|.
    std::vector<int> sample_without_replacement(const Bitset& s, std::size_t k);

    /// Independent stream derived from the original seed (per-trial use).
    Rng fork(std::uint64_t stream) const {
        std::uint64_t h = seed_ + 0x9e3779b97f4a7c15ull * (stream + 1);
        h ^= h >> 30;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 27;
        return Rng(h);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace egt
