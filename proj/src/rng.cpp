#include "egt/rng.hpp"

#include "egt/errors.hpp"

namespace egt {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw precondition_error("Rng::below(0)");
    const std::uint64_t limit = ~0ull - (~0ull % n + 1) % n;  // largest multiple of n, minus 1
    std::uint64_t v;
    do {
        v = raw();
    } while (v > limit && limit != ~0ull);
    return v % n;
}

bool Rng::bernoulli(const Rational& p) {
    if (p <= 0) {
        raw();  // keep the stream advancing uniformly
        return false;
    }
    if (p >= 1) {
        raw();
        return true;
    }
    // v < p * 2^64, exact; ties broken by extra draws.
    Int threshold = (numerator(p) << 64) / denominator(p);
    Int v = raw();
    return v < threshold;
}

int Rng::pick(const Bitset& s) {
    std::size_t c = s.count();
    if (c == 0) throw precondition_error("Rng::pick: empty set");
    std::uint64_t k = below(c);
    int v = s.first();
    while (k--) v = s.next(static_cast<std::size_t>(v));
    return v;
}

std::vector<int> Rng::sample_without_replacement(const Bitset& s, std::size_t k) {
    std::vector<int> pool = s.to_vector();
    if (k > pool.size())
        throw precondition_error("sample_without_replacement: k exceeds |s|");
    for (std::size_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + below(pool.size() - i)]);
    pool.resize(k);
    return pool;
}

}  // namespace egt
