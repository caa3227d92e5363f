#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace egt {

/// Fixed-universe bit vector over vertex indices 0..n-1.  The carrier of
/// every vertex subset in the library (A, A_i, S, T, W_1, ...).
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(std::size_t n, bool fill = false);

    std::size_t universe() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= (1ull << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void clear();
    void fill();

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o);
    Bitset& operator|=(const Bitset& o);
    Bitset& and_not(const Bitset& o);  // *this &= ~o

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    bool operator==(const Bitset& o) const = default;

    Bitset complemented() const;
    bool is_subset_of(const Bitset& o) const;
    bool intersects(const Bitset& o) const;

    /// |*this & o| without allocating.
    std::size_t count_and(const Bitset& o) const;
    /// True iff |*this & o| >= x; stops scanning words once decided.
    bool count_and_at_least(const Bitset& o, std::size_t x) const;

    int first() const;              // lowest set bit, -1 if none
    int next(std::size_t i) const;  // lowest set bit > i, -1 if none

    std::vector<int> to_vector() const;
    static Bitset of(std::size_t n, std::initializer_list<int> bits);
    static Bitset from_vector(std::size_t n, const std::vector<int>& bits);

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(static_cast<int>((wi << 6) + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    const std::uint64_t* words() const { return w_.data(); }
    std::size_t word_count() const { return w_.size(); }

private:
    void trim();  // zero the tail bits beyond n_

    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

}  // namespace egt
