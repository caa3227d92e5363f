#include "egt/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace egt {

Bitset::Bitset(std::size_t n, bool f) : n_(n), w_((n + 63) / 64, f ? ~0ull : 0ull) {
    if (f) trim();
}

void Bitset::trim() {
    if (n_ & 63 && !w_.empty()) w_.back() &= (1ull << (n_ & 63)) - 1;
}

void Bitset::clear() { std::fill(w_.begin(), w_.end(), 0ull); }

void Bitset::fill() {
    std::fill(w_.begin(), w_.end(), ~0ull);
    trim();
}

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool Bitset::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

Bitset& Bitset::and_not(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

Bitset Bitset::complemented() const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
}

bool Bitset::is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool Bitset::intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

std::size_t Bitset::count_and(const Bitset& o) const {
    assert(n_ == o.n_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
}

bool Bitset::count_and_at_least(const Bitset& o, std::size_t x) const {
    assert(n_ == o.n_);
    if (x == 0) return true;
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        c += std::popcount(w_[i] & o.w_[i]);
        if (c >= x) return true;
    }
    return false;
}

int Bitset::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>((i << 6) + std::countr_zero(w_[i]));
    return -1;
}

int Bitset::next(std::size_t i) const {
    ++i;
    if (i >= n_) return -1;
    std::size_t wi = i >> 6;
    std::uint64_t w = w_[wi] & (~0ull << (i & 63));
    while (true) {
        if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
        if (++wi >= w_.size()) return -1;
        w = w_[wi];
    }
}

std::vector<int> Bitset::to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
}

Bitset Bitset::of(std::size_t n, std::initializer_list<int> bits) {
    Bitset b(n);
    for (int i : bits) b.set(static_cast<std::size_t>(i));
    return b;
}

Bitset Bitset::from_vector(std::size_t n, const std::vector<int>& bits) {
    Bitset b(n);
    for (int i : bits) b.set(static_cast<std::size_t>(i));
    return b;
}

}  // namespace egt
