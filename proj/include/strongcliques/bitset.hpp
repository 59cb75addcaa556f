#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace strongcliques {

// Fixed-capacity bitset sized at construction. Binary operations assume both
// operands share the same capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    static Bitset all(int bits) {
        Bitset b(bits);
        for (auto& w : b.words_) w = ~uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset of(int bits, const std::vector<int>& members) {
        Bitset b(bits);
        for (int v : members) b.set(v);
        return b;
    }

    int capacity() const { return bits_; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit, or -1.
    int find_first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        if (bits_ & 63) words_.back() &= (uint64_t{1} << (bits_ & 63)) - 1;
    }

    int bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace strongcliques
