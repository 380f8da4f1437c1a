#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ultrafree {

/// Fixed-universe bitset sized at construction. Binary operations require equal universes.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset full(std::size_t universe)
    {
        Bitset b(universe);
        for (auto& w : b.words_)
            w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    template <class Range>
    static Bitset from_range(std::size_t universe, const Range& members)
    {
        Bitset b(universe);
        for (auto m : members)
            b.set(static_cast<std::size_t>(m));
        return b;
    }

    std::size_t universe() const { return universe_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t first() const { return next(0); }

    /// Smallest member >= from, or npos.
    std::size_t next(std::size_t from) const
    {
        if (from >= universe_)
            return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool intersects(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    std::size_t intersection_count(const Bitset& o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    std::size_t symmetric_difference_count(const Bitset& o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] ^ o.words_[i]));
        return c;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const
    {
        Bitset b = *this;
        for (auto& w : b.words_)
            w = ~w;
        b.trim();
        return b;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) = default;

    /// Lexicographic order of the sorted member lists.
    friend bool lex_less(const Bitset& a, const Bitset& b)
    {
        std::size_t i = a.first(), j = b.first();
        while (i != npos && j != npos) {
            if (i != j)
                return i < j;
            i = a.next(i + 1);
            j = b.next(j + 1);
        }
        return i == npos && j != npos;
    }

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull ^ universe_;
        for (auto w : words_)
            h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ull;
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim()
    {
        if (universe_ & 63)
            words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ultrafree
