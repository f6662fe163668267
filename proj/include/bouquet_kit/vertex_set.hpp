#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bouquet_kit {

/// Dense bit set over a frozen vertex universe 0..n-1. Subset and
/// intersection tests dominate the enumeration cores, so everything is
/// word-parallel. Operands of binary operations must share a universe.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_(static_cast<size_t>((universe + 63) / 64), 0) {}

    static VertexSet of(int universe, std::initializer_list<int> indices) {
        VertexSet s(universe);
        for (int i : indices) s.add(i);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int i) const {
        assert(i >= 0 && i < universe_);
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void add(int i) {
        assert(i >= 0 && i < universe_);
        words_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void remove(int i) {
        assert(i >= 0 && i < universe_);
        words_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    int intersection_count(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        int c = 0;
        for (size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    /// Smallest member, or -1 when empty.
    int first() const { return scan_from(0); }

    /// Smallest member strictly greater than `after`, or -1.
    int next(int after) const { return scan_from(after + 1); }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    /// Lexicographic order on the sorted index sequences; a proper prefix
    /// compares smaller.
    bool lex_less(const VertexSet& o) const {
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return b >= 0;
    }

private:
    void trim() {
        if (universe_ & 63)
            words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
    }

    int scan_from(int start) const {
        if (start < 0) start = 0;
        size_t k = static_cast<size_t>(start) >> 6;
        if (k >= words_.size()) return -1;
        std::uint64_t w = words_[k] & ~((std::uint64_t{1} << (start & 63)) - 1);
        while (true) {
            if (w) return static_cast<int>((k << 6) + static_cast<size_t>(std::countr_zero(w)));
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Canonical order used for all enumerated output: cardinality first, then
/// lexicographic on sorted indices.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_less(b);
}

} // namespace bouquet_kit
