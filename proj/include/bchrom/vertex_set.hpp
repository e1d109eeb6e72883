#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace bchrom {

/// Set of vertex ids over a fixed universe 0..universe-1, one bit per id.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe),
          words_(static_cast<std::size_t>(universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ull;
        if (int tail = universe % 64; tail != 0 && !s.words_.empty())
            s.words_.back() &= (1ull << tail) - 1;
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    template <class Range>
    static VertexSet from_range(int universe, const Range& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        if (v < 0 || v >= universe_) return false;
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
    }

    void remove(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(1ull << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Smallest element, or -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Smallest element strictly greater than v, or -1 if none.
    int next(int v) const {
        if (v < 0) return first();
        std::size_t i = static_cast<std::size_t>(v) >> 6;
        if (i >= words_.size()) return -1;
        std::uint64_t w = words_[i] & ~((v & 63) == 63 ? ~0ull : ((2ull << (v & 63)) - 1));
        while (true) {
            if (w != 0) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~other) return false;
        }
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference, in place.
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a.subtract(b); return a; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet&) const = default;

    class const_iterator {
    public:
        using value_type = int;
        const_iterator(const VertexSet* s, int pos) : set_(s), pos_(pos) {}
        int operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = set_->next(pos_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }
        bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

    private:
        const VertexSet* set_;
        int pos_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void require_same_universe(const VertexSet& o) const {
        if (o.universe_ != universe_)
            throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace bchrom
