#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace turanlab {

inline constexpr int kMaxVertices = 512;

/// Fixed-capacity bitset over vertex ids 0..kMaxVertices-1.
///
/// Rows of a Graph and all vertex subsets share this type so that neighborhood
/// intersections are word-parallel ANDs with no allocation.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    /// {0, ..., n-1}
    static VertexSet range(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    void insert(int v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    [[nodiscard]] bool contains(int v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }

    [[nodiscard]] int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    [[nodiscard]] bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    [[nodiscard]] bool any() const noexcept { return !empty(); }

    /// Smallest member, or -1.
    [[nodiscard]] int first() const noexcept {
        for (int w = 0; w < kWords; ++w)
            if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    [[nodiscard]] int next(int v) const noexcept {
        ++v;
        if (v >= kMaxVertices) return -1;
        int w = v >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (cur) return (w << 6) + std::countr_zero(cur);
            if (++w == kWords) return -1;
            cur = words_[w];
        }
    }

    /// Members strictly above v.
    [[nodiscard]] VertexSet above(int v) const noexcept {
        VertexSet s = *this;
        for (int w = 0; w < kWords; ++w) {
            const int lo = w << 6;
            if (v >= lo + 63)
                s.words_[w] = 0;
            else if (v >= lo)
                s.words_[w] &= ~std::uint64_t{0} << (v - lo + 1);
        }
        return s;
    }

    [[nodiscard]] bool is_subset_of(const VertexSet& o) const noexcept {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const VertexSet& o) const noexcept {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    [[nodiscard]] std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = set_->next(v_);
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

    private:
        const VertexSet* set_ = nullptr;
        int v_ = -1;
    };
    [[nodiscard]] iterator begin() const { return {this, first()}; }
    [[nodiscard]] iterator end() const { return {this, -1}; }

    [[nodiscard]] const std::array<std::uint64_t, kWords>& words() const noexcept { return words_; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace turanlab
