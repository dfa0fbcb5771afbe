#ifndef BSP_VERTEX_SET_HPP
#define BSP_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace bsp {

// Dense set of vertices over [0, capacity). Two inline words cover graphs
// up to 128 vertices without touching the heap.
class VertexSet {
  public:
    using Word = std::uint64_t;
    static constexpr int word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(int capacity) : capacity_(capacity), words_(word_count(capacity), 0) {}
    VertexSet(int capacity, std::initializer_list<int> members) : VertexSet(capacity) {
        for (int v : members) insert(v);
    }
    template <class Range>
    static VertexSet from(int capacity, const Range& members) {
        VertexSet s(capacity);
        for (int v : members) s.insert(v);
        return s;
    }
    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    int capacity() const noexcept { return capacity_; }
    bool contains(int v) const noexcept {
        assert(v >= 0 && v < capacity_);
        return (words_[v / word_bits] >> (v % word_bits)) & 1U;
    }
    void insert(int v) noexcept {
        assert(v >= 0 && v < capacity_);
        words_[v / word_bits] |= Word{1} << (v % word_bits);
    }
    void erase(int v) noexcept {
        assert(v >= 0 && v < capacity_);
        words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    int size() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    // -1 when there is no such member
    int first() const noexcept { return next_from(0); }
    int next(int v) const noexcept { return next_from(v + 1); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool intersects(const VertexSet& o) const noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) noexcept { return a ^= b; }
    VertexSet complement() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.capacity_ == b.capacity_ && a.words_ == b.words_;
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
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    const Word* data() const noexcept { return words_.data(); }
    std::size_t word_size() const noexcept { return words_.size(); }

    std::size_t hash() const noexcept {
        std::size_t h = static_cast<std::size_t>(capacity_);
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h >> 7));
        return h;
    }

  private:
    static std::size_t word_count(int capacity) { return static_cast<std::size_t>((capacity + word_bits - 1) / word_bits); }
    void trim() noexcept {
        int r = capacity_ % word_bits;
        if (r && !words_.empty()) words_.back() &= (Word{1} << r) - 1;
    }
    int next_from(int v) const noexcept {
        if (v >= capacity_) return -1;
        std::size_t i = static_cast<std::size_t>(v / word_bits);
        Word w = words_[i] & (~Word{0} << (v % word_bits));
        while (true) {
            if (w) return static_cast<int>(i) * word_bits + std::countr_zero(w);
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    int capacity_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

// order of the sorted member sequences, so {0,1} < {0,1,2} < {0,2}
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
        if (x != y) return x < y;
        x = a.next(x);
        y = b.next(y);
    }
    return x < 0 && y >= 0;
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace bsp

#endif
