#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace knesertw {

// Fixed-capacity dynamic bitset sized at construction. The solvers live on
// intersection/difference and find-next scans, so this stays minimal.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // this \ o
    DynBitset& operator-=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator-(DynBitset a, const DynBitset& b) { return a -= b; }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    bool intersects(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // First set bit at index >= from, or size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
                return i < size_ ? i : size_;
            }
            if (++w >= words_.size()) return size_;
            cur = words_[w];
        }
    }

    std::size_t find_first() const { return find_next(0); }

    std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> out;
        for (std::size_t i = find_first(); i < size_; i = find_next(i + 1))
            out.push_back(static_cast<std::uint32_t>(i));
        return out;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace knesertw
