#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kingsim {

/// Fixed-size dynamic bitset with the handful of bulk operations the
/// strategy code leans on (masked popcounts, in-place unions).
class DynBitset {
public:
    DynBitset() = default;

    explicit DynBitset(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w != 0) return true;
        return false;
    }

    DynBitset& operator|=(const DynBitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    DynBitset& operator&=(const DynBitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    /// |a & b|
    static std::size_t count_and(const DynBitset& a, const DynBitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    /// |a & ~b|
    static std::size_t count_and_not(const DynBitset& a, const DynBitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & ~b.words_[i]));
        return c;
    }

    /// true iff a & b has at least one set bit
    static bool intersects(const DynBitset& a, const DynBitset& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            if (a.words_[i] & b.words_[i]) return true;
        return false;
    }

    bool operator==(const DynBitset& other) const = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace kingsim
