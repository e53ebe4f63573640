#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ccover::detail {

// Runtime-sized bitset. All binary operations assume equal capacity.
class DynBitset {
public:
    using Word = std::uint64_t;

    DynBitset() = default;
    explicit DynBitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int bit_capacity() const { return bits_; }

    void set(int i) { words_[i >> 6] |= Word{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (Word w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

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

    void or_with(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    void and_with(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }

    void andnot_with(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            for (Word w = words_[wi]; w; w &= w - 1)
                f(static_cast<int>(wi * 64 + std::countr_zero(w)));
    }

    bool operator==(const DynBitset&) const = default;

private:
    int bits_ = 0;
    std::vector<Word> words_;
};

} // namespace ccover::detail
