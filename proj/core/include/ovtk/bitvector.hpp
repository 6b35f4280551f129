#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ovtk {

/// Fixed-length binary vector packed into 64-bit words. Coordinates are
/// 0-based; the length is the dimension d of the owning OV instance.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int length) : size_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits);

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int i, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    int popcount() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    std::string to_string() const;

    bool operator==(const BitVector&) const = default;

    /// Inner product over {0,1} is zero iff the supports are disjoint.
    friend bool orthogonal(const BitVector& a, const BitVector& b) {
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            if (a.words_[w] & b.words_[w]) return false;
        return true;
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ovtk
