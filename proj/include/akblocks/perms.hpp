#pragma once

#include <cstdint>
#include <vector>

#include "akblocks/errors.hpp"

namespace akblocks {

// Table-driven S_n for small n.  Elements are ranked by the
// lexicographic order of their one-line notation (identity is 0);
// values in one-line arrays are 1-based.  Products compose as
// functions: (uv)(i) = u(v(i)).
class SymmetricGroup {
public:
    explicit SymmetricGroup(uint32_t n);

    uint32_t degree() const noexcept { return n_; }
    uint32_t order() const noexcept { return static_cast<uint32_t>(elements_.size()); }
    uint32_t identity() const noexcept { return 0; }

    const std::vector<uint8_t>& one_line(uint32_t w) const { return elements_[w]; }
    uint32_t rank_of(const std::vector<uint8_t>& line) const;

    uint32_t mul(uint32_t u, uint32_t v) const;
    uint32_t inverse(uint32_t w) const { return inverse_[w]; }

    // w * s_i and s_i * w for 1 <= i <= n-1.
    uint32_t right_gen(uint32_t w, uint32_t i) const { return right_gen_[i - 1][w]; }
    uint32_t left_gen(uint32_t i, uint32_t w) const { return left_gen_[i - 1][w]; }

    uint32_t length(uint32_t w) const { return length_[w]; }

    // ell(w s_i) > ell(w) iff w(i) < w(i+1).
    bool right_ascent(uint32_t w, uint32_t i) const {
        return elements_[w][i - 1] < elements_[w][i];
    }
    bool left_ascent(uint32_t i, uint32_t w) const {
        return right_ascent(inverse_[w], i);
    }

    // Canonical reduced word (letters are generator subscripts).
    const std::vector<uint32_t>& reduced_word(uint32_t w) const { return words_[w]; }

private:
    uint32_t n_;
    std::vector<std::vector<uint8_t>> elements_;
    std::vector<uint32_t> inverse_;
    std::vector<uint32_t> length_;
    std::vector<std::vector<uint32_t>> right_gen_;  // [i-1][w]
    std::vector<std::vector<uint32_t>> left_gen_;
    std::vector<std::vector<uint32_t>> words_;
};

}  // namespace akblocks
