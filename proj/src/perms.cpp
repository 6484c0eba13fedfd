#include "akblocks/perms.hpp"

#include <algorithm>
#include <numeric>

namespace akblocks {

SymmetricGroup::SymmetricGroup(uint32_t n) : n_(n) {
    if (n < 1 || n > 10) throw precondition_error("symmetric group degree out of range");

    std::vector<uint8_t> line(n);
    std::iota(line.begin(), line.end(), 1);
    do {
        elements_.push_back(line);
    } while (std::next_permutation(line.begin(), line.end()));

    const uint32_t order = static_cast<uint32_t>(elements_.size());
    inverse_.resize(order);
    length_.resize(order);
    right_gen_.assign(n_ > 0 ? n_ - 1 : 0, std::vector<uint32_t>(order));
    left_gen_.assign(n_ > 0 ? n_ - 1 : 0, std::vector<uint32_t>(order));
    words_.resize(order);

    for (uint32_t w = 0; w < order; ++w) {
        const auto& ol = elements_[w];
        std::vector<uint8_t> inv(n_);
        uint32_t len = 0;
        for (uint32_t i = 0; i < n_; ++i) {
            inv[ol[i] - 1] = static_cast<uint8_t>(i + 1);
            for (uint32_t j = i + 1; j < n_; ++j)
                if (ol[i] > ol[j]) ++len;
        }
        inverse_[w] = rank_of(inv);
        length_[w] = len;

        for (uint32_t i = 1; i < n_; ++i) {
            std::vector<uint8_t> rg = ol;
            std::swap(rg[i - 1], rg[i]);
            right_gen_[i - 1][w] = rank_of(rg);
            std::vector<uint8_t> lg = ol;
            for (uint8_t& v : lg) {
                if (v == i) v = static_cast<uint8_t>(i + 1);
                else if (v == i + 1) v = static_cast<uint8_t>(i);
            }
            left_gen_[i - 1][w] = rank_of(lg);
        }
    }

    // Canonical reduced word: peel the smallest right descent.
    for (uint32_t w = 0; w < order; ++w) {
        std::vector<uint32_t> letters;
        uint32_t u = w;
        while (length_[u] > 0) {
            uint32_t i = 1;
            while (right_ascent(u, i)) ++i;
            letters.push_back(i);
            u = right_gen_[i - 1][u];
        }
        std::reverse(letters.begin(), letters.end());
        words_[w] = std::move(letters);
    }
}

uint32_t SymmetricGroup::rank_of(const std::vector<uint8_t>& line) const {
    // Lehmer code to lexicographic rank.
    uint64_t rank = 0;
    uint64_t fact = 1;
    for (uint32_t i = 2; i <= n_; ++i) fact *= i;
    for (uint32_t i = 0; i < n_; ++i) {
        fact /= (n_ - i);
        uint32_t smaller = 0;
        for (uint32_t j = i + 1; j < n_; ++j)
            if (line[j] < line[i]) ++smaller;
        rank += smaller * fact;
    }
    return static_cast<uint32_t>(rank);
}

uint32_t SymmetricGroup::mul(uint32_t u, uint32_t v) const {
    const auto& ul = elements_[u];
    const auto& vl = elements_[v];
    std::vector<uint8_t> out(n_);
    for (uint32_t i = 0; i < n_; ++i) out[i] = ul[vl[i] - 1];
    return rank_of(out);
}

}  // namespace akblocks
