#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "apwenian/words.hpp"

namespace testutil {

// Unique extension of a choice of odd-indexed values to a sequence
// satisfying the 0-1 criterion: c_0 = 1, c_{2n+2} = c_n xor c_{2n+1}.
inline apw::BitSeq make_apwenian_01(const std::vector<int>& odd_bits, std::size_t len) {
    apw::BitSeq c;
    c.push_back(1);
    for (std::size_t i = 1; i < len; ++i) {
        if (i % 2 == 1) {
            const std::size_t k = (i - 1) / 2;
            c.push_back(k < odd_bits.size() ? odd_bits[k] : 0);
        } else {
            const std::size_t n = (i - 2) / 2;
            c.push_back(c.get(n) ^ c.get(i - 1));
        }
    }
    return c;
}

inline apw::BitSeq random_bits(std::mt19937_64& rng, std::size_t len, int first = -1) {
    apw::BitSeq c;
    for (std::size_t i = 0; i < len; ++i)
        c.push_back(i == 0 && first >= 0 ? first : static_cast<int>(rng() & 1));
    return c;
}

inline apw::SignSeq random_signs(std::mt19937_64& rng, std::size_t len, int first = 0) {
    apw::SignSeq d;
    for (std::size_t i = 0; i < len; ++i)
        d.push_back_sign(i == 0 && first != 0 ? first : ((rng() & 1) ? +1 : -1));
    return d;
}

// Bit i of the mask becomes symbol i; for exhaustive prefix sweeps.
inline apw::BitSeq bits_from_mask(std::uint64_t mask, std::size_t len) {
    apw::BitSeq c;
    for (std::size_t i = 0; i < len; ++i) c.push_back(static_cast<int>((mask >> i) & 1));
    return c;
}

inline apw::SignSeq signs_from_mask(std::uint64_t mask, std::size_t len) {
    apw::SignSeq d;
    for (std::size_t i = 0; i < len; ++i) d.push_back_sign(((mask >> i) & 1) ? -1 : +1);
    return d;
}

// Number of distinct factors of each length and the balance property,
// both by brute force.
inline std::size_t distinct_factors(const std::string& w, std::size_t ell) {
    std::set<std::string> fs;
    for (std::size_t i = 0; i + ell <= w.size(); ++i) fs.insert(w.substr(i, ell));
    return fs.size();
}

inline bool is_balanced_for_length(const std::string& w, std::size_t ell) {
    std::size_t lo = ell + 1, hi = 0;
    for (std::size_t i = 0; i + ell <= w.size(); ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < ell; ++j) ones += (w[i + j] == '1');
        lo = std::min(lo, ones);
        hi = std::max(hi, ones);
    }
    return hi - lo <= 1;
}

}  // namespace testutil
