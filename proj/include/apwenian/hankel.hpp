#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "apwenian/errors.hpp"
#include "apwenian/numeric.hpp"
#include "apwenian/sequences.hpp"
#include "apwenian/words.hpp"

namespace apw {

namespace detail {

// Determinant over GF(2) by bit-packed Gaussian elimination. rows[i] holds
// the i-th matrix row, one bit per column, w words per row. Pivot search
// scans columns left to right and rows top down.
inline int det_gf2(std::vector<std::uint64_t>& rows, std::size_t n, std::size_t w) {
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t cw = col >> 6;
        const std::uint64_t cmask = std::uint64_t(1) << (col & 63);
        std::size_t pivot = col;
        while (pivot < n && !(rows[pivot * w + cw] & cmask)) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col)
            for (std::size_t k = 0; k < w; ++k) std::swap(rows[col * w + k], rows[pivot * w + k]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (rows[r * w + cw] & cmask)
                for (std::size_t k = cw; k < w; ++k) rows[r * w + k] ^= rows[col * w + k];
        }
    }
    return 1;
}

// Cofactor expansion along the first row; kept for n <= 4 as a check on
// the elimination path.
inline Int det_cofactor(const std::vector<Int>& m, std::size_t n) {
    if (n == 1) return m[0];
    Int det = 0;
    std::vector<Int> minor((n - 1) * (n - 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t t = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[(r - 1) * (n - 1) + t++] = m[r * n + c];
        }
        const Int sub = det_cofactor(minor, n - 1);
        if (j % 2 == 0)
            det += m[j] * sub;
        else
            det -= m[j] * sub;
    }
    return det;
}

// Fraction-free (Bareiss) elimination; exact over the integers. Row swaps
// flip the sign; a fully zero pivot column means determinant zero.
inline Int det_bareiss(std::vector<Int> m, std::size_t n) {
    if (n == 1) return m[0];
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot * n + k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(m[k * n + c], m[pivot * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
                m[i * n + j] = num / prev;  // exact by the Bareiss identity
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    return sign > 0 ? m[n * n - 1] : -m[n * n - 1];
}

// Exact Hankel determinant for any integer-valued entry accessor.
template <typename EntryAt>
Int hankel_exact_impl(EntryAt at, std::size_t len, std::size_t n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (len < 2 * n - 1)
        throw TooShort("order " + std::to_string(n) + " needs " + std::to_string(2 * n - 1) + " symbols");
    std::vector<Int> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = at(i + j);
    return n <= 4 ? det_cofactor(m, n) : det_bareiss(std::move(m), n);
}

}  // namespace detail

// Mod-2 classes of Hankel determinants: entry n-1 is the class of H_n,
// or of H_n / 2^{n-1} for a +-1 source.
struct HankelProfile {
    std::vector<std::uint8_t> bits;
    std::size_t nmax = 0;

    bool all_ones() const {
        for (auto b : bits)
            if (!b) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (auto b : bits) s += b ? '1' : '0';
        return s;
    }

    bool operator==(const HankelProfile&) const = default;
};

// Determinant of the n x n Hankel matrix of c over GF(2).
inline int hankel_gf2(const BitSeq& c, std::size_t n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (c.size() < 2 * n - 1)
        throw TooShort("order " + std::to_string(n) + " needs " + std::to_string(2 * n - 1) + " symbols");
    const std::size_t w = (n + 63) / 64;
    std::vector<std::uint64_t> rows(n * w, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c.get(i + j)) rows[i * w + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    return detail::det_gf2(rows, n, w);
}

// Exact Hankel determinants; fraction-free elimination above order 4,
// cofactor expansion below.
inline Int hankel_exact(const BitSeq& c, std::size_t n) {
    return detail::hankel_exact_impl([&](std::size_t i) { return Int(c.get(i)); }, c.size(), n);
}

inline Int hankel_exact(const SignSeq& d, std::size_t n) {
    return detail::hankel_exact_impl([&](std::size_t i) { return Int(d.sign(i)); }, d.size(), n);
}

inline Int hankel_exact(std::span<const Int> a, std::size_t n) {
    return detail::hankel_exact_impl([&](std::size_t i) { return a[i]; }, a.size(), n);
}

enum class ProfileMode { gf2_fast, exact_oracle };

// Profile of H_n(d) / 2^{n-1} mod 2 for n = 1..nmax. The fast path runs
// the GF(2) determinant of the projected 0-1 sequence one order lower;
// the oracle path divides the exact determinant by 2^{n-1} and fails hard
// if that division is not exact (it is a theorem that it is).
inline HankelProfile pm_profile(const SignSeq& d, std::size_t nmax,
                                ProfileMode mode = ProfileMode::gf2_fast) {
    if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
    if (d.size() < 2 * nmax + 1)
        throw TooShort("profile to order " + std::to_string(nmax) + " needs " +
                       std::to_string(2 * nmax + 1) + " symbols");
    HankelProfile prof;
    prof.nmax = nmax;
    if (mode == ProfileMode::gf2_fast) {
        prof.bits.push_back(1);  // H_1 = d_0 is odd
        if (nmax >= 2) {
            const BitSeq c = project_to_01(d);
            for (std::size_t n = 2; n <= nmax; ++n)
                prof.bits.push_back(static_cast<std::uint8_t>(hankel_gf2(c, n - 1)));
        }
    } else {
        for (std::size_t n = 1; n <= nmax; ++n) {
            const Int h = hankel_exact(d, n);
            const Int pw = pow_int(2, n - 1);
            if (h % pw != 0)
                throw NotDivisible("2^" + std::to_string(n - 1) + " does not divide H_" +
                                   std::to_string(n));
            const Int q = h / pw;
            prof.bits.push_back(static_cast<std::uint8_t>(q % 2 != 0));
        }
    }
    return prof;
}

// Identity behind the conjugate relation: for 2 <= n <= nmax,
//   H_n(c) + H_n(conjugate(c)) = H_{n-1}(v)  (mod 2),
// where v_i = c_i + c_{i+2} mod 2. Holds for every 0-1 sequence.
inline bool conjugate_relation_check(const BitSeq& c, std::size_t nmax) {
    if (c.size() < 2 * nmax + 1)
        throw TooShort("check to order " + std::to_string(nmax) + " needs " +
                       std::to_string(2 * nmax + 1) + " symbols");
    const BitSeq cc = conjugate(c);
    BitSeq v;
    for (std::size_t i = 0; i + 2 < c.size(); ++i) v.push_back(c.get(i) ^ c.get(i + 2));
    for (std::size_t n = 2; n <= nmax; ++n) {
        const int lhs = hankel_gf2(c, n) ^ hankel_gf2(cc, n);
        const int rhs = hankel_gf2(v, n - 1);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace apw
