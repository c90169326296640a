#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "apwenian/words.hpp"

namespace apw {

// Truncated formal power series over GF(2); coefficient i is bit i, with
// `terms` coefficients kept. Bits above the truncation are zero.
class SeriesGF2 {
public:
    SeriesGF2() = default;
    explicit SeriesGF2(std::size_t terms) : terms_(terms), words_((terms + 63) / 64, 0) {}

    static SeriesGF2 zero(std::size_t terms) { return SeriesGF2(terms); }

    static SeriesGF2 one(std::size_t terms) {
        SeriesGF2 s(terms);
        if (terms > 0) s.set_coeff(0, 1);
        return s;
    }

    // First min(c.size(), terms) coefficients of the generating series of c.
    static SeriesGF2 from_bitseq(const BitSeq& c, std::size_t terms) {
        SeriesGF2 s(terms);
        const std::size_t m = std::min(c.size(), terms);
        for (std::size_t i = 0; i < m; ++i) s.set_coeff(i, c.get(i));
        return s;
    }

    std::size_t terms() const { return terms_; }

    int coeff(std::size_t i) const {
        if (i >= terms_) return 0;
        return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u);
    }

    void set_coeff(std::size_t i, int bit) {
        if (i >= terms_) throw std::out_of_range("coefficient index beyond truncation");
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (bit)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    SeriesGF2 truncated(std::size_t t) const {
        SeriesGF2 r(t);
        for (std::size_t i = 0; i < std::min(t, terms_); ++i) r.set_coeff(i, coeff(i));
        return r;
    }

    // Multiplication by x^k, dropping overflow past the truncation.
    SeriesGF2 shifted_up(std::size_t k) const {
        SeriesGF2 r(terms_);
        for (std::size_t i = 0; i + k < terms_; ++i) r.set_coeff(i + k, coeff(i));
        return r;
    }

    // Exact division by x^k; the dropped low coefficients must be zero.
    SeriesGF2 shifted_down(std::size_t k) const {
        for (std::size_t i = 0; i < std::min(k, terms_); ++i)
            if (coeff(i)) throw std::invalid_argument("series not divisible by x^" + std::to_string(k));
        SeriesGF2 r(terms_ >= k ? terms_ - k : 0);
        for (std::size_t i = 0; i < r.terms(); ++i) r.set_coeff(i, coeff(i + k));
        return r;
    }

    // Even-indexed coefficients kept in place, odd ones zeroed.
    SeriesGF2 even_part() const {
        SeriesGF2 r(terms_);
        for (std::size_t i = 0; i < terms_; i += 2) r.set_coeff(i, coeff(i));
        return r;
    }

    SeriesGF2 odd_part() const {
        SeriesGF2 r(terms_);
        for (std::size_t i = 1; i < terms_; i += 2) r.set_coeff(i, coeff(i));
        return r;
    }

    // Substitution x -> x^2 within the same truncation.
    SeriesGF2 stretched2() const {
        SeriesGF2 r(terms_);
        for (std::size_t i = 0; 2 * i < terms_; ++i) r.set_coeff(2 * i, coeff(i));
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < terms_; ++i) s += coeff(i) ? '1' : '0';
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const SeriesGF2&) const = default;

    friend SeriesGF2 mul(const SeriesGF2& a, const SeriesGF2& b, std::size_t terms);

private:
    std::size_t terms_ = 0;
    std::vector<std::uint64_t> words_;
};

inline SeriesGF2 add(const SeriesGF2& a, const SeriesGF2& b) {
    SeriesGF2 r(std::max(a.terms(), b.terms()));
    for (std::size_t i = 0; i < r.terms(); ++i) r.set_coeff(i, a.coeff(i) ^ b.coeff(i));
    return r;
}

// Truncated product: for every set bit of a, xor in b shifted by that
// amount, word at a time.
inline SeriesGF2 mul(const SeriesGF2& a, const SeriesGF2& b, std::size_t terms) {
    SeriesGF2 r(terms);
    auto& rw = r.words_;
    const std::size_t rwords = rw.size();
    const auto& bw = b.words();
    for (std::size_t i = 0; i < std::min(a.terms(), terms); ++i) {
        if (!a.coeff(i)) continue;
        const std::size_t wq = i >> 6, wr = i & 63;
        for (std::size_t k = 0; k + wq < rwords && k < bw.size(); ++k) {
            rw[k + wq] ^= bw[k] << wr;
            if (wr && k + wq + 1 < rwords) rw[k + wq + 1] ^= bw[k] >> (64 - wr);
        }
    }
    // Clear bits at or above the truncation.
    if (terms & 63) rw[rwords - 1] &= (std::uint64_t(1) << (terms & 63)) - 1;
    return r;
}

// Reciprocal by quadratic Newton lifting: with e = 1 + f g of valuation m,
// the update g <- f g^2 satisfies 1 + f (f g^2) = e^2 over GF(2), doubling
// the valuation each round. Requires f(0) = 1.
inline SeriesGF2 inverse_newton(const SeriesGF2& f) {
    if (f.terms() == 0 || f.coeff(0) != 1)
        throw std::invalid_argument("series inverse requires constant term 1");
    const std::size_t T = f.terms();
    SeriesGF2 g = SeriesGF2::one(1);
    std::size_t prec = 1;
    while (prec < T) {
        prec = std::min(2 * prec, T);
        const SeriesGF2 g2 = mul(g, g, prec);
        g = mul(f.truncated(prec), g2, prec);
    }
    return g;
}

// Coefficient-by-coefficient reciprocal; validation fallback for the
// Newton path.
inline SeriesGF2 inverse_schoolbook(const SeriesGF2& f) {
    if (f.terms() == 0 || f.coeff(0) != 1)
        throw std::invalid_argument("series inverse requires constant term 1");
    const std::size_t T = f.terms();
    SeriesGF2 g(T);
    g.set_coeff(0, 1);
    for (std::size_t n = 1; n < T; ++n) {
        int acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc ^= f.coeff(k) & g.coeff(n - k);
        g.set_coeff(n, acc);
    }
    return g;
}

// Number of leading coefficients on which a and b agree, up to the
// shorter truncation.
inline std::size_t agreement_length(const SeriesGF2& a, const SeriesGF2& b) {
    const std::size_t m = std::min(a.terms(), b.terms());
    for (std::size_t i = 0; i < m; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return m;
}

}  // namespace apw
