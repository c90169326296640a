#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "apwenian/errors.hpp"
#include "apwenian/gf2_series.hpp"
#include "apwenian/hankel.hpp"
#include "apwenian/numeric.hpp"
#include "apwenian/words.hpp"

namespace apw {

// J-fraction over GF(2). All v-coefficients are 1 (a GF(2) expansion
// exists only when every Hankel determinant is odd), so only the u's are
// stored; u[k-1] holds u_k.
struct JFracGF2 {
    std::vector<std::uint8_t> u;

    std::size_t depth() const { return u.size(); }

    std::string to_string() const {
        std::string s;
        for (auto b : u) s += b ? '1' : '0';
        return s;
    }

    bool operator==(const JFracGF2&) const = default;
};

// Extracts u_1..u_depth by repeated series inversion over GF(2):
//   f_k = (1/f_{k-1} + 1 + u_k x) / x^2,
// with u_k the linear coefficient of 1/f_{k-1}. Each level consumes two
// coefficients of precision; one spare input term is required on top of
// the 2*depth the levels consume.
inline JFracGF2 jfrac_expand_gf2(const BitSeq& c, std::size_t depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (c.size() < 2 * depth + 1)
        throw TooShort("depth " + std::to_string(depth) + " needs " +
                       std::to_string(2 * depth + 1) + " symbols");
    JFracGF2 jf;
    SeriesGF2 f = SeriesGF2::from_bitseq(c, c.size());
    for (std::size_t k = 1; k <= depth; ++k) {
        if (f.coeff(0) != 1)
            throw NotApwenianPrefix("expansion breaks at level " + std::to_string(k) +
                                    ": Hankel determinant of order " + std::to_string(k) +
                                    " is even");
        SeriesGF2 inv = inverse_newton(f);
        const int uk = inv.coeff(1);
        jf.u.push_back(static_cast<std::uint8_t>(uk));
        if (k == depth) break;
        inv.set_coeff(0, inv.coeff(0) ^ 1);
        inv.set_coeff(1, inv.coeff(1) ^ uk);
        f = inv.shifted_down(2);
    }
    return jf;
}

// Evaluates the finite continued fraction with all v = 1 (the n-th
// approximant) as a truncated series. J_0 is the constant series 1.
inline SeriesGF2 jfrac_approximant_gf2(const JFracGF2& jf, std::size_t n, std::size_t terms) {
    if (n > jf.depth())
        throw DepthExceeded("approximant order " + std::to_string(n) + " exceeds depth " +
                            std::to_string(jf.depth()));
    if (terms < 2 * n) throw std::invalid_argument("terms must be >= 2n");
    SeriesGF2 acc = SeriesGF2::zero(terms);
    for (std::size_t k = n; k >= 1; --k) {
        // acc <- 1 / (1 + u_k x + x^2 acc); signs coincide over GF(2).
        SeriesGF2 den = acc.shifted_up(2);
        den.set_coeff(0, den.coeff(0) ^ 1);
        if (terms > 1) den.set_coeff(1, den.coeff(1) ^ jf.u[k - 1]);
        acc = inverse_newton(den);
    }
    if (n == 0) acc = SeriesGF2::one(terms);
    return acc;
}

// Exact-rational J-fraction coefficients v_0..v_{depth-1}, u_1..u_depth.
// Oracle for the Heilermann identity H_n = v_0^n v_1^{n-1} ... v_{n-1}.
struct RationalJFrac {
    std::vector<Rat> v;
    std::vector<Rat> u;
};

namespace detail {

// Dense rational series with explicit truncation, local to the oracle.
struct RatSeries {
    std::vector<Rat> c;

    std::size_t terms() const { return c.size(); }

    RatSeries inverse() const {
        assert(!c.empty() && c[0] != 0);
        RatSeries g;
        g.c.assign(c.size(), Rat(0));
        g.c[0] = Rat(1) / c[0];
        for (std::size_t n = 1; n < c.size(); ++n) {
            Rat acc = 0;
            for (std::size_t k = 1; k <= n; ++k) acc += c[k] * g.c[n - k];
            g.c[n] = -acc / c[0];
        }
        return g;
    }
};

}  // namespace detail

inline RationalJFrac jfrac_expand_rational(std::span<const Int> a, std::size_t depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (a.size() < 2 * depth + 1)
        throw TooShort("depth " + std::to_string(depth) + " needs " +
                       std::to_string(2 * depth + 1) + " symbols");
    for (std::size_t n = 1; n <= depth; ++n)
        if (hankel_exact(a, n) == 0) throw ZeroHankel(n);

    RationalJFrac jf;
    detail::RatSeries w;
    w.c.reserve(a.size());
    const Rat v0 = Rat(a[0]);
    jf.v.push_back(v0);
    for (const Int& x : a) w.c.push_back(Rat(x) / v0);  // w_0 = f / v_0, constant term 1

    for (std::size_t k = 1; k <= depth; ++k) {
        const detail::RatSeries h = w.inverse();  // 1 + u_k x - v_k x^2 w_k
        jf.u.push_back(h.c.size() > 1 ? h.c[1] : Rat(0));
        if (k == depth) break;
        const Rat vk = h.c.size() > 2 ? -h.c[2] : Rat(0);
        assert(vk != 0);  // guaranteed by the Hankel precheck
        jf.v.push_back(vk);
        detail::RatSeries next;
        next.c.assign(h.c.size() - 2, Rat(0));
        for (std::size_t i = 0; i < next.c.size(); ++i) next.c[i] = h.c[i + 2] / -vk;
        w = std::move(next);
    }
    return jf;
}

}  // namespace apw
