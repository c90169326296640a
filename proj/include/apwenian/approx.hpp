#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "apwenian/errors.hpp"
#include "apwenian/hankel.hpp"
#include "apwenian/numeric.hpp"

namespace apw {

// Truncated integer power series.
struct IntSeries {
    std::vector<Int> coeffs;

    std::size_t terms() const { return coeffs.size(); }
};

// Truncation of the infinite product
//   f_p(z) = prod_{i>=0} P(z^{p^i}),  P(z) = v_0 + v_1 z + ... + v_{p-1} z^{p-1},
// keeping the factors whose low-order effect falls inside the truncation.
// The coefficients are the fixed-point letters of the type II
// substitution with vector v.
inline IntSeries product_series(std::size_t p, const std::vector<int>& v, std::size_t terms) {
    if (p < 2 || v.size() != p) throw std::invalid_argument("v must have length p >= 2");
    if (v[0] != 1) throw std::invalid_argument("v_0 must be +1");
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    IntSeries f;
    f.coeffs.assign(terms, Int(0));
    f.coeffs[0] = 1;
    std::vector<Int> next(terms);
    for (std::size_t power = 1; power < terms; power *= p) {
        // Multiply by P(z^power) in place.
        std::fill(next.begin(), next.end(), Int(0));
        for (std::size_t j = 0; j < p; ++j) {
            if (j * power >= terms) break;
            const std::size_t off = j * power;
            for (std::size_t i = 0; i + off < terms; ++i) {
                if (f.coeffs[i] == 0) continue;
                if (v[j] == 1)
                    next[i + off] += f.coeffs[i];
                else
                    next[i + off] -= f.coeffs[i];
            }
        }
        f.coeffs.swap(next);
        if (power > terms / p) break;  // next power would overflow size_t range checks
    }
    return f;
}

// Pade approximant [n-1/n]: P/Q with deg P <= n-1, deg Q <= n, Q(0) = 1,
// matching f to order 2n. Coefficients are exact rationals, stored low
// to high.
struct PadeApprox {
    std::vector<Rat> P;
    std::vector<Rat> Q;
};

namespace detail {

inline std::size_t poly_degree(const std::vector<Rat>& a) {
    std::size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

inline bool poly_is_zero(const std::vector<Rat>& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

// a -= q * b for polynomials.
inline void poly_submul(std::vector<Rat>& a, const std::vector<Rat>& q, const std::vector<Rat>& b) {
    if (a.size() < q.size() + b.size()) a.resize(q.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
}

// Quotient of the polynomial division a = q*b + r, deg r < deg b.
inline std::vector<Rat> poly_quotient(std::vector<Rat> a, const std::vector<Rat>& b) {
    const std::size_t db = poly_degree(b);
    const std::size_t da = poly_degree(a);
    if (poly_is_zero(a) || da < db) return {Rat(0)};
    std::vector<Rat> q(da - db + 1, Rat(0));
    for (std::size_t d = da + 1; d-- > db;) {
        if (a[d] == 0) continue;
        const Rat c = a[d] / b[db];
        q[d - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[d - db + j] -= c * b[j];
    }
    return q;
}

}  // namespace detail

// Classical extended Euclid on (z^{2n}, f mod z^{2n}): stop at the first
// remainder of degree < n; the cofactor of f is the denominator. The
// non-vanishing of H_n guarantees existence and Q(0) != 0.
inline PadeApprox pade(const IntSeries& f, std::size_t n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (f.terms() < 2 * n + 1)
        throw TooShort("order " + std::to_string(n) + " needs " + std::to_string(2 * n + 1) +
                       " series terms");
    if (hankel_exact(std::span<const Int>(f.coeffs), n) == 0) throw ZeroHankel(n);

    std::vector<Rat> r_prev(2 * n + 1, Rat(0));
    r_prev[2 * n] = 1;  // z^{2n}
    std::vector<Rat> r_cur(2 * n, Rat(0));
    for (std::size_t i = 0; i < 2 * n; ++i) r_cur[i] = Rat(f.coeffs[i]);
    std::vector<Rat> t_prev{Rat(0)};
    std::vector<Rat> t_cur{Rat(1)};

    while (!detail::poly_is_zero(r_cur) && detail::poly_degree(r_cur) >= n) {
        const std::vector<Rat> q = detail::poly_quotient(r_prev, r_cur);
        detail::poly_submul(r_prev, q, r_cur);
        detail::poly_submul(t_prev, q, t_cur);
        std::swap(r_prev, r_cur);
        std::swap(t_prev, t_cur);
    }

    if (t_cur.empty() || t_cur[0] == 0)
        throw std::logic_error("Pade denominator vanishes at 0 despite nonzero Hankel determinant");
    for (std::size_t i = n; i < r_cur.size(); ++i)
        if (r_cur[i] != 0) throw std::logic_error("Pade numerator degree bound violated");
    for (std::size_t i = n + 1; i < t_cur.size(); ++i)
        if (t_cur[i] != 0) throw std::logic_error("Pade denominator degree bound violated");
    const Rat q0 = t_cur[0];
    PadeApprox pa;
    pa.P.assign(n, Rat(0));
    pa.Q.assign(n + 1, Rat(0));
    for (std::size_t i = 0; i < r_cur.size() && i < n; ++i) pa.P[i] = r_cur[i] / q0;
    for (std::size_t i = 0; i < t_cur.size() && i <= n; ++i) pa.Q[i] = t_cur[i] / q0;
    return pa;
}

// One rational approximation r/s of the product value, with the exact
// error on a log scale and the exponent estimate -log|err| / log s.
struct RationalApproxRecord {
    std::size_t order = 0;
    Int r;
    Int s;
    double err_log = 0.0;
    double exponent_estimate = 0.0;
};

namespace detail {

// P(x) at an exact rational point.
inline Rat poly_eval(const std::vector<Rat>& a, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

inline Rat poly_eval_pm(const std::vector<int>& v, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = v.size(); i-- > 0;) acc = acc * x + v[i];
    return acc;
}

}  // namespace detail

// Evaluates the truncated product at z = 1/b exactly and records the
// [n-1/n] Pade values there for n <= n_max. The product is cut once the
// remaining factors are provably below the final error bar: each tail
// factor is 1 + eps with |eps| <= 2 b^{-p^i}, and |log(1 +- x)| <= 2x for
// x <= 1/2 bounds the whole tail by b^{-p^m} * O(1), so p^m is pushed past
// 4 n_max + 64 base-b digits.
inline std::vector<RationalApproxRecord> rational_approximations(std::size_t p,
                                                                 const std::vector<int>& v,
                                                                 std::uint64_t b,
                                                                 std::size_t n_max) {
    if (b < 2) throw std::invalid_argument("b must be an integer >= 2");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const IntSeries f = product_series(p, v, 2 * n_max + 1);

    Rat xi = 1;
    {
        const std::size_t digits_needed = 4 * n_max + 64;
        Int bpow = b;  // b^{p^i}
        for (std::size_t i = 0;; ++i) {
            const Rat factor = detail::poly_eval_pm(v, Rat(1) / Rat(bpow));
            if (factor == 0) throw ZeroFactor(i);
            xi *= factor;
            if (log2_int(bpow) >= static_cast<double>(digits_needed) * std::log2(static_cast<double>(b)))
                break;
            bpow = pow_int(bpow, p);
        }
    }

    std::vector<RationalApproxRecord> records;
    const Rat z = Rat(1) / Rat(b);
    for (std::size_t n = 1; n <= n_max; ++n) {
        PadeApprox pa;
        try {
            pa = pade(f, n);
        } catch (const ZeroHankel&) {
            break;  // no further approximants of this shape exist
        }
        const Rat qv = detail::poly_eval(pa.Q, z);
        if (qv == 0) continue;
        Rat val = detail::poly_eval(pa.P, z) / qv;
        const Int r = boost::multiprecision::numerator(val);
        const Int s = boost::multiprecision::denominator(val);
        const Rat err = boost::multiprecision::abs(xi - val);
        RationalApproxRecord rec;
        rec.order = n;
        rec.r = r;
        rec.s = s;
        rec.err_log = log_abs(err);
        rec.exponent_estimate =
            (s > 1) ? -rec.err_log / (log2_int(s) * std::log(2.0))
                    : std::numeric_limits<double>::infinity();
        records.push_back(std::move(rec));
    }

    // Keep the best record per denominator size: approximations ordered by
    // growing denominator, each strictly better than everything cheaper.
    // (Evaluation at 1/b can collapse a high-order approximant onto a small
    // denominator, so the order index need not be monotone here.)
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b2) {
        if (a.s != b2.s) return a.s < b2.s;
        return a.err_log < b2.err_log;
    });
    std::vector<RationalApproxRecord> out;
    for (auto& rec : records) {
        if (!out.empty() && rec.err_log >= out.back().err_log) continue;
        if (!out.empty() && rec.s == out.back().s) continue;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace apw
