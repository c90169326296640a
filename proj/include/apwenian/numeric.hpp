#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace apw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(Int base, std::uint64_t e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// log2 of a positive big integer, accurate to double precision.
inline double log2_int(const Int& v) {
    if (v <= 0) throw std::invalid_argument("log2_int requires a positive value");
    const std::size_t b = boost::multiprecision::msb(v);
    if (b <= 52) return std::log2(v.convert_to<double>());
    const Int top = v >> (b - 52);
    return static_cast<double>(b - 52) + std::log2(top.convert_to<double>());
}

// Natural log of |x|; -infinity for x = 0.
inline double log_abs(const Rat& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    const Int n = boost::multiprecision::abs(boost::multiprecision::numerator(x));
    const Int d = boost::multiprecision::denominator(x);
    return (log2_int(n) - log2_int(d)) * std::log(2.0);
}

namespace nt {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Trial-division factorization as (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            f.emplace_back(d, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

// All divisors of n, unsorted.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ds{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

}  // namespace nt

}  // namespace apw
