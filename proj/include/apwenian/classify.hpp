#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "apwenian/criteria.hpp"
#include "apwenian/errors.hpp"
#include "apwenian/numeric.hpp"
#include "apwenian/sequences.hpp"
#include "apwenian/words.hpp"

namespace apw {

// Cycle decomposition of the permutation j -> 2j+1 mod p on {0,...,p-2}.
// Each cycle starts at its smallest element; cycles are ordered by that
// element.
struct CycleDecomposition {
    std::uint64_t p = 0;
    std::vector<std::vector<std::uint64_t>> cycles;

    bool has_odd_cycle() const {
        for (const auto& c : cycles)
            if (c.size() % 2 == 1) return true;
        return false;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& c : cycles) {
            s += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(c[i]);
            }
            s += ')';
        }
        return s;
    }
};

namespace detail {

inline void require_odd(std::uint64_t p) {
    if (p % 2 == 0 || p < 3) throw EvenModulus("modulus must be odd and >= 3");
}

}  // namespace detail

inline CycleDecomposition tau_perm(std::uint64_t p) {
    detail::require_odd(p);
    CycleDecomposition cd;
    cd.p = p;
    std::vector<char> seen(p - 1, 0);
    for (std::uint64_t start = 0; start + 1 < p; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint64_t> cycle;
        std::uint64_t j = start;
        do {
            cycle.push_back(j);
            seen[j] = 1;
            j = (2 * j + 1) % p;
        } while (j != start);
        cd.cycles.push_back(std::move(cycle));
    }
#ifndef NDEBUG
    std::size_t total = 0;
    for (const auto& c : cd.cycles) total += c.size();
    assert(total == p - 1);
#endif
    return cd;
}

// Multiplicative order of 2 modulo p.
inline std::uint64_t mu(std::uint64_t p) {
    detail::require_odd(p);
    std::uint64_t x = 2 % p, j = 1;
    while (x != 1) {
        x = (2 * x) % p;
        ++j;
    }
    return j;
}

// Cycle count of tau via Burnside's lemma:
//   k = (1/mu(p)) sum_{j=0}^{mu(p)-1} gcd(2^j - 1, p)  -  1.
// Powers are reduced mod p before the gcd.
inline std::uint64_t burnside_k(std::uint64_t p) {
    detail::require_odd(p);
    const std::uint64_t m = mu(p);
    std::uint64_t sum = 0;
    std::uint64_t pw = 1;  // 2^j mod p
    for (std::uint64_t j = 0; j < m; ++j) {
        sum += std::gcd((pw + p - 1) % p, p);
        pw = (2 * pw) % p;
    }
    assert(sum % m == 0);
    const std::uint64_t k = sum / m - 1;
    assert(k == tau_perm(p).cycles.size());
    return k;
}

namespace detail {

inline bool has_odd_cycle_scan(std::uint64_t p) { return tau_perm(p).has_odd_cycle(); }

// Some divisor p1 >= 3 of p has odd mu(p1).
inline bool has_odd_cycle_divisor(std::uint64_t p) {
    for (std::uint64_t d : nt::divisors(p))
        if (d >= 3 && mu(d) % 2 == 1) return true;
    return false;
}

}  // namespace detail

// Whether tau has a cycle of odd length, computed by the direct scan and
// by the divisor criterion; a disagreement would be a bug.
inline bool has_odd_cycle(std::uint64_t p) {
    detail::require_odd(p);
    const bool scan = detail::has_odd_cycle_scan(p);
    const bool div = detail::has_odd_cycle_divisor(p);
    if (scan != div)
        throw std::logic_error("cycle scan and divisor criterion disagree at p = " + std::to_string(p));
    return scan;
}

// N_p: number of apwenian infinite-product series of length p with
// constant term 1. Odd p: 0 when tau has an odd cycle, 2^k otherwise.
// Even p: 1 when p is a power of two (Thue-Morse), else 0.
inline Int count_apwenian(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (p % 2 == 0) {
        while (p % 2 == 0) p /= 2;
        return p == 1 ? 1 : 0;
    }
    if (has_odd_cycle(p)) return 0;
    return pow_int(2, burnside_k(p));
}

// GF(2) indicator vector that consecutive letters of a +-1 vector differ:
// delta(j) = (v_j - v_{j+1}) / 2 read mod 2.
struct DeltaVector {
    std::vector<std::uint8_t> delta;

    bool operator==(const DeltaVector&) const = default;
    auto operator<=>(const DeltaVector&) const = default;
};

// All solutions of delta(j) + delta(tau(j)) = 1 (mod 2) on {0,...,p-2}.
// Empty when some cycle of tau is odd; otherwise one free bit per cycle,
// propagated along the cycle as delta(x_j) = 1 + j + delta(x_1) mod 2.
// Output sorted lexicographically.
inline std::vector<DeltaVector> solve_delta_system(std::uint64_t p) {
    detail::require_odd(p);
    const CycleDecomposition cd = tau_perm(p);
    if (cd.has_odd_cycle()) return {};
    const std::size_t k = cd.cycles.size();
    if (k > 24) throw SearchSpaceTooLarge("2^" + std::to_string(k) + " solutions");
    std::vector<DeltaVector> sols;
    for (std::uint64_t choice = 0; choice < (std::uint64_t(1) << k); ++choice) {
        DeltaVector dv;
        dv.delta.assign(p - 1, 0);
        for (std::size_t l = 0; l < k; ++l) {
            const int free_bit = static_cast<int>((choice >> l) & 1);
            const auto& cyc = cd.cycles[l];
            for (std::size_t j = 1; j <= cyc.size(); ++j)
                dv.delta[cyc[j - 1]] = static_cast<std::uint8_t>((1 + j + free_bit) % 2);
        }
        sols.push_back(std::move(dv));
    }
    std::sort(sols.begin(), sols.end());
    return sols;
}

// Exact apwenian condition on a type II coefficient vector for odd p:
//   (v_j + v_{j+1} - v_{2j+1} - v_{2j+2}) / 2 odd for 0 <= j <= p-2,
// indices past p-1 read through the periodic extension v_m = v_{m mod p}.
inline bool type2_apwenian_exact(const std::vector<int>& v) {
    const std::size_t p = v.size();
    if (p < 3 || p % 2 == 0) throw EvenModulus("condition applies to odd p >= 3");
    auto at = [&](std::size_t m) { return v[m % p]; };
    for (std::size_t j = 0; j + 1 < p; ++j) {
        const int num = at(j) + at(j + 1) - at(2 * j + 1) - at(2 * j + 2);
        assert(num % 2 == 0);
        if (((num / 2) % 2 + 2) % 2 != 1) return false;
    }
    return true;
}

// All apwenian type II coefficient vectors for odd p, integrated from the
// delta solutions (v_0 = +1, v_{j+1} = v_j negated when delta(j) = 1),
// in lexicographic order with +1 < -1. Every vector is re-verified by the
// +-1 criterion on a generated prefix.
inline std::vector<std::vector<int>> enumerate_type2(std::uint64_t p) {
    detail::require_odd(p);
    std::vector<std::vector<int>> out;
    for (const DeltaVector& dv : solve_delta_system(p)) {
        std::vector<int> v{+1};
        for (std::uint64_t j = 0; j + 1 < p; ++j) v.push_back(dv.delta[j] ? -v.back() : v.back());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i];  // +1 before -1
        }
        return a.size() < b.size();
    });
    const std::size_t verify_len = 4096;
    for (const auto& v : out) {
        const SignSeq d = fixed_point_signs(Substitution::type2(v), verify_len);
        if (!check_pm(d).passed())
            throw std::logic_error("enumerated vector fails the +-1 criterion on its fixed point");
    }
    return out;
}

// Closed-form cycle count for p = p1^l (odd prime, with
// mu(p1^2) = mu(p1) * p1 required) and p = p1 * p2 (distinct odd primes).
inline std::uint64_t corollary_k(std::uint64_t p) {
    detail::require_odd(p);
    const auto f = nt::factorize(p);
    std::uint64_t k = 0;
    if (f.size() == 1) {
        const std::uint64_t p1 = f[0].first;
        const unsigned l = f[0].second;
        if (mu(p1 * p1) != mu(p1) * p1)
            throw WieferichCondition("ord_{p^2}(2) != p * ord_p(2) for p = " + std::to_string(p1));
        k = (p1 - 1) / mu(p1) * l;
        assert((p1 - 1) % mu(p1) == 0);
    } else if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) {
        const std::uint64_t p1 = f[0].first, p2 = f[1].first;
        const std::uint64_t m1 = mu(p1), m2 = mu(p2);
        const std::uint64_t l = std::lcm(m1, m2);
        assert((p1 - 1) * (p2 - 1) % l == 0);
        k = (p1 - 1) * (p2 - 1) / l + (p1 - 1) / m1 + (p2 - 1) / m2;
    } else {
        throw UnsupportedShape("p must be an odd prime power or a product of two distinct odd primes");
    }
    assert(k == burnside_k(p));
    return k;
}

// Verifies the order laws below the bound by direct computation:
//   mu(p1 p2) = lcm(mu(p1), mu(p2))        distinct odd primes,
//   mu(p^l)   = mu(p^{l-1}) p              odd prime powers, l >= 2,
// the latter whenever mu(p^2) = mu(p) p holds for the base prime.
inline bool mu_laws_check(std::uint64_t bound) {
    if (bound > 10000) throw std::invalid_argument("bound capped at 10^4");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; p <= bound; p += 2)
        if (nt::is_prime(p)) primes.push_back(p);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const std::uint64_t prod = primes[i] * primes[j];
            if (prod > bound) break;
            if (mu(prod) != std::lcm(mu(primes[i]), mu(primes[j]))) return false;
        }
    }
    for (std::uint64_t p : primes) {
        if (p * p > bound) break;
        // Once the step law holds at some level it must hold at every
        // later level.
        bool established = false;
        std::uint64_t prev = p, cur = p * p;
        while (cur <= bound) {
            const bool step = (mu(cur) == mu(prev) * p);
            if (established && !step) return false;
            if (step) established = true;
            prev = cur;
            cur *= p;
        }
    }
    return true;
}

// Classification summary for odd p.
struct ClassificationReport {
    std::uint64_t p = 0;
    std::uint64_t mu = 0;
    std::uint64_t k = 0;
    bool has_odd_cycle = false;
    Int n_p;
    CycleDecomposition cycles;
    std::optional<std::vector<std::vector<int>>> vectors;
};

inline ClassificationReport classify(std::uint64_t p, bool enumerate = false) {
    detail::require_odd(p);
    ClassificationReport rep;
    rep.p = p;
    rep.mu = mu(p);
    rep.k = burnside_k(p);
    rep.has_odd_cycle = has_odd_cycle(p);
    rep.n_p = count_apwenian(p);
    rep.cycles = tau_perm(p);
    if (enumerate) rep.vectors = enumerate_type2(p);
    return rep;
}

enum class ScanFamily { type1_01, type2_pm, general_pm };

inline const char* scan_family_name(ScanFamily f) {
    switch (f) {
        case ScanFamily::type1_01: return "type1_01";
        case ScanFamily::type2_pm: return "type2_pm";
        default: return "general_pm";
    }
}

// A substitution that survived the scan, keyed by the FNV-1a hash of its
// fixed-point prefix at the re-verification depth.
struct ScanSurvivor {
    Substitution sub;
    std::uint64_t prefix_hash = 0;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// Decodes candidate index bits into a substitution of the family. Bit 0
// is the second letter of image_one; image_zero bits follow.
inline Substitution scan_candidate(ScanFamily fam, std::size_t p, std::uint64_t idx) {
    const Alphabet alph = (fam == ScanFamily::type1_01) ? Alphabet::zero_one : Alphabet::plus_minus;
    Word one{1};
    for (std::size_t j = 0; j + 1 < p; ++j) one.push_back(static_cast<Letter>((idx >> j) & 1));
    Word zero;
    if (fam == ScanFamily::type2_pm) {
        for (Letter l : one) zero.push_back(static_cast<Letter>(1 - l));
    } else {
        for (std::size_t j = 0; j < p; ++j)
            zero.push_back(static_cast<Letter>((idx >> (p - 1 + j)) & 1));
    }
    return Substitution(alph, std::move(one), std::move(zero));
}

inline bool scan_screen(ScanFamily fam, const Substitution& sub, std::size_t depth) {
    const Word w = fixed_point_letters(sub, depth);
    if (fam == ScanFamily::type1_01) return check_01(bits_from_letters(w)).passed();
    return check_pm(signs_from_letters_word(w)).passed();
}

}  // namespace detail

// Enumerates every prolongable substitution of the family and keeps those
// whose fixed-point prefix passes the matching criterion at `depth`.
// Survivors are re-verified at 16x depth; for odd type II candidates the
// final verdict is the exact symbolic condition, so the prefix screen can
// only reject. Candidates are processed in index order (lexicographic on
// the image bits) and the output order is independent of thread count.
inline std::vector<ScanSurvivor> scan_family(ScanFamily fam, std::size_t p, std::size_t depth,
                                             unsigned threads = 1) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (depth < 256) throw std::invalid_argument("depth must be >= 256");
    const std::size_t bits = (fam == ScanFamily::type2_pm) ? p - 1 : 2 * p - 1;
    if (fam != ScanFamily::type2_pm && p > 12)
        throw SearchSpaceTooLarge("search space 2^" + std::to_string(bits));
    if (fam == ScanFamily::type2_pm && p > 16)
        throw SearchSpaceTooLarge("search space 2^" + std::to_string(bits));
    const std::uint64_t total = std::uint64_t(1) << bits;
    const std::size_t verify_depth = 16 * depth;

    auto evaluate = [&](std::uint64_t idx) -> std::optional<ScanSurvivor> {
        const Substitution sub = detail::scan_candidate(fam, p, idx);
        if (!detail::scan_screen(fam, sub, depth)) return std::nullopt;
        if (fam == ScanFamily::type2_pm && p % 2 == 1) {
            std::vector<int> v;
            for (Letter l : sub.image_one) v.push_back(l ? +1 : -1);
            if (!type2_apwenian_exact(v)) return std::nullopt;
        }
        if (!detail::scan_screen(fam, sub, verify_depth)) return std::nullopt;
        const Word w = detail::fixed_point_letters(sub, verify_depth);
        ScanSurvivor s{sub, detail::fnv1a(Substitution::word_string(sub.alphabet, w))};
        return s;
    };

    std::vector<std::pair<std::uint64_t, ScanSurvivor>> found;
    if (threads <= 1) {
        for (std::uint64_t idx = 0; idx < total; ++idx)
            if (auto s = evaluate(idx)) found.emplace_back(idx, std::move(*s));
    } else {
        std::vector<std::vector<std::pair<std::uint64_t, ScanSurvivor>>> parts(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::uint64_t idx = t; idx < total; idx += threads)
                    if (auto s = evaluate(idx)) parts[t].emplace_back(idx, std::move(*s));
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            for (auto& e : part) found.push_back(std::move(e));
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    std::vector<ScanSurvivor> out;
    out.reserve(found.size());
    for (auto& e : found) out.push_back(std::move(e.second));
    return out;
}

}  // namespace apw
