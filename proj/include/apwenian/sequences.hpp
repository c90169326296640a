#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apwenian/errors.hpp"
#include "apwenian/words.hpp"

namespace apw {

namespace detail {

// First len letters of lim sigma^n(1), by repeated image expansion on a
// growing buffer. Memory stays O(len): expansion stops appending once the
// buffer is long enough.
inline Word fixed_point_letters(const Substitution& sub, std::size_t len) {
    if (len < 1) throw std::invalid_argument("len must be >= 1");
    if (!sub.prolongable()) throw NotProlongable("image of 1 must start with 1");
    Word w{1};
    while (w.size() < len) {
        Word next;
        next.reserve(std::min(len, w.size() * sub.length()));
        for (Letter l : w) {
            const Word& img = l ? sub.image_one : sub.image_zero;
            for (Letter m : img) {
                next.push_back(m);
                if (next.size() >= len) break;
            }
            if (next.size() >= len) break;
        }
        w = std::move(next);
    }
    w.resize(len);
    return w;
}

inline BitSeq bits_from_letters(const Word& w) {
    BitSeq c;
    for (Letter l : w) c.push_back(l);
    return c;
}

inline SignSeq signs_from_letters_word(const Word& w) {
    SignSeq d;
    for (Letter l : w) d.push_back_sign(l ? +1 : -1);
    return d;
}

}  // namespace detail

// Fixed point prefix of a 0-1 substitution.
inline BitSeq fixed_point_bits(const Substitution& sub, std::size_t len) {
    if (sub.alphabet != Alphabet::zero_one)
        throw std::invalid_argument("fixed_point_bits requires a 0-1 substitution");
    return detail::bits_from_letters(detail::fixed_point_letters(sub, len));
}

// Fixed point prefix of a +-1 substitution.
inline SignSeq fixed_point_signs(const Substitution& sub, std::size_t len) {
    if (sub.alphabet != Alphabet::plus_minus)
        throw std::invalid_argument("fixed_point_signs requires a +-1 substitution");
    return detail::signs_from_letters_word(detail::fixed_point_letters(sub, len));
}

// Identifies the letter 1 with +1 and the letter 0 with -1.
inline SignSeq signs_from_letters(const BitSeq& c) {
    SignSeq d;
    for (std::size_t i = 0; i < c.size(); ++i) d.push_back_sign(c.get(i) ? +1 : -1);
    return d;
}

// Built-in sequence families, each produced from its defining recurrences
// rather than from substitution expansion.
enum class NamedSequence {
    thue_morse_pm,      // d_0 = +1, d_{2n} = d_n, d_{2n+1} = -d_n
    thue_morse_01,      // t_0 = 1, t_{2n} = t_n, t_{2n+1} = 1 - t_n
    period_doubling,    // c_{2n} = 1, c_{2n+1} = 1 - c_n
    thue_morse_doubled, // each +-1 Thue-Morse symbol written twice
    zero_parity_pm,     // d_0 = 1, d_{2n+1} = d_n, d_{2n+2} = -d_{n+1};
                        // equivalently the parity of zero digits in binary
};

inline BitSeq named_sequence_bits(NamedSequence name, std::size_t len) {
    if (len < 1) throw std::invalid_argument("len must be >= 1");
    BitSeq c;
    switch (name) {
        case NamedSequence::thue_morse_01:
            for (std::size_t n = 0; n < len; ++n) {
                if (n == 0)
                    c.push_back(1);
                else if (n % 2 == 0)
                    c.push_back(c.get(n / 2));
                else
                    c.push_back(1 - c.get(n / 2));
            }
            return c;
        case NamedSequence::period_doubling:
            for (std::size_t n = 0; n < len; ++n) {
                if (n % 2 == 0)
                    c.push_back(1);
                else
                    c.push_back(1 - c.get(n / 2));
            }
            return c;
        default:
            throw std::invalid_argument("named sequence is not over 0-1");
    }
}

inline SignSeq named_sequence_signs(NamedSequence name, std::size_t len) {
    if (len < 1) throw std::invalid_argument("len must be >= 1");
    std::vector<int> d(len);
    switch (name) {
        case NamedSequence::thue_morse_pm:
            for (std::size_t n = 0; n < len; ++n)
                d[n] = (n == 0) ? +1 : (n % 2 == 0 ? d[n / 2] : -d[n / 2]);
            break;
        case NamedSequence::thue_morse_doubled:
            // d_{4n} = d_{4n+1} = d_{2n} and d_{4n+2} = d_{4n+3} = -d_{2n}.
            for (std::size_t n = 0; n < len; ++n) {
                if (n == 0) {
                    d[n] = +1;
                    continue;
                }
                const std::size_t base = 2 * (n / 4);
                d[n] = (n % 4 < 2) ? d[base] : -d[base];
            }
            break;
        case NamedSequence::zero_parity_pm:
            for (std::size_t n = 0; n < len; ++n) {
                if (n == 0)
                    d[n] = +1;
                else if (n % 2 == 1)
                    d[n] = d[n / 2];
                else
                    d[n] = -d[n / 2];
            }
            break;
        default:
            throw std::invalid_argument("named sequence is not over +-1");
    }
    SignSeq s;
    for (int x : d) s.push_back_sign(x);
    return s;
}

// Prefix of the characteristic Sturmian word with the given partial
// quotients, via the standard-word recursion
//     s_{-1} = "0",  s_0 = "1",  s_k = s_{k-1}^{a_k} s_{k-2}.
// With this convention the word always starts with the letter 1 (the
// first directive prepends at least one copy of s_0). Integer-only, so
// the output is exact and platform-independent.
inline BitSeq sturmian_characteristic(const SturmianSpec& spec, std::size_t len) {
    if (len < 1) throw std::invalid_argument("len must be >= 1");
    std::string prev = "0";
    std::string cur = "1";
    for (unsigned a : spec.directives) {
        std::string next;
        // Clamp at len: only the prefix is requested.
        for (unsigned i = 0; i < a && next.size() < len; ++i)
            next.append(cur, 0, std::min<std::size_t>(cur.size(), len - next.size()));
        if (next.size() < len) next.append(prev, 0, std::min<std::size_t>(prev.size(), len - next.size()));
        prev = std::move(cur);
        cur = std::move(next);
        if (cur.size() >= len) break;
    }
    if (cur.size() < len)
        throw InsufficientDirectives("standard word reaches only " + std::to_string(cur.size()) +
                                     " of " + std::to_string(len) + " symbols");
    return BitSeq::from_string(std::string_view(cur).substr(0, len));
}

// Projection of a +-1 sequence to 0-1: c_i = (d_i - d_{i+2})/2 mod 2,
// i.e. c_i = 1 exactly when d_i != d_{i+2}. Output is 2 symbols shorter.
inline BitSeq project_to_01(const SignSeq& d) {
    if (d.size() < 3) throw TooShort("projection needs at least 3 symbols");
    BitSeq c;
    for (std::size_t i = 0; i + 2 < d.size(); ++i) c.push_back(d.bit(i) ^ d.bit(i + 2));
    return c;
}

// Symbolwise flip.
inline BitSeq conjugate(const BitSeq& c) {
    BitSeq r;
    for (std::size_t i = 0; i < c.size(); ++i) r.push_back(1 - c.get(i));
    return r;
}

}  // namespace apw
