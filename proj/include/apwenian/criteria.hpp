#pragma once

#include <cassert>
#include <cstddef>
#include <optional>

#include "apwenian/errors.hpp"
#include "apwenian/gf2_series.hpp"
#include "apwenian/words.hpp"

namespace apw {

// Verdict of a recurrence criterion on a prefix. checked_up_to is the
// largest index n that the prefix length allowed; it is derived from the
// input, never a parameter. Only the first violation is kept.
struct CriterionReport {
    std::size_t checked_up_to = 0;
    std::optional<std::size_t> violation;

    bool passed() const { return !violation.has_value(); }
    bool operator==(const CriterionReport&) const = default;
};

// +-1 criterion: (d_n + d_{n+1} - d_{2n+1} - d_{2n+2}) / 2 = 1 (mod 2)
// for every n with 2n+2 < len. The numerator is a sum of four odd
// numbers, hence even.
inline CriterionReport check_pm(const SignSeq& d) {
    if (d.size() < 3) throw TooShort("criterion needs at least 3 symbols");
    CriterionReport rep;
    rep.checked_up_to = (d.size() - 3) / 2;
    for (std::size_t n = 0; 2 * n + 2 < d.size(); ++n) {
        const int num = d.sign(n) + d.sign(n + 1) - d.sign(2 * n + 1) - d.sign(2 * n + 2);
        assert(num % 2 == 0);
        const int half = num / 2;
        if (((half % 2) + 2) % 2 != 1) {
            rep.violation = n;
            break;
        }
    }
    return rep;
}

// 0-1 criterion: c_0 = 1 and c_n = c_{2n+1} + c_{2n+2} (mod 2) for every
// n with 2n+2 < len.
inline CriterionReport check_01(const BitSeq& c) {
    if (c.size() < 3) throw TooShort("criterion needs at least 3 symbols");
    if (c.get(0) != 1) throw LeadingZero("criterion requires c_0 = 1");
    CriterionReport rep;
    rep.checked_up_to = (c.size() - 3) / 2;
    for (std::size_t n = 0; 2 * n + 2 < c.size(); ++n) {
        if (c.get(n) != (c.get(2 * n + 1) ^ c.get(2 * n + 2))) {
            rep.violation = n;
            break;
        }
    }
    return rep;
}

// Truncated GF(2) power-series form of the 0-1 criterion:
//   1 + x^2 f(x^2) = x f_odd(x) + f_even(x)   (mod 2, mod x^terms).
// Checked by series arithmetic, independently of the index loop above.
inline bool functional_congruence_check(const BitSeq& c, std::size_t terms) {
    if (c.size() < terms) throw TooShort("series check needs at least `terms` symbols");
    const SeriesGF2 f = SeriesGF2::from_bitseq(c, terms);
    SeriesGF2 lhs = SeriesGF2::one(terms);
    lhs = add(lhs, f.stretched2().shifted_up(2));
    const SeriesGF2 rhs = add(f.odd_part().shifted_up(1), f.even_part());
    return lhs == rhs;
}

}  // namespace apw
