#include <catch_amalgamated.hpp>

#include <random>

#include "apwenian/criteria.hpp"
#include "apwenian/jfraction.hpp"
#include "apwenian/sequences.hpp"
#include "helpers.hpp"

using namespace apw;

TEST_CASE("series inverse: Newton and schoolbook agree") {
    std::mt19937_64 rng(4711);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t T = 1 + rng() % 200;
        SeriesGF2 f(T);
        f.set_coeff(0, 1);
        for (std::size_t i = 1; i < T; ++i) f.set_coeff(i, static_cast<int>(rng() & 1));
        const SeriesGF2 g = inverse_newton(f);
        REQUIRE(g == inverse_schoolbook(f));
        REQUIRE(mul(f, g, T) == SeriesGF2::one(T));
    }
}

TEST_CASE("GF(2) expansion exists exactly on apwenian prefixes") {
    const BitSeq pd = named_sequence_bits(NamedSequence::period_doubling, 64);
    CHECK_NOTHROW(jfrac_expand_gf2(pd, 16));

    BitSeq ones;
    for (int i = 0; i < 8; ++i) ones.push_back(1);
    CHECK_THROWS_AS(jfrac_expand_gf2(ones, 2), NotApwenianPrefix);

    CHECK_THROWS_AS(jfrac_expand_gf2(pd, 64), TooShort);
}

TEST_CASE("round trip through a synthesized continued fraction") {
    std::mt19937_64 rng(1337);
    for (int rep = 0; rep < 30; ++rep) {
        JFracGF2 jf;
        for (int k = 0; k < 8; ++k) jf.u.push_back(static_cast<std::uint8_t>(rng() & 1));
        const SeriesGF2 s = jfrac_approximant_gf2(jf, 8, 17);
        BitSeq c;
        for (std::size_t i = 0; i < 17; ++i) c.push_back(s.coeff(i));
        REQUIRE(jfrac_expand_gf2(c, 8) == jf);
    }
}

TEST_CASE("expansion round trip reproduces the source prefix") {
    std::mt19937_64 rng(2001);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<int> odd;
        for (int i = 0; i < 20; ++i) odd.push_back(static_cast<int>(rng() & 1));
        const BitSeq c = testutil::make_apwenian_01(odd, 33);
        const JFracGF2 jf = jfrac_expand_gf2(c, 16);
        const SeriesGF2 s = jfrac_approximant_gf2(jf, 16, 32);
        for (std::size_t i = 0; i < 32; ++i) REQUIRE(s.coeff(i) == c.get(i));
    }
}

TEST_CASE("approximant basics") {
    JFracGF2 zero;
    zero.u = {0, 0};
    CHECK(jfrac_approximant_gf2(zero, 2, 6).to_string() == "101010");  // 1 + x^2 + x^4
    CHECK(jfrac_approximant_gf2(zero, 0, 4).to_string() == "1000");
    CHECK_THROWS_AS(jfrac_approximant_gf2(zero, 3, 8), DepthExceeded);

    const BitSeq pd = named_sequence_bits(NamedSequence::period_doubling, 33);
    const JFracGF2 jf = jfrac_expand_gf2(pd, 16);
    const SeriesGF2 a4 = jfrac_approximant_gf2(jf, 4, 8);
    for (std::size_t i = 0; i < 8; ++i) REQUIRE(a4.coeff(i) == pd.get(i));
}

TEST_CASE("approximant order meets the lower bound") {
    const BitSeq pd = named_sequence_bits(NamedSequence::period_doubling, 64);
    const JFracGF2 jf = jfrac_expand_gf2(pd, 16);
    const SeriesGF2 src = SeriesGF2::from_bitseq(pd, 40);
    for (std::size_t n = 1; n <= 16; ++n) {
        const SeriesGF2 ap = jfrac_approximant_gf2(jf, n, 40);
        const std::size_t agree = agreement_length(ap, src);
        REQUIRE(agree >= 2 * n);
        // Observed order recorded for the sharper of the two statements.
        INFO("n=" << n << " agreement=" << agree);
    }
}

TEST_CASE("exhaustive equivalence: expansion exists iff all determinants odd") {
    for (std::uint64_t mask = 0; mask < (1u << 13); ++mask) {
        const BitSeq c = testutil::bits_from_mask(mask, 13);
        bool all_odd = true;
        for (std::size_t n = 1; n <= 6 && all_odd; ++n)
            if (hankel_gf2(c, n) == 0) all_odd = false;
        bool expands = true;
        try {
            jfrac_expand_gf2(c, 6);
        } catch (const NotApwenianPrefix&) {
            expands = false;
        }
        REQUIRE(expands == all_odd);
    }
}

TEST_CASE("rational expansion reproduces Heilermann products for Thue-Morse") {
    const SignSeq t = named_sequence_signs(NamedSequence::thue_morse_pm, 8);
    std::vector<Int> a;
    for (std::size_t i = 0; i < t.size(); ++i) a.push_back(t.sign(i));
    const RationalJFrac jf = jfrac_expand_rational(a, 3);
    REQUIRE(jf.v.size() == 3);
    CHECK(jf.v[0] == 1);
    CHECK(jf.v[0] * jf.v[0] * jf.v[1] == -2);
    CHECK(jf.v[0] * jf.v[0] * jf.v[0] * jf.v[1] * jf.v[1] * jf.v[2] == 4);
}

TEST_CASE("rational expansion flags vanishing determinants") {
    const std::vector<Int> a{1, 0, 0, 0, 0, 0, 0};
    try {
        jfrac_expand_rational(a, 3);
        FAIL("expected ZeroHankel");
    } catch (const ZeroHankel& e) {
        CHECK(e.order == 2);
    }
    const std::vector<Int> geo{1, 3, 9, 27, 81, 243, 729};
    try {
        jfrac_expand_rational(geo, 3);
        FAIL("expected ZeroHankel");
    } catch (const ZeroHankel& e) {
        CHECK(e.order == 2);
    }
}

TEST_CASE("rational coefficients reduce to the GF(2) expansion mod 2") {
    // On prefixes with odd Hankel determinants the exact-rational u_k are
    // 2-adic integers whose parity matches the GF(2) u_k, and every v_k is
    // a 2-adic unit. The two expansions share no series code.
    std::mt19937_64 rng(7);
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<int> odd;
        for (int i = 0; i < 8; ++i) odd.push_back(static_cast<int>(rng() & 1));
        const BitSeq c = testutil::make_apwenian_01(odd, 17);
        std::vector<Int> a;
        for (std::size_t i = 0; i < c.size(); ++i) a.push_back(c.get(i));
        const JFracGF2 g = jfrac_expand_gf2(c, 8);
        const RationalJFrac rj = jfrac_expand_rational(a, 8);
        for (std::size_t k = 0; k < 8; ++k) {
            REQUIRE(denominator(rj.u[k]) % 2 != 0);
            REQUIRE((numerator(rj.u[k]) % 2 != 0) == (g.u[k] == 1));
        }
        for (const Rat& vk : rj.v) {
            REQUIRE(denominator(vk) % 2 != 0);
            REQUIRE(numerator(vk) % 2 != 0);
        }
    }
}

TEST_CASE("Heilermann identity on random integer sequences") {
    std::mt19937_64 rng(13579);
    int done = 0;
    while (done < 200) {
        const std::size_t depth = 2 + rng() % 5;
        std::vector<Int> a(2 * depth + 1);
        for (Int& x : a) x = static_cast<int>(rng() % 7) - 3;
        RationalJFrac jf;
        try {
            jf = jfrac_expand_rational(a, depth);
        } catch (const ZeroHankel&) {
            continue;
        }
        for (std::size_t n = 1; n <= depth; ++n) {
            Rat prod = 1;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t e = 0; e < n - i; ++e) prod *= jf.v[i];
            REQUIRE(prod == Rat(hankel_exact(std::span<const Int>(a), n)));
        }
        ++done;
    }
}
