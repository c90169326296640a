#include <catch_amalgamated.hpp>

#include <random>

#include "apwenian/hankel.hpp"
#include "helpers.hpp"

using namespace apw;

TEST_CASE("GF(2) Hankel determinants of the period-doubling prefix") {
    const BitSeq c = named_sequence_bits(NamedSequence::period_doubling, 16);
    CHECK(hankel_gf2(c, 1) == 1);
    CHECK(hankel_gf2(c, 2) == 1);  // det [[1,0],[0,1]]
    CHECK(hankel_gf2(c, 3) == 1);  // cofactor expansion gives -1
}

TEST_CASE("exact Hankel determinants of the Thue-Morse prefix") {
    const SignSeq t = named_sequence_signs(NamedSequence::thue_morse_pm, 8);
    CHECK(hankel_exact(t, 1) == 1);
    CHECK(hankel_exact(t, 2) == -2);  // det [[1,-1],[-1,-1]]
    CHECK(hankel_exact(t, 3) == 4);
    const BitSeq c = BitSeq::from_string("011");
    CHECK(hankel_exact(c, 1) == 0);
}

TEST_CASE("GF(2) and exact determinants agree mod 2") {
    std::mt19937_64 rng(2024);
    const BitSeq c = testutil::random_bits(rng, 63);
    for (std::size_t n = 1; n <= 32; ++n) {
        const Int h = hankel_exact(c, n);
        const int parity = (h % 2 != 0) ? 1 : 0;
        REQUIRE(hankel_gf2(c, n) == parity);
    }
}

TEST_CASE("fraction-free elimination matches cofactor expansion") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<Int> m(n * n);
        for (Int& x : m) x = static_cast<int>(rng() % 11) - 5;
        REQUIRE(detail::det_bareiss(m, n) == detail::det_cofactor(m, n));
    }
}

TEST_CASE("H_n depends only on the first 2n-1 symbols") {
    std::mt19937_64 rng(5150);
    for (std::size_t n : {2, 5, 9}) {
        SignSeq a = testutil::random_signs(rng, 2 * n - 1);
        SignSeq b = a;
        for (int i = 0; i < 6; ++i) b.push_back_sign((rng() & 1) ? +1 : -1);
        REQUIRE(hankel_exact(a, n) == hankel_exact(b, n));
    }
}

TEST_CASE("divided Hankel profile of +-1 prefixes") {
    const SignSeq t = named_sequence_signs(NamedSequence::thue_morse_pm, 8);
    const HankelProfile fast = pm_profile(t, 3);
    const HankelProfile slow = pm_profile(t, 3, ProfileMode::exact_oracle);
    CHECK(fast.to_string() == "111");
    CHECK(fast == slow);

    SignSeq plus;
    for (int i = 0; i < 8; ++i) plus.push_back_sign(+1);
    CHECK(pm_profile(plus, 3).to_string() == "100");
    CHECK(pm_profile(plus, 3, ProfileMode::exact_oracle).to_string() == "100");

    const SignSeq z = named_sequence_signs(NamedSequence::zero_parity_pm, 20);
    CHECK(pm_profile(z, 8, ProfileMode::exact_oracle).to_string() == "11111111");

    SignSeq short_seq = named_sequence_signs(NamedSequence::thue_morse_pm, 5);
    CHECK_THROWS_AS(pm_profile(short_seq, 3), TooShort);
}

TEST_CASE("2^{n-1} divides H_n for every +-1 prefix") {
    std::mt19937_64 rng(424242);
    for (int rep = 0; rep < 300; ++rep) {
        const SignSeq d = testutil::random_signs(rng, 21);
        for (std::size_t n = 1; n <= 10; ++n) {
            const Int h = hankel_exact(d, n);
            REQUIRE(h % pow_int(2, n - 1) == 0);
        }
    }
}

TEST_CASE("exhaustive reduction to the projected GF(2) determinant") {
    // For every +-1 prefix of length 15 and 2 <= n <= 7:
    //   (H_n(d) / 2^{n-1}) mod 2  =  GF(2) Hankel determinant of the
    //   projected 0-1 sequence at order n-1.
    for (std::uint64_t mask = 0; mask < (1u << 15); ++mask) {
        const SignSeq d = testutil::signs_from_mask(mask, 15);
        const BitSeq c = project_to_01(d);
        for (std::size_t n = 2; n <= 7; ++n) {
            const Int h = hankel_exact(d, n);
            const Int pw = pow_int(2, n - 1);
            REQUIRE(h % pw == 0);
            const Int q = h / pw;
            const int lhs = (q % 2 != 0) ? 1 : 0;
            REQUIRE(lhs == hankel_gf2(c, n - 1));
        }
    }
}

TEST_CASE("conjugate relation identity") {
    const BitSeq pd = named_sequence_bits(NamedSequence::period_doubling, 16);
    CHECK(conjugate_relation_check(pd, 6));

    BitSeq ones;
    for (int i = 0; i < 9; ++i) ones.push_back(1);
    CHECK(conjugate_relation_check(ones, 4));

    std::mt19937_64 rng(606);
    for (int rep = 0; rep < 50; ++rep)
        CHECK(conjugate_relation_check(testutil::random_bits(rng, 13), 6));
}
