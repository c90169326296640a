#include <catch_amalgamated.hpp>

#include <random>

#include "apwenian/sequences.hpp"
#include "helpers.hpp"

using namespace apw;

TEST_CASE("fixed point of the period-doubling substitution") {
    const Substitution sub = Substitution::parse(Alphabet::zero_one, "10", "11");
    CHECK(fixed_point_bits(sub, 15).to_string() == "101110101011101");
}

TEST_CASE("constant image forces a constant sequence") {
    const Substitution sub = Substitution::parse(Alphabet::zero_one, "11", "00");
    CHECK(fixed_point_bits(sub, 5).to_string() == "11111");
}

TEST_CASE("fixed point of the Thue-Morse substitution") {
    const Substitution sub = Substitution::parse(Alphabet::plus_minus, "+-", "-+");
    CHECK(fixed_point_signs(sub, 8).to_string() == "+--+-++-");
}

TEST_CASE("non-prolongable substitutions are rejected") {
    const Substitution sub = Substitution::parse(Alphabet::zero_one, "01", "11");
    CHECK_THROWS_AS(fixed_point_bits(sub, 5), NotProlongable);
}

TEST_CASE("fixed point satisfies its defining recurrence") {
    std::mt19937_64 rng(12345);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t p = 2 + rng() % 4;
        Word one{1}, zero;
        for (std::size_t j = 1; j < p; ++j) one.push_back(static_cast<Letter>(rng() & 1));
        for (std::size_t j = 0; j < p; ++j) zero.push_back(static_cast<Letter>(rng() & 1));
        const Substitution sub(rng() & 1 ? Alphabet::zero_one : Alphabet::plus_minus, one, zero);
        const std::size_t len = 64;
        const Word w = detail::fixed_point_letters(sub, len * p);
        for (std::size_t n = 0; n < len; ++n) {
            const Word& img = w[n] ? sub.image_one : sub.image_zero;
            for (std::size_t j = 0; j < p; ++j) REQUIRE(w[n * p + j] == img[j]);
        }
    }
}

TEST_CASE("named sequences match their stated prefixes") {
    CHECK(named_sequence_signs(NamedSequence::zero_parity_pm, 16).to_string() ==
          "++-++--+-++-+--+");
    CHECK(named_sequence_signs(NamedSequence::thue_morse_doubled, 16).to_string() ==
          "++----++--++++--");
    CHECK(named_sequence_bits(NamedSequence::period_doubling, 4).to_string() == "1011");
}

TEST_CASE("Thue-Morse recurrences hold on a long prefix") {
    const SignSeq d = named_sequence_signs(NamedSequence::thue_morse_pm, 1024);
    for (std::size_t n = 0; n < 511; ++n) {
        CHECK(d.sign(2 * n) == d.sign(n));
        CHECK(d.sign(2 * n + 1) == -d.sign(n));
    }
    const BitSeq t = named_sequence_bits(NamedSequence::thue_morse_01, 1024);
    for (std::size_t n = 0; n < 511; ++n) {
        CHECK(t.get(2 * n) == t.get(n));
        CHECK(t.get(2 * n + 1) == 1 - t.get(n));
    }
}

TEST_CASE("doubled Thue-Morse equals the doubling morphism applied to Thue-Morse") {
    const SignSeq t = named_sequence_signs(NamedSequence::thue_morse_pm, 256);
    const SignSeq d = named_sequence_signs(NamedSequence::thue_morse_doubled, 512);
    for (std::size_t n = 0; n < 256; ++n) {
        CHECK(d.sign(2 * n) == t.sign(n));
        CHECK(d.sign(2 * n + 1) == t.sign(n));
    }
}

TEST_CASE("Sturmian standard words") {
    CHECK(sturmian_characteristic(SturmianSpec({1, 1, 1, 1, 1, 1}), 8).to_string() == "10110101");
    CHECK(sturmian_characteristic(SturmianSpec({1}), 1).to_string() == "1");
    CHECK_THROWS_AS(sturmian_characteristic(SturmianSpec({1}), 3), InsufficientDirectives);

    // Prefix with directives [2,1,1,1] is balanced for every factor length.
    const std::string w = sturmian_characteristic(SturmianSpec({2, 1, 1, 1}), 5).to_string();
    for (std::size_t ell = 1; ell <= 4; ++ell) CHECK(testutil::is_balanced_for_length(w, ell));
}

TEST_CASE("Sturmian prefixes are balanced with factor complexity l+1") {
    const BitSeq fib = sturmian_characteristic(
        SturmianSpec({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 600);
    const std::string w = fib.to_string();
    for (std::size_t ell = 1; ell <= 20; ++ell) {
        CHECK(testutil::is_balanced_for_length(w, ell));
        CHECK(testutil::distinct_factors(w, ell) == ell + 1);
    }
    // A second slope, mixing directives.
    const std::string w2 =
        sturmian_characteristic(SturmianSpec({2, 3, 1, 2, 1, 1, 2, 3, 1, 1}), 600).to_string();
    for (std::size_t ell = 1; ell <= 20; ++ell) {
        CHECK(testutil::is_balanced_for_length(w2, ell));
        CHECK(testutil::distinct_factors(w2, ell) == ell + 1);
    }
}

TEST_CASE("projection to 0-1") {
    const SignSeq t = named_sequence_signs(NamedSequence::thue_morse_pm, 16);
    CHECK(project_to_01(t).to_string() == "11001111110011");

    SignSeq plus;
    for (int i = 0; i < 8; ++i) plus.push_back_sign(+1);
    CHECK(project_to_01(plus).to_string() == "000000");

    SignSeq alt;
    for (int i = 0; i < 9; ++i) alt.push_back_sign(i % 2 ? -1 : +1);
    CHECK(project_to_01(alt).to_string() == "0000000");

    SignSeq two;
    two.push_back_sign(+1);
    two.push_back_sign(-1);
    CHECK_THROWS_AS(project_to_01(two), TooShort);
}

TEST_CASE("projection commutes with shifting by 2") {
    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 25; ++rep) {
        const SignSeq d = testutil::random_signs(rng, 40);
        SignSeq shifted;
        for (std::size_t i = 2; i < d.size(); ++i) shifted.push_back_sign(d.sign(i));
        const BitSeq a = project_to_01(shifted);
        const BitSeq b = project_to_01(d);
        for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a.get(i) == b.get(i + 2));
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(BitSeq::from_string("1011")).to_string() == "0100");
    CHECK(conjugate(BitSeq::from_string("00000")).to_string() == "11111");
    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 10; ++rep) {
        const BitSeq c = testutil::random_bits(rng, 50);
        CHECK(conjugate(conjugate(c)) == c);
    }
}
