#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apwenian/errors.hpp"

namespace apw {

namespace detail {

// Word-packed bit storage shared by the 0-1 and +-1 sequence types.
// Unused high bits of the last word are kept zero so that equality can
// compare words directly.
class PackedBits {
public:
    PackedBits() = default;
    explicit PackedBits(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    int get(std::size_t i) const { return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u); }

    void set(std::size_t i, int bit) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (bit)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void push_back(int bit) {
        if ((len_ & 63) == 0) words_.push_back(0);
        ++len_;
        set(len_ - 1, bit);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const PackedBits&) const = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace detail

// Finite prefix of a 0-1 sequence, bit-packed, indexed from 0.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::size_t len) : bits_(len) {}

    // Parses a string over '0' and '1'.
    static BitSeq from_string(std::string_view s) {
        BitSeq c;
        for (char ch : s) {
            if (ch == '0')
                c.push_back(0);
            else if (ch == '1')
                c.push_back(1);
            else
                throw std::invalid_argument("0-1 sequence may contain only '0' and '1'");
        }
        return c;
    }

    std::size_t size() const { return bits_.size(); }
    int get(std::size_t i) const { return bits_.get(i); }
    void set(std::size_t i, int bit) { bits_.set(i, bit); }
    void push_back(int bit) { bits_.push_back(bit); }

    std::string to_string() const {
        std::string s(size(), '0');
        for (std::size_t i = 0; i < size(); ++i) s[i] = get(i) ? '1' : '0';
        return s;
    }

    bool operator==(const BitSeq&) const = default;

private:
    detail::PackedBits bits_;
};

// Finite prefix of a +-1 sequence. Signs are packed one bit per symbol
// with the fixed encoding +1 -> 0, -1 -> 1, i.e. the stored bit of d_n is
// (1 - d_n) / 2. All sign arithmetic is translated at this boundary.
class SignSeq {
public:
    SignSeq() = default;

    // Parses a string over '+' and '-'.
    static SignSeq from_string(std::string_view s) {
        SignSeq d;
        for (char ch : s) {
            if (ch == '+')
                d.push_back_sign(+1);
            else if (ch == '-')
                d.push_back_sign(-1);
            else
                throw std::invalid_argument("+-1 sequence may contain only '+' and '-'");
        }
        return d;
    }

    std::size_t size() const { return bits_.size(); }

    // Decoded symbol, +1 or -1.
    int sign(std::size_t i) const { return bits_.get(i) ? -1 : +1; }

    // Stored bit (1 - d_i) / 2.
    int bit(std::size_t i) const { return bits_.get(i); }

    void push_back_sign(int s) {
        if (s != 1 && s != -1) throw std::invalid_argument("sign symbol must be +1 or -1");
        bits_.push_back(s == 1 ? 0 : 1);
    }

    std::string to_string() const {
        std::string s(size(), '+');
        for (std::size_t i = 0; i < size(); ++i) s[i] = bit(i) ? '-' : '+';
        return s;
    }

    bool operator==(const SignSeq&) const = default;

private:
    detail::PackedBits bits_;
};

enum class Alphabet { zero_one, plus_minus };

// A "letter" of either alphabet: 1 stands for the letter 1 (or +1),
// 0 for the letter 0 (or -1).
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Constant-length substitution on a 2-letter alphabet. image_one is the
// image of the letter 1 (resp. +1), image_zero the image of 0 (resp. -1).
struct Substitution {
    Alphabet alphabet = Alphabet::zero_one;
    Word image_one;
    Word image_zero;

    Substitution() = default;
    Substitution(Alphabet a, Word img1, Word img0)
        : alphabet(a), image_one(std::move(img1)), image_zero(std::move(img0)) {
        if (image_one.size() != image_zero.size())
            throw std::invalid_argument("substitution images must have equal length");
        if (image_one.size() < 2) throw std::invalid_argument("substitution length must be >= 2");
    }

    // Parses image words from strings over '0'/'1' or '+'/'-' according
    // to the alphabet.
    static Substitution parse(Alphabet a, std::string_view img1, std::string_view img0) {
        return Substitution(a, parse_word(a, img1), parse_word(a, img0));
    }

    // Type II substitution for a +-1 coefficient vector v (v_0 = +1):
    // the image of -1 is the sign flip of the image of +1.
    static Substitution type2(const std::vector<int>& v) {
        Word one, zero;
        for (int x : v) {
            if (x != 1 && x != -1) throw std::invalid_argument("v entries must be +1 or -1");
            one.push_back(x == 1 ? 1 : 0);
            zero.push_back(x == 1 ? 0 : 1);
        }
        return Substitution(Alphabet::plus_minus, std::move(one), std::move(zero));
    }

    std::size_t length() const { return image_one.size(); }

    // Has a fixed point extending the letter 1 iff the image of 1 starts
    // with 1.
    bool prolongable() const { return !image_one.empty() && image_one[0] == 1; }

    // A = { j : image_one[j] = image_zero[j] }. Empty exactly for type II.
    std::vector<std::size_t> agreement_set() const {
        std::vector<std::size_t> a;
        for (std::size_t j = 0; j < length(); ++j)
            if (image_one[j] == image_zero[j]) a.push_back(j);
        return a;
    }

    std::string image_one_string() const { return word_string(alphabet, image_one); }
    std::string image_zero_string() const { return word_string(alphabet, image_zero); }

    static Word parse_word(Alphabet a, std::string_view s) {
        Word w;
        for (char ch : s) {
            if (a == Alphabet::zero_one) {
                if (ch != '0' && ch != '1') throw std::invalid_argument("image word must be over '0','1'");
                w.push_back(ch == '1' ? 1 : 0);
            } else {
                if (ch != '+' && ch != '-') throw std::invalid_argument("image word must be over '+','-'");
                w.push_back(ch == '+' ? 1 : 0);
            }
        }
        return w;
    }

    static std::string word_string(Alphabet a, const Word& w) {
        std::string s;
        for (Letter l : w) s += (a == Alphabet::zero_one) ? (l ? '1' : '0') : (l ? '+' : '-');
        return s;
    }

    bool operator==(const Substitution&) const = default;
};

// Slope of a characteristic Sturmian word, encoded by the partial
// quotients a_1, a_2, ... of its continued fraction.
struct SturmianSpec {
    std::vector<unsigned> directives;

    explicit SturmianSpec(std::vector<unsigned> dirs) : directives(std::move(dirs)) {
        if (directives.empty()) throw std::invalid_argument("directive list must be nonempty");
        for (unsigned a : directives)
            if (a < 1) throw std::invalid_argument("directives must be positive");
    }
};

// Parses a +-1 vector from a string over '+' and '-'.
inline std::vector<int> parse_pm_vector(std::string_view s) {
    std::vector<int> v;
    for (char ch : s) {
        if (ch == '+')
            v.push_back(+1);
        else if (ch == '-')
            v.push_back(-1);
        else
            throw std::invalid_argument("+-1 vector may contain only '+' and '-'");
    }
    return v;
}

inline std::string pm_vector_string(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (x == 1) ? '+' : '-';
    return s;
}

}  // namespace apw
