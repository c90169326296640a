#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apw {

// Input holds fewer symbols than the requested order/depth needs.
struct TooShort : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The image of the letter 1 does not start with 1, so there is no fixed
// point extending that letter.
struct NotProlongable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The directive list runs out before the standard word reaches the
// requested length.
struct InsufficientDirectives : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The 0-1 criterion requires c_0 = 1.
struct LeadingZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation defined for odd moduli only.
struct EvenModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DepthExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Continued-fraction expansion over GF(2) broke before the requested
// depth: some Hankel determinant of the input is even.
struct NotApwenianPrefix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Hankel determinant that must be nonzero vanished; carries the first
// vanishing order.
struct ZeroHankel : std::runtime_error {
    explicit ZeroHankel(std::size_t n)
        : std::runtime_error("Hankel determinant of order " + std::to_string(n) + " vanishes"),
          order(n) {}
    std::size_t order;
};

// A factor of the infinite product vanishes at the evaluation point.
struct ZeroFactor : std::runtime_error {
    explicit ZeroFactor(std::size_t i)
        : std::runtime_error("product factor " + std::to_string(i) + " vanishes at the evaluation point"),
          factor_index(i) {}
    std::size_t factor_index;
};

// Closed-form cycle count only covers odd prime powers and products of
// two distinct odd primes.
struct UnsupportedShape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The hypothesis ord_{p^2}(2) = p * ord_p(2) fails for the base prime.
struct WieferichCondition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchSpaceTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Breach of a guaranteed divisibility; signals a bug, never bad input.
struct NotDivisible : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace apw
