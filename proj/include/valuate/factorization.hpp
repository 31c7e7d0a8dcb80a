#pragma once

#include <optional>

#include "valuate/valuation.hpp"

namespace valuate {

/* A factorization of a monoid element, identified with the polynomial in
 * N0[x] supported on atom exponents; its length is the coefficient sum. */
struct Factorization {
    IntPoly z;
    Int length;  // = z(1)
    friend bool operator==(const Factorization& a, const Factorization& b) { return a.z == b.z; }
};

struct FactorizationSet {
    std::vector<Factorization> items;  // sorted by coefficient vectors
    bool complete = false;
    std::optional<int> exponent_cap_used;
};

/* Enumerate Z(x) for x given as a polynomial with nonnegative coefficients.
 * For alpha >= 1 the enumeration is complete (exponents are bounded by the
 * least e with alpha^e > x(alpha)); for alpha < 1 exponents are capped and
 * completeness is never claimed. Requires a determined atom set; antimatter
 * monoids raise no_factorizations. */
FactorizationSet enumerate_factorizations(const ValuationMonoid& M, const IntPoly& x,
                                          int exponent_cap = 24);

struct LengthSet {
    std::vector<Int> lengths;  // sorted, deduplicated
    bool complete = false;
};
LengthSet length_set(const ValuationMonoid& M, const IntPoly& x, int exponent_cap = 24);

struct ArithProgression {
    bool is_progression = false;
    std::optional<Int> common_difference;  // absent for singletons
};
// Nonempty sorted lengths; throws empty_input otherwise.
ArithProgression is_arith_progression(const std::vector<Int>& sorted_lengths);

}  // namespace valuate
