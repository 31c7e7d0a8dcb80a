#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valuate/errors.hpp"

namespace valuate {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational with positive denominator.
Rat make_rat(const Int& num, const Int& den);
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

/* Dense univariate polynomial over Z. Index = exponent, trailing zeros
 * trimmed, so the last stored coefficient is nonzero unless the polynomial
 * is zero. degree() returns -1 for the zero polynomial. */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly monomial(Int coeff, int exp);
    static IntPoly x() { return monomial(1, 1); }
    static IntPoly constant(Int c) { return monomial(std::move(c), 0); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    // Coefficient of x^i; zero outside the stored range.
    const Int& operator[](int i) const;
    const Int& lead() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& g);
    IntPoly& operator-=(const IntPoly& g);
    friend IntPoly operator+(IntPoly f, const IntPoly& g) { return f += g; }
    friend IntPoly operator-(IntPoly f, const IntPoly& g) { return f -= g; }
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const Int& a, const IntPoly& f);
    friend bool operator==(const IntPoly& f, const IntPoly& g) { return f.c_ == g.c_; }

private:
    void trim();
    std::vector<Int> c_;
};

/* Dense univariate polynomial over Q; every coefficient canonicalized. */
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const IntPoly& f);

    static RatPoly monomial(Rat coeff, int exp);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](int i) const;
    const Rat& lead() const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& g);
    RatPoly& operator-=(const RatPoly& g);
    friend RatPoly operator+(RatPoly f, const RatPoly& g) { return f += g; }
    friend RatPoly operator-(RatPoly f, const RatPoly& g) { return f -= g; }
    friend RatPoly operator*(const RatPoly& f, const RatPoly& g);
    friend RatPoly operator*(const Rat& a, const RatPoly& f);
    friend bool operator==(const RatPoly& f, const RatPoly& g) { return f.c_ == g.c_; }

private:
    void trim();
    std::vector<Rat> c_;
};

// Quotient of an exact division; throws division_error on nonzero remainder.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);
RatPoly exact_div(const RatPoly& f, const RatPoly& g);

// Euclidean division over Q: f = q*g + r with deg r < deg g.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);

// Exponents carrying a nonzero coefficient.
std::set<int> support(const IntPoly& f);
std::set<int> support(const RatPoly& f);

// Sign changes in the coefficient sequence after deleting zeros.
int sign_variations(const IntPoly& f);

Rat eval(const IntPoly& f, const Rat& x);
Rat eval(const RatPoly& f, const Rat& x);
Int eval(const IntPoly& f, const Int& x);

IntPoly derivative(const IntPoly& f);
IntPoly shift_up(const IntPoly& f, int k);  // f * x^k

// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
Int content(const IntPoly& f);

/* Unique split f = primitive/scale with `primitive` an integer polynomial of
 * content 1 and positive leading coefficient. scale > 0 when f has positive
 * leading coefficient (scale < 0 otherwise, keeping primitive = scale*f
 * exact). */
struct ContentSplit {
    Rat scale;
    IntPoly primitive;
};
ContentSplit content_primitive(const RatPoly& f);
ContentSplit content_primitive(const IntPoly& f);

std::string to_string(const Rat& q);
std::string to_string(const IntPoly& f, std::string_view var = "x");
std::string to_string(const RatPoly& f, std::string_view var = "x");

}  // namespace valuate
