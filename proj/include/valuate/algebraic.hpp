#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "valuate/realroots.hpp"

namespace valuate {

/* Irreducibility over Q for a primitive integer polynomial, decided exactly:
 * degree 0/1 short-circuit, rational-root test, Eisenstein fast path, then a
 * complete search for a monic factor of the monic image, anchored on divisor
 * values at 0, 1, -1 and pruned by the Mignotte coefficient bound.
 * Degrees above 10 are rejected (unsupported_degree). */
bool is_irreducible(const IntPoly& f);

// Eisenstein criterion at some prime; used to certify the generated families.
bool eisenstein_applies(const IntPoly& f, Int* witness_prime = nullptr);

struct RootChoice {
    enum class Kind { Largest, Smallest, Index } kind = Kind::Largest;
    int index = 0;  // 0-based, increasing, for Kind::Index
    static RootChoice largest() { return {Kind::Largest, 0}; }
    static RootChoice smallest() { return {Kind::Smallest, 0}; }
    static RootChoice at(int i) { return {Kind::Index, i}; }
};

/* One positive real root of an irreducible primitive polynomial.
 * display_interval() keeps small denominators for reports; work_interval()
 * is pre-refined for sign computations. Instances are immutable. */
class AlgebraicNumber {
public:
    const IntPoly& min_poly() const { return min_poly_; }
    const Interval& display_interval() const { return display_iv_; }
    const Interval& work_interval() const { return work_iv_; }
    int degree() const { return min_poly_.degree(); }
    // Leading coefficient of the primitive polynomial; 1 iff the monic
    // minimal polynomial has integer coefficients.
    const Int& scale() const { return min_poly_.lead(); }
    // sign(alpha - 1)
    int cmp_one() const { return cmp_one_; }
    bool is_rational() const { return degree() == 1; }
    Rat rational_value() const;  // requires degree 1

    // Constant coefficient of the monic minimal polynomial in Q[x].
    Rat monic_constant_term() const;

    friend std::shared_ptr<const AlgebraicNumber> make_algebraic(const RatPoly& m,
                                                                 RootChoice which);

private:
    AlgebraicNumber() = default;
    IntPoly min_poly_;
    Interval display_iv_;
    Interval work_iv_;
    int cmp_one_ = 0;
};

using AlgebraicPtr = std::shared_ptr<const AlgebraicNumber>;

/* Select one positive real root of m after content normalization. Throws
 * not_irreducible, no_positive_root, or root_index_error. */
AlgebraicPtr make_algebraic(const RatPoly& m, RootChoice which = RootChoice::largest());
AlgebraicPtr make_algebraic(const IntPoly& m, RootChoice which = RootChoice::largest());

/* The split scale*m_alpha = p - q into polynomials with nonnegative
 * coefficients and disjoint supports; p carries the leading term. */
struct MinimalPair {
    Int scale;
    IntPoly p;
    IntPoly q;
};
MinimalPair minimal_pair(const AlgebraicNumber& a);

/* Element of Q(alpha) as exact coordinates in the basis 1, alpha, ...,
 * alpha^(d-1). Elements built from integer polynomials lie in Z[alpha]
 * even when individual coordinates are non-integer rationals. */
class QAlphaElem {
public:
    QAlphaElem(AlgebraicPtr owner, std::vector<Rat> coords);

    const AlgebraicPtr& owner() const { return owner_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;

    QAlphaElem operator+(const QAlphaElem& y) const;
    QAlphaElem operator-(const QAlphaElem& y) const;
    QAlphaElem scaled(const Int& k) const;
    QAlphaElem scaled(const Rat& k) const;
    // Multiply by alpha^k, reducing via the minimal polynomial.
    QAlphaElem mul_by_power(int k) const;

private:
    void check_owner(const QAlphaElem& y) const;
    AlgebraicPtr owner_;
    std::vector<Rat> coords_;
};

QAlphaElem elem_zero(const AlgebraicPtr& a);
QAlphaElem elem_one(const AlgebraicPtr& a);
QAlphaElem elem_power(const AlgebraicPtr& a, int k);  // alpha^k
QAlphaElem elem_from_intpoly(const AlgebraicPtr& a, const IntPoly& f);

/* Exact sign: 0 iff all coordinates vanish; otherwise the coordinate
 * polynomial is evaluated over the root interval with rational interval
 * arithmetic, refining until zero is excluded. */
int elem_sign(const QAlphaElem& x);
std::strong_ordering elem_compare(const QAlphaElem& x, const QAlphaElem& y);

// Certified rational bounds [lo, hi] on the value of x over the given
// root interval (defaults to the owner's working interval).
std::pair<Rat, Rat> elem_value_bounds(const QAlphaElem& x);
std::pair<Rat, Rat> elem_value_bounds(const QAlphaElem& x, const Interval& iv);

// Largest t >= 0 with r - t*step >= 0. Requires step > 0 and r >= 0.
Int floor_ratio(const QAlphaElem& r, const QAlphaElem& step);

}  // namespace valuate
