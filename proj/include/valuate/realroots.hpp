#pragma once

#include <utility>
#include <vector>

#include "valuate/poly.hpp"

namespace valuate {

/* Open interval with rational endpoints. When used as a root isolator the
 * endpoints are never roots and the isolated polynomial changes sign
 * across it. */
struct Interval {
    Rat lo;
    Rat hi;
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo < x && x < hi; }
};

/* Chain (f, f', ...) where each subsequent member is a positive-rational
 * multiple of the negated euclidean remainder of the two preceding. The
 * last nonzero member is a gcd of f and f' up to a constant. */
struct SturmChain {
    std::vector<IntPoly> polys;
};

SturmChain sturm_chain(const IntPoly& f);  // throws zero_poly_error

// Sign variations of the chain evaluated at x / as x -> +infinity.
int variations_at(const SturmChain& chain, const Rat& x);
int variations_at_pos_inf(const SturmChain& chain);

// gcd over Z, primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

IntPoly squarefree_part(const IntPoly& f);
// (factor, multiplicity) pairs with pairwise coprime squarefree factors.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// Strict upper bound on the absolute value of every root: 1 + max|c_i|/|lead|.
Rat cauchy_root_bound(const IntPoly& f);

// Roots counted with multiplicity, via the squarefree decomposition.
int count_roots_positive(const IntPoly& f);
int count_roots_in(const IntPoly& f, const Interval& range);

/* Pairwise-disjoint isolating intervals for the distinct positive roots,
 * sorted increasingly. Endpoints are non-roots; the squarefree part of f
 * changes sign across each interval. */
std::vector<Interval> isolate_positive_roots(const IntPoly& f);

/* Bisect iv until its width is at most `width`, keeping the sign change of
 * f across it. Requires f(lo)*f(hi) < 0, else not_isolating_error. */
Interval refine(const IntPoly& f, const Interval& iv, const Rat& width);

/* Least power (1+x)^N, N <= n_max, whose product with f has exactly as many
 * sign variations as f has positive roots (with multiplicity). Requires
 * f != 0 and f(0) != 0; throws cap_exhausted when no N <= n_max works. */
IntPoly curtiss_multiplier(const IntPoly& f, int n_max);

}  // namespace valuate
