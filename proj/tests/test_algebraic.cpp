#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "valuate/algebraic.hpp"

using namespace valuate;

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(IntPoly({-1, 1, 1})));            // x^2 + x - 1
    CHECK_FALSE(is_irreducible(IntPoly({-1, 0, 1})));      // (x-1)(x+1)
    CHECK(is_irreducible(IntPoly({-2, -2, 4, -6, 1})));    // x^4 - 6x^3 + 4x^2 - 2x - 2
    CHECK(is_irreducible(IntPoly({-3, 1})));
    CHECK_FALSE(is_irreducible(IntPoly({2})));             // units are not irreducible
    CHECK(is_irreducible(IntPoly({-5, 1, 3})));            // 3x^2 + x - 5
    CHECK(is_irreducible(IntPoly({-1, -1, 0, 1})));        // x^3 - x - 1

    // no rational roots, splits into two quadratics: x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
    CHECK_FALSE(is_irreducible(IntPoly({4, 0, 0, 0, 1})));
    // (x^2 + x + 1)(x^2 + 2) has no rational roots either
    CHECK_FALSE(is_irreducible(IntPoly({1, 1, 1}) * IntPoly({2, 0, 1})));
    // degree 6 with a cubic split: (x^3 - x - 1)(x^3 - 2)
    CHECK_FALSE(is_irreducible(IntPoly({-1, -1, 0, 1}) * IntPoly({-2, 0, 0, 1})));

    CHECK_THROWS_AS(is_irreducible(IntPoly({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})),
                    unsupported_degree);
}

TEST_CASE("eisenstein fast path") {
    Int p;
    CHECK(eisenstein_applies(IntPoly({-2, -2, 4, -6, 1}), &p));
    CHECK(p == 2);
    CHECK_FALSE(eisenstein_applies(IntPoly({-1, 1, 1}), nullptr));
}

TEST_CASE("make_algebraic") {
    auto rational = make_algebraic(RatPoly(std::vector<Rat>{make_rat(-3, 2), Rat(1)}));
    CHECK(rational->min_poly() == IntPoly({-3, 2}));
    CHECK(rational->is_rational());
    CHECK(rational->rational_value() == make_rat(3, 2));
    CHECK(rational->cmp_one() == 1);

    auto big = make_algebraic(IntPoly({1, -3, 1}), RootChoice::largest());
    CHECK(big->display_interval().lo >= 2);
    CHECK(big->display_interval().hi <= 3);
    auto small = make_algebraic(IntPoly({1, -3, 1}), RootChoice::smallest());
    CHECK(small->display_interval().hi <= 1);
    CHECK(small->cmp_one() == -1);
    auto by_index = make_algebraic(IntPoly({1, -3, 1}), RootChoice::at(1));
    CHECK(by_index->display_interval().lo == big->display_interval().lo);
    CHECK_THROWS_AS(make_algebraic(IntPoly({1, -3, 1}), RootChoice::at(2)), root_index_error);

    CHECK_THROWS_AS(make_algebraic(IntPoly({1, 1, 1})), no_positive_root);
    CHECK_THROWS_AS(make_algebraic(IntPoly({-1, 0, 1})), not_irreducible);

    auto one = make_algebraic(IntPoly({-1, 1}));
    CHECK(one->cmp_one() == 0);
}

TEST_CASE("minimal pairs") {
    auto a1 = make_algebraic(IntPoly({-1, 1, 1}));  // x^2 + x - 1
    MinimalPair mp1 = minimal_pair(*a1);
    CHECK(mp1.scale == 1);
    CHECK(mp1.p == IntPoly({0, 1, 1}));
    CHECK(mp1.q == IntPoly({1}));

    auto a2 = make_algebraic(IntPoly({-2, 1, 1, 1}));  // x^3 + x^2 + x - 2
    MinimalPair mp2 = minimal_pair(*a2);
    CHECK(mp2.p == IntPoly({0, 1, 1, 1}));
    CHECK(mp2.q == IntPoly({2}));

    auto a3 = make_algebraic(IntPoly({-7, 1}));  // x - 7
    MinimalPair mp3 = minimal_pair(*a3);
    CHECK(mp3.p == IntPoly({0, 1}));
    CHECK(mp3.q == IntPoly({7}));

    // support disjointness and the degree drop hold by construction
    for (const auto& mp : {mp1, mp2, mp3}) {
        for (int e : support(mp.q)) CHECK(support(mp.p).count(e) == 0);
        CHECK(mp.p.degree() > mp.q.degree());
    }
}

TEST_CASE("minimal pair does not depend on the chosen root") {
    auto big = make_algebraic(IntPoly({1, -3, 1}), RootChoice::largest());
    auto small = make_algebraic(IntPoly({1, -3, 1}), RootChoice::smallest());
    MinimalPair m1 = minimal_pair(*big), m2 = minimal_pair(*small);
    CHECK(m1.p == m2.p);
    CHECK(m1.q == m2.q);
    CHECK(m1.scale == m2.scale);
}

TEST_CASE("element reduction") {
    auto golden = make_algebraic(IntPoly({-1, -1, 1}));  // x^2 - x - 1
    QAlphaElem sq = elem_from_intpoly(golden, IntPoly({0, 0, 1}));
    CHECK(sq.coords() == std::vector<Rat>{Rat(1), Rat(1)});  // a^2 = 1 + a

    QAlphaElem zero = elem_from_intpoly(golden, IntPoly());
    CHECK(zero.is_zero());

    auto fam = make_algebraic(IntPoly({-5, 1, 3}));  // 3x^2 + x - 5
    QAlphaElem sq2 = elem_from_intpoly(fam, IntPoly({0, 0, 1}));
    CHECK(sq2.coords() == std::vector<Rat>{make_rat(5, 3), make_rat(-1, 3)});
}

TEST_CASE("element arithmetic") {
    auto golden = make_algebraic(IntPoly({-1, -1, 1}));
    QAlphaElem x = elem_from_intpoly(golden, IntPoly({3, 2}));
    CHECK((x - x).is_zero());
    CHECK(elem_one(golden).mul_by_power(2).coords() == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(x.scaled(Int(0)).is_zero());

    auto other = make_algebraic(IntPoly({-2, 0, 1}));
    CHECK_THROWS_AS((void)(x - elem_one(other)), mixed_field_error);
}

TEST_CASE("element sign and comparison") {
    auto golden2 = make_algebraic(IntPoly({1, -3, 1}), RootChoice::largest());  // (3+sqrt5)/2
    QAlphaElem am1 = elem_power(golden2, 1) - elem_one(golden2);
    CHECK(elem_sign(am1) == 1);

    auto small = make_algebraic(IntPoly({-2, 2, 1}));  // sqrt3 - 1
    CHECK(elem_sign(elem_power(small, 1) - elem_one(small)) == -1);

    CHECK(elem_sign(elem_zero(small)) == 0);

    CHECK(elem_compare(elem_power(golden2, 2), elem_power(golden2, 1)) ==
          std::strong_ordering::greater);
    CHECK(elem_compare(elem_power(small, 2), elem_power(small, 1)) ==
          std::strong_ordering::less);
    QAlphaElem y = elem_from_intpoly(small, IntPoly({1, 5}));
    CHECK(elem_compare(y, y) == std::strong_ordering::equal);
}

TEST_CASE("reduction soundness on random polynomials") {
    auto a = make_algebraic(IntPoly({-2, 1, 1, 1}));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Int> cs;
        int d = static_cast<int>(rng() % 10);
        for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
        IntPoly f{std::move(cs)};
        QAlphaElem reduced = elem_from_intpoly(a, f);
        // rebuild sum coords[j] * alpha^j and compare
        QAlphaElem rebuilt = elem_zero(a);
        for (int j = 0; j < a->degree(); ++j)
            rebuilt = rebuilt + elem_power(a, j).scaled(reduced.coords()[j]);
        CHECK((reduced - rebuilt).is_zero());
        CHECK(elem_sign(reduced - rebuilt) == 0);
    }
}

TEST_CASE("sign is stable under refinement of the root interval") {
    auto a = make_algebraic(IntPoly({-2, 2, 1}));
    QAlphaElem v = elem_from_intpoly(a, IntPoly({-3, 0, 4}));
    int s = elem_sign(v);
    Interval finer = refine(a->min_poly(), a->work_interval(), make_rat(1, Int(1) << 40));
    auto [lo, hi] = elem_value_bounds(v, finer);
    if (s > 0) CHECK(lo > 0);
    if (s < 0) CHECK(hi < 0);
}

TEST_CASE("floor_ratio") {
    auto a = make_algebraic(IntPoly({-1, -1, 1}));  // golden ratio
    QAlphaElem r = elem_from_intpoly(a, IntPoly({3}));
    CHECK(floor_ratio(r, elem_one(a)) == 3);
    CHECK(floor_ratio(r, elem_power(a, 1)) == 1);  // 3 / 1.618 = 1.85
    CHECK(floor_ratio(elem_zero(a), elem_one(a)) == 0);
}
