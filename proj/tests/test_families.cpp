#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "valuate/families.hpp"

using namespace valuate;

TEST_CASE("eisenstein family instances") {
    FamilyInstance a = eisenstein_family(2, make_rat(2, 3));
    CHECK(a.poly == IntPoly({-2, 0, 3}));
    CHECK(a.expected.atomic == Tri::Yes);
    CHECK(a.expected.accp == Tri::No);
    CHECK(a.expected.rank == 2);

    FamilyInstance b = eisenstein_family(1, make_rat(2, 3));
    CHECK(b.poly == IntPoly({-2, 3}));

    FamilyInstance c = eisenstein_family(3, make_rat(2, 5));
    CHECK(c.poly == IntPoly({-2, 0, 0, 5}));

    CHECK_THROWS_AS(eisenstein_family(0, make_rat(2, 3)), bad_params);
    CHECK_THROWS_AS(eisenstein_family(2, make_rat(3, 2)), bad_params);   // q > 1
    CHECK_THROWS_AS(eisenstein_family(2, make_rat(1, 3)), bad_params);   // numerator 1
    CHECK_THROWS_AS(eisenstein_family(2, make_rat(4, 5)), bad_params);   // 4 not squarefree
}

TEST_CASE("ffm-not-fgm family instances") {
    FamilyInstance a = ffm_not_fgm_family(2, 5);
    CHECK(a.poly == IntPoly({-5, 1, 3}));
    CHECK(a.expected.ffm == Tri::Yes);
    CHECK(a.expected.fgm == Tri::No);

    FamilyInstance b = ffm_not_fgm_family(3, 7);
    CHECK(b.poly == IntPoly({-7, 1, 0, 5}));

    CHECK_THROWS_AS(ffm_not_fgm_family(2, 4), bad_params);
    CHECK_THROWS_AS(ffm_not_fgm_family(2, 3), bad_params);  // p >= 5 required
    CHECK_THROWS_AS(ffm_not_fgm_family(1, 5), bad_params);
}

TEST_CASE("ohfm family instances") {
    FamilyInstance a = ohfm_family(3, 2);
    CHECK(a.poly == IntPoly({-2, 2, -2, 1}));
    CHECK(a.expected.sigma == 4);

    FamilyInstance b = ohfm_family(4, 3);
    CHECK(b.poly == IntPoly({-3, -3, 3, -3, 1}));  // x^4 - 3x^3 + 3x^2 - 3x - 3

    FamilyInstance c = ohfm_family(3, 5);
    CHECK(c.poly == IntPoly({-5, 5, -5, 1}));

    CHECK_THROWS_AS(ohfm_family(2, 2), bad_params);
    CHECK_THROWS_AS(ohfm_family(3, 4), bad_params);
}

TEST_CASE("fgm-not-ohfm family instances") {
    FamilyInstance a = fgm_not_ohfm_family(4, 2);
    CHECK(a.poly == IntPoly({-2, -2, 4, -6, 1}));
    CHECK(a.expected.sigma == 6);

    FamilyInstance b = fgm_not_ohfm_family(5, 2);
    CHECK(b.poly == IntPoly({-2, -2, -2, 4, -6, 1}));  // x^5 - 6x^4 + 4x^3 - 2x^2 - 2x - 2

    CHECK_THROWS_AS(fgm_not_ohfm_family(3, 2), bad_params);  // the family needs d >= 4
}

TEST_CASE("every instance is irreducible") {
    std::vector<FamilyInstance> all = {
        eisenstein_family(1, make_rat(2, 3)), eisenstein_family(3, make_rat(2, 5)),
        ffm_not_fgm_family(2, 5),             ffm_not_fgm_family(3, 7),
        ohfm_family(3, 2),                    ohfm_family(4, 3),
        fgm_not_ohfm_family(4, 2),            fgm_not_ohfm_family(5, 3),
        ufm_baseline_family(2, 1),            ufm_baseline_family(3, 2),
    };
    for (const auto& inst : all) {
        INFO(inst.family << " " << to_string(inst.poly));
        CHECK(is_irreducible(inst.poly));
        CHECK_FALSE(inst.irreducibility.empty());
    }
}

TEST_CASE("distinct parameters give non-isomorphic monoids") {
    FamilyInstance a = ohfm_family(3, 2), b = ohfm_family(3, 3), c = ohfm_family(4, 2);
    CHECK_FALSE(a.poly == b.poly);
    CHECK_FALSE(a.poly == c.poly);
    ValuationMonoid Ma(make_algebraic(a.poly)), Mb(make_algebraic(b.poly));
    CHECK_FALSE(isomorphic(Ma, Mb));
}

TEST_CASE("expected fields match the classification (spot checks)") {
    for (const auto& inst : {eisenstein_family(2, make_rat(2, 3)), ohfm_family(3, 2),
                             ffm_not_fgm_family(2, 5), fgm_not_ohfm_family(4, 2),
                             ufm_baseline_family(2, 1)}) {
        ValuationMonoid M(make_algebraic(inst.poly));
        Verdict v = classify(M);
        SigmaResult s = sigma(M);
        INFO(inst.family << " " << to_string(inst.poly));
        CHECK(check_expected(inst, v, s).empty());
    }
}

TEST_CASE("ufm baseline covers the golden ratio") {
    FamilyInstance g = ufm_baseline_family(2, 1);
    CHECK(g.poly == IntPoly({-1, -1, 1}));
    CHECK(g.expected.sigma == 2);
}

TEST_CASE("survey reports the observed gaps") {
    GapReport r = survey_gap(2, 4, 2, 3, SearchCaps{}, 2);
    CHECK(r.achieved_gaps.count(0) == 1);  // ufm baselines
    CHECK(r.achieved_gaps.count(1) == 1);  // ohfm members
    CHECK(r.achieved_gaps.count(2) == 1);  // fgm-not-ohfm members
    for (const auto& o : r.observations) {
        if (o.inst.family == "ufm_baseline" && o.gap) CHECK(*o.gap == 0);
        if (o.inst.family == "ohfm" && o.gap) CHECK(*o.gap == 1);
        if (o.inst.family == "fgm_not_ohfm" && o.gap) CHECK(*o.gap == 2);
        if (o.inst.family == "eisenstein")
            CHECK(o.sigma_result.kind == SigmaResult::Kind::Infinite);
        if (o.inst.family == "ffm_not_fgm")
            CHECK(o.sigma_result.kind == SigmaResult::Kind::Infinite);
    }
}
