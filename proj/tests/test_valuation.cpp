#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "valuate/families.hpp"
#include "valuate/valuation.hpp"

using namespace valuate;

namespace {

ValuationMonoid monoid(const IntPoly& m) { return ValuationMonoid(make_algebraic(m)); }

const IntPoly kGolden({-1, -1, 1});        // x^2 - x - 1
const IntPoly kAntimatter({-1, 1, 1});     // x^2 + x - 1
const IntPoly kChainExample({-2, 1, 1, 1});  // x^3 + x^2 + x - 2
const IntPoly kTwoThirds({-2, 3});         // 3x - 2
const IntPoly kThreeHalves({-3, 2});       // 2x - 3
const IntPoly kSqrt3Minus1({-2, 2, 1});    // x^2 + 2x - 2
const IntPoly kOhfm32({-2, 2, -2, 1});     // x^3 - 2x^2 + 2x - 2

}  // namespace

TEST_CASE("power membership on the worked examples") {
    ValuationMonoid g = monoid(kGolden);
    Membership m2 = power_membership(g, 2);
    CHECK(m2.yes);
    CHECK(m2.witness == std::vector<Int>{1, 1});  // a^2 = 1 + a
    CHECK_FALSE(power_membership(g, 1).yes);

    ValuationMonoid q32 = monoid(kThreeHalves);
    for (int n = 1; n <= 12; ++n) CHECK_FALSE(power_membership(q32, n).yes);

    ValuationMonoid one = monoid(IntPoly({-1, 1}));
    Membership m1 = power_membership(one, 1);
    CHECK(m1.yes);
    CHECK(m1.witness == std::vector<Int>{1});
}

TEST_CASE("power membership equals naive enumeration on small monoids") {
    // Naive oracle: full coefficient boxes bounded by powers of a root
    // upper bound, compared by exact element equality.
    auto naive = [](const ValuationMonoid& M, int n) {
        Rat ub = M.alpha()->work_interval().hi;
        std::vector<Int> box(n);
        Rat p(1);
        for (int j = n - 1; j >= 0; --j) {
            p = 1;
            for (int t = 0; t < n - j; ++t) p *= ub;
            box[j] = ceil_rat(p);
        }
        QAlphaElem target = elem_power(M.alpha(), n);
        std::vector<QAlphaElem> pw;
        for (int j = 0; j < n; ++j) pw.push_back(elem_power(M.alpha(), j));
        std::vector<Int> c(n, Int(0));
        while (true) {
            QAlphaElem acc = elem_zero(M.alpha());
            for (int j = 0; j < n; ++j)
                if (c[j] != 0) acc = acc + pw[j].scaled(c[j]);
            if ((acc - target).is_zero()) return true;
            int pos = 0;
            while (pos < n) {
                ++c[pos];
                if (c[pos] <= box[pos]) break;
                c[pos] = 0;
                ++pos;
            }
            if (pos == n) return false;
        }
    };

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coeff(-5, 5);
    int sampled = 0;
    while (sampled < 12) {
        std::vector<Int> cs;
        int d = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < d; ++i) cs.emplace_back(coeff(rng));
        cs.emplace_back(1 + static_cast<long>(rng() % 3));
        IntPoly f{std::move(cs)};
        try {
            if (!is_irreducible(f)) continue;
            auto a = make_algebraic(f);
            if (a->work_interval().hi > make_rat(7, 4)) continue;  // keep the oracle cheap
            ValuationMonoid M(a);
            for (int n = 1; n <= 5; ++n)
                CHECK(power_membership(M, n).yes == naive(M, n));
            ++sampled;
        } catch (const no_positive_root&) {
            continue;
        }
    }
}

TEST_CASE("sigma") {
    SigmaResult g = sigma(monoid(kGolden));
    REQUIRE(g.kind == SigmaResult::Kind::Finite);
    CHECK(g.sigma == 2);
    CHECK(g.witness == std::vector<Int>{1, 1});

    SigmaResult o = sigma(monoid(kOhfm32));
    REQUIRE(o.kind == SigmaResult::Kind::Finite);
    CHECK(o.sigma == 4);

    SigmaResult e = sigma(monoid(IntPoly({-2, 0, 3})));  // 3x^2 - 2, root sqrt(2/3) < 1
    CHECK(e.kind == SigmaResult::Kind::Infinite);

    // scale != 1 forces sigma infinite (atoms are all powers)
    SigmaResult q = sigma(monoid(kThreeHalves));
    CHECK(q.kind == SigmaResult::Kind::Infinite);

    // two positive roots force sigma infinite as well
    SigmaResult two = sigma(monoid(IntPoly({1, -3, 1})));
    CHECK(two.kind == SigmaResult::Kind::Infinite);
}

TEST_CASE("sigma witnesses are minimal") {
    for (const IntPoly* m : {&kGolden, &kOhfm32}) {
        ValuationMonoid M = monoid(*m);
        SigmaResult s = sigma(M);
        REQUIRE(s.kind == SigmaResult::Kind::Finite);
        for (int n = 1; n < s.sigma; ++n) CHECK_FALSE(power_membership(M, n).yes);
    }
}

TEST_CASE("atomicity ladder") {
    auto [anti, anti_cert] = atomicity(monoid(kAntimatter));
    CHECK(anti == Tri::No);
    auto* w = std::get_if<AntimatterWitnessCert>(&anti_cert);
    REQUIRE(w != nullptr);
    CHECK(w->coeffs == std::vector<Int>{1, 1});  // 1 = a + a^2

    auto [chain_atomic, c_cert] = atomicity(monoid(kChainExample));
    CHECK(chain_atomic == Tri::Yes);
    CHECK(std::holds_alternative<ConstantTermCert>(c_cert));

    auto [incr, i_cert] = atomicity(monoid(IntPoly({1, -3, 1})));
    CHECK(incr == Tri::Yes);
    CHECK(std::holds_alternative<AxiomCert>(i_cert));  // canonical root 2.618 >= 1

    // x^3 + x^2 - 1: root 0.7549, |m(0)| = 1, single positive root, but the
    // reversed relation 1 = a^2 + a^3 is an antimatter witness
    auto [anti2, cert2] = atomicity(monoid(IntPoly({-1, 0, 1, 1})));
    CHECK(anti2 == Tri::No);
    CHECK(std::holds_alternative<AntimatterWitnessCert>(cert2));
}

TEST_CASE("accp ladder") {
    // rational 2/3: the necessary-condition scan hits k = 1 with witness x
    auto [v23, c23] = accp_status(monoid(kTwoThirds));
    CHECK(v23 == Tri::No);
    auto* nc = std::get_if<NecessaryConditionCert>(&c23);
    REQUIRE(nc != nullptr);
    CHECK(nc->k == 1);
    CHECK(nc->witness == IntPoly({0, 1}));

    // x^3 + x^2 + x - 2: scan finds nothing, the chain construction decides
    ValuationMonoid chain_m = monoid(kChainExample);
    CHECK_FALSE(accp_necessary_condition_witness(chain_m).has_value());
    auto [vc, cc] = accp_status(chain_m);
    CHECK(vc == Tri::No);
    REQUIRE(std::holds_alternative<ChainWitnessCert>(cc));
    CHECK(verify_certificate(chain_m, "accp", cc));

    // golden ratio: increasingly generated
    auto [vg, cg] = accp_status(monoid(kGolden));
    CHECK(vg == Tri::Yes);
    CHECK(std::holds_alternative<AxiomCert>(cg));

    // sqrt3 - 1: scan hits k = 1 with witness x^2
    auto [vs, cs] = accp_status(monoid(kSqrt3Minus1));
    CHECK(vs == Tri::No);
    auto* nc2 = std::get_if<NecessaryConditionCert>(&cs);
    REQUIRE(nc2 != nullptr);
    CHECK(nc2->k == 1);
    CHECK(nc2->witness == IntPoly({0, 0, 1}));
}

TEST_CASE("the published chain for x^3 + x^2 + x - 2 descends by alpha^n") {
    // x_n = a^{n+2} + 2 a^{n+1} + 3 a^n satisfies x_n = x_{n+1} + a^n
    auto a = make_algebraic(kChainExample);
    for (int n = 1; n <= 10; ++n) {
        auto x_at = [&](int t) {
            std::vector<Int> c(t + 3, Int(0));
            c[t] = 3;
            c[t + 1] = 2;
            c[t + 2] = 1;
            return elem_from_intpoly(a, IntPoly(std::move(c)));
        };
        QAlphaElem diff = x_at(n) - x_at(n + 1);
        CHECK((diff - elem_power(a, n)).is_zero());
    }
}

TEST_CASE("fgm ladder") {
    auto [v32, c32] = fgm_status(monoid(kThreeHalves));
    CHECK(v32 == Tri::No);
    CHECK(std::holds_alternative<QuickRejectCert>(c32));

    auto [vo, co] = fgm_status(monoid(kOhfm32));
    CHECK(vo == Tri::Yes);
    auto* sw = std::get_if<SigmaWitnessCert>(&co);
    REQUIRE(sw != nullptr);
    CHECK(sw->sigma == 4);

    auto [vs, cs] = fgm_status(monoid(kSqrt3Minus1));
    CHECK(vs == Tri::No);
    (void)cs;
}

TEST_CASE("rank-2 refinement") {
    auto [v1, c1] = fgm_refine_quadratic(monoid(kSqrt3Minus1));
    CHECK(v1 == Tri::No);  // p = x^2 + 2x != x^2
    CHECK(std::holds_alternative<MinimalPairCert>(c1));

    auto [v2, c2] = fgm_refine_quadratic(monoid(kGolden));
    CHECK(v2 == Tri::Yes);
    (void)c2;

    // x^2 - 3x + 1 has p = x^2 + 1 != x^2, hence not a UFM, hence (rank 2)
    // not an FGM; the sigma scan to a small cap confirms no decomposition.
    ValuationMonoid two = monoid(IntPoly({1, -3, 1}));
    auto [v3, c3] = fgm_refine_quadratic(two);
    CHECK(v3 == Tri::No);
    (void)c3;
    for (int n = 1; n <= 12; ++n) CHECK_FALSE(power_membership(two, n).yes);

    CHECK_THROWS_AS(fgm_refine_quadratic(monoid(kChainExample)), not_applicable);
}

TEST_CASE("ufm and hfm") {
    auto [vg, cg] = ufm_hfm_test(monoid(kGolden));
    CHECK(vg == Tri::Yes);
    auto* mp = std::get_if<MinimalPairCert>(&cg);
    REQUIRE(mp != nullptr);
    CHECK(mp->is_pure_power);

    auto [v1, c1] = ufm_hfm_test(monoid(IntPoly({-1, 1})));  // alpha = 1, N0 itself
    CHECK(v1 == Tri::Yes);
    (void)c1;

    auto [v32, c32] = ufm_hfm_test(monoid(kThreeHalves));  // p = 2x is not a pure power
    CHECK(v32 == Tri::No);
    (void)c32;
}

TEST_CASE("ohfm") {
    auto [vo, co] = ohfm_status(monoid(kOhfm32));
    CHECK(vo == Tri::Yes);
    auto* sw = std::get_if<SigmaWitnessCert>(&co);
    REQUIRE(sw != nullptr);
    CHECK(sw->sigma == 4);  // proper: sigma = d + 1

    // d=4, p=2 member of the FGM-not-OHFM family: sigma = 6 = d + 2
    ValuationMonoid f = monoid(IntPoly({-2, -2, 4, -6, 1}));
    auto [vf, cf] = ohfm_status(f);
    CHECK(vf == Tri::No);
    (void)cf;
    CHECK_FALSE(power_membership(f, 5).yes);
    CHECK(power_membership(f, 6).yes);

    auto [vg, cg] = ohfm_status(monoid(kGolden));
    CHECK(vg == Tri::Yes);  // UFMs are OHFMs
    (void)cg;
}

TEST_CASE("atom sets") {
    AtomSet g = atoms(monoid(kGolden));
    CHECK(g == AtomSet{AtomSet::Kind::FinitePowers, 1});  // {1, a}

    AtomSet q = atoms(monoid(kThreeHalves));
    CHECK(q.kind == AtomSet::Kind::AllPowers);

    AtomSet anti = atoms(monoid(kAntimatter));
    CHECK(anti.kind == AtomSet::Kind::Empty);
}

TEST_CASE("classify on the paper corpus") {
    Verdict anti = classify(monoid(kAntimatter));
    CHECK(anti.atomic == Tri::No);
    for (Tri t : {anti.accp, anti.bfm, anti.ffm, anti.fgm, anti.ufm, anti.hfm, anti.ohfm})
        CHECK(t == Tri::No);
    CHECK(anti.atoms.kind == AtomSet::Kind::Empty);
    CHECK(anti.rank == 2);

    Verdict chain = classify(monoid(kChainExample));
    CHECK(chain.atomic == Tri::Yes);
    CHECK(chain.accp == Tri::No);
    CHECK(chain.bfm == Tri::No);
    CHECK(chain.ffm == Tri::No);
    CHECK(chain.fgm == Tri::No);
    CHECK(chain.ufm == Tri::No);
    CHECK(chain.hfm == Tri::No);
    CHECK(chain.ohfm == Tri::No);
    CHECK(chain.rank == 3);

    Verdict golden = classify(monoid(kGolden));
    for (Tri t : {golden.atomic, golden.accp, golden.bfm, golden.ffm, golden.fgm, golden.ufm,
                  golden.hfm, golden.ohfm})
        CHECK(t == Tri::Yes);
    CHECK(golden.atoms == AtomSet{AtomSet::Kind::FinitePowers, 1});
    CHECK(golden.rank == 2);
}

TEST_CASE("isomorphism") {
    ValuationMonoid big(make_algebraic(IntPoly({1, -3, 1}), RootChoice::largest()));
    ValuationMonoid small(make_algebraic(IntPoly({1, -3, 1}), RootChoice::smallest()));
    CHECK(isomorphic(big, small));

    CHECK_FALSE(isomorphic(monoid(kThreeHalves), monoid(IntPoly({-5, 2}))));
    CHECK(isomorphic(monoid(IntPoly({-2, 1})), monoid(IntPoly({-3, 1}))));  // both are N0

    CHECK_THROWS_AS(isomorphic(monoid(kAntimatter), monoid(kGolden)), requires_atomic);
}

TEST_CASE("group check") {
    GroupCheckResult r1 = group_check(IntPoly({1, 1, 1}));
    CHECK(r1.is_group);
    CHECK(r1.certificate->multiplier == IntPoly({1}));

    GroupCheckResult r2 = group_check(IntPoly({1, -1, 1}));
    CHECK(r2.is_group);
    CHECK(r2.certificate->multiplier == IntPoly({1, 1}));
    CHECK(r2.certificate->product == IntPoly({1, 0, 0, 1}));

    GroupCheckResult r3 = group_check(kGolden);
    CHECK_FALSE(r3.is_group);

    CHECK_THROWS_AS(group_check(IntPoly({-1, 0, 1})), not_irreducible);
}

TEST_CASE("certificates replay") {
    for (const IntPoly* m : {&kGolden, &kAntimatter, &kChainExample, &kTwoThirds, &kThreeHalves,
                             &kSqrt3Minus1, &kOhfm32}) {
        ValuationMonoid M = monoid(*m);
        Verdict v = classify(M);
        for (const auto& [prop, cert] : v.certificates) {
            INFO(to_string(*m) << " / " << prop);
            CHECK(verify_certificate(M, prop, cert));
        }
    }
}

TEST_CASE("conjugate choice does not change the verdict") {
    for (int index : {0, 1}) {
        ValuationMonoid M(make_algebraic(IntPoly({1, -3, 1}), RootChoice::at(index)));
        Verdict v = classify(M);
        CHECK(v.atomic == Tri::Yes);
        CHECK(v.accp == Tri::Yes);
        CHECK(v.fgm == Tri::No);
        CHECK(v.ufm == Tri::No);
        CHECK(v.ohfm == Tri::No);
        CHECK(v.atoms.kind == AtomSet::Kind::AllPowers);
    }
}

TEST_CASE("verdict validation catches inconsistencies") {
    Verdict v;
    v.rank = 2;
    v.atomic = Tri::No;
    v.accp = Tri::Yes;
    v.bfm = v.ffm = Tri::Yes;
    v.fgm = v.ufm = v.hfm = v.ohfm = Tri::No;
    CHECK_THROWS_AS(v.validate(), inconsistent_verdict);
}
