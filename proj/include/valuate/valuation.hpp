#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "valuate/algebraic.hpp"

namespace valuate {

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

struct SearchCaps {
    int sigma_cap = 0;  // 0 means "use 2*degree + 16"
    int antimatter_deg_cap = 8;
    int antimatter_height_cap = 30;
    int curtiss_cap = 64;
    long node_budget = 500000;  // per bounded search, keeps classify desk-scale

    int effective_sigma_cap(int degree) const {
        return sigma_cap > 0 ? sigma_cap : 2 * degree + 16;
    }
};

/* sigma = least n with alpha^n a nonnegative-integer combination of lower
 * powers. Finite carries the least such n and a witness; Infinite is
 * reported only when analytically forced; NotFoundUpToCap reports the last
 * exponent up to which absence was proven. */
struct SigmaResult {
    enum class Kind { Finite, Infinite, NotFoundUpToCap };
    Kind kind;
    int sigma = 0;                  // Finite only
    std::vector<Int> witness;       // Finite only: alpha^sigma = sum w[j] alpha^j
    int cap = 0;                    // NotFoundUpToCap only
    std::string infinite_reason;    // Infinite only
};

struct AtomSet {
    enum class Kind { FinitePowers, AllPowers, Empty, Unknown };
    Kind kind = Kind::Unknown;
    int up_to = 0;  // FinitePowers: atoms are alpha^0 .. alpha^up_to
    friend bool operator==(const AtomSet&, const AtomSet&) = default;
};
std::string to_string(const AtomSet& a);

// --- certificates ------------------------------------------------------------

// alpha >= 1 branch: verdict rests on a cited external result.
struct AxiomCert {
    std::string statement;
    std::string citation;
};
// |m_alpha(0)| != 1 implies atomic.
struct ConstantTermCert {
    Rat m0;
};
// more than one positive root implies atomic.
struct TwoPositiveRootsCert {
    int count = 0;
};
// 1 = sum_{i>=1} coeffs[i-1] * alpha^i certifies antimatter.
struct AntimatterWitnessCert {
    std::vector<Int> coeffs;
};
// alpha^sigma = sum coeffs[j] * alpha^j, j < sigma.
struct SigmaWitnessCert {
    int sigma = 0;
    std::vector<Int> coeffs;
};
/* Non-stabilizing chain built from f = (1+x)^N * (scale * m_alpha) with one
 * sign variation: x_n (n > deg f) has nonnegative coefficients by the
 * partial/tail sum split at k, and x_n - x_{n+1} = f(1) * alpha^{n+1}. */
struct ChainWitnessCert {
    IntPoly f;
    int curtiss_power = 0;
    int k = 0;
    Int f_at_1;
};
// p - x^k q has nonnegative coefficients, violating the ACCP necessary
// condition.
struct NecessaryConditionCert {
    int k = 0;
    IntPoly witness;
};
// p = x^d (or not) in the minimal pair; decides UFM/HFM and rank-2 FGM.
struct MinimalPairCert {
    IntPoly p;
    bool is_pure_power = false;
};
struct QuickRejectCert {
    std::string reason;
    std::string citation;
};
// phi * m lands in N0[x] with nonzero constant term: N0[beta] is a group.
struct GroupCert {
    IntPoly multiplier;
    IntPoly product;
};
struct UnknownCert {
    std::string reason;
    long cap = 0;
};

using Certificate =
    std::variant<AxiomCert, ConstantTermCert, TwoPositiveRootsCert, AntimatterWitnessCert,
                 SigmaWitnessCert, ChainWitnessCert, NecessaryConditionCert, MinimalPairCert,
                 QuickRejectCert, GroupCert, UnknownCert>;

struct Verdict {
    int rank = 0;
    Tri atomic = Tri::Unknown;
    Tri accp = Tri::Unknown;
    Tri bfm = Tri::Unknown;
    Tri ffm = Tri::Unknown;
    Tri fgm = Tri::Unknown;
    Tri ufm = Tri::Unknown;
    Tri hfm = Tri::Unknown;
    Tri ohfm = Tri::Unknown;
    AtomSet atoms;
    std::map<std::string, Certificate> certificates;

    bool fully_determined() const;
    // Implication consistency across determined fields; throws
    // inconsistent_verdict on violation.
    void validate() const;
};

/* The monoid N0[alpha] with its search caps. Classification always works
 * with the largest positive root of the minimal polynomial; all positive
 * roots give isomorphic monoids, and the largest maximizes decidability.
 * Immutable after construction; safe to share across threads. */
class ValuationMonoid {
public:
    explicit ValuationMonoid(AlgebraicPtr alpha, SearchCaps caps = {});

    const AlgebraicPtr& alpha() const { return alpha_; }
    const AlgebraicPtr& requested_alpha() const { return requested_; }
    const SearchCaps& caps() const { return caps_; }
    const MinimalPair& pair() const { return pair_; }
    const Int& scale() const { return pair_.scale; }
    int degree() const { return alpha_->degree(); }
    int cmp_one() const { return alpha_->cmp_one(); }
    int positive_root_count() const { return positive_roots_; }

private:
    AlgebraicPtr requested_;  // as constructed by the caller
    AlgebraicPtr alpha_;      // canonical: largest positive root
    SearchCaps caps_;
    MinimalPair pair_;
    int positive_roots_ = 0;
};

struct Membership {
    bool yes = false;
    std::vector<Int> witness;  // alpha^n = sum witness[j] alpha^j when yes
};

/* Decide alpha^n in <alpha^j : j < n>, n >= 1, exactly. For alpha > 1 the
 * search runs over monic integer cofactors g with m*g supported on one
 * positive leading coefficient; node_budget (0 = unlimited) bounds the
 * search and throws cap_exhausted when hit. */
Membership power_membership(const ValuationMonoid& M, int n, long node_budget = 0);

SigmaResult sigma(const ValuationMonoid& M);

std::pair<Tri, Certificate> atomicity(const ValuationMonoid& M);
// Scan k in [0, deg p - deg q] for p - x^k q in N0[x].
std::optional<NecessaryConditionCert> accp_necessary_condition_witness(const ValuationMonoid& M);
std::pair<Tri, Certificate> accp_status(const ValuationMonoid& M);
std::pair<Tri, Certificate> fgm_status(const ValuationMonoid& M);
// Rank <= 2 only: FGM <=> UFM <=> p = x^d. Throws not_applicable for d > 2.
std::pair<Tri, Certificate> fgm_refine_quadratic(const ValuationMonoid& M);
std::pair<Tri, Certificate> ufm_hfm_test(const ValuationMonoid& M);
std::pair<Tri, Certificate> ohfm_status(const ValuationMonoid& M);
AtomSet atoms(const ValuationMonoid& M);

Verdict classify(const ValuationMonoid& M);

/* Monoid isomorphism for atomic monoids: equal primitive minimal polynomials
 * in degree >= 2; equal rationals or both equal to N0 in degree 1.
 * Throws requires_atomic unless both atomicity verdicts are Yes. */
bool isomorphic(const ValuationMonoid& M1, const ValuationMonoid& M2);

struct GroupCheckResult {
    bool is_group = false;
    std::optional<GroupCert> certificate;  // engaged when is_group
};
/* m irreducible and primitive. If m has no positive root, produces phi with
 * phi*m in N0[x] and nonzero constant term, certifying N0[beta] = Z[beta]. */
GroupCheckResult group_check(const IntPoly& m, int curtiss_cap = 64);

// Re-verify a certificate against the monoid with exact arithmetic.
bool verify_certificate(const ValuationMonoid& M, const std::string& property,
                        const Certificate& cert);
// Chain replay horizon used by verify_certificate.
inline constexpr int kChainReplayHorizon = 10;

}  // namespace valuate
