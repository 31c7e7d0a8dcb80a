#pragma once

#include <set>

#include "valuate/valuation.hpp"

namespace valuate {

// Fields a cited result pins for a family member; everything else is left
// to the engine.
struct ExpectedVerdict {
    std::optional<Tri> atomic, accp, ffm, fgm, ufm, hfm, ohfm;
    std::optional<int> sigma;
    int rank = 0;
};

struct FamilyInstance {
    std::string family;
    int d = 0;
    Rat param;  // q for the eisenstein family, p otherwise
    IntPoly poly;
    ExpectedVerdict expected;
    std::string irreducibility;  // "eisenstein(p)" or "verified"
};

// x^d - q primitivized; atomic without the ACCP. Needs q in (0,1) with
// squarefree numerator >= 2.
FamilyInstance eisenstein_family(int d, const Rat& q);

// (p-2) x^d + x - p; an FFM that is not an FGM. Needs d >= 2 and prime p >= 5.
FamilyInstance ffm_not_fgm_family(int d, long p);

// x^d - p x^(d-1) + p x^(d-2) - p(x^(d-3) + ... + 1); a proper OHFM with
// sigma = d + 1. Needs d >= 3 and p prime.
FamilyInstance ohfm_family(int d, long p);

// x^d - 3p x^(d-1) + 2p x^(d-2) - p(x^(d-3) + ... + 1); finitely generated
// with sigma = d + 2 but not an OHFM. Needs d >= 4 and p prime.
FamilyInstance fgm_not_ohfm_family(int d, long p);

// x^d - c(x^(d-1) + ... + 1); a UFM baseline contributing gap 0 to the
// survey (c = 1, d = 2 is the golden ratio).
FamilyInstance ufm_baseline_family(int d, long c);

// Compare a classification against the instance's expected fields; returns
// the mismatching field names (empty = consistent).
std::vector<std::string> check_expected(const FamilyInstance& inst, const Verdict& v,
                                        const SigmaResult& s);

struct GapObservation {
    FamilyInstance inst;
    SigmaResult sigma_result;
    std::optional<int> gap;  // sigma - d when sigma is finite
};

/* Sweep the families over d and prime ranges, record sigma - d for every
 * member with a finite sigma, and aggregate the achieved gaps. Evidence
 * only; nothing is asserted beyond the observations. */
struct GapReport {
    std::vector<GapObservation> observations;
    std::set<int> achieved_gaps;
};
GapReport survey_gap(int d_min, int d_max, long p_min, long p_max, const SearchCaps& caps = {},
                     int jobs = 1);

bool is_prime(long n);

}  // namespace valuate
