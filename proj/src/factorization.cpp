#include "valuate/factorization.hpp"

#include <algorithm>

namespace valuate {

namespace {

struct Enumerator {
    const ValuationMonoid& M;
    AlgebraicPtr a;
    int max_exp;  // highest atom exponent considered
    std::vector<QAlphaElem> alpha_pow;
    std::vector<Int> coeffs;
    std::vector<Factorization> out;

    Enumerator(const ValuationMonoid& M_, int max_exp_) : M(M_), a(M_.alpha()), max_exp(max_exp_) {
        alpha_pow.reserve(max_exp + 1);
        alpha_pow.push_back(elem_one(a));
        for (int i = 1; i <= max_exp; ++i) alpha_pow.push_back(alpha_pow.back().mul_by_power(1));
        coeffs.assign(max_exp + 1, Int(0));
    }

    void emit() {
        IntPoly z{std::vector<Int>(coeffs)};
        out.push_back({z, eval(z, Int(1))});
    }

    // Exponents descend; residual stays >= 0 and must hit 0 exactly.
    void descend(int e, const QAlphaElem& r) {
        if (r.is_zero()) {
            for (int j = 0; j <= e; ++j) coeffs[j] = 0;
            emit();
            return;
        }
        if (e < 0) return;
        Int cmax = floor_ratio(r, alpha_pow[e]);
        for (Int c = cmax; c >= 0; --c) {
            coeffs[e] = c;
            descend(e - 1, r - alpha_pow[e].scaled(c));
        }
        coeffs[e] = 0;
    }
};

}  // namespace

FactorizationSet enumerate_factorizations(const ValuationMonoid& M, const IntPoly& x,
                                          int exponent_cap) {
    for (const auto& c : x.coeffs())
        if (c < 0) throw invalid_input("element must have nonnegative coefficients");
    AtomSet A = atoms(M);
    if (A.kind == AtomSet::Kind::Unknown)
        throw requires_atoms("atom set undetermined within the configured caps");
    if (A.kind == AtomSet::Kind::Empty)
        throw no_factorizations("antimatter monoid: no element factors into atoms");

    FactorizationSet result;
    QAlphaElem target = elem_from_intpoly(M.alpha(), x);

    int max_exp;
    if (A.kind == AtomSet::Kind::FinitePowers) {
        max_exp = A.up_to;
        result.complete = true;
    } else if (M.cmp_one() > 0) {
        // All powers are atoms but alpha^e > x(alpha) rules out exponents
        // beyond the least such e; enumeration stays complete.
        max_exp = 0;
        QAlphaElem pw = elem_one(M.alpha());
        while (elem_sign(target - pw) >= 0) {
            pw = pw.mul_by_power(1);
            ++max_exp;
        }
        max_exp = std::max(0, max_exp - 1);
        result.complete = true;
    } else {
        max_exp = exponent_cap;
        result.complete = false;
        result.exponent_cap_used = exponent_cap;
    }

    Enumerator en(M, max_exp);
    en.descend(max_exp, target);
    std::sort(en.out.begin(), en.out.end(), [](const Factorization& f, const Factorization& g) {
        return f.z.coeffs() < g.z.coeffs();
    });
    result.items = std::move(en.out);
    return result;
}

LengthSet length_set(const ValuationMonoid& M, const IntPoly& x, int exponent_cap) {
    FactorizationSet zs = enumerate_factorizations(M, x, exponent_cap);
    LengthSet out;
    out.complete = zs.complete;
    out.lengths.reserve(zs.items.size());
    for (const auto& f : zs.items) out.lengths.push_back(f.length);
    std::sort(out.lengths.begin(), out.lengths.end());
    out.lengths.erase(std::unique(out.lengths.begin(), out.lengths.end()), out.lengths.end());
    return out;
}

ArithProgression is_arith_progression(const std::vector<Int>& sorted_lengths) {
    if (sorted_lengths.empty()) throw empty_input("length set is empty");
    if (sorted_lengths.size() == 1) return {true, std::nullopt};
    Int diff = sorted_lengths[1] - sorted_lengths[0];
    for (std::size_t i = 2; i < sorted_lengths.size(); ++i)
        if (sorted_lengths[i] - sorted_lengths[i - 1] != diff) return {false, std::nullopt};
    return {true, diff};
}

}  // namespace valuate
