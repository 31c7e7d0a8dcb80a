#include "valuate/families.hpp"

#include <thread>

namespace valuate {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

namespace {

bool is_squarefree(Int n) {
    n = abs(n);
    if (n == 0) return false;
    for (Int p(2); p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

std::string eisenstein_tag(const IntPoly& f) {
    Int p;
    if (!eisenstein_applies(f, &p))
        throw inconsistent_verdict("family member should satisfy Eisenstein at some prime");
    return "eisenstein(" + p.get_str() + ")";
}

}  // namespace

FamilyInstance eisenstein_family(int d, const Rat& q) {
    if (d < 1) throw bad_params("eisenstein_family needs d >= 1");
    if (!(q > 0 && q < 1)) throw bad_params("eisenstein_family needs q in (0,1)");
    if (q.get_num() < 2 || !is_squarefree(q.get_num()))
        throw bad_params("eisenstein_family needs a squarefree numerator >= 2");
    RatPoly m = RatPoly::monomial(Rat(1), d) - RatPoly::monomial(q, 0);
    IntPoly poly = content_primitive(m).primitive;  // d(q) x^d - n(q)
    FamilyInstance inst;
    inst.family = "eisenstein";
    inst.d = d;
    inst.param = q;
    inst.poly = poly;
    inst.expected.atomic = Tri::Yes;
    inst.expected.accp = Tri::No;
    inst.expected.rank = d;
    inst.irreducibility = d == 1 ? "verified" : eisenstein_tag(poly);
    return inst;
}

FamilyInstance ffm_not_fgm_family(int d, long p) {
    if (d < 2) throw bad_params("ffm_not_fgm_family needs d >= 2");
    if (p < 5 || !is_prime(p)) throw bad_params("ffm_not_fgm_family needs a prime p >= 5");
    IntPoly poly = IntPoly::monomial(Int(p - 2), d) + IntPoly::x() - IntPoly::constant(Int(p));
    if (!is_irreducible(poly))
        throw inconsistent_verdict("ffm_not_fgm member should be irreducible");
    FamilyInstance inst;
    inst.family = "ffm_not_fgm";
    inst.d = d;
    inst.param = Rat(p);
    inst.poly = poly;
    inst.expected.ffm = Tri::Yes;
    inst.expected.fgm = Tri::No;
    inst.expected.hfm = Tri::No;
    inst.expected.rank = d;
    inst.irreducibility = "verified";
    return inst;
}

FamilyInstance ohfm_family(int d, long p) {
    if (d < 3) throw bad_params("ohfm_family needs d >= 3");
    if (!is_prime(p)) throw bad_params("ohfm_family needs p prime");
    std::vector<Int> c(d + 1, Int(-p));
    c[d] = 1;
    c[d - 1] = -p;
    c[d - 2] = p;
    IntPoly poly{std::move(c)};
    FamilyInstance inst;
    inst.family = "ohfm";
    inst.d = d;
    inst.param = Rat(p);
    inst.poly = poly;
    inst.expected.ohfm = Tri::Yes;
    inst.expected.ufm = Tri::No;
    inst.expected.fgm = Tri::Yes;
    inst.expected.sigma = d + 1;
    inst.expected.rank = d;
    inst.irreducibility = eisenstein_tag(poly);
    return inst;
}

FamilyInstance fgm_not_ohfm_family(int d, long p) {
    if (d < 4) throw bad_params("fgm_not_ohfm_family needs d >= 4");
    if (!is_prime(p)) throw bad_params("fgm_not_ohfm_family needs p prime");
    std::vector<Int> c(d + 1, Int(-p));
    c[d] = 1;
    c[d - 1] = Int(-3) * p;
    c[d - 2] = Int(2) * p;
    IntPoly poly{std::move(c)};
    FamilyInstance inst;
    inst.family = "fgm_not_ohfm";
    inst.d = d;
    inst.param = Rat(p);
    inst.poly = poly;
    inst.expected.fgm = Tri::Yes;
    inst.expected.ohfm = Tri::No;
    inst.expected.ufm = Tri::No;
    inst.expected.sigma = d + 2;
    inst.expected.rank = d;
    inst.irreducibility = eisenstein_tag(poly);
    return inst;
}

FamilyInstance ufm_baseline_family(int d, long c) {
    if (d < 1 || c < 1) throw bad_params("ufm_baseline_family needs d >= 1, c >= 1");
    std::vector<Int> coeffs(d + 1, Int(-c));
    coeffs[d] = 1;
    IntPoly poly{std::move(coeffs)};
    if (!is_irreducible(poly))
        throw inconsistent_verdict("ufm baseline member should be irreducible");
    FamilyInstance inst;
    inst.family = "ufm_baseline";
    inst.d = d;
    inst.param = Rat(c);
    inst.poly = poly;
    inst.expected.ufm = Tri::Yes;
    inst.expected.fgm = Tri::Yes;
    inst.expected.sigma = d;
    inst.expected.rank = d;
    inst.irreducibility = is_prime(c) && d >= 2 ? eisenstein_tag(poly) : "verified";
    return inst;
}

std::vector<std::string> check_expected(const FamilyInstance& inst, const Verdict& v,
                                        const SigmaResult& s) {
    std::vector<std::string> bad;
    auto chk = [&](const std::optional<Tri>& want, Tri got, const char* name) {
        if (want && *want != got) bad.push_back(name);
    };
    chk(inst.expected.atomic, v.atomic, "atomic");
    chk(inst.expected.accp, v.accp, "accp");
    chk(inst.expected.ffm, v.ffm, "ffm");
    chk(inst.expected.fgm, v.fgm, "fgm");
    chk(inst.expected.ufm, v.ufm, "ufm");
    chk(inst.expected.hfm, v.hfm, "hfm");
    chk(inst.expected.ohfm, v.ohfm, "ohfm");
    if (inst.expected.rank != v.rank) bad.push_back("rank");
    if (inst.expected.sigma) {
        if (s.kind != SigmaResult::Kind::Finite || s.sigma != *inst.expected.sigma)
            bad.push_back("sigma");
    }
    return bad;
}

GapReport survey_gap(int d_min, int d_max, long p_min, long p_max, const SearchCaps& caps,
                     int jobs) {
    if (d_min < 1 || d_max < d_min || p_max < p_min)
        throw bad_params("survey_gap needs nonempty desk-scale ranges");
    std::vector<FamilyInstance> instances;
    for (int d = d_min; d <= d_max; ++d)
        for (long p = p_min; p <= p_max; ++p) {
            if (!is_prime(p)) continue;
            instances.push_back(ufm_baseline_family(d, p));
            if (d >= 3) instances.push_back(ohfm_family(d, p));
            if (d >= 4) instances.push_back(fgm_not_ohfm_family(d, p));
            if (d >= 2 && p >= 5) instances.push_back(ffm_not_fgm_family(d, p));
            if (p >= 2) instances.push_back(eisenstein_family(d, make_rat(Int(p), Int(p) + 1)));
        }

    std::vector<GapObservation> obs(instances.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            ValuationMonoid M(make_algebraic(instances[i].poly), caps);
            SigmaResult s = sigma(M);
            GapObservation o{instances[i], s, std::nullopt};
            if (s.kind == SigmaResult::Kind::Finite) o.gap = s.sigma - instances[i].d;
            obs[i] = std::move(o);
        }
    };

    int n_jobs = std::max(1, jobs);
    if (n_jobs == 1 || instances.size() < 2) {
        work(0, instances.size());
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (instances.size() + n_jobs - 1) / n_jobs;
        for (int t = 0; t < n_jobs; ++t) {
            std::size_t b = t * chunk;
            std::size_t e = std::min(instances.size(), b + chunk);
            if (b >= e) break;
            threads.emplace_back(work, b, e);
        }
        for (auto& th : threads) th.join();
    }

    GapReport report;
    report.observations = std::move(obs);
    for (const auto& o : report.observations)
        if (o.gap) report.achieved_gaps.insert(*o.gap);
    return report;
}

}  // namespace valuate
