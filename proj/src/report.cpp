#include "valuate/report.hpp"

#include <sstream>

#include "valuate/parse.hpp"

namespace valuate {

namespace {

Tri tri_from_string(const std::string& s) {
    if (s == "yes") return Tri::Yes;
    if (s == "no") return Tri::No;
    if (s == "unknown") return Tri::Unknown;
    throw invalid_input("bad tri-verdict encoding: " + s);
}

json int_vector_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::vector<Int> int_vector_from_json(const json& a) {
    std::vector<Int> v;
    for (const auto& x : a) v.emplace_back(x.get<std::string>(), 10);
    return v;
}

IntPoly poly_from_string(const std::string& s) { return int_poly_from_rat(parse_poly(s)); }

// Monomial sum in the monoid generator, e.g. "3 a + 2 a^2".
std::string powers_to_string(const std::vector<Int>& coeffs, int first_exp) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        int e = first_exp + static_cast<int>(i);
        if (!first) os << " + ";
        first = false;
        if (coeffs[i] != 1 || e == 0) os << coeffs[i].get_str();
        if (e >= 1) {
            if (coeffs[i] != 1) os << " ";
            os << "a";
            if (e > 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
    return std::visit(
        [](const auto& c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, AxiomCert>) {
                return {{"type", "axiom"}, {"statement", c.statement}, {"citation", c.citation}};
            } else if constexpr (std::is_same_v<T, ConstantTermCert>) {
                return {{"type", "constant_term"}, {"m0", to_string(c.m0)}};
            } else if constexpr (std::is_same_v<T, TwoPositiveRootsCert>) {
                return {{"type", "two_positive_roots"}, {"count", c.count}};
            } else if constexpr (std::is_same_v<T, AntimatterWitnessCert>) {
                return {{"type", "antimatter_witness"}, {"coeffs", int_vector_to_json(c.coeffs)}};
            } else if constexpr (std::is_same_v<T, SigmaWitnessCert>) {
                return {{"type", "sigma_witness"},
                        {"sigma", c.sigma},
                        {"coeffs", int_vector_to_json(c.coeffs)}};
            } else if constexpr (std::is_same_v<T, ChainWitnessCert>) {
                return {{"type", "chain_witness"},
                        {"f", to_string(c.f)},
                        {"curtiss_power", c.curtiss_power},
                        {"k", c.k},
                        {"f_at_1", c.f_at_1.get_str()}};
            } else if constexpr (std::is_same_v<T, NecessaryConditionCert>) {
                return {{"type", "necessary_condition"},
                        {"k", c.k},
                        {"witness", to_string(c.witness)}};
            } else if constexpr (std::is_same_v<T, MinimalPairCert>) {
                return {{"type", "minimal_pair"},
                        {"p", to_string(c.p)},
                        {"is_pure_power", c.is_pure_power}};
            } else if constexpr (std::is_same_v<T, QuickRejectCert>) {
                return {{"type", "quick_reject"}, {"reason", c.reason}, {"citation", c.citation}};
            } else if constexpr (std::is_same_v<T, GroupCert>) {
                return {{"type", "group_multiplier"},
                        {"multiplier", to_string(c.multiplier)},
                        {"product", to_string(c.product)}};
            } else {
                static_assert(std::is_same_v<T, UnknownCert>);
                return {{"type", "unknown"}, {"reason", c.reason}, {"cap", c.cap}};
            }
        },
        cert);
}

Certificate certificate_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "axiom")
        return AxiomCert{j.at("statement").get<std::string>(), j.at("citation").get<std::string>()};
    if (type == "constant_term") {
        Rat m0(j.at("m0").get<std::string>());
        m0.canonicalize();
        return ConstantTermCert{m0};
    }
    if (type == "two_positive_roots") return TwoPositiveRootsCert{j.at("count").get<int>()};
    if (type == "antimatter_witness")
        return AntimatterWitnessCert{int_vector_from_json(j.at("coeffs"))};
    if (type == "sigma_witness")
        return SigmaWitnessCert{j.at("sigma").get<int>(), int_vector_from_json(j.at("coeffs"))};
    if (type == "chain_witness")
        return ChainWitnessCert{poly_from_string(j.at("f").get<std::string>()),
                                j.at("curtiss_power").get<int>(), j.at("k").get<int>(),
                                Int(j.at("f_at_1").get<std::string>(), 10)};
    if (type == "necessary_condition")
        return NecessaryConditionCert{j.at("k").get<int>(),
                                      poly_from_string(j.at("witness").get<std::string>())};
    if (type == "minimal_pair")
        return MinimalPairCert{poly_from_string(j.at("p").get<std::string>()),
                               j.at("is_pure_power").get<bool>()};
    if (type == "quick_reject")
        return QuickRejectCert{j.at("reason").get<std::string>(),
                               j.at("citation").get<std::string>()};
    if (type == "group_multiplier")
        return GroupCert{poly_from_string(j.at("multiplier").get<std::string>()),
                         poly_from_string(j.at("product").get<std::string>())};
    if (type == "unknown")
        return UnknownCert{j.at("reason").get<std::string>(), j.at("cap").get<long>()};
    throw invalid_input("unknown certificate type: " + type);
}

std::string describe_certificate(const Certificate& cert) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, AxiomCert>) {
                return c.statement + " " + c.citation;
            } else if constexpr (std::is_same_v<T, ConstantTermCert>) {
                return "|m(0)| = |" + to_string(c.m0) + "| != 1";
            } else if constexpr (std::is_same_v<T, TwoPositiveRootsCert>) {
                return "minimal polynomial has " + std::to_string(c.count) + " positive roots";
            } else if constexpr (std::is_same_v<T, AntimatterWitnessCert>) {
                return "1 = " + powers_to_string(c.coeffs, 1);
            } else if constexpr (std::is_same_v<T, SigmaWitnessCert>) {
                return "a^" + std::to_string(c.sigma) + " = " + powers_to_string(c.coeffs, 0) +
                       "  (sigma = " + std::to_string(c.sigma) + ")";
            } else if constexpr (std::is_same_v<T, ChainWitnessCert>) {
                return "chain from f = " + to_string(c.f) + " (= (1+x)^" +
                       std::to_string(c.curtiss_power) + " * l*m), k = " + std::to_string(c.k) +
                       ", x_n - x_{n+1} = " + c.f_at_1.get_str() + " a^{n+1}";
            } else if constexpr (std::is_same_v<T, NecessaryConditionCert>) {
                return "p - x^" + std::to_string(c.k) + " q = " + to_string(c.witness) +
                       " has nonnegative coefficients";
            } else if constexpr (std::is_same_v<T, MinimalPairCert>) {
                return std::string("minimal pair has p = ") + to_string(c.p) +
                       (c.is_pure_power ? " = x^d" : " != x^d");
            } else if constexpr (std::is_same_v<T, QuickRejectCert>) {
                return c.reason + " (" + c.citation + ")";
            } else if constexpr (std::is_same_v<T, GroupCert>) {
                return "phi = " + to_string(c.multiplier) + ", phi*m = " + to_string(c.product);
            } else {
                static_assert(std::is_same_v<T, UnknownCert>);
                return c.reason;
            }
        },
        cert);
}

Report make_report(const std::string& input, const ValuationMonoid& M, const Verdict& v,
                   long timing_us) {
    Report r;
    r.input = input;
    r.canonical_min_poly = M.alpha()->min_poly();
    r.root_interval = M.alpha()->display_interval();
    r.rank = v.rank;
    r.verdict = v;
    r.caps = M.caps();
    r.timing_us = timing_us;
    return r;
}

json to_json(const Report& r) {
    json verdicts = {{"atomic", to_string(r.verdict.atomic)}, {"accp", to_string(r.verdict.accp)},
                     {"bfm", to_string(r.verdict.bfm)},       {"ffm", to_string(r.verdict.ffm)},
                     {"fgm", to_string(r.verdict.fgm)},       {"ufm", to_string(r.verdict.ufm)},
                     {"hfm", to_string(r.verdict.hfm)},       {"ohfm", to_string(r.verdict.ohfm)}};
    json atoms_j;
    switch (r.verdict.atoms.kind) {
        case AtomSet::Kind::FinitePowers:
            atoms_j = {{"kind", "finite_powers"}, {"up_to", r.verdict.atoms.up_to}};
            break;
        case AtomSet::Kind::AllPowers: atoms_j = {{"kind", "all_powers"}}; break;
        case AtomSet::Kind::Empty: atoms_j = {{"kind", "empty"}}; break;
        default: atoms_j = {{"kind", "unknown"}}; break;
    }
    json certs = json::object();
    for (const auto& [prop, cert] : r.verdict.certificates)
        certs[prop] = certificate_to_json(cert);
    return {{"input", r.input},
            {"canonical_min_poly", to_string(r.canonical_min_poly)},
            {"root_interval",
             {{"lo", to_string(r.root_interval.lo)}, {"hi", to_string(r.root_interval.hi)}}},
            {"rank", r.rank},
            {"verdicts", verdicts},
            {"atoms", atoms_j},
            {"certificates", certs},
            {"caps",
             {{"sigma_cap", r.caps.sigma_cap},
              {"antimatter_deg_cap", r.caps.antimatter_deg_cap},
              {"antimatter_height_cap", r.caps.antimatter_height_cap},
              {"curtiss_cap", r.caps.curtiss_cap},
              {"node_budget", r.caps.node_budget}}},
            {"complete_flags", {{"all_determined", r.verdict.fully_determined()}}},
            {"timing_us", r.timing_us}};
}

Report report_from_json(const json& j) {
    Report r;
    r.input = j.at("input").get<std::string>();
    r.canonical_min_poly = poly_from_string(j.at("canonical_min_poly").get<std::string>());
    Rat lo(j.at("root_interval").at("lo").get<std::string>());
    Rat hi(j.at("root_interval").at("hi").get<std::string>());
    lo.canonicalize();
    hi.canonicalize();
    r.root_interval = {lo, hi};
    r.rank = j.at("rank").get<int>();
    r.verdict.rank = r.rank;
    const json& v = j.at("verdicts");
    r.verdict.atomic = tri_from_string(v.at("atomic").get<std::string>());
    r.verdict.accp = tri_from_string(v.at("accp").get<std::string>());
    r.verdict.bfm = tri_from_string(v.at("bfm").get<std::string>());
    r.verdict.ffm = tri_from_string(v.at("ffm").get<std::string>());
    r.verdict.fgm = tri_from_string(v.at("fgm").get<std::string>());
    r.verdict.ufm = tri_from_string(v.at("ufm").get<std::string>());
    r.verdict.hfm = tri_from_string(v.at("hfm").get<std::string>());
    r.verdict.ohfm = tri_from_string(v.at("ohfm").get<std::string>());
    const json& a = j.at("atoms");
    std::string kind = a.at("kind").get<std::string>();
    if (kind == "finite_powers")
        r.verdict.atoms = {AtomSet::Kind::FinitePowers, a.at("up_to").get<int>()};
    else if (kind == "all_powers")
        r.verdict.atoms = {AtomSet::Kind::AllPowers, 0};
    else if (kind == "empty")
        r.verdict.atoms = {AtomSet::Kind::Empty, 0};
    else
        r.verdict.atoms = {AtomSet::Kind::Unknown, 0};
    for (const auto& [prop, cert] : j.at("certificates").items())
        r.verdict.certificates.emplace(prop, certificate_from_json(cert));
    const json& caps = j.at("caps");
    r.caps.sigma_cap = caps.at("sigma_cap").get<int>();
    r.caps.antimatter_deg_cap = caps.at("antimatter_deg_cap").get<int>();
    r.caps.antimatter_height_cap = caps.at("antimatter_height_cap").get<int>();
    r.caps.curtiss_cap = caps.at("curtiss_cap").get<int>();
    r.caps.node_budget = caps.at("node_budget").get<long>();
    r.timing_us = j.at("timing_us").get<long>();
    return r;
}

bool operator==(const Report& a, const Report& b) { return to_json(a) == to_json(b); }

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "input:        " << r.input << "\n";
    os << "canonical m:  " << to_string(r.canonical_min_poly) << "   (rank " << r.rank << ")\n";
    os << "root:         largest positive root, in (" << to_string(r.root_interval.lo) << ", "
       << to_string(r.root_interval.hi) << ") ~ "
       << (r.root_interval.lo.get_d() + r.root_interval.hi.get_d()) / 2 << "\n";
    if (r.verdict.atomic == Tri::No) {
        auto it = r.verdict.certificates.find("atomic");
        os << "ANTIMATTER";
        if (it != r.verdict.certificates.end())
            os << " (certificate: " << describe_certificate(it->second) << ")";
        os << "\n";
    }
    os << "verdicts:\n";
    auto line = [&](const char* name, Tri t) {
        os << "  " << name;
        for (std::size_t i = std::string(name).size(); i < 7; ++i) os << ' ';
        os << to_string(t);
        auto it = r.verdict.certificates.find(name);
        if (it != r.verdict.certificates.end())
            os << "   [" << describe_certificate(it->second) << "]";
        os << "\n";
    };
    line("atomic", r.verdict.atomic);
    line("accp", r.verdict.accp);
    line("bfm", r.verdict.bfm);
    line("ffm", r.verdict.ffm);
    line("fgm", r.verdict.fgm);
    line("ufm", r.verdict.ufm);
    line("hfm", r.verdict.hfm);
    line("ohfm", r.verdict.ohfm);
    os << "atoms:        " << to_string(r.verdict.atoms) << "\n";
    return os.str();
}

}  // namespace valuate
