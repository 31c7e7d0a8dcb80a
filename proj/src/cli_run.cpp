#include "valuate/cli_run.hpp"

#include <chrono>
#include <ostream>

#include "valuate/factorization.hpp"
#include "valuate/families.hpp"
#include "valuate/parse.hpp"
#include "valuate/report.hpp"

namespace valuate {

namespace {

RootChoice parse_root_choice(const std::string& s) {
    if (s == "largest") return RootChoice::largest();
    if (s == "smallest") return RootChoice::smallest();
    constexpr std::string_view prefix = "index:";
    if (s.rfind(prefix, 0) == 0) {
        try {
            return RootChoice::at(std::stoi(s.substr(prefix.size())));
        } catch (const std::exception&) {
            throw invalid_input("bad root index in --root " + s);
        }
    }
    throw invalid_input("--root must be largest, smallest, or index:K");
}

ValuationMonoid monoid_from_input(const std::string& text, const Command& cmd) {
    RatPoly m = parse_cli_input(text);
    if (m.degree() < 1)
        throw invalid_input("classification needs a polynomial of degree >= 1 "
                            "(use rational:n/d for rational generators)");
    auto alpha = make_algebraic(m, parse_root_choice(cmd.root_choice));
    return ValuationMonoid(alpha, cmd.caps);
}

int run_classify(const Command& cmd, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    ValuationMonoid M = monoid_from_input(cmd.inputs.at(0), cmd);
    Verdict v = classify(M);
    auto t1 = std::chrono::steady_clock::now();
    long us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    Report r = make_report(cmd.inputs.at(0), M, v, us);
    if (cmd.json_output)
        out << to_json(r).dump(2) << "\n";
    else
        out << render_text(r);
    return v.fully_determined() ? 0 : 3;
}

int run_atoms(const Command& cmd, std::ostream& out) {
    ValuationMonoid M = monoid_from_input(cmd.inputs.at(0), cmd);
    AtomSet a = atoms(M);
    if (cmd.json_output) {
        json j;
        switch (a.kind) {
            case AtomSet::Kind::FinitePowers:
                j = {{"kind", "finite_powers"}, {"up_to", a.up_to}};
                break;
            case AtomSet::Kind::AllPowers: j = {{"kind", "all_powers"}}; break;
            case AtomSet::Kind::Empty: j = {{"kind", "empty"}}; break;
            default: j = {{"kind", "unknown"}}; break;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "atoms: " << to_string(a) << "\n";
    }
    return a.kind == AtomSet::Kind::Unknown ? 3 : 0;
}

int run_factor(const Command& cmd, std::ostream& out) {
    ValuationMonoid M = monoid_from_input(cmd.inputs.at(0), cmd);
    IntPoly x = int_poly_from_rat(parse_poly(cmd.element));
    FactorizationSet zs = enumerate_factorizations(M, x, cmd.exponent_cap);
    LengthSet ls;
    ls.complete = zs.complete;
    for (const auto& f : zs.items) ls.lengths.push_back(f.length);
    std::sort(ls.lengths.begin(), ls.lengths.end());
    ls.lengths.erase(std::unique(ls.lengths.begin(), ls.lengths.end()), ls.lengths.end());
    if (cmd.json_output) {
        json items = json::array();
        for (const auto& f : zs.items)
            items.push_back({{"z", to_string(f.z)}, {"length", f.length.get_str()}});
        json lengths = json::array();
        for (const auto& l : ls.lengths) lengths.push_back(l.get_str());
        json j = {{"input", cmd.inputs.at(0)},
                  {"element", cmd.element},
                  {"factorizations", items},
                  {"lengths", lengths},
                  {"complete", zs.complete}};
        if (zs.exponent_cap_used) j["exponent_cap_used"] = *zs.exponent_cap_used;
        if (!ls.lengths.empty()) {
            auto ap = is_arith_progression(ls.lengths);
            j["arith_progression"] = ap.is_progression;
            if (ap.common_difference) j["common_difference"] = ap.common_difference->get_str();
        }
        out << j.dump(2) << "\n";
    } else {
        out << "Z(x) for x = " << to_string(x) << " in N0[a], m(a) = 0:\n";
        for (const auto& f : zs.items)
            out << "  " << to_string(f.z, "a") << "   (length " << f.length.get_str() << ")\n";
        if (zs.items.empty()) out << "  (none found)\n";
        out << "lengths: {";
        for (std::size_t i = 0; i < ls.lengths.size(); ++i)
            out << (i ? ", " : "") << ls.lengths[i].get_str();
        out << "}\n";
        out << (zs.complete ? "enumeration complete\n"
                            : "enumeration capped (exponent cap " +
                                  std::to_string(cmd.exponent_cap) + "), may be incomplete\n");
        if (!ls.lengths.empty()) {
            auto ap = is_arith_progression(ls.lengths);
            out << "lengths form an arithmetic progression: "
                << (ap.is_progression ? "yes" : "no");
            if (ap.common_difference) out << " (difference " << ap.common_difference->get_str() << ")";
            out << "\n";
        }
    }
    return 0;
}

int run_iso(const Command& cmd, std::ostream& out) {
    ValuationMonoid M1 = monoid_from_input(cmd.inputs.at(0), cmd);
    ValuationMonoid M2 = monoid_from_input(cmd.inputs.at(1), cmd);
    bool iso = isomorphic(M1, M2);
    if (cmd.json_output)
        out << json{{"isomorphic", iso}}.dump(2) << "\n";
    else
        out << "N0[a1] " << (iso ? "~=" : "!~=") << " N0[a2]\n";
    return 0;
}

int run_group_check(const Command& cmd, std::ostream& out) {
    RatPoly m = parse_cli_input(cmd.inputs.at(0));
    IntPoly prim = content_primitive(m).primitive;
    GroupCheckResult r = group_check(prim, cmd.caps.curtiss_cap);
    if (cmd.json_output) {
        json j = {{"is_group", r.is_group}};
        if (r.certificate) {
            j["multiplier"] = to_string(r.certificate->multiplier);
            j["product"] = to_string(r.certificate->product);
        }
        out << j.dump(2) << "\n";
    } else if (r.is_group) {
        out << "GROUP: N0[beta] = Z[beta], multiplier phi = "
            << to_string(r.certificate->multiplier) << "\n";
    } else {
        out << "polynomial has a positive root; N0[beta] is a reduced monoid "
               "(classify it instead)\n";
    }
    return 0;
}

FamilyInstance build_family(const Command& cmd) {
    const std::string& name = cmd.family_name;
    if (name == "eisenstein") {
        RatPoly q = parse_poly(cmd.family_param);
        if (q.degree() > 0) throw bad_params("eisenstein family parameter must be a rational");
        return eisenstein_family(cmd.family_d, q.is_zero() ? Rat(0) : q[0]);
    }
    long p;
    try {
        p = std::stol(cmd.family_param);
    } catch (const std::exception&) {
        throw bad_params("family parameter must be an integer: " + cmd.family_param);
    }
    if (name == "ffm-not-fgm") return ffm_not_fgm_family(cmd.family_d, p);
    if (name == "ohfm") return ohfm_family(cmd.family_d, p);
    if (name == "fgm-not-ohfm") return fgm_not_ohfm_family(cmd.family_d, p);
    if (name == "ufm-baseline") return ufm_baseline_family(cmd.family_d, p);
    throw bad_params("unknown family: " + name +
                     " (expected eisenstein, ffm-not-fgm, ohfm, fgm-not-ohfm, ufm-baseline)");
}

int run_family(const Command& cmd, std::ostream& out) {
    FamilyInstance inst = build_family(cmd);
    ValuationMonoid M(make_algebraic(inst.poly), cmd.caps);
    Verdict v = classify(M);
    SigmaResult s = sigma(M);
    auto mismatches = check_expected(inst, v, s);
    Report r = make_report(to_string(inst.poly), M, v, 0);
    if (cmd.json_output) {
        json j = to_json(r);
        j["family"] = inst.family;
        j["d"] = inst.d;
        j["param"] = to_string(inst.param);
        j["irreducibility"] = inst.irreducibility;
        j["expected_mismatches"] = mismatches;
        out << j.dump(2) << "\n";
    } else {
        out << "family " << inst.family << " (d = " << inst.d << ", param = "
            << to_string(inst.param) << "): " << to_string(inst.poly) << "\n";
        out << "irreducibility: " << inst.irreducibility << "\n";
        out << render_text(r);
        if (mismatches.empty()) {
            out << "expected verdicts: all match\n";
        } else {
            out << "expected verdicts: MISMATCH on";
            for (const auto& f : mismatches) out << " " << f;
            out << "\n";
        }
    }
    if (!mismatches.empty()) return 4;
    return v.fully_determined() ? 0 : 3;
}

int run_survey(const Command& cmd, std::ostream& out) {
    GapReport rep = survey_gap(cmd.d_min, cmd.d_max, cmd.p_min, cmd.p_max, cmd.caps, cmd.jobs);
    if (cmd.json_output) {
        json obs = json::array();
        for (const auto& o : rep.observations) {
            json e = {{"family", o.inst.family},
                      {"d", o.inst.d},
                      {"param", to_string(o.inst.param)},
                      {"poly", to_string(o.inst.poly)}};
            if (o.gap)
                e["gap"] = *o.gap;
            else
                e["sigma"] = o.sigma_result.kind == SigmaResult::Kind::Infinite
                                 ? "infinite"
                                 : "not_found_up_to_cap";
            obs.push_back(e);
        }
        json gaps = json::array();
        for (int g : rep.achieved_gaps) gaps.push_back(g);
        out << json{{"observations", obs}, {"achieved_gaps", gaps}}.dump(2) << "\n";
    } else {
        out << "survey of |A(N0[a])| - deg m over the families:\n";
        for (const auto& o : rep.observations) {
            out << "  " << o.inst.family << " d=" << o.inst.d << " param=" << to_string(o.inst.param)
                << "  " << to_string(o.inst.poly) << "  ";
            if (o.gap)
                out << "gap " << *o.gap;
            else if (o.sigma_result.kind == SigmaResult::Kind::Infinite)
                out << "sigma infinite (" << o.sigma_result.infinite_reason << ")";
            else
                out << "sigma not found up to " << o.sigma_result.cap;
            out << "\n";
        }
        out << "achieved gaps:";
        for (int g : rep.achieved_gaps) out << " " << g;
        out << "\n";
        out << "(observed evidence only; no claim beyond the sweep)\n";
    }
    return 0;
}

}  // namespace

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        switch (cmd.verb) {
            case Command::Verb::Classify: return run_classify(cmd, out);
            case Command::Verb::Atoms: return run_atoms(cmd, out);
            case Command::Verb::Factor: return run_factor(cmd, out);
            case Command::Verb::Iso: return run_iso(cmd, out);
            case Command::Verb::Family: return run_family(cmd, out);
            case Command::Verb::Survey: return run_survey(cmd, out);
            case Command::Verb::GroupCheck: return run_group_check(cmd, out);
        }
        return 4;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const cap_exhausted& e) {
        err << "cap exhausted: " << e.what() << "\n";
        return 3;
    } catch (const requires_atoms& e) {
        err << "undetermined: " << e.what() << "\n";
        return 3;
    } catch (const inconsistent_verdict& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace valuate
