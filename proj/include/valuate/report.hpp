#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "valuate/valuation.hpp"

namespace valuate {

using json = nlohmann::json;

/* Machine-readable classification record. JSON field names and the
 * yes/no/unknown encoding are stable; see the README. */
struct Report {
    std::string input;
    IntPoly canonical_min_poly;
    Interval root_interval;
    int rank = 0;
    Verdict verdict;
    SearchCaps caps;
    long timing_us = 0;
};

Report make_report(const std::string& input, const ValuationMonoid& M, const Verdict& v,
                   long timing_us);

json to_json(const Report& r);
Report report_from_json(const json& j);
bool operator==(const Report& a, const Report& b);  // via the JSON encoding

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);
// Human-readable one-liner, with alpha written as "a".
std::string describe_certificate(const Certificate& c);

std::string render_text(const Report& r);

}  // namespace valuate
