#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "valuate/valuation.hpp"

namespace valuate {

struct Command {
    enum class Verb { Classify, Atoms, Factor, Iso, Family, Survey, GroupCheck };
    Verb verb = Verb::Classify;
    std::vector<std::string> inputs;
    std::string element;      // factor
    std::string family_name;  // family
    int family_d = 0;
    std::string family_param;  // p or q as text
    int d_min = 2, d_max = 4;  // survey
    long p_min = 2, p_max = 5;
    SearchCaps caps;
    int exponent_cap = 24;
    std::string root_choice = "largest";  // largest | smallest | index:K
    bool json_output = false;
    int jobs = 1;
};

/* Exit codes: 0 all verdicts determined, 1 parse error, 2 invalid input
 * (reducible polynomial, no positive root outside group-check, bad
 * parameters), 3 some verdict left unknown at the configured caps. */
int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace valuate
