#pragma once

#include <stdexcept>
#include <string>

namespace valuate {

// Base class for everything this library throws on bad input or an
// exhausted search cap. Internal assertion failures use inconsistent_verdict.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_error : error {
    using error::error;
};

struct zero_poly_error : error {
    zero_poly_error() : error("operation undefined for the zero polynomial") {}
};

struct not_isolating_error : error {
    using error::error;
};

struct cap_exhausted : error {
    explicit cap_exhausted(long cap_, const std::string& what_ = "search cap exhausted")
        : error(what_ + " (cap " + std::to_string(cap_) + ")"), cap(cap_) {}
    long cap;
};

struct unsupported_degree : error {
    explicit unsupported_degree(int deg, int max_deg)
        : error("degree " + std::to_string(deg) + " exceeds the supported maximum " +
                std::to_string(max_deg)) {}
};

struct not_irreducible : error {
    using error::error;
};

struct no_positive_root : error {
    using error::error;
};

struct root_index_error : error {
    using error::error;
};

struct mixed_field_error : error {
    mixed_field_error() : error("elements belong to different algebraic numbers") {}
};

struct not_applicable : error {
    using error::error;
};

struct requires_atomic : error {
    using error::error;
};

struct requires_atoms : error {
    using error::error;
};

struct no_factorizations : error {
    using error::error;
};

struct empty_input : error {
    using error::error;
};

struct bad_params : error {
    using error::error;
};

struct invalid_input : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& what_, std::size_t position_)
        : error(what_ + " at position " + std::to_string(position_)), position(position_) {}
    std::size_t position;
};

struct inconsistent_verdict : error {
    using error::error;
};

}  // namespace valuate
