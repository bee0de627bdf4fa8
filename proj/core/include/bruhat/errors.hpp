#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a query cannot be decided from the digits actually known.
struct insufficient_precision : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

struct denominator_zero : error {
    using error::error;
};

struct zero_argument : error {
    using error::error;
};

struct singular_to_precision : error {
    using error::error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct index_out_of_range : error {
    using error::error;
};

struct not_upper_triangular : error {
    using error::error;
};

struct not_in_bplus : error {
    using error::error;
};

struct invalid_preset : error {
    using error::error;
};

struct character_not_admissible : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

} // namespace bruhat
