#pragma once

#include <stdexcept>
#include <string>

namespace hb {

// Argument outside an evaluator's admissible region.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation requested within 1e-12 (or the dispatcher's 1e-8) of a pole.
struct pole_error : domain_error {
    using domain_error::domain_error;
};

// Exact-integer table bounds exceeded.
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Aitken extrapolation hit a vanishing second difference.
struct degenerate_difference_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every evaluation strategy's precondition failed for the requested point.
struct no_admissible_method_error : domain_error {
    using domain_error::domain_error;
};

} // namespace hb
