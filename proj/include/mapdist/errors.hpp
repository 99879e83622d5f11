#pragma once

#include <stdexcept>
#include <string>

namespace mapdist {

// Caller passed arguments that violate a precondition.
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An internal structural assumption failed (non-contractive system,
// non-integrable remainder, malformed tree, ...).
struct structural_error : std::logic_error {
    explicit structural_error(const std::string& msg) : std::logic_error(msg) {}
};

// A numerical procedure failed to converge or degenerated.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation outside the domain of a function (singularity, unit-circle root).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace mapdist
