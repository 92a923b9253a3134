#pragma once

#include <stdexcept>
#include <string>

namespace hilbaut {

// A request would exceed a configured enumeration bound. Mapped to exit
// code 4 by the command-line tool.
class bound_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON shape, unknown fields, wrong scalar
// kinds). Mapped to exit code 2.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a model invariant. Mapped to exit code 3.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hilbaut
