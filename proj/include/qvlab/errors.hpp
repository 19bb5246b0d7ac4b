#pragma once

#include <stdexcept>
#include <string>

namespace qvlab {

// Shape or rank mismatch between operands (different group ranks, algebra
// dimensions, dependent bases).
class structural_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Unsupported or inconsistent configuration (non-prime p, wrong field kind).
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qvlab
