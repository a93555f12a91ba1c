#pragma once

#include <stdexcept>
#include <string>

namespace dcat {

/// Raised for ill-typed or malformed input (space mismatches, bad matrices, unknown names).
class rejected_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dcat
