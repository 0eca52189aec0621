#pragma once

#include <stdexcept>
#include <string>

namespace splitquot {

// Thrown when an operation is called outside its stated domain.
// The CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& message) {
    if (!condition)
        throw precondition_error(message);
}

} // namespace splitquot
