#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsl {

/// Malformed text input (sequence grammar, rationals, multiset syntax).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position))
        , position_(position)
    {
    }

    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An enumeration or expansion would exceed its configured cap.
class BudgetError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace bsl
