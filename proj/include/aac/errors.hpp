#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aac {

// Thrown when a search exceeds its node budget. Carries the best upper bound
// proven before the budget ran out (0 when nothing was established).
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t best_upper_bound)
        : std::runtime_error(what), best_upper(best_upper_bound) {}

    std::uint64_t best_upper;
};

// Thrown when textual input (object codes, CLI config) cannot be parsed.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aac
