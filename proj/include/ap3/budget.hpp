#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ap3 {

/// Thrown when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration would exceed its configured resource budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on the number of items an enumeration may produce.
inline constexpr std::uint64_t kDefaultItemBudget = 10'000'000;

/// Resource limits shared by every enumerating operation.
///
/// `max_items` is compared against a predicted (or running) item count;
/// `force` disables that comparison. The optional deadline is only consulted
/// between independent units of work, never in inner loops.
struct Budget {
    std::uint64_t max_items = kDefaultItemBudget;
    bool force = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Budget unlimited() { return Budget{UINT64_MAX, true, std::nullopt}; }

    bool allows(std::uint64_t predicted) const { return force || predicted <= max_items; }

    bool expired() const {
        return deadline && std::chrono::steady_clock::now() >= *deadline;
    }

    void require(std::uint64_t predicted, const std::string& what) const {
        if (!allows(predicted)) {
            throw BudgetExceeded(what + ": predicted " + std::to_string(predicted) +
                                 " items exceeds budget of " + std::to_string(max_items));
        }
    }
};

}  // namespace ap3
