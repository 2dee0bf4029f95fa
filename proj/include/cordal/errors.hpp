// Error taxonomy shared by the library and the CLI exit-code contract.
#pragma once

#include <stdexcept>
#include <string>

namespace cordal {

// Inputs the engine declines to process (CLI exit code 2).
enum class RefusalKind { NotMonomial, Unstable, NotKnot, SearchTooLarge };

inline const char* refusal_name(RefusalKind k) {
    switch (k) {
        case RefusalKind::NotMonomial: return "NotMonomial";
        case RefusalKind::Unstable: return "Unstable";
        case RefusalKind::NotKnot: return "NotKnot";
        case RefusalKind::SearchTooLarge: return "SearchTooLarge";
    }
    return "?";
}

struct RefusalError : std::runtime_error {
    RefusalKind kind;
    RefusalError(RefusalKind k, const std::string& what)
        : std::runtime_error(std::string(refusal_name(k)) + ": " + what), kind(k) {}
};

// Bad user input: malformed braid text, out-of-range flags (CLI exit code 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant the engine relies on failed (CLI exit code 3).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Thrown when a polynomial grows past the active TermBudget. Property
// trials catch this to abandon a draw whose exact image is intractably
// large; it never escapes to users unless they opt in to a budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void internal_check(bool ok, const char* msg) {
    if (!ok) throw InternalError(msg);
}

}  // namespace cordal
