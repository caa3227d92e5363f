#pragma once

#include <stdexcept>
#include <string>

namespace egt {

// Input violates a documented precondition (degenerate sizes, bad ranges).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct degenerate_input_error : precondition_error {
    using precondition_error::precondition_error;
};

// An exact enumeration or search would exceed its budget.  Never a wrong
// answer: callers either raise the budget or ask for a sampled estimate.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_embedding_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sampling plus exhaustive fallback both failed to produce a witness.
struct witness_not_found_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace egt
