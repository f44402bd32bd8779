#pragma once

#include "cbp/core.hpp"

#include <cstdint>
#include <stdexcept>

namespace cbp {

// Instance exceeds the configured solver size cap.
class SolverLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Search-node budget exhausted; reported instead of a wrong answer.
class SolverBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExactOptions {
    int max_items = 16;
    std::int64_t node_budget = 50'000'000;
    // When set, the search starts at max(LB1, LB2) and prunes with the
    // suffix discrepancy. Disable to keep the solver fully independent of
    // the discrepancy bounds (slower; used by oracle tests).
    bool use_lb2_prune = true;
};

struct ExactResult {
    std::int64_t bins = 0;
    Packing witness;
    std::int64_t nodes = 0;
};

// Restricted offline optimum: minimum bin count over all valid
// order-preserving packings, plus one witness. Depth-first search over
// items in sequence order, branching over one representative bin per
// (top color, level) class plus one canonical new bin, with memoization
// of visited (position, canonical state) pairs. Runs as a feasibility
// search for k = lower bound, lower bound + 1, ... so the explored state
// space stays near-optimal. Heuristic runs seed the upper bound.
ExactResult exact_opt(const Instance& inst, const ExactOptions& options = {});

// Constructive packing of a zero-size instance into exactly
// max(1, LB2(inst)) bins, following the case recursion behind the fact
// that the restricted offline optimum equals the color discrepancy.
// Throws std::invalid_argument when some item has nonzero size.
Packing construct_lb2_packing(const Instance& inst);

}  // namespace cbp
