#pragma once

#include "cbp/core.hpp"

#include <cstdint>
#include <vector>

namespace cbp {

// Streaming color-discrepancy tracker. After k items, cd[c] is the
// discrepancy of the best interval ending at the k-th item (CD_c) and d
// is the maximal discrepancy over all intervals seen so far (D).
// Colors never seen have implicit CD 0.
struct DiscrepancyState {
    std::vector<std::int64_t> cd;
    std::int64_t d = 0;
    std::int64_t n_seen = 0;

    // cd[c] += 1; cd[c'] = max(0, cd[c'] - 1) for every other color;
    // d = max(d, cd[c]).
    void update(Color c);
    std::int64_t cd_of(Color c) const;
};

// Ceiling of the total item size, computed exactly.
std::int64_t lb1(const Instance& inst);

// Maximal color discrepancy: max over colors c and intervals [i,j] of
// (#c-items - #non-c-items) in the interval. O(n * |C|) via per-color
// maximum-suffix tracking; 0 for the empty instance.
std::int64_t lb2(const Instance& inst);

// Definitional O(n^2 * |C|) evaluation of the same quantity, kept as an
// independent oracle for the streaming implementation.
std::int64_t lb2_oracle(const Instance& inst);

}  // namespace cbp
