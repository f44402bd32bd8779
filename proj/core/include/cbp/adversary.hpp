#pragma once

#include "cbp/core.hpp"
#include "cbp/online.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cbp {

// Full record of one adversary-vs-algorithm game. Replaying the emitted
// instance through a fresh copy of the same algorithm reproduces the
// placements.
struct Transcript {
    Instance emitted;
    std::vector<Placement> placements;
    Packing packing;  // the algorithm's final packing
    std::int64_t final_bins = 0;
    std::vector<std::int64_t> bins_by_color;  // final c-bin counts by color id
    std::int64_t threshold = 0;               // guaranteed bin count
    std::string stop_reason;
    std::vector<std::string> phase_notes;
};

inline std::int64_t ceil_15(std::int64_t n) { return (3 * n + 1) / 2; }
inline std::int64_t ceil_25(std::int64_t n) { return (5 * n + 1) / 2; }

// Adaptive zero-size adversary: forces any deterministic online algorithm
// to open at least ceil(1.5 n) bins while the emitted sequence keeps
// LB2 = n (so the restricted offline optimum is n). Requires n > 1 and an
// algorithm that accepts zero-size items.
Transcript adversary_zero15(OnlineAlgorithm& alg, int n);

struct Size25Result {
    Transcript transcript;
    Packing witness;  // valid packing of the emitted items into n + 1 bins
};

// Adaptive sized adversary: plays the zero-size game, then the phased
// huge-item game with eps = 1/(6n) and delta_i = 1/(5^i * 6n), forcing at
// least ceil(2.5 n) bins while a witness packing shows OPT = n + 1.
// Requires n > 1.
Size25Result adversary_size25(OnlineAlgorithm& alg, int n);

// n x (black/eps, black/eps, white/eps, red/eps) with eps = 1/(4n):
// First Fit and Best Fit open n + 1 bins, the optimum is 2.
Instance gen_ffbf_hard(int n);

// n x (black/delta, black/eps, white/delta, red/delta) with eps = 1/(2n)
// and delta = 1/(6n^2 + 1): Worst Fit opens n + 1 bins, the optimum is 2.
Instance gen_wf_hard(int n);

// Sized prefix of the Pseudo-BAF tightness instance:
// (n-1) x (white/eps, black/1, black/eps) with eps = 1/(2n). The full
// instance continues adaptively; see run_pseudobaf_tight.
Instance gen_pseudobaf_tight(int n);

struct PseudoTightResult {
    Transcript transcript;
    std::int64_t sized_bins = 0;  // real bins right after the sized prefix
};

// Runs the sized prefix against Pseudo-BAF, then plays the zero-size
// phase game against its pseudo-bin layer (parameter n - 1) until the
// layer holds n + ceil((n-1)/2) pseudo bins. Pseudo-BAF ends with
// ceil(3.5 (n-1)) real bins while the optimum stays n.
PseudoTightResult run_pseudobaf_tight(int n);

}  // namespace cbp
