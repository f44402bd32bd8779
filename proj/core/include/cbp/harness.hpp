#pragma once

#include "cbp/core.hpp"
#include "cbp/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cbp {

enum class SizeRegime { zero, uniform, bounded };

struct RandomSpec {
    std::uint64_t seed = 0;
    int n = 0;
    int colors = 2;
    SizeRegime regime = SizeRegime::zero;
    int bound_d = 2;  // regime == bounded: sizes <= 1/bound_d
};

// Deterministic in the seed. Sizes are rationals k/q with q <= 1000 to
// keep exact arithmetic cheap; uniform draws from (0,1].
Instance gen_random(const RandomSpec& spec);

enum class OptMethod {
    exact,      // branch-and-bound, no size cap (node budget still applies)
    lb2_bound,  // conservative: LB2 <= OPT
    witness,    // constructive zero-size packing; errors on sized items
    automatic,  // exact up to the size limit, LB2 beyond it
};

struct ExperimentSpec {
    enum class Source { file, generator, random };

    std::vector<std::string> algorithms;
    Source source = Source::random;
    std::string file;       // source == file
    std::string generator;  // source == generator: ffbf | wf | pseudo-tight
    int generator_n = 2;
    RandomSpec random;      // source == random; seed + i per repetition
    int repetitions = 1;
    OptMethod opt = OptMethod::automatic;
    int exact_limit = 16;
    std::int64_t node_budget = 50'000'000;
};

struct ResultRow {
    std::string instance;
    std::string algorithm;
    std::int64_t bins = 0;
    std::int64_t opt = 0;
    std::string opt_method;
    Rational ratio;  // bins / opt, exact
    std::int64_t runtime_ms = 0;
    bool operator==(const ResultRow&) const = default;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::vector<std::string> errors;  // per-row failures; the run continues
    bool ok() const { return errors.empty(); }
};

// Runs every algorithm over every instance of the spec. Each packing is
// validated before its bin count is reported.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// header: instance,algorithm,bins,opt,opt_method,ratio_num,ratio_den,runtime_ms
std::string emit_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(const std::string& text);

// Key-value text format, one "key = value" per line, '#' comments.
// Keys: algs, source, file, gen, gen_n, seed, n, colors, sizes, count,
// opt, limit, budget.
ExperimentSpec parse_experiment_spec(std::istream& in);
ExperimentSpec load_experiment_spec(const std::string& path);

}  // namespace cbp
