#include "cbp/adversary.hpp"

#include "cbp/discrepancy.hpp"
#include "cbp/offline.hpp"
#include "cbp/online.hpp"

#include <doctest.h>

using namespace cbp;

TEST_CASE("zero15 forces the exact bound out of baf") {
    Baf baf;
    const Transcript t = adversary_zero15(baf, 2);
    CHECK(t.final_bins == 3);
    CHECK(lb2(t.emitted) == 2);
}

TEST_CASE("zero15 beats every implemented algorithm") {
    for (const char* name : {"nf", "ff", "bf", "wf", "baf"}) {
        for (int n = 2; n <= 12; ++n) {
            auto alg = make_algorithm(name);
            const Transcript t = adversary_zero15(*alg, n);
            CHECK(t.final_bins >= ceil_15(n));
            CHECK(lb2(t.emitted) == n);
            CHECK(validate_packing(t.packing).ok());
            if (std::string(name) == "baf") {
                CHECK(t.final_bins == ceil_15(n));
            }
            if (n <= 6) {
                ExactOptions wide;
                wide.max_items = static_cast<int>(t.emitted.items.size());
                CHECK(exact_opt(t.emitted, wide).bins == n);
            }
        }
    }
}

TEST_CASE("zero15 leaves one saturated color behind") {
    // after the game one color has current discrepancy n, the others zero
    for (const char* name : {"ff", "baf", "wf"}) {
        auto alg = make_algorithm(name);
        const Transcript t = adversary_zero15(*alg, 5);
        DiscrepancyState state;
        for (const Item& item : t.emitted.items) {
            state.update(item.color);
        }
        int saturated = 0;
        for (int c = 0; c < t.emitted.num_colors(); ++c) {
            const std::int64_t cd = state.cd_of(Color{c});
            if (cd == 5) {
                ++saturated;
                // the saturated color tops at least ceil(1.5 n) bins
                CHECK(t.bins_by_color[c] >= ceil_15(5));
            } else {
                CHECK(cd == 0);
            }
        }
        CHECK(saturated == 1);
    }
}

TEST_CASE("transcripts replay deterministically") {
    auto alg = make_algorithm("bf");
    const Transcript t = adversary_zero15(*alg, 6);
    auto fresh = make_algorithm("bf");
    const RunResult replay = run_online(*fresh, t.emitted);
    REQUIRE(replay.trace.size() == t.placements.size());
    for (std::size_t i = 0; i < t.placements.size(); ++i) {
        CHECK(replay.trace[i].placement == t.placements[i]);
    }
    // the transcript's packing is the replay's packing
    REQUIRE(replay.packing.bins.size() == t.packing.bins.size());
    for (std::size_t b = 0; b < t.packing.bins.size(); ++b) {
        CHECK(replay.packing.bins[b].items == t.packing.bins[b].items);
    }
}

TEST_CASE("zero15 rejects degenerate parameters") {
    Baf baf;
    CHECK_THROWS_AS(adversary_zero15(baf, 1), std::invalid_argument);
}

TEST_CASE("size25 forces 2.5n bins with an n+1 witness") {
    for (const char* name : {"ff", "pseudo-baf"}) {
        auto alg = make_algorithm(name);
        const Size25Result result = adversary_size25(*alg, 4);
        CHECK(result.transcript.final_bins >= ceil_25(4));
        CHECK(bin_count(result.witness) == 5);
        CHECK(validate_packing(result.witness).ok());
        CHECK(lb2(result.transcript.emitted) == 5);
        CHECK(validate_packing(result.transcript.packing).ok());
    }
}

TEST_CASE("size25 transcripts replay deterministically") {
    auto alg = make_algorithm("wf");
    const Size25Result result = adversary_size25(*alg, 3);
    auto fresh = make_algorithm("wf");
    const RunResult replay = run_online(*fresh, result.transcript.emitted);
    REQUIRE(replay.trace.size() == result.transcript.placements.size());
    for (std::size_t i = 0; i < replay.trace.size(); ++i) {
        CHECK(replay.trace[i].placement == result.transcript.placements[i]);
    }
}

TEST_CASE("ffbf hard family") {
    const Instance inst = gen_ffbf_hard(2);
    CHECK(inst.items.size() == 8);
    for (const Item& item : inst.items) {
        CHECK(item.size == Rational(1, 8));
    }
    auto ff = make_algorithm("ff");
    CHECK(bin_count(run_online(*ff, gen_ffbf_hard(5)).packing) == 6);
    ExactOptions wide;
    wide.max_items = 100;
    CHECK(exact_opt(gen_ffbf_hard(3), wide).bins == 2);
}

TEST_CASE("wf hard family") {
    const Instance inst = gen_wf_hard(2);
    CHECK(inst.items[0].size == Rational(1, 25));
    CHECK(inst.items[1].size == Rational(1, 4));
    auto wf = make_algorithm("wf");
    CHECK(bin_count(run_online(*wf, gen_wf_hard(5)).packing) == 6);
    ExactOptions wide;
    wide.max_items = 100;
    CHECK(exact_opt(gen_wf_hard(3), wide).bins == 2);
}

TEST_CASE("pseudo-baf tightness instance") {
    SUBCASE("sized prefix at n=2") {
        const Instance prefix = gen_pseudobaf_tight(2);
        REQUIRE(prefix.items.size() == 3);
        CHECK(prefix.items[0].size == Rational(1, 4));
        CHECK(prefix.items[1].size == Rational(1));
        auto alg = make_algorithm("pseudo-baf");
        CHECK(bin_count(run_online(*alg, prefix).packing) == 3);
    }
    SUBCASE("full adaptive run reaches ceil(3.5 (n-1))") {
        const PseudoTightResult result = run_pseudobaf_tight(4);
        CHECK(result.sized_bins == 9);
        CHECK(result.transcript.final_bins == 11);
        CHECK(lb1(result.transcript.emitted) == 4);
        CHECK(lb2(result.transcript.emitted) == 4);
    }
    SUBCASE("combined optimum stays at n") {
        const PseudoTightResult result = run_pseudobaf_tight(3);
        ExactOptions wide;
        wide.max_items = static_cast<int>(result.transcript.emitted.items.size());
        CHECK(exact_opt(result.transcript.emitted, wide).bins == 3);
    }
}

TEST_CASE("generators reject bad parameters") {
    CHECK_THROWS_AS(gen_ffbf_hard(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_wf_hard(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_pseudobaf_tight(1), std::invalid_argument);
    CHECK_THROWS_AS(run_pseudobaf_tight(1), std::invalid_argument);
}
