#include "cbp/offline.hpp"

#include "cbp/adversary.hpp"
#include "cbp/discrepancy.hpp"
#include "cbp/harness.hpp"
#include "cbp/online.hpp"

#include <doctest.h>

#include <random>

using namespace cbp;

namespace {

Instance colors(const std::string& seq) {
    InstanceBuilder builder;
    for (char c : seq) {
        builder.add(std::string(1, c));
    }
    return builder.take();
}

Instance random_zero(std::uint64_t seed, int max_n, int max_colors) {
    RandomSpec spec;
    spec.seed = seed;
    spec.n = 1 + static_cast<int>(seed % max_n);
    spec.colors = 1 + static_cast<int>(seed % max_colors);
    return gen_random(spec);
}

}  // namespace

TEST_CASE("lb2 construction on the spec shapes") {
    SUBCASE("alternating sequence fits one bin") {
        const Packing p = construct_lb2_packing(colors("bwbw"));
        CHECK(bin_count(p) == 1);
        CHECK(validate_packing(p).ok());
    }
    SUBCASE("two blocks need two bins") {
        const Instance inst = colors("bbww");
        const Packing p = construct_lb2_packing(inst);
        CHECK(bin_count(p) == 2);
        CHECK(validate_packing(p).ok());
        CHECK(exact_opt(inst).bins == 2);
    }
    SUBCASE("same dominant color on both ends") {
        const Instance inst = colors("bbwrwrwbb");
        const Packing p = construct_lb2_packing(inst);
        CHECK(validate_packing(p).ok());
        CHECK(bin_count(p) == lb2(inst));
        CHECK(bin_count(p) == exact_opt(inst).bins);
    }
    SUBCASE("empty instance packs into no bins") {
        CHECK(bin_count(construct_lb2_packing(Instance{})) == 0);
    }
}

TEST_CASE("lb2 construction rejects sized items") {
    InstanceBuilder builder;
    builder.add("black", Rational(1, 2));
    CHECK_THROWS_AS(construct_lb2_packing(builder.take()), std::invalid_argument);
}

TEST_CASE("zero-size optimality sandwich on random instances") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Instance inst = random_zero(seed, 12, 4);
        const Packing constructed = construct_lb2_packing(inst);
        const std::int64_t d = lb2(inst);
        const std::int64_t expected = std::max<std::int64_t>(1, d);
        CHECK(validate_packing(constructed).ok());
        CHECK(bin_count(constructed) == expected);
        CHECK(exact_opt(inst).bins == expected);
    }
}

TEST_CASE("exact solver on the spec examples") {
    CHECK(exact_opt(colors("bbw")).bins == 2);

    InstanceBuilder builder;
    builder.add("black", Rational(3, 5));
    builder.add("white", Rational(3, 5));
    builder.add("black", Rational(3, 10));
    builder.add("white", Rational(3, 10));
    const Instance sized = builder.take();
    CHECK(lb1(sized) == 2);
    CHECK(exact_opt(sized).bins == 2);

    ExactOptions wide;
    wide.max_items = 100;
    CHECK(exact_opt(gen_ffbf_hard(3), wide).bins == 2);
}

TEST_CASE("exact solver returns a matching valid witness") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomSpec spec;
        spec.seed = 7000 + seed;
        spec.n = 1 + static_cast<int>(seed % 14);
        spec.colors = 1 + static_cast<int>(seed % 3);
        spec.regime = SizeRegime::uniform;
        const Instance inst = gen_random(spec);
        const ExactResult result = exact_opt(inst);
        CHECK(validate_packing(result.witness).ok());
        CHECK(bin_count(result.witness) == result.bins);
    }
}

TEST_CASE("exact solver enforces its limits") {
    ExactOptions small;
    small.max_items = 4;
    CHECK_THROWS_AS(exact_opt(colors("bwrbw"), small), SolverLimitError);

    // a tiny node budget trips on an instance that needs search
    ExactOptions starved;
    starved.max_items = 100;
    starved.node_budget = 3;
    CHECK_THROWS_AS(exact_opt(gen_wf_hard(4), starved), SolverBudgetError);
}

TEST_CASE("exact optimum dominates both lower bounds") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomSpec spec;
        spec.seed = 8000 + seed;
        spec.n = 1 + static_cast<int>(seed % 12);
        spec.colors = 1 + static_cast<int>(seed % 4);
        spec.regime = seed % 2 ? SizeRegime::uniform : SizeRegime::zero;
        const Instance inst = gen_random(spec);
        const std::int64_t opt = exact_opt(inst).bins;
        CHECK(opt >= lb1(inst));
        CHECK(opt >= lb2(inst));
        if (spec.regime == SizeRegime::zero) {
            CHECK(opt == std::max<std::int64_t>(inst.items.empty() ? 0 : 1, lb2(inst)));
        }
    }
}

TEST_CASE("the optimum never rises when a prefix or suffix is removed") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 60; ++round) {
        RandomSpec spec;
        spec.seed = 9000 + round;
        spec.n = 2 + static_cast<int>(rng() % 9);
        spec.colors = 1 + static_cast<int>(rng() % 3);
        spec.regime = round % 2 ? SizeRegime::uniform : SizeRegime::zero;
        const Instance inst = gen_random(spec);

        const std::size_t cut_front = rng() % (inst.items.size() + 1);
        const std::size_t cut_back = rng() % (inst.items.size() - cut_front + 1);
        Instance middle;
        middle.color_names = inst.color_names;
        middle.items.assign(inst.items.begin() + cut_front,
                            inst.items.end() - cut_back);

        CHECK(exact_opt(middle).bins <= exact_opt(inst).bins);
    }
}

TEST_CASE("lb2 pruning does not change the optimum") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomSpec spec;
        spec.seed = 10000 + seed;
        spec.n = 1 + static_cast<int>(seed % 9);
        spec.colors = 1 + static_cast<int>(seed % 3);
        spec.regime = seed % 2 ? SizeRegime::uniform : SizeRegime::zero;
        const Instance inst = gen_random(spec);
        ExactOptions independent;
        independent.use_lb2_prune = false;
        CHECK(exact_opt(inst).bins == exact_opt(inst, independent).bins);
    }
}

TEST_CASE("empty instance solves to zero bins") {
    const ExactResult result = exact_opt(Instance{});
    CHECK(result.bins == 0);
    CHECK(result.witness.bins.empty());
}
