#include "cbp/discrepancy.hpp"

#include "cbp/core.hpp"
#include "cbp/harness.hpp"

#include <doctest.h>

using namespace cbp;

namespace {

Instance colors(const std::string& seq) {
    InstanceBuilder builder;
    for (char c : seq) {
        builder.add(std::string(1, c));
    }
    return builder.take();
}

Instance sized(std::initializer_list<std::pair<const char*, Rational>> items) {
    InstanceBuilder builder;
    for (const auto& [name, size] : items) {
        builder.add(name, size);
    }
    return builder.take();
}

}  // namespace

TEST_CASE("lb1 rounds the exact size sum up") {
    CHECK(lb1(sized({{"b", Rational(3, 5)}, {"w", Rational(3, 5)}})) == 2);
    CHECK(lb1(colors("bbww")) == 0);
    CHECK(lb1(Instance{}) == 0);
}

TEST_CASE("lb1 on the pseudo-baf tightness prefix is n") {
    // n-1 groups of (w/eps, b/1, b/eps) with eps = 1/(2n) sum to n - 1/n
    for (int n = 2; n <= 8; ++n) {
        const Rational eps(1, 2 * n);
        InstanceBuilder builder;
        for (int i = 0; i + 1 < n; ++i) {
            builder.add("white", eps);
            builder.add("black", Rational(1));
            builder.add("black", eps);
        }
        CHECK(lb1(builder.take()) == n);
    }
}

TEST_CASE("lb2 on color blocks and alternations") {
    CHECK(lb2(colors("bbbwww")) == 3);  // n black then n white needs n bins
    CHECK(lb2(colors("wbwb")) == 1);
    CHECK(lb2(Instance{}) == 0);
}

TEST_CASE("lb2 equals the definitional oracle on the spec examples") {
    for (const char* seq : {"bbbwww", "wbwb", "bbwrw"}) {
        const Instance inst = colors(seq);
        CHECK(lb2(inst) == lb2_oracle(inst));
    }
    CHECK(lb2(colors("bbwrw")) == 2);
    CHECK(lb2_oracle(colors("bbwrw")) == 2);
}

TEST_CASE("streaming discrepancy state follows the update rule") {
    DiscrepancyState state;
    const Color b{0}, w{1}, r{2};
    state.update(b);
    state.update(b);
    CHECK(state.cd_of(b) == 2);
    CHECK(state.d == 2);
    state.update(w);
    CHECK(state.cd_of(b) == 1);
    CHECK(state.cd_of(w) == 1);
    CHECK(state.d == 2);
    state.update(r);
    state.update(b);
    CHECK(state.cd_of(b) == 1);
    CHECK(state.cd_of(w) == 0);
    CHECK(state.cd_of(r) == 0);
    CHECK(state.d == 2);
    CHECK(state.n_seen == 5);
}

TEST_CASE("streaming state equals definitional recomputation on random prefixes") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RandomSpec spec;
        spec.seed = seed;
        spec.n = 60;
        spec.colors = 1 + static_cast<int>(seed % 5);
        const Instance inst = gen_random(spec);

        DiscrepancyState state;
        Instance prefix;
        prefix.color_names = inst.color_names;
        for (const Item& item : inst.items) {
            state.update(item.color);
            prefix.items.push_back(item);
            CHECK(state.d == lb2_oracle(prefix));
            // cd[c] is the best suffix sum ending at the current item
            for (int c = 0; c < inst.num_colors(); ++c) {
                std::int64_t sum = 0, best = 0;
                for (auto it = prefix.items.rbegin(); it != prefix.items.rend(); ++it) {
                    sum += it->color.id == c ? 1 : -1;
                    best = std::max(best, sum);
                }
                CHECK(state.cd_of(Color{c}) == best);
            }
        }
    }
}

TEST_CASE("streaming lb2 matches the oracle on a longer sequence") {
    RandomSpec spec;
    spec.seed = 99;
    spec.n = 200;
    spec.colors = 5;
    const Instance inst = gen_random(spec);
    CHECK(lb2(inst) == lb2_oracle(inst));
}
