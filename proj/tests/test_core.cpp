#include "cbp/core.hpp"
#include "cbp/instance_io.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace cbp;

namespace {

Instance zero_instance(const std::string& colors) {
    InstanceBuilder builder;
    for (char c : colors) {
        builder.add(std::string(1, c));
    }
    return builder.take();
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(to_string(parse_rational("2/4")) == "1/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(1)) == "1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(ceil_rational(Rational(6, 5)) == 2);
    CHECK(ceil_rational(Rational(2)) == 2);
    CHECK(ceil_rational(Rational(0)) == 0);
}

TEST_CASE("size arithmetic is exact in any order") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 50; ++round) {
        std::vector<Rational> sizes;
        for (int i = 0; i < 20; ++i) {
            const std::uint64_t q = 1 + rng() % 1000;
            sizes.emplace_back(BigInt(rng() % (q + 1)), BigInt(q));
        }
        Rational forward{0}, backward{0};
        for (const auto& s : sizes) forward += s;
        for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) backward += *it;
        CHECK(forward == backward);
    }
}

TEST_CASE("validate_packing flags capacity overflow") {
    InstanceBuilder builder;
    builder.add("black", Rational(3, 5));
    builder.add("white", Rational(3, 5));
    Packing p;
    p.source = builder.take();
    Bin bin;
    bin.push(p.source.items[0]);
    bin.push(p.source.items[1]);
    p.bins.push_back(bin);
    const auto report = validate_packing(p);
    CHECK_FALSE(report.ok());
    CHECK(report.to_string().find("> 1") != std::string::npos);
}

TEST_CASE("validate_packing flags adjacent same-color items") {
    Packing p;
    p.source = zero_instance("bb");
    Bin bin;
    bin.push(p.source.items[0]);
    bin.push(p.source.items[1]);
    p.bins.push_back(bin);
    CHECK_FALSE(validate_packing(p).ok());
}

TEST_CASE("validate_packing accepts a valid alternation") {
    Packing p;
    p.source = zero_instance("bw");
    Bin bin;
    bin.push(p.source.items[0]);
    bin.push(p.source.items[1]);
    p.bins.push_back(bin);
    CHECK(validate_packing(p).ok());
}

TEST_CASE("validate_packing flags missing and duplicated items") {
    Packing p;
    p.source = zero_instance("bwr");
    Bin bin;
    bin.push(p.source.items[0]);
    bin.push(p.source.items[1]);
    bin.push(p.source.items[0]);  // out of order and duplicated
    p.bins.push_back(bin);
    const auto report = validate_packing(p);
    CHECK_FALSE(report.ok());
    const std::string text = report.to_string();
    CHECK(text.find("missing") != std::string::npos);
    CHECK(text.find("placed 2 times") != std::string::npos);
    CHECK(text.find("out of sequence order") != std::string::npos);
}

TEST_CASE("bin_count counts non-empty bins") {
    Packing p;
    CHECK(bin_count(p) == 0);
    p.source = zero_instance("bbw");
    Bin b1, b2;
    b1.push(p.source.items[0]);
    b1.push(p.source.items[2]);
    b2.push(p.source.items[1]);
    p.bins = {b1, b2};
    CHECK(bin_count(p) == 2);
    CHECK(validate_packing(p).ok());
}

TEST_CASE("instance io round trip") {
    const std::string text =
        "# three colors\n"
        "black 0\n"
        "white 1/2\n"
        "red 3/9\n"
        "black 1\n";
    const Instance inst = parse_instance_text(text);
    REQUIRE(inst.items.size() == 4);
    CHECK(inst.color_names == std::vector<std::string>{"black", "white", "red"});
    CHECK(inst.items[1].size == Rational(1, 2));
    CHECK(inst.items[2].size == Rational(1, 3));
    CHECK(inst.items[3].seq_index == 4);

    const Instance again = parse_instance_text(format_instance(inst));
    CHECK(again.items == inst.items);
    CHECK(again.color_names == inst.color_names);
}

TEST_CASE("instance io rejects malformed input") {
    CHECK_THROWS_AS(parse_instance_text("black\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance_text("black 2/1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance_text("black 1/2 extra\n"), std::invalid_argument);
}
