#pragma once

#include "cbp/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace cbp {

// Color ids are contiguous from 0 within one instance, assigned in order
// of first appearance. Display names live in Instance::color_names.
struct Color {
    int id = 0;
    auto operator<=>(const Color&) const = default;
};

struct Item {
    Color color;
    Rational size;
    int seq_index = 0;  // 1-based position in the input sequence
    bool operator==(const Item&) const = default;
};

// A bin holds items in arrival order. Adjacent items must differ in color
// and the level (sum of sizes) may not exceed 1.
struct Bin {
    std::vector<Item> items;
    Rational level{0};
    int creation_index = 0;

    bool empty() const { return items.empty(); }
    Color top_color() const { return items.back().color; }
    bool fits(const Item& item) const;
    void push(const Item& item);
};

struct Instance {
    std::vector<Item> items;
    std::vector<std::string> color_names;  // index = color id
    std::string label;

    int num_colors() const { return static_cast<int>(color_names.size()); }
    std::size_t size() const { return items.size(); }
    bool all_zero_size() const;
    const std::string& color_name(Color c) const;
};

// Incremental instance assembly; resolves color names to ids in
// first-appearance order and stamps sequence indices.
class InstanceBuilder {
public:
    Color color(const std::string& name);
    const Item& add(const std::string& color_name, const Rational& size = Rational(0));
    const Item& add(Color c, const Rational& size = Rational(0));
    const Instance& instance() const { return inst_; }
    Instance take() { return std::move(inst_); }

private:
    Instance inst_;
    std::map<std::string, int> ids_;
};

// Order-preserving assignment of the source items to bins.
struct Packing {
    Instance source;
    std::vector<Bin> bins;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Reports every violated packing invariant: capacity overflow, adjacent
// same-color pair, out-of-order or unknown items, missing/duplicated
// items, stale cached levels. Violations are data, not errors.
ValidationReport validate_packing(const Packing& p);

// Number of non-empty bins.
int bin_count(const Packing& p);

}  // namespace cbp
