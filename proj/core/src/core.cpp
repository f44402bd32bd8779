#include "cbp/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cbp {

bool Bin::fits(const Item& item) const {
    if (!items.empty() && top_color() == item.color) {
        return false;
    }
    return level + item.size <= Rational(1);
}

void Bin::push(const Item& item) {
    items.push_back(item);
    level += item.size;
}

bool Instance::all_zero_size() const {
    return std::all_of(items.begin(), items.end(),
                       [](const Item& it) { return it.size == Rational(0); });
}

const std::string& Instance::color_name(Color c) const {
    static const std::string unknown = "?";
    if (c.id < 0 || c.id >= num_colors()) {
        return unknown;
    }
    return color_names[c.id];
}

Color InstanceBuilder::color(const std::string& name) {
    auto [it, inserted] = ids_.emplace(name, static_cast<int>(inst_.color_names.size()));
    if (inserted) {
        inst_.color_names.push_back(name);
    }
    return Color{it->second};
}

const Item& InstanceBuilder::add(const std::string& color_name, const Rational& size) {
    return add(color(color_name), size);
}

const Item& InstanceBuilder::add(Color c, const Rational& size) {
    if (c.id < 0 || c.id >= inst_.num_colors()) {
        throw std::invalid_argument("unknown color id " + std::to_string(c.id));
    }
    if (size < Rational(0) || size > Rational(1)) {
        throw std::invalid_argument("item size outside [0,1]: " + to_string(size));
    }
    inst_.items.push_back(Item{c, size, static_cast<int>(inst_.items.size()) + 1});
    return inst_.items.back();
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations) {
        out << v << '\n';
    }
    return out.str();
}

ValidationReport validate_packing(const Packing& p) {
    ValidationReport report;
    auto complain = [&](const std::string& msg) { report.violations.push_back(msg); };

    std::map<int, const Item*> source;
    for (const Item& item : p.source.items) {
        source[item.seq_index] = &item;
    }

    std::map<int, int> placed;  // seq_index -> placement count
    for (std::size_t b = 0; b < p.bins.size(); ++b) {
        const Bin& bin = p.bins[b];
        Rational sum{0};
        for (std::size_t i = 0; i < bin.items.size(); ++i) {
            const Item& item = bin.items[i];
            sum += item.size;
            placed[item.seq_index]++;
            auto it = source.find(item.seq_index);
            if (it == source.end()) {
                complain("packed item " + std::to_string(item.seq_index) +
                         " not in the source instance");
            } else if (*it->second != item) {
                complain("packed item " + std::to_string(item.seq_index) +
                         " differs from the source item");
            }
            if (i > 0) {
                if (bin.items[i - 1].color == item.color) {
                    complain("bin " + std::to_string(b) + ": adjacent items " +
                             std::to_string(bin.items[i - 1].seq_index) + "," +
                             std::to_string(item.seq_index) + " share a color");
                }
                if (bin.items[i - 1].seq_index >= item.seq_index) {
                    complain("bin " + std::to_string(b) + ": items out of sequence order at " +
                             std::to_string(item.seq_index));
                }
            }
        }
        if (sum > Rational(1)) {
            complain("bin " + std::to_string(b) + ": level " + to_string(sum) + " > 1");
        }
        if (sum != bin.level) {
            complain("bin " + std::to_string(b) + ": cached level " + to_string(bin.level) +
                     " != item sum " + to_string(sum));
        }
    }

    for (const auto& [seq, item] : source) {
        auto it = placed.find(seq);
        if (it == placed.end()) {
            complain("item " + std::to_string(seq) + " missing from packing");
        } else if (it->second > 1) {
            complain("item " + std::to_string(seq) + " placed " + std::to_string(it->second) +
                     " times");
        }
    }
    return report;
}

int bin_count(const Packing& p) {
    int n = 0;
    for (const Bin& b : p.bins) {
        if (!b.empty()) {
            ++n;
        }
    }
    return n;
}

}  // namespace cbp
