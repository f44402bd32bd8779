#include "cbp/discrepancy.hpp"

#include <algorithm>

namespace cbp {

void DiscrepancyState::update(Color c) {
    if (c.id >= static_cast<int>(cd.size())) {
        cd.resize(c.id + 1, 0);
    }
    for (int i = 0; i < static_cast<int>(cd.size()); ++i) {
        if (i == c.id) {
            ++cd[i];
        } else if (cd[i] > 0) {
            --cd[i];
        }
    }
    d = std::max(d, cd[c.id]);
    ++n_seen;
}

std::int64_t DiscrepancyState::cd_of(Color c) const {
    if (c.id < 0 || c.id >= static_cast<int>(cd.size())) {
        return 0;
    }
    return cd[c.id];
}

std::int64_t lb1(const Instance& inst) {
    Rational total{0};
    for (const Item& item : inst.items) {
        total += item.size;
    }
    return ceil_to_int64(total);
}

std::int64_t lb2(const Instance& inst) {
    DiscrepancyState state;
    for (const Item& item : inst.items) {
        state.update(item.color);
    }
    return state.d;
}

std::int64_t lb2_oracle(const Instance& inst) {
    const int n = static_cast<int>(inst.items.size());
    std::int64_t best = 0;
    for (int c = 0; c < inst.num_colors(); ++c) {
        for (int i = 0; i < n; ++i) {
            std::int64_t sum = 0;
            for (int j = i; j < n; ++j) {
                sum += inst.items[j].color.id == c ? 1 : -1;
                best = std::max(best, sum);
            }
        }
    }
    return best;
}

}  // namespace cbp
