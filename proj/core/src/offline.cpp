#include "cbp/offline.hpp"

#include "cbp/discrepancy.hpp"
#include "cbp/online.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace cbp {

namespace {

// ---------------------------------------------------------------------
// exact branch and bound
// ---------------------------------------------------------------------

class ExactSolver {
public:
    ExactSolver(const Instance& inst, const ExactOptions& options)
        : inst_(inst), options_(options), n_(static_cast<int>(inst.items.size())) {}

    ExactResult solve() {
        ExactResult result;
        result.witness.source = inst_;
        if (n_ == 0) {
            return result;
        }

        precompute_suffix_bounds();
        seed_heuristic_bound(result);

        std::int64_t lower = 1;
        if (options_.use_lb2_prune) {
            lower = std::max(lb1(inst_), lb2(inst_));
        }
        for (std::int64_t k = lower; k < best_bins_; ++k) {
            cap_ = k;
            visited_.clear();
            cur_.source = inst_;
            cur_.bins.clear();
            free_capacity_ = Rational(0);
            if (dfs(0)) {
                best_bins_ = k;
                best_ = cur_;
                break;
            }
        }

        result.bins = best_bins_;
        result.witness = best_;
        result.nodes = nodes_;
        return result;
    }

private:
    void precompute_suffix_bounds() {
        suffix_size_.assign(n_ + 1, Rational(0));
        for (int i = n_ - 1; i >= 0; --i) {
            suffix_size_[i] = suffix_size_[i + 1] + inst_.items[i].size;
        }
        suffix_lb2_.assign(n_ + 1, 0);
        if (options_.use_lb2_prune) {
            for (int i = 0; i < n_; ++i) {
                DiscrepancyState state;
                for (int j = i; j < n_; ++j) {
                    state.update(inst_.items[j].color);
                }
                suffix_lb2_[i] = state.d;
            }
        }
    }

    void seed_heuristic_bound(ExactResult& result) {
        for (const char* name : {"wf", "ff", "bf", "nf"}) {
            auto alg = make_algorithm(name);
            RunResult run = run_online(*alg, inst_);
            const std::int64_t bins = bin_count(run.packing);
            if (bins < best_bins_) {
                best_bins_ = bins;
                best_ = std::move(run.packing);
            }
        }
        result.bins = best_bins_;
        result.witness = best_;
    }

    std::int64_t additional_lower_bound(int pos) const {
        std::int64_t add = 0;
        if (suffix_size_[pos] > free_capacity_) {
            add = ceil_to_int64(suffix_size_[pos] - free_capacity_);
        }
        if (options_.use_lb2_prune) {
            add = std::max(add, suffix_lb2_[pos] -
                                    static_cast<std::int64_t>(cur_.bins.size()));
        }
        return add;
    }

    std::string state_key(int pos) const {
        std::vector<std::pair<int, const Rational*>> tops;
        tops.reserve(cur_.bins.size());
        for (const Bin& bin : cur_.bins) {
            tops.emplace_back(bin.top_color().id, &bin.level);
        }
        std::sort(tops.begin(), tops.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first < b.first : *a.second < *b.second;
        });
        std::ostringstream key;
        key << pos;
        for (const auto& [color, level] : tops) {
            key << '|' << color << ':' << level->numerator() << '/' << level->denominator();
        }
        return key.str();
    }

    bool dfs(int pos) {
        if (pos == n_) {
            return true;
        }
        if (++nodes_ > options_.node_budget) {
            throw SolverBudgetError("exact solver exceeded the node budget of " +
                                    std::to_string(options_.node_budget));
        }
        const std::int64_t used = static_cast<std::int64_t>(cur_.bins.size());
        if (used + additional_lower_bound(pos) > cap_) {
            return false;
        }
        if (!visited_.insert(state_key(pos)).second) {
            return false;
        }

        const Item& item = inst_.items[pos];

        // one representative bin per (top color, level) class; recursion
        // can reallocate cur_.bins, so index access only
        std::vector<std::pair<int, Rational>> tried;
        for (int i = 0; i < static_cast<int>(cur_.bins.size()); ++i) {
            if (!cur_.bins[i].fits(item)) {
                continue;
            }
            const std::pair<int, Rational> cls{cur_.bins[i].top_color().id,
                                               cur_.bins[i].level};
            if (std::find(tried.begin(), tried.end(), cls) != tried.end()) {
                continue;
            }
            tried.push_back(cls);
            cur_.bins[i].push(item);
            free_capacity_ -= item.size;
            if (dfs(pos + 1)) {
                return true;
            }
            free_capacity_ += item.size;
            cur_.bins[i].items.pop_back();
            cur_.bins[i].level -= item.size;
        }

        if (used + 1 <= cap_) {
            Bin bin;
            bin.creation_index = static_cast<int>(cur_.bins.size());
            bin.push(item);
            cur_.bins.push_back(std::move(bin));
            free_capacity_ += Rational(1) - item.size;
            if (dfs(pos + 1)) {
                return true;
            }
            free_capacity_ -= Rational(1) - item.size;
            cur_.bins.pop_back();
        }
        return false;
    }

    const Instance& inst_;
    const ExactOptions& options_;
    const int n_;

    std::vector<Rational> suffix_size_;
    std::vector<std::int64_t> suffix_lb2_;

    std::int64_t best_bins_ = std::numeric_limits<std::int64_t>::max();
    Packing best_;
    Packing cur_;
    Rational free_capacity_{0};
    std::int64_t cap_ = 0;
    std::int64_t nodes_ = 0;
    std::unordered_set<std::string> visited_;
};

// ---------------------------------------------------------------------
// constructive packer for zero-size items
// ---------------------------------------------------------------------

using Stack = std::vector<Item>;

std::int64_t discrepancy_of(const std::vector<Item>& seq) {
    DiscrepancyState state;
    for (const Item& item : seq) {
        state.update(item.color);
    }
    return state.d;
}

struct Interval {
    int start = 0;  // inclusive indices into the local sequence
    int end = 0;
    int color = 0;  // dominant color id
};

// Inclusion-maximal intervals whose discrepancy for some color reaches
// the sequence maximum d. Distinct ones are provably disjoint.
std::vector<Interval> important_intervals(const std::vector<Item>& seq, std::int64_t d) {
    const int m = static_cast<int>(seq.size());
    int max_color = -1;
    for (const Item& item : seq) {
        max_color = std::max(max_color, item.color.id);
    }

    std::vector<Interval> all;
    for (int c = 0; c <= max_color; ++c) {
        std::vector<Interval> hits;
        for (int i = 0; i < m; ++i) {
            std::int64_t sum = 0;
            for (int j = i; j < m; ++j) {
                sum += seq[j].color.id == c ? 1 : -1;
                if (sum == d) {
                    hits.push_back(Interval{i, j, c});
                }
            }
        }
        std::sort(hits.begin(), hits.end(), [](const Interval& a, const Interval& b) {
            return a.start != b.start ? a.start < b.start : a.end > b.end;
        });
        int covered_end = -1;
        for (const Interval& iv : hits) {
            if (iv.end > covered_end) {
                all.push_back(iv);
                covered_end = iv.end;
            }
        }
    }
    std::sort(all.begin(), all.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    return all;
}

void check(bool cond, const char* what) {
    if (!cond) {
        throw std::logic_error(std::string("lb2 construction: ") + what);
    }
}

std::vector<Stack> construct(std::vector<Item> seq);

std::vector<Item> slice(const std::vector<Item>& seq, int from, int to) {
    return std::vector<Item>(seq.begin() + from, seq.begin() + to + 1);
}

std::vector<Item> erase_positions(const std::vector<Item>& seq, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    std::vector<Item> out;
    out.reserve(seq.size() - positions.size());
    std::size_t next = 0;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        if (next < positions.size() && positions[next] == i) {
            ++next;
        } else {
            out.push_back(seq[i]);
        }
    }
    return out;
}

// Bins of both sub-packings share the items of a pure run: every stack of
// the left packing ends with one of them and every stack of the right
// packing starts with the same one. Concatenate stack pairs through it.
std::vector<Stack> merge_through(const std::vector<Stack>& left, const std::vector<Stack>& right,
                                 const std::vector<Item>& shared) {
    check(left.size() == shared.size() && right.size() == shared.size(),
          "merge expects one stack per shared item");
    std::vector<Stack> merged;
    for (const Item& x : shared) {
        const Stack* from = nullptr;
        const Stack* onto = nullptr;
        for (const Stack& s : left) {
            if (s.back().seq_index == x.seq_index) {
                from = &s;
                break;
            }
        }
        for (const Stack& s : right) {
            if (s.front().seq_index == x.seq_index) {
                onto = &s;
                break;
            }
        }
        check(from && onto, "merge item missing from a sub-packing");
        Stack joined = *from;
        joined.insert(joined.end(), onto->begin() + 1, onto->end());
        merged.push_back(std::move(joined));
    }
    return merged;
}

// Reduction for an important interval that still contains a non-dominant
// item: delete that item and its dominant successor, pack the rest, then
// splice the pair into a bin that is topped by the dominant color at the
// deletion point. The bin's top color is restored, so every later
// placement stays valid.
std::vector<Stack> reduce_mixed_interval(const std::vector<Item>& seq, const Interval& iv,
                                         int a_pos) {
    const Item a = seq[a_pos];
    const Item b = seq[a_pos + 1];
    check(b.color.id == iv.color, "deleted pair must end with the dominant color");

    std::vector<Stack> stacks = construct(erase_positions(seq, {a_pos, a_pos + 1}));
    std::sort(stacks.begin(), stacks.end(), [](const Stack& x, const Stack& y) {
        return x.front().seq_index < y.front().seq_index;
    });

    for (Stack& stack : stacks) {
        std::size_t prefix = 0;
        while (prefix < stack.size() && stack[prefix].seq_index < a.seq_index) {
            ++prefix;
        }
        if (prefix == 0 || stack[prefix - 1].color.id != iv.color) {
            continue;
        }
        stack.insert(stack.begin() + prefix, {a, b});
        return stacks;
    }
    throw std::logic_error("lb2 construction: no dominant-topped bin at the splice point");
}

std::vector<Stack> construct(std::vector<Item> seq) {
    if (seq.empty()) {
        return {};
    }
    const std::int64_t d = discrepancy_of(seq);
    if (d <= 1) {
        return {std::move(seq)};  // alternating colors fit one bin
    }

    const std::vector<Interval> intervals = important_intervals(seq, d);
    check(!intervals.empty(), "nonempty sequence has an important interval");

    // reduction (b): last non-dominant item inside an important interval
    for (const Interval& iv : intervals) {
        for (int i = iv.end; i >= iv.start; --i) {
            if (seq[i].color.id != iv.color) {
                check(i < iv.end, "non-dominant item cannot end an important interval");
                return reduce_mixed_interval(seq, iv, i);
            }
        }
    }

    // all intervals are now pure runs of d items of their dominant color,
    // which also makes them pairwise disjoint
    const int k = static_cast<int>(intervals.size());
    for (const Interval& iv : intervals) {
        check(iv.end - iv.start + 1 == d, "pure important interval has d items");
    }
    for (int i = 1; i < k; ++i) {
        check(intervals[i].start > intervals[i - 1].end, "pure intervals stay disjoint");
    }
    const int last = static_cast<int>(seq.size()) - 1;

    if (k > 2) {
        const Interval& i2 = intervals[1];
        auto left = construct(slice(seq, 0, i2.end));
        auto right = construct(slice(seq, i2.start, last));
        return merge_through(left, right, slice(seq, i2.start, i2.end));
    }

    if (k == 1) {
        const Interval& i1 = intervals[0];
        const bool j0 = i1.start > 0;
        const bool j1 = i1.end < last;
        if (j0 && j1) {
            auto left = construct(slice(seq, 0, i1.end));
            auto right = construct(slice(seq, i1.start, last));
            return merge_through(left, right, slice(seq, i1.start, i1.end));
        }
        if (!j0 && j1) {
            auto stacks = construct(erase_positions(seq, {i1.start}));
            stacks.push_back(Stack{seq[i1.start]});
            return stacks;
        }
        if (j0 && !j1) {
            auto stacks = construct(erase_positions(seq, {i1.end}));
            stacks.push_back(Stack{seq[i1.end]});
            return stacks;
        }
        // the sequence is one pure run: d singleton bins
        std::vector<Stack> stacks;
        for (const Item& item : seq) {
            stacks.push_back(Stack{item});
        }
        return stacks;
    }

    check(k == 2, "partition has at most two important intervals");
    const Interval& i1 = intervals[0];
    const Interval& i2 = intervals[1];
    if (i1.start > 0) {  // J0 nonempty: split off (J0 I1)
        auto left = construct(slice(seq, 0, i1.end));
        auto right = construct(slice(seq, i1.start, last));
        return merge_through(left, right, slice(seq, i1.start, i1.end));
    }
    if (i2.end < last) {  // J2 nonempty: split off (I2 J2)
        auto left = construct(slice(seq, 0, i2.end));
        auto right = construct(slice(seq, i2.start, last));
        return merge_through(left, right, slice(seq, i2.start, i2.end));
    }
    if (i1.end + 1 == i2.start) {  // J1 empty: two adjacent pure runs
        check(i1.color != i2.color, "adjacent runs of one color would merge");
        std::vector<Stack> stacks;
        for (int j = 0; j < d; ++j) {
            stacks.push_back(Stack{seq[i1.start + j], seq[i2.start + j]});
        }
        return stacks;
    }

    // only I1 J1 I2 remain
    if (i1.color != i2.color) {
        auto stacks = construct(erase_positions(seq, {i1.start, i2.end}));
        stacks.push_back(Stack{seq[i1.start], seq[i2.end]});
        return stacks;
    }
    int q = -1;
    for (int i = i1.end + 1; i < i2.start; ++i) {
        if (seq[i].color.id != i1.color) {
            q = i;
            break;
        }
    }
    check(q >= 0, "separator between same-colored runs has a non-dominant item");
    auto stacks = construct(erase_positions(seq, {i1.start, q, i2.end}));
    stacks.push_back(Stack{seq[i1.start], seq[q], seq[i2.end]});
    return stacks;
}

}  // namespace

ExactResult exact_opt(const Instance& inst, const ExactOptions& options) {
    if (static_cast<int>(inst.items.size()) > options.max_items) {
        throw SolverLimitError("instance has " + std::to_string(inst.items.size()) +
                               " items, over the solver cap of " +
                               std::to_string(options.max_items));
    }
    return ExactSolver(inst, options).solve();
}

Packing construct_lb2_packing(const Instance& inst) {
    if (!inst.all_zero_size()) {
        throw std::invalid_argument("lb2 construction requires zero-size items");
    }
    Packing packing;
    packing.source = inst;
    std::vector<Stack> stacks = construct(inst.items);
    std::sort(stacks.begin(), stacks.end(), [](const Stack& x, const Stack& y) {
        return x.front().seq_index < y.front().seq_index;
    });
    for (std::size_t i = 0; i < stacks.size(); ++i) {
        Bin bin;
        bin.creation_index = static_cast<int>(i);
        for (const Item& item : stacks[i]) {
            bin.push(item);
        }
        packing.bins.push_back(std::move(bin));
    }
    return packing;
}

}  // namespace cbp
