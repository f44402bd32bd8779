#pragma once

#include "cbp/core.hpp"
#include "cbp/discrepancy.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace cbp {

struct Placement {
    static constexpr int new_bin_index = -1;
    int bin_index = new_bin_index;

    static Placement existing(int i) { return Placement{i}; }
    static Placement new_bin() { return Placement{new_bin_index}; }
    bool is_new_bin() const { return bin_index == new_bin_index; }
    bool operator==(const Placement&) const = default;
};

// An online algorithm picks a placement for each incoming item; a shared
// driver applies it to the packing immediately after the call, so
// implementations update their internal state under that assumption.
// Algorithms must be deterministic.
class OnlineAlgorithm {
public:
    virtual ~OnlineAlgorithm() = default;
    virtual std::string name() const = 0;
    virtual Placement place(const Item& item, const Packing& packing) = 0;
};

// Keeps a single open bin; closes it for good when an item does not fit
// (capacity or color) and opens a new one.
class NextFit final : public OnlineAlgorithm {
public:
    std::string name() const override { return "nf"; }
    Placement place(const Item& item, const Packing& packing) override;

private:
    int open_ = -1;
};

enum class FitPolicy { first, best, worst };

// Never opens a bin when some open bin can legally take the item.
// first: lowest creation index; best: highest level; worst: lowest level
// (ties by creation index).
class AnyFit final : public OnlineAlgorithm {
public:
    explicit AnyFit(FitPolicy policy) : policy_(policy) {}
    std::string name() const override;
    Placement place(const Item& item, const Packing& packing) override;

private:
    FitPolicy policy_;
};

// Balancing Any Fit for zero-size items. Keeps, for every color c, the
// main invariant N_c - ceil(D/2) <= CD_c via three placement cases, all
// evaluated on the state before the incoming item:
//   1. no bins, or c-bins only: open a new bin;
//   2. at most one color has more than ceil(D/2) bins: place on a bin of
//      the most frequent other color, ties resolved by the lowest
//      creation index over all bins of the tied colors;
//   3. two colors exceed ceil(D/2): the item goes to the other one of
//      the pair when its color is in the pair, otherwise the pair color
//      whose main invariant has slack keeps it.
// The discrepancy state advances after the placement.
class Baf final : public OnlineAlgorithm {
public:
    // The pseudo layer reuses Baf on nonzero items; standalone use
    // rejects them.
    explicit Baf(bool ignore_sizes = false) : ignore_sizes_(ignore_sizes) {}

    std::string name() const override { return "baf"; }
    Placement place(const Item& item, const Packing& packing) override;

    const DiscrepancyState& discrepancy() const { return disc_; }
    std::int64_t bins_of(Color c) const;
    std::int64_t total_bins() const { return total_bins_; }

    struct InvariantReport {
        bool main_ok = true;
        bool secondary_applicable = false;
        bool secondary_ok = true;
    };
    // Audits the main invariant for every color and, when two colors are
    // the two strictly most frequent, the secondary invariant
    // 2a_b + 2a_w <= CD_b + CD_w + 1.
    InvariantReport check_invariants() const;

private:
    void ensure_color(Color c);
    void track(Placement chosen, Color placed_on, Color item_color);

    bool ignore_sizes_;
    DiscrepancyState disc_;
    std::vector<std::set<int>> bins_by_color_;  // bin indices, creation-ordered
    int total_bins_ = 0;
};

// Two-layer algorithm: a zero-size color layer assigns items to pseudo
// bins of unbounded capacity; within each pseudo bin, Next Fit splits the
// stack into unit-capacity real bins.
class Pseudo final : public OnlineAlgorithm {
public:
    enum class Layer { baf, any_fit };
    explicit Pseudo(Layer layer);

    std::string name() const override;
    Placement place(const Item& item, const Packing& packing) override;

    // Read-only view of the color layer, used by adversaries and tests.
    const Packing& pseudo_layer() const { return pseudo_; }
    int last_pseudo_bin() const { return last_pseudo_bin_; }

private:
    Layer kind_;
    std::unique_ptr<OnlineAlgorithm> color_layer_;
    Packing pseudo_;              // zero-size mirror of the items
    std::vector<int> open_real_;  // per pseudo bin: its current real bin
    int last_pseudo_bin_ = -1;
};

// nf | ff | bf | wf | baf | pseudo-baf | pseudo-af
std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name);
const std::vector<std::string>& algorithm_names();

struct TraceStep {
    Item item;
    Placement placement;
    int bins_after = 0;
    bool operator==(const TraceStep&) const = default;
};

struct RunResult {
    Packing packing;
    std::vector<TraceStep> trace;
};

using StepObserver =
    std::function<void(const TraceStep&, const Packing&, const OnlineAlgorithm&)>;

// Applies a placement to the packing; throws std::logic_error when the
// algorithm picked an out-of-range or ineligible bin.
void apply_placement(Packing& packing, const Item& item, Placement placement);

RunResult run_online(OnlineAlgorithm& alg, const Instance& inst,
                     const StepObserver& observer = {});

}  // namespace cbp
