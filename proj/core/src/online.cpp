#include "cbp/online.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace cbp {

Placement NextFit::place(const Item& item, const Packing& packing) {
    if (open_ >= 0 && packing.bins[open_].fits(item)) {
        return Placement::existing(open_);
    }
    open_ = static_cast<int>(packing.bins.size());
    return Placement::new_bin();
}

std::string AnyFit::name() const {
    switch (policy_) {
        case FitPolicy::first: return "ff";
        case FitPolicy::best: return "bf";
        case FitPolicy::worst: return "wf";
    }
    return "af";
}

Placement AnyFit::place(const Item& item, const Packing& packing) {
    int chosen = -1;
    for (int i = 0; i < static_cast<int>(packing.bins.size()); ++i) {
        const Bin& bin = packing.bins[i];
        if (bin.empty() || !bin.fits(item)) {
            continue;
        }
        if (chosen < 0) {
            chosen = i;
            if (policy_ == FitPolicy::first) {
                break;
            }
            continue;
        }
        if (policy_ == FitPolicy::best && bin.level > packing.bins[chosen].level) {
            chosen = i;
        } else if (policy_ == FitPolicy::worst && bin.level < packing.bins[chosen].level) {
            chosen = i;
        }
    }
    return chosen >= 0 ? Placement::existing(chosen) : Placement::new_bin();
}

void Baf::ensure_color(Color c) {
    if (c.id >= static_cast<int>(bins_by_color_.size())) {
        bins_by_color_.resize(c.id + 1);
    }
}

std::int64_t Baf::bins_of(Color c) const {
    if (c.id < 0 || c.id >= static_cast<int>(bins_by_color_.size())) {
        return 0;
    }
    return static_cast<std::int64_t>(bins_by_color_[c.id].size());
}

void Baf::track(Placement chosen, Color placed_on, Color item_color) {
    if (chosen.is_new_bin()) {
        bins_by_color_[item_color.id].insert(total_bins_++);
    } else {
        bins_by_color_[placed_on.id].erase(chosen.bin_index);
        bins_by_color_[item_color.id].insert(chosen.bin_index);
    }
}

Placement Baf::place(const Item& item, const Packing&) {
    if (!ignore_sizes_ && item.size != Rational(0)) {
        throw std::invalid_argument("baf packs zero-size items only");
    }
    const Color c = item.color;
    ensure_color(c);

    const std::int64_t half = (disc_.d + 1) / 2;  // ceil(D/2) before the item
    const int colors = static_cast<int>(bins_by_color_.size());

    std::vector<int> over;  // colors with N > ceil(D/2)
    for (int id = 0; id < colors; ++id) {
        if (static_cast<std::int64_t>(bins_by_color_[id].size()) > half) {
            over.push_back(id);
        }
    }

    Placement chosen = Placement::new_bin();
    Color placed_on = c;

    const bool only_c_bins =
        static_cast<std::int64_t>(bins_by_color_[c.id].size()) == total_bins_;
    if (total_bins_ == 0 || only_c_bins) {
        // case 1: nothing suitable exists
    } else if (over.size() <= 1) {
        // case 2: most frequent other color, first fit across ties
        std::size_t best_n = 0;
        for (int id = 0; id < colors; ++id) {
            if (id != c.id) {
                best_n = std::max(best_n, bins_by_color_[id].size());
            }
        }
        int best_bin = std::numeric_limits<int>::max();
        for (int id = 0; id < colors; ++id) {
            if (id == c.id || bins_by_color_[id].size() != best_n) {
                continue;
            }
            if (*bins_by_color_[id].begin() < best_bin) {
                best_bin = *bins_by_color_[id].begin();
                placed_on = Color{id};
            }
        }
        chosen = Placement::existing(best_bin);
    } else if (over.size() == 2) {
        // case 3: the lower color id of the pair plays "b"
        const Color b{std::min(over[0], over[1])};
        const Color w{std::max(over[0], over[1])};
        Color target;
        if (c == w) {
            target = b;
        } else if (c == b) {
            target = w;
        } else {
            const std::int64_t alpha_b = bins_of(b) - half;
            target = alpha_b < disc_.cd_of(b) ? w : b;
        }
        placed_on = target;
        chosen = Placement::existing(*bins_by_color_[target.id].begin());
    } else {
        // more than two colors above ceil(D/2) contradicts Claim 3.3
        throw std::logic_error("baf: main invariant lost, " +
                               std::to_string(over.size()) + " colors over ceil(D/2)");
    }

    track(chosen, placed_on, c);
    disc_.update(c);
    return chosen;
}

Baf::InvariantReport Baf::check_invariants() const {
    InvariantReport report;
    const std::int64_t half = (disc_.d + 1) / 2;
    std::vector<std::pair<std::int64_t, int>> counts;
    for (int id = 0; id < static_cast<int>(bins_by_color_.size()); ++id) {
        const std::int64_t n = static_cast<std::int64_t>(bins_by_color_[id].size());
        if (n - half > disc_.cd_of(Color{id})) {
            report.main_ok = false;
        }
        counts.emplace_back(n, id);
    }
    std::sort(counts.rbegin(), counts.rend());
    if (counts.size() >= 2) {
        const std::int64_t third = counts.size() >= 3 ? counts[2].first : 0;
        if (counts[1].first > third) {
            report.secondary_applicable = true;
            const auto alpha = [&](int id) {
                return static_cast<std::int64_t>(bins_by_color_[id].size()) - half;
            };
            const std::int64_t lhs = 2 * alpha(counts[0].second) + 2 * alpha(counts[1].second);
            const std::int64_t rhs = disc_.cd_of(Color{counts[0].second}) +
                                     disc_.cd_of(Color{counts[1].second}) + 1;
            report.secondary_ok = lhs <= rhs;
        }
    }
    return report;
}

Pseudo::Pseudo(Layer layer) : kind_(layer) {
    color_layer_ = layer == Layer::baf
                       ? std::unique_ptr<OnlineAlgorithm>(std::make_unique<Baf>())
                       : std::make_unique<AnyFit>(FitPolicy::first);
}

std::string Pseudo::name() const {
    return kind_ == Layer::baf ? "pseudo-baf" : "pseudo-af";
}

Placement Pseudo::place(const Item& item, const Packing& packing) {
    const Item token{item.color, Rational(0), item.seq_index};
    const Placement layer_choice = color_layer_->place(token, pseudo_);

    if (layer_choice.is_new_bin()) {
        last_pseudo_bin_ = static_cast<int>(pseudo_.bins.size());
        apply_placement(pseudo_, token, layer_choice);
        open_real_.push_back(static_cast<int>(packing.bins.size()));
        return Placement::new_bin();
    }

    last_pseudo_bin_ = layer_choice.bin_index;
    apply_placement(pseudo_, token, layer_choice);
    const int real = open_real_[last_pseudo_bin_];
    if (packing.bins[real].fits(item)) {
        return Placement::existing(real);
    }
    open_real_[last_pseudo_bin_] = static_cast<int>(packing.bins.size());
    return Placement::new_bin();
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name) {
    if (name == "nf") return std::make_unique<NextFit>();
    if (name == "ff") return std::make_unique<AnyFit>(FitPolicy::first);
    if (name == "bf") return std::make_unique<AnyFit>(FitPolicy::best);
    if (name == "wf") return std::make_unique<AnyFit>(FitPolicy::worst);
    if (name == "baf") return std::make_unique<Baf>();
    if (name == "pseudo-baf") return std::make_unique<Pseudo>(Pseudo::Layer::baf);
    if (name == "pseudo-af") return std::make_unique<Pseudo>(Pseudo::Layer::any_fit);
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"nf", "ff",         "bf",       "wf",
                                                   "baf", "pseudo-baf", "pseudo-af"};
    return names;
}

void apply_placement(Packing& packing, const Item& item, Placement placement) {
    if (placement.is_new_bin()) {
        Bin bin;
        bin.creation_index = static_cast<int>(packing.bins.size());
        bin.push(item);
        packing.bins.push_back(std::move(bin));
        return;
    }
    if (placement.bin_index < 0 ||
        placement.bin_index >= static_cast<int>(packing.bins.size())) {
        throw std::logic_error("placement into nonexistent bin " +
                               std::to_string(placement.bin_index));
    }
    Bin& bin = packing.bins[placement.bin_index];
    if (!bin.fits(item)) {
        throw std::logic_error("illegal placement of item " + std::to_string(item.seq_index) +
                               " into bin " + std::to_string(placement.bin_index));
    }
    bin.push(item);
}

RunResult run_online(OnlineAlgorithm& alg, const Instance& inst, const StepObserver& observer) {
    RunResult result;
    result.packing.source = inst;
    for (const Item& item : inst.items) {
        const Placement placement = alg.place(item, result.packing);
        apply_placement(result.packing, item, placement);
        result.trace.push_back(
            TraceStep{item, placement, static_cast<int>(result.packing.bins.size())});
        if (observer) {
            observer(result.trace.back(), result.packing, alg);
        }
    }
    return result;
}

}  // namespace cbp
