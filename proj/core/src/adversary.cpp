#include "cbp/adversary.hpp"

#include "cbp/discrepancy.hpp"
#include "cbp/offline.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cbp {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) {
        throw std::logic_error("adversary: " + what);
    }
}

// Drives one algorithm, mirrors its packing, and records the transcript.
class Game {
public:
    explicit Game(OnlineAlgorithm& alg) : alg_(&alg) {}

    Item emit(Color c, const Rational& size = Rational(0)) {
        const Item item = builder_.add(c, size);
        const Placement placement = alg_->place(item, packing_);
        apply_placement(packing_, item, placement);
        placements_.push_back(placement);
        last_real_bin_ = placement.is_new_bin()
                             ? static_cast<int>(packing_.bins.size()) - 1
                             : placement.bin_index;
        return item;
    }

    int emitted() const { return static_cast<int>(builder_.instance().items.size()); }
    const Packing& packing() const { return packing_; }
    int last_real_bin() const { return last_real_bin_; }

    // ids follow first emission order, matching the instance file format
    Color color(const std::string& name) { return builder_.color(name); }
    Color black() { return color("black"); }
    Color white() { return color("white"); }
    Color red() { return color("red"); }

    Transcript finish(std::string stop_reason, std::vector<std::string> notes,
                      std::int64_t threshold) {
        Transcript t;
        t.emitted = builder_.take();
        t.packing = std::move(packing_);
        t.packing.source = t.emitted;
        t.placements = std::move(placements_);
        t.final_bins = bin_count(t.packing);
        t.bins_by_color.assign(t.emitted.num_colors(), 0);
        for (const Bin& bin : t.packing.bins) {
            if (!bin.empty()) {
                ++t.bins_by_color[bin.top_color().id];
            }
        }
        t.threshold = threshold;
        t.stop_reason = std::move(stop_reason);
        t.phase_notes = std::move(notes);
        return t;
    }

private:
    OnlineAlgorithm* alg_;
    InstanceBuilder builder_;
    Packing packing_;
    std::vector<Placement> placements_;
    int last_real_bin_ = -1;
    Color black_, white_, red_;
};

// The phase game watches one layer of bins: the real packing for plain
// algorithms, the pseudo-bin layer for Pseudo-BAF.
class LayerView {
public:
    virtual ~LayerView() = default;
    virtual int bins() const = 0;
    virtual const std::vector<Item>& stack(int bin) const = 0;
    virtual int last_bin() const = 0;  // layer bin holding the latest item
};

class RealView final : public LayerView {
public:
    explicit RealView(const Game& game) : game_(&game) {}
    int bins() const override { return static_cast<int>(game_->packing().bins.size()); }
    const std::vector<Item>& stack(int bin) const override {
        return game_->packing().bins[bin].items;
    }
    int last_bin() const override { return game_->last_real_bin(); }

private:
    const Game* game_;
};

class PseudoView final : public LayerView {
public:
    explicit PseudoView(const Pseudo& alg) : alg_(&alg) {}
    int bins() const override {
        return static_cast<int>(alg_->pseudo_layer().bins.size());
    }
    const std::vector<Item>& stack(int bin) const override {
        return alg_->pseudo_layer().bins[bin].items;
    }
    int last_bin() const override { return alg_->last_pseudo_bin(); }

private:
    const Pseudo* alg_;
};

struct PhaseParams {
    int step1_len = 0;     // alternating white/red items per phase
    int white_flood = 0;   // length of terminal same-color floods
    int black_flood = 0;   // length of phase-ending black floods
    std::int64_t stop_black_bins = 0;  // stop once this many black-top layer bins
};

struct PhaseOutcome {
    Color flood_color;  // color of the final flood
    int phases = 0;
};

// One phase forces the algorithm to grow its black-top bin count or ends
// the game with a flood of white_flood equal items; either way the
// emitted sequence never raises the maximal discrepancy.
class PhaseGame {
public:
    PhaseGame(Game& game, const LayerView& view, PhaseParams params,
              std::vector<std::string>& notes)
        : game_(game), view_(view), p_(params), notes_(notes) {}

    PhaseOutcome run() {
        PhaseOutcome outcome;
        outcome.flood_color = game_.black();
        const int phase_cap = static_cast<int>(3 * p_.stop_black_bins + 10);
        while (black_top_bins() < p_.stop_black_bins) {
            require(outcome.phases < phase_cap, "phase cap exceeded");
            ++outcome.phases;
            if (auto flooded = play_phase(outcome.phases)) {
                outcome.flood_color = *flooded;
                return outcome;
            }
            outcome.flood_color = game_.black();  // phase ended in a black flood
        }
        note(0, "black-top bins reached the target");
        return outcome;
    }

private:
    std::int64_t black_top_bins() const {
        std::int64_t count = 0;
        for (int i = 0; i < view_.bins(); ++i) {
            const auto& s = view_.stack(i);
            if (!s.empty() && s.back().color == game_.black()) {
                ++count;
            }
        }
        return count;
    }

    // the item directly under the just-placed item in its layer bin
    std::optional<Item> covered() const {
        const auto& s = view_.stack(view_.last_bin());
        if (s.size() < 2) {
            return std::nullopt;
        }
        return s[s.size() - 2];
    }

    bool covered_old_black() const {
        const auto under = covered();
        return under && under->color == game_.black() && under->seq_index <= phase_start_;
    }

    bool covered_new(Color c) const {
        const auto under = covered();
        return under && under->color == c && under->seq_index > phase_start_;
    }

    void flood(Color c, int len) {
        for (int i = 0; i < len; ++i) {
            game_.emit(c);
        }
    }

    void note(int phase, const std::string& text) {
        notes_.push_back("phase " + std::to_string(phase) + ": " + text);
    }

    // Returns the flood color when the phase ends the whole game.
    std::optional<Color> play_phase(int phase) {
        phase_start_ = game_.emitted();
        Color log_w = game_.white();
        Color log_r = game_.red();

        bool all_on_old_black = true;
        for (int i = 0; i < p_.step1_len; ++i) {
            game_.emit(i % 2 == 0 ? log_w : log_r);
            if (!covered_old_black()) {
                all_on_old_black = false;
            }
        }

        if (!all_on_old_black) {
            note(phase, "an alternating item avoided the old black tops; black flood");
            flood(game_.black(), p_.black_flood);
            return std::nullopt;
        }

        if (p_.step1_len % 2 == 0) {
            note(phase, "all alternating items on old black tops; white flood ends the game");
            flood(log_w, p_.white_flood);
            return log_w;
        }

        game_.emit(game_.black());  // e
        if (!covered_new(log_w)) {
            note(phase, "probe e missed the new white tops; white flood ends the game");
            flood(log_w, p_.white_flood);
            return log_w;
        }

        game_.emit(game_.black());  // f
        if (covered_new(log_w)) {
            std::swap(log_w, log_r);  // red and white are interchangeable here
            note(phase, "probe f landed on a new white top; white and red roles swap");
        }

        game_.emit(log_w);  // g
        game_.emit(log_r);  // h
        if (covered_new(log_w)) {
            note(phase, "probe h landed on a new white top; black flood");
            flood(game_.black(), p_.black_flood);
            return std::nullopt;
        }
        note(phase, "probe h missed the new white tops; white flood ends the game");
        flood(log_w, p_.white_flood);
        return log_w;
    }

    Game& game_;
    const LayerView& view_;
    PhaseParams p_;
    std::vector<std::string>& notes_;
    int phase_start_ = 0;
};

PhaseOutcome play_zero15(Game& game, const LayerView& view, int n,
                         std::vector<std::string>& notes) {
    for (int i = 0; i < n; ++i) {
        game.emit(game.black());
    }
    PhaseParams params;
    params.step1_len = n;
    params.white_flood = n;
    params.black_flood = n;
    params.stop_black_bins = ceil_15(n);
    return PhaseGame(game, view, params, notes).run();
}

}  // namespace

Transcript adversary_zero15(OnlineAlgorithm& alg, int n) {
    if (n <= 1) {
        throw std::invalid_argument("adversary_zero15 requires n > 1");
    }
    Game game(alg);
    RealView view(game);
    std::vector<std::string> notes;
    const PhaseOutcome outcome = play_zero15(game, view, n, notes);

    Transcript t = game.finish("forced " + std::to_string(ceil_15(n)) + " bins of color " +
                                   std::to_string(outcome.flood_color.id),
                               std::move(notes), ceil_15(n));
    require(t.final_bins >= ceil_15(n), "zero15 ended under the bin threshold");
    require(lb2(t.emitted) == n, "zero15 emitted discrepancy drifted from n");
    return t;
}

Size25Result adversary_size25(OnlineAlgorithm& alg, int n) {
    if (n <= 1) {
        throw std::invalid_argument("adversary_size25 requires n > 1");
    }
    Game game(alg);
    RealView view(game);
    std::vector<std::string> notes;

    const PhaseOutcome zero_outcome = play_zero15(game, view, n, notes);
    const int phase1_items = game.emitted();
    const Color flood = zero_outcome.flood_color;  // plays "white" below
    Color contrast{flood.id == 0 ? 1 : 0};         // plays "black"

    {
        std::int64_t flood_bins = 0;
        for (const Bin& bin : game.packing().bins) {
            if (!bin.empty() && bin.top_color() == flood) {
                ++flood_bins;
            }
        }
        require(flood_bins >= ceil_15(n), "zero-size part left too few flooded bins");
    }

    const Rational eps(BigInt(1), BigInt(6) * n);
    struct PhaseRecord {
        bool huge = false;
        int seq_white = 0, seq_black = 0, seq_special = 0, seq_huge = 0, seq_trail = 0;
    };
    std::vector<PhaseRecord> phases;

    BigInt pow5 = 1;
    std::int64_t i = 0, j = 0;
    while (j < n && i < ceil_25(n)) {
        ++i;
        pow5 *= 5;
        const Rational delta(BigInt(1), pow5 * 6 * n);

        PhaseRecord rec;
        rec.seq_white = game.emit(flood, eps).seq_index;
        const Item regular_black = game.emit(contrast, delta);
        rec.seq_black = regular_black.seq_index;

        const int landed = game.last_real_bin();
        const Bin& bin = game.packing().bins[landed];
        const bool empty_before = bin.level == regular_black.size;
        if (!empty_before) {
            // the small black sits on a loaded bin, so a huge item can
            // only open another bin
            rec.huge = true;
            ++j;
            rec.seq_special = game.emit(contrast, 3 * delta).seq_index;
            rec.seq_huge = game.emit(flood, Rational(1) - 2 * delta).seq_index;
            rec.seq_trail = game.emit(contrast, delta).seq_index;
        }
        phases.push_back(rec);
    }
    notes.push_back("sized game: " + std::to_string(i) + " phases, " + std::to_string(j) +
                    " huge items");

    Size25Result result;
    result.transcript =
        game.finish(j == n ? "placed all n huge items" : "reached the phase cap",
                    std::move(notes), ceil_25(n));
    require(result.transcript.final_bins >= ceil_25(n),
            "size25 ended under the bin threshold");

    // witness: zero-size part in n bins, each huge item boxed with its
    // phase's two regular black items on top of one of them, everything
    // else in one extra bin
    const Instance& emitted = result.transcript.emitted;
    Instance phase1_inst;
    phase1_inst.color_names = emitted.color_names;
    phase1_inst.items.assign(emitted.items.begin(), emitted.items.begin() + phase1_items);
    Packing witness = construct_lb2_packing(phase1_inst);
    require(static_cast<int>(witness.bins.size()) == n, "zero-size witness is not n bins");

    witness.source = emitted;
    Bin extra;
    extra.creation_index = static_cast<int>(witness.bins.size());
    int next_huge_bin = 0;
    const auto item_at = [&](int seq) { return emitted.items[seq - 1]; };
    for (const PhaseRecord& rec : phases) {
        extra.push(item_at(rec.seq_white));
        if (rec.huge) {
            Bin& host = witness.bins[next_huge_bin++];
            host.push(item_at(rec.seq_black));
            host.push(item_at(rec.seq_huge));
            host.push(item_at(rec.seq_trail));
            extra.push(item_at(rec.seq_special));
        } else {
            extra.push(item_at(rec.seq_black));
        }
    }
    witness.bins.push_back(std::move(extra));

    const ValidationReport report = validate_packing(witness);
    require(report.ok(), "size25 witness invalid: " + report.to_string());
    require(bin_count(witness) == n + 1, "size25 witness is not n + 1 bins");
    result.witness = std::move(witness);
    return result;
}

Instance gen_ffbf_hard(int n) {
    if (n < 1) {
        throw std::invalid_argument("gen_ffbf_hard requires n >= 1");
    }
    const Rational eps(BigInt(1), BigInt(4) * n);
    InstanceBuilder builder;
    for (int i = 0; i < n; ++i) {
        builder.add("black", eps);
        builder.add("black", eps);
        builder.add("white", eps);
        builder.add("red", eps);
    }
    Instance inst = builder.take();
    inst.label = "ffbf-hard-" + std::to_string(n);
    return inst;
}

Instance gen_wf_hard(int n) {
    if (n < 1) {
        throw std::invalid_argument("gen_wf_hard requires n >= 1");
    }
    const Rational eps(BigInt(1), BigInt(2) * n);
    const Rational delta(BigInt(1), BigInt(6) * n * n + 1);
    InstanceBuilder builder;
    for (int i = 0; i < n; ++i) {
        builder.add("black", delta);
        builder.add("black", eps);
        builder.add("white", delta);
        builder.add("red", delta);
    }
    Instance inst = builder.take();
    inst.label = "wf-hard-" + std::to_string(n);
    return inst;
}

Instance gen_pseudobaf_tight(int n) {
    if (n < 2) {
        throw std::invalid_argument("gen_pseudobaf_tight requires n >= 2");
    }
    const Rational eps(BigInt(1), BigInt(2) * n);
    InstanceBuilder builder;
    for (int i = 0; i + 1 < n; ++i) {
        builder.add("white", eps);
        builder.add("black", Rational(1));
        builder.add("black", eps);
    }
    Instance inst = builder.take();
    inst.label = "pseudobaf-tight-" + std::to_string(n);
    return inst;
}

PseudoTightResult run_pseudobaf_tight(int n) {
    if (n < 2) {
        throw std::invalid_argument("run_pseudobaf_tight requires n >= 2");
    }
    Pseudo alg(Pseudo::Layer::baf);
    Game game(alg);
    std::vector<std::string> notes;

    const Instance prefix = gen_pseudobaf_tight(n);
    for (const Item& item : prefix.items) {
        game.emit(game.color(prefix.color_name(item.color)), item.size);
    }
    PseudoTightResult result;
    result.sized_bins = bin_count(game.packing());

    // The sized prefix leaves n black pseudo bins in place of the usual
    // initial black flood; the phase game then grows the pseudo layer by
    // ceil((n-1)/2) bins. White floods may run n items long because the
    // prefix already fixed the maximal discrepancy at n.
    const int m = n - 1;
    const std::int64_t pseudo_target = n + (m + 1) / 2;
    if (n == 2) {
        // The phase probes would lift the black discrepancy over n here.
        // Instead: cover one black top, walk the discrepancy down on the
        // covered bin, then two blacks force a third pseudo bin.
        notes.push_back("n = 2 coda: w r w b b");
        for (Color c : {game.white(), game.red(), game.white(), game.black(),
                        game.black()}) {
            game.emit(c);
        }
    } else {
        PseudoView view(alg);
        PhaseParams params;
        params.step1_len = m;
        params.white_flood = n;
        params.black_flood = m;
        params.stop_black_bins = pseudo_target;
        PhaseGame(game, view, params, notes).run();
    }

    result.transcript = game.finish("pseudo layer reached " +
                                        std::to_string(pseudo_target) + " bins",
                                    std::move(notes), (7 * m + 1) / 2);
    require(lb2(result.transcript.emitted) == n,
            "pseudobaf-tight discrepancy drifted from n");
    return result;
}

}  // namespace cbp
