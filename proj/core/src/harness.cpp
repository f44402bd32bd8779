#include "cbp/harness.hpp"

#include "cbp/adversary.hpp"
#include "cbp/discrepancy.hpp"
#include "cbp/instance_io.hpp"
#include "cbp/offline.hpp"
#include "cbp/online.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cbp {

namespace {

const char* color_palette(int i) {
    static const char* names[] = {"black", "white", "red", "green", "blue"};
    return i < 5 ? names[i] : nullptr;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(s);
    while (std::getline(in, field, sep)) {
        out.push_back(trim(field));
    }
    return out;
}

Instance make_instance(const ExperimentSpec& spec, int rep) {
    switch (spec.source) {
        case ExperimentSpec::Source::file:
            return load_instance(spec.file);
        case ExperimentSpec::Source::generator: {
            if (spec.generator == "ffbf") return gen_ffbf_hard(spec.generator_n);
            if (spec.generator == "wf") return gen_wf_hard(spec.generator_n);
            if (spec.generator == "pseudo-tight") return gen_pseudobaf_tight(spec.generator_n);
            throw std::invalid_argument("unknown generator '" + spec.generator + "'");
        }
        case ExperimentSpec::Source::random: {
            RandomSpec r = spec.random;
            r.seed += static_cast<std::uint64_t>(rep);
            return gen_random(r);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Instance gen_random(const RandomSpec& spec) {
    if (spec.colors < 1) {
        throw std::invalid_argument("gen_random requires colors >= 1");
    }
    if (spec.regime == SizeRegime::bounded && spec.bound_d < 1) {
        throw std::invalid_argument("gen_random requires d >= 1");
    }
    std::mt19937_64 rng(spec.seed);
    InstanceBuilder builder;
    for (int c = 0; c < spec.colors; ++c) {
        const char* name = color_palette(c);
        builder.color(name ? name : "c" + std::to_string(c));
    }
    for (int i = 0; i < spec.n; ++i) {
        const Color color{static_cast<int>(rng() % spec.colors)};
        Rational size{0};
        if (spec.regime == SizeRegime::uniform) {
            const std::uint64_t q = 1 + rng() % 1000;
            const std::uint64_t k = 1 + rng() % q;
            size = Rational(BigInt(k), BigInt(q));
        } else if (spec.regime == SizeRegime::bounded) {
            const std::uint64_t q = 1 + rng() % 1000;
            const std::uint64_t k = rng() % (q / spec.bound_d + 1);
            size = Rational(BigInt(k), BigInt(q));
        }
        builder.add(color, size);
    }
    Instance inst = builder.take();
    std::ostringstream label;
    label << "random-s" << spec.seed << "-n" << spec.n;
    inst.label = label.str();
    return inst;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    ExperimentResult result;
    for (int rep = 0; rep < spec.repetitions; ++rep) {
        Instance inst;
        try {
            inst = make_instance(spec, rep);
        } catch (const std::exception& e) {
            result.errors.push_back("instance " + std::to_string(rep) + ": " + e.what());
            continue;
        }
        std::string label = inst.label.empty() ? "instance" : inst.label;
        if (spec.source == ExperimentSpec::Source::random) {
            label += "-r" + std::to_string(rep);
        }

        for (const std::string& alg_name : spec.algorithms) {
            try {
                auto alg = make_algorithm(alg_name);
                const auto start = std::chrono::steady_clock::now();
                RunResult run = run_online(*alg, inst);
                const auto elapsed = std::chrono::steady_clock::now() - start;

                const ValidationReport report = validate_packing(run.packing);
                if (!report.ok()) {
                    throw std::logic_error("invalid packing: " + report.to_string());
                }

                ResultRow row;
                row.instance = label;
                row.algorithm = alg_name;
                row.bins = bin_count(run.packing);

                OptMethod method = spec.opt;
                if (method == OptMethod::automatic) {
                    method = static_cast<int>(inst.items.size()) <= spec.exact_limit
                                 ? OptMethod::exact
                                 : OptMethod::lb2_bound;
                }
                switch (method) {
                    case OptMethod::exact: {
                        ExactOptions options;
                        options.max_items = static_cast<int>(inst.items.size());
                        options.node_budget = spec.node_budget;
                        row.opt = exact_opt(inst, options).bins;
                        row.opt_method = "exact";
                        break;
                    }
                    case OptMethod::lb2_bound:
                        row.opt = lb2(inst);
                        row.opt_method = "lb2";
                        break;
                    case OptMethod::witness: {
                        Packing witness = construct_lb2_packing(inst);
                        const ValidationReport wr = validate_packing(witness);
                        if (!wr.ok()) {
                            throw std::logic_error("invalid witness: " + wr.to_string());
                        }
                        row.opt = bin_count(witness);
                        row.opt_method = "witness";
                        break;
                    }
                    case OptMethod::automatic:
                        throw std::logic_error("unresolved opt method");
                }
                if (row.opt <= 0) {
                    throw std::logic_error("optimum is zero; ratio undefined");
                }
                row.ratio = Rational(BigInt(row.bins), BigInt(row.opt));
                row.runtime_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
                result.rows.push_back(std::move(row));
            } catch (const std::exception& e) {
                result.errors.push_back(label + "/" + alg_name + ": " + e.what());
            }
        }
    }
    return result;
}

std::string emit_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "instance,algorithm,bins,opt,opt_method,ratio_num,ratio_den,runtime_ms\n";
    for (const ResultRow& row : rows) {
        out << row.instance << ',' << row.algorithm << ',' << row.bins << ',' << row.opt
            << ',' << row.opt_method << ',' << row.ratio.numerator() << ','
            << row.ratio.denominator() << ',' << row.runtime_ms << '\n';
    }
    return out.str();
}

std::vector<ResultRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("empty csv");
    }
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 8) {
            throw std::invalid_argument("csv row needs 8 fields: " + line);
        }
        ResultRow row;
        row.instance = fields[0];
        row.algorithm = fields[1];
        row.bins = std::stoll(fields[2]);
        row.opt = std::stoll(fields[3]);
        row.opt_method = fields[4];
        row.ratio = Rational(BigInt(fields[5]), BigInt(fields[6]));
        row.runtime_ms = std::stoll(fields[7]);
        rows.push_back(std::move(row));
    }
    return rows;
}

ExperimentSpec parse_experiment_spec(std::istream& in) {
    ExperimentSpec spec;
    std::string line;
    int lineno = 0;
    bool have_source = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("spec line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key == "algs") {
            spec.algorithms = split(value, ',');
        } else if (key == "source") {
            have_source = true;
            if (value == "file") spec.source = ExperimentSpec::Source::file;
            else if (value == "gen") spec.source = ExperimentSpec::Source::generator;
            else if (value == "random") spec.source = ExperimentSpec::Source::random;
            else throw std::invalid_argument("unknown source '" + value + "'");
        } else if (key == "file") {
            spec.file = value;
        } else if (key == "gen") {
            spec.generator = value;
        } else if (key == "gen_n") {
            spec.generator_n = std::stoi(value);
        } else if (key == "seed") {
            spec.random.seed = std::stoull(value);
        } else if (key == "n") {
            spec.random.n = std::stoi(value);
        } else if (key == "colors") {
            spec.random.colors = std::stoi(value);
        } else if (key == "sizes") {
            if (value == "zero") {
                spec.random.regime = SizeRegime::zero;
            } else if (value == "uniform") {
                spec.random.regime = SizeRegime::uniform;
            } else if (value.rfind("1/", 0) == 0) {
                spec.random.regime = SizeRegime::bounded;
                spec.random.bound_d = std::stoi(value.substr(2));
            } else {
                throw std::invalid_argument("unknown size regime '" + value + "'");
            }
        } else if (key == "count") {
            spec.repetitions = std::stoi(value);
        } else if (key == "opt") {
            if (value == "exact") spec.opt = OptMethod::exact;
            else if (value == "lb2") spec.opt = OptMethod::lb2_bound;
            else if (value == "witness") spec.opt = OptMethod::witness;
            else if (value == "auto") spec.opt = OptMethod::automatic;
            else throw std::invalid_argument("unknown opt method '" + value + "'");
        } else if (key == "limit") {
            spec.exact_limit = std::stoi(value);
        } else if (key == "budget") {
            spec.node_budget = std::stoll(value);
        } else {
            throw std::invalid_argument("unknown spec key '" + key + "'");
        }
    }
    if (spec.algorithms.empty()) {
        throw std::invalid_argument("spec needs at least one algorithm (algs = ...)");
    }
    if (!have_source) {
        throw std::invalid_argument("spec needs a source");
    }
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open spec file: " + path);
    }
    return parse_experiment_spec(in);
}

}  // namespace cbp
