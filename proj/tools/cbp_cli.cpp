#include "cbp/adversary.hpp"
#include "cbp/discrepancy.hpp"
#include "cbp/harness.hpp"
#include "cbp/instance_io.hpp"
#include "cbp/offline.hpp"
#include "cbp/online.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void print_packing(std::ostream& out, const cbp::Packing& packing) {
    for (std::size_t i = 0; i < packing.bins.size(); ++i) {
        const cbp::Bin& bin = packing.bins[i];
        out << "bin " << i + 1 << " (level " << cbp::to_string(bin.level) << "):";
        for (const cbp::Item& item : bin.items) {
            out << ' ' << packing.source.color_name(item.color) << '/'
                << cbp::to_string(item.size);
        }
        out << '\n';
    }
}

void write_trace(const std::string& path, const cbp::RunResult& run) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write trace file: " + path);
    }
    for (const cbp::TraceStep& step : run.trace) {
        out << step.item.seq_index << ' '
            << run.packing.source.color_name(step.item.color) << ' '
            << cbp::to_string(step.item.size) << " -> "
            << (step.placement.is_new_bin() ? std::string("new")
                                            : "bin " + std::to_string(step.placement.bin_index + 1))
            << " bins=" << step.bins_after << '\n';
    }
}

int require_valid(const cbp::Packing& packing) {
    const cbp::ValidationReport report = cbp::validate_packing(packing);
    if (!report.ok()) {
        std::cerr << "packing validation failed:\n" << report.to_string();
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colored bin packing laboratory"};
    app.require_subcommand(1);

    std::string input, output, alg_name, trace_path, method, type;
    bool print = false;
    int n = 2;
    int limit = 16;
    std::int64_t budget = 50'000'000;

    auto* pack = app.add_subcommand("pack", "run an online algorithm over an instance file");
    pack->add_option("--alg", alg_name, "nf|ff|bf|wf|baf|pseudo-baf|pseudo-af")->required();
    pack->add_option("--input", input, "instance file")->required();
    pack->add_option("--trace", trace_path, "write the per-step trace here");
    pack->add_flag("--print", print, "print the final packing");

    auto* opt = app.add_subcommand("opt", "restricted offline optimum");
    opt->add_option("--input", input, "instance file")->required();
    opt->add_option("--method", method, "exact|zero-construct")->default_val("exact");
    opt->add_option("--limit", limit, "exact solver size cap")->default_val(16);
    opt->add_option("--budget", budget, "exact solver node budget");
    opt->add_flag("--print", print, "print the witness packing");

    auto* bounds = app.add_subcommand("bounds", "print LB1 and LB2 for an instance");
    bounds->add_option("--input", input, "instance file")->required();

    auto* adversary = app.add_subcommand("adversary", "play an adaptive lower-bound game");
    adversary->add_option("--type", type, "zero15|size25")->required();
    adversary->add_option("--alg", alg_name, "algorithm under attack")->required();
    adversary->add_option("--n", n, "optimum parameter (n > 1)")->required();
    adversary->add_option("--emit", output, "write the emitted instance here");

    auto* gen = app.add_subcommand("gen", "write a static hard instance");
    gen->add_option("--type", type, "ffbf|wf|pseudo-tight")->required();
    gen->add_option("--n", n, "instance parameter")->required();
    gen->add_option("--out", output, "output file")->required();

    auto* bench = app.add_subcommand("bench", "run an experiment spec, write csv");
    bench->add_option("--spec", input, "experiment spec file")->required();
    bench->add_option("--out", output, "csv output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (pack->parsed()) {
            const cbp::Instance inst = cbp::load_instance(input);
            auto alg = cbp::make_algorithm(alg_name);
            const cbp::RunResult run = cbp::run_online(*alg, inst);
            if (int rc = require_valid(run.packing)) {
                return rc;
            }
            std::cout << "bins " << cbp::bin_count(run.packing) << '\n';
            if (!trace_path.empty()) {
                write_trace(trace_path, run);
            }
            if (print) {
                print_packing(std::cout, run.packing);
            }
            return 0;
        }

        if (opt->parsed()) {
            const cbp::Instance inst = cbp::load_instance(input);
            cbp::Packing witness;
            if (method == "exact") {
                cbp::ExactOptions options;
                options.max_items = limit;
                options.node_budget = budget;
                const cbp::ExactResult result = cbp::exact_opt(inst, options);
                witness = result.witness;
                std::cout << "bins " << result.bins << '\n';
            } else if (method == "zero-construct") {
                witness = cbp::construct_lb2_packing(inst);
                std::cout << "bins " << cbp::bin_count(witness) << '\n';
            } else {
                std::cerr << "unknown method '" << method << "'\n";
                return 2;
            }
            if (int rc = require_valid(witness)) {
                return rc;
            }
            if (print) {
                print_packing(std::cout, witness);
            }
            return 0;
        }

        if (bounds->parsed()) {
            const cbp::Instance inst = cbp::load_instance(input);
            std::cout << "LB1 " << cbp::lb1(inst) << '\n';
            std::cout << "LB2 " << cbp::lb2(inst) << '\n';
            return 0;
        }

        if (adversary->parsed()) {
            auto alg = cbp::make_algorithm(alg_name);
            if (type == "zero15") {
                const cbp::Transcript t = cbp::adversary_zero15(*alg, n);
                std::cout << "bins " << t.final_bins << '\n'
                          << "threshold " << t.threshold << '\n'
                          << "lb2 " << cbp::lb2(t.emitted) << '\n';
                if (!output.empty()) {
                    cbp::save_instance(t.emitted, output);
                }
                return t.final_bins >= t.threshold ? 0 : 1;
            }
            if (type == "size25") {
                const cbp::Size25Result result = cbp::adversary_size25(*alg, n);
                std::cout << "bins " << result.transcript.final_bins << '\n'
                          << "threshold " << result.transcript.threshold << '\n'
                          << "witness_bins " << cbp::bin_count(result.witness) << '\n';
                if (!output.empty()) {
                    cbp::save_instance(result.transcript.emitted, output);
                }
                return result.transcript.final_bins >= result.transcript.threshold ? 0 : 1;
            }
            std::cerr << "unknown adversary type '" << type << "'\n";
            return 2;
        }

        if (gen->parsed()) {
            cbp::Instance inst;
            if (type == "ffbf") {
                inst = cbp::gen_ffbf_hard(n);
            } else if (type == "wf") {
                inst = cbp::gen_wf_hard(n);
            } else if (type == "pseudo-tight") {
                inst = cbp::gen_pseudobaf_tight(n);
            } else {
                std::cerr << "unknown generator '" << type << "'\n";
                return 2;
            }
            cbp::save_instance(inst, output);
            std::cout << "wrote " << inst.items.size() << " items to " << output << '\n';
            return 0;
        }

        if (bench->parsed()) {
            const cbp::ExperimentSpec spec = cbp::load_experiment_spec(input);
            const cbp::ExperimentResult result = cbp::run_experiment(spec);
            std::ofstream out(output);
            if (!out) {
                throw std::runtime_error("cannot write csv file: " + output);
            }
            out << cbp::emit_csv(result.rows);
            std::cout << "rows " << result.rows.size() << '\n';
            for (const std::string& err : result.errors) {
                std::cerr << "error: " << err << '\n';
            }
            return result.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
