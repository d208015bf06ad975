// Copyright 2026 The Tailor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tailor/channel.hpp"
#include "tailor/code.hpp"
#include "tailor/decoder.hpp"
#include "tailor/diagnostics.hpp"
#include "tailor/ingest.hpp"
#include "tailor/parallel.hpp"
#include "tailor/search.hpp"

namespace tailor::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

const std::vector<double> kBiasGridP = {0.001, 0.01};
const std::vector<double> kBiasGridEta = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
const std::vector<double> kRateGridP = {1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2, 1e-1};
const std::vector<double> kRateGridEta = {1, 100};

constexpr const char* kBestRandomLabel = "best_random";

StabilizerCode resolve_code(const std::string& name) {
    if (auto code = named_code(name)) {
        return *code;
    }
    if (std::filesystem::is_regular_file(name)) {
        return load_code_file(name);
    }
    std::string known;
    for (const auto& l : named_code_labels()) {
        known += (known.empty() ? "" : ", ") + l;
    }
    throw UsageError("unknown code '" + name + "': not a built-in code (" + known + ") and not a file");
}

struct ChannelArgs {
    std::optional<double> p;
    std::optional<double> eta;
    std::string channel_file;
    std::string ptm_file;
    std::string extrapolation = "convex";
    double max_clipped = kDefaultMaxClippedMass;

    void add_to(CLI::App& app, bool allow_files) {
        app.add_option("--p", p, "Total physical error probability of the biased channel");
        app.add_option("--eta", eta, "Bias p_z / p_x of the biased channel");
        if (allow_files) {
            app.add_option("--channel", channel_file, "Pauli-probability file on all code qubits");
            app.add_option("--ptm", ptm_file, "2-qubit PTM (or Pauli-probability) file to twirl and extrapolate");
            app.add_option("--extrapolation", extrapolation, "convex | convex-product | product (with --ptm)")
                ->capture_default_str();
            app.add_option("--max-clipped", max_clipped, "Largest negative mass sanitize may clip")
                ->capture_default_str();
        }
    }

    PauliChannel resolve(std::size_t n, std::ostream& err) const {
        int sources = (p || eta ? 1 : 0) + (channel_file.empty() ? 0 : 1) + (ptm_file.empty() ? 0 : 1);
        if (sources != 1) {
            throw UsageError("give exactly one channel: --p and --eta, --channel FILE, or --ptm FILE");
        }
        if (p || eta) {
            if (!p || !eta) {
                throw UsageError("--p and --eta go together");
            }
            return iid(biased_single_qubit(BiasedParams::from_total_and_bias(*p, *eta)), n);
        }
        if (!channel_file.empty()) {
            auto ch = load_channel_file(channel_file);
            if (ch.num_qubits() != n) {
                throw ValidationError(channel_file + " acts on " + std::to_string(ch.num_qubits()) +
                                      " qubits, code has " + std::to_string(n));
            }
            return ch;
        }
        auto input = load_two_qubit_input(ptm_file, max_clipped);
        for (const auto& w : input.warnings) {
            err << "warning: " << ptm_file << ": " << w << '\n';
        }
        return extrapolate(input.channel, parse_extrapolation(extrapolation), n);
    }
};

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) {
                out.push_back(part);
            }
        }
    }
    return out;
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw ValidationError("cannot write " + path);
    }
    file << content;
    if (!file) {
        throw ValidationError("failed writing " + path);
    }
}

struct PoolArgs {
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    std::size_t max_weight = 4;
    std::size_t min_distance = 3;
    bool dedup = false;
    bool include_low_weight = false;

    SearchConfig config(std::size_t threads) const {
        SearchConfig c;
        c.num_samples = samples;
        c.seed = seed;
        c.max_generator_weight = max_weight;
        c.min_distance = min_distance;
        c.dedup = dedup;
        c.include_low_weight = include_low_weight;
        c.threads = threads;
        return c;
    }

    void add_constraints(CLI::App& app) {
        app.add_option("--seed", seed, "Master seed of the random code sampler")->capture_default_str();
        app.add_option("--max-weight", max_weight, "Largest generator weight")->capture_default_str();
        app.add_option("--min-distance", min_distance, "Smallest accepted code distance")->capture_default_str();
        app.add_flag("--dedup", dedup, "Drop codes generating an already-seen stabilizer group");
        app.add_flag("--include-low-weight", include_low_weight,
                     "Also draw generators of weight 1 and 2 (default draws weights 3..max)");
    }
};

void print_sampler_metadata(const SearchConfig& config, const RejectionCounts& r, std::ostream& err) {
    std::string sizes;
    for (auto w : config.support_sizes()) {
        sizes += (sizes.empty() ? "" : ",") + std::to_string(w);
    }
    err << "sampler: generator supports {" << sizes << "}"
        << (config.include_low_weight ? "" : " (weights 1-2 excluded; pass --include-low-weight to allow)") << '\n'
        << "rejected: noncommuting=" << r.noncommuting << " dependent=" << r.dependent << " dead_ends=" << r.dead_ends
        << " distance=" << r.distance_too_small << " duplicate=" << r.duplicate << '\n';
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
    std::string code = "steane";
    ChannelArgs channel;
    std::string table_path;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    auto code = resolve_code(a.code);
    auto ch = a.channel.resolve(code.num_qubits(), err);
    auto table = optimal_decoder(code, ch);
    if (!a.table_path.empty()) {
        write_output(a.table_path, table.to_json() + "\n", out);
    }
    out << format_double(table.logical_error_rate()) << '\n';
    return kOk;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
    std::vector<std::string> codes = {"cyclic7", "steane"};
    std::string mode = "bias";
    std::vector<double> p;
    std::vector<double> eta;
    PoolArgs pool;
    bool redraw = false;
    std::size_t threads = 1;
    std::string out_path;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    if (a.mode != "bias" && a.mode != "rate") {
        throw UsageError("--mode must be bias or rate");
    }
    auto ps = sorted_unique(a.p.empty() ? (a.mode == "bias" ? kBiasGridP : kRateGridP) : a.p);
    auto etas = sorted_unique(a.eta.empty() ? (a.mode == "bias" ? kBiasGridEta : kRateGridEta) : a.eta);
    for (double p : ps) {
        if (!(p >= 0.0 && p < 1.0)) throw UsageError("every p must lie in [0, 1)");
    }
    for (double e : etas) {
        if (!(e > 0.0)) throw UsageError("every eta must be positive");
    }

    std::map<std::string, StabilizerCode> codes;
    for (const auto& name : split_list(a.codes)) {
        auto code = resolve_code(name);
        std::string label = code.label().empty() ? name : code.label();
        codes.emplace(label, std::move(code));
    }
    if (codes.empty() && a.pool.samples == 0) {
        throw UsageError("nothing to sweep: give --codes or --best-random-samples");
    }
    std::size_t n = codes.empty() ? 7 : codes.begin()->second.num_qubits();
    for (const auto& [label, code] : codes) {
        if (code.num_qubits() != n) {
            throw ValidationError("all swept codes must have the same qubit count");
        }
    }

    struct Point {
        double p;
        double eta;
    };
    std::vector<Point> grid;
    for (double p : ps) {
        for (double e : etas) {
            grid.push_back({p, e});
        }
    }
    std::vector<PauliChannel> channels;
    channels.reserve(grid.size());
    for (const auto& g : grid) {
        channels.push_back(iid(biased_single_qubit(BiasedParams::from_total_and_bias(g.p, g.eta)), n));
    }

    std::vector<std::string> labels;
    for (const auto& [label, code] : codes) {
        labels.push_back(label);
    }
    if (a.pool.samples > 0) {
        labels.push_back(kBestRandomLabel);
    }
    std::sort(labels.begin(), labels.end());

    std::map<std::string, std::vector<double>> rates;
    for (const auto& [label, code] : codes) {
        auto& r = rates[label];
        r.resize(grid.size());
        parallel_for(grid.size(), a.threads, [&, &c = code](std::size_t i) { r[i] = logical_error_rate(c, channels[i]); });
    }
    if (a.pool.samples > 0) {
        auto config = a.pool.config(a.threads);
        config.n = n;
        auto& r = rates[kBestRandomLabel];
        r.resize(grid.size());
        std::optional<CodePool> shared;
        if (!a.redraw) {
            shared = sample_pool(config);
            print_sampler_metadata(config, shared->rejections, err);
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (a.redraw) {
                auto c = config;
                c.seed = candidate_seed(config.seed, 1000003 + i);
                r[i] = rank_pool(sample_pool(c), channels[i], a.threads).best().logical_error_rate;
            } else {
                r[i] = rank_pool(*shared, channels[i], a.threads).best().logical_error_rate;
            }
        }
    }

    std::string csv = "code,p,eta,logical_error_rate\n";
    for (const auto& label : labels) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            csv += label + "," + format_double(grid[i].p) + "," + format_double(grid[i].eta) + "," +
                   format_double(rates[label][i]) + "\n";
        }
    }
    write_output(a.out_path, csv, out);
    return kOk;
}

// --- search -----------------------------------------------------------------

struct SearchArgs {
    PoolArgs pool;
    ChannelArgs channel;
    std::size_t threads = 1;
    std::string out_path;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    auto config = a.pool.config(a.threads);
    config.validate();
    auto ch = a.channel.resolve(config.n, err);
    auto result = run_search(config, ch);
    if (!a.out_path.empty()) {
        write_output(a.out_path, search_result_to_json(result) + "\n", out);
    }
    print_sampler_metadata(config, result.rejections, err);
    const auto& best = result.best();
    out << "best code (sample " << best.sample_index << ", fingerprint " << best.fingerprint << "):\n";
    for (const auto& g : best.code.generators()) {
        out << "  " << g.to_string() << '\n';
    }
    out << "logical_error_rate " << format_double(best.logical_error_rate) << '\n';
    return kOk;
}

// --- ingest -----------------------------------------------------------------

struct IngestArgs {
    std::vector<std::string> files;
    std::string extrapolation = "all";
    std::vector<std::string> codes = {"cyclic7", "steane"};
    PoolArgs pool;
    double max_clipped = kDefaultMaxClippedMass;
    bool skip_bad = false;
    std::size_t threads = 1;
    std::string out_path;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<Extrapolation> how;
    if (a.extrapolation == "all") {
        how = {Extrapolation::Convex, Extrapolation::ConvexProduct, Extrapolation::Product};
    } else {
        try {
            how = {parse_extrapolation(a.extrapolation)};
        } catch (const ValidationError& e) {
            throw UsageError(e.what());
        }
    }
    std::map<std::string, StabilizerCode> codes;
    for (const auto& name : split_list(a.codes)) {
        auto code = resolve_code(name);
        if (code.num_qubits() != 7) {
            throw ValidationError("ingest extrapolates to 7 qubits; code " + name + " has " +
                                  std::to_string(code.num_qubits()));
        }
        std::string label = code.label().empty() ? name : code.label();
        codes.emplace(label, std::move(code));
    }
    std::optional<CodePool> pool;
    if (a.pool.samples > 0) {
        auto config = a.pool.config(a.threads);
        pool = sample_pool(config);
        print_sampler_metadata(config, pool->rejections, err);
    }

    struct Loaded {
        std::string path;
        TwoQubitInput input;
    };
    std::vector<Loaded> loaded;
    bool failed = false;
    for (const auto& path : a.files) {
        try {
            auto input = load_two_qubit_input(path, a.max_clipped);
            for (const auto& w : input.warnings) {
                err << "warning: " << path << ": " << w << '\n';
            }
            if (input.report.clipped_mass > 1e-12) {
                err << "note: " << path << ": clipped negative mass " << format_double(input.report.clipped_mass)
                    << '\n';
            }
            loaded.push_back({path, std::move(input)});
        } catch (const ValidationError& e) {
            err << "error: " << path << ": " << e.what() << '\n';
            if (!a.skip_bad) {
                return kDataError;
            }
            failed = true;
        }
    }
    std::stable_sort(loaded.begin(), loaded.end(),
                     [](const Loaded& x, const Loaded& y) { return x.input.tau_ms < y.input.tau_ms; });

    std::string csv = "code,tau_ms,extrapolation,logical_error_rate\n";
    for (const auto& file : loaded) {
        for (auto h : how) {
            auto ch = extrapolate(file.input.channel, h, 7);
            std::map<std::string, double> row;
            for (const auto& [label, code] : codes) {
                row[label] = logical_error_rate(code, ch);
            }
            if (pool) {
                row[kBestRandomLabel] = rank_pool(*pool, ch, a.threads).best().logical_error_rate;
            }
            for (const auto& [label, rate] : row) {
                csv += label + "," + format_double(file.input.tau_ms) + "," + to_string(h) + "," +
                       format_double(rate) + "\n";
            }
        }
    }
    write_output(a.out_path, csv, out);
    if (failed) {
        err << "some inputs were skipped\n";
    }
    return kOk;
}

// --- codes ------------------------------------------------------------------

int cmd_codes_show(const std::string& name, std::ostream& out) {
    auto code = resolve_code(name);
    out << "label: " << (code.label().empty() ? name : code.label()) << '\n';
    out << "n: " << code.num_qubits() << "  k: " << code.num_logical();
    if (code.num_logical() == 1 && code.num_qubits() <= kMaxExhaustiveQubits) {
        out << "  distance: " << distance(code);
    }
    out << "  max generator weight: " << code.max_generator_weight() << '\n';
    out << "generators:\n";
    for (const auto& g : code.generators()) {
        out << "  " << g.to_string() << '\n';
    }
    if (code.has_logicals()) {
        out << "logical X: " << code.logical_x().to_string() << '\n';
        out << "logical Z: " << code.logical_z().to_string() << '\n';
    }
    out << "destabilizers:\n";
    for (const auto& d : code.destabilizers()) {
        out << "  " << d.to_string() << '\n';
    }
    out << "fingerprint: " << fingerprint(code) << '\n';
    return kOk;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact decoding and search workbench for small stabilizer codes under Pauli noise", "tailor"};
    app.require_subcommand(1);

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Logical error rate of one code under one channel");
    eval_cmd->add_option("--code", eval.code, "Built-in label or code file")->capture_default_str();
    eval.channel.add_to(*eval_cmd, true);
    eval_cmd->add_option("--table", eval.table_path, "Also write the decoder table as JSON");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Rates over a (p, eta) grid of biased channels, as CSV");
    sweep_cmd->add_option("--codes", sweep.codes, "Comma-separated code labels or files")
        ->allow_extra_args(false)
        ->capture_default_str();
    sweep_cmd
        ->add_option("--mode", sweep.mode,
                     "bias: default p {0.001,0.01}, eta {1,2,5,...,1000}; rate: default p 1e-4..0.1, eta {1,100}")
        ->capture_default_str();
    sweep_cmd->add_option("--p", sweep.p, "Total error probabilities (overrides the mode default)")->delimiter(',');
    sweep_cmd->add_option("--eta", sweep.eta, "Bias values (overrides the mode default)")->delimiter(',');
    sweep_cmd->add_option("--best-random-samples", sweep.pool.samples,
                          "Add a best_random row from this many sampled codes (0 = off)");
    sweep.pool.add_constraints(*sweep_cmd);
    sweep_cmd->add_flag("--redraw", sweep.redraw, "Draw a fresh random pool per grid point instead of re-ranking one");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out_path, "Output CSV path (default stdout)");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Rank randomly sampled codes under one channel");
    search_cmd->add_option("--samples", search.pool.samples, "Number of sampled codes")
        ->required()
        ->check(CLI::PositiveNumber);
    search.pool.add_constraints(*search_cmd);
    search.channel.add_to(*search_cmd, true);
    search_cmd->add_option("--threads", search.threads, "Worker threads (0 = all cores)")->capture_default_str();
    search_cmd->add_option("--out", search.out_path, "Write the ranked result list as JSON");

    IngestArgs ingest;
    auto* ingest_cmd = app.add_subcommand("ingest", "Twirl, extrapolate and evaluate 2-qubit channel estimates");
    ingest_cmd->add_option("files", ingest.files, "PTM or Pauli-probability files")->required();
    ingest_cmd->add_option("--extrapolation", ingest.extrapolation, "convex | convex-product | product | all")
        ->capture_default_str();
    ingest_cmd->add_option("--codes", ingest.codes, "Comma-separated code labels or files")
        ->allow_extra_args(false)
        ->capture_default_str();
    ingest_cmd->add_option("--best-random-samples", ingest.pool.samples,
                           "Add a best_random row from this many sampled codes (0 = off)");
    ingest.pool.add_constraints(*ingest_cmd);
    ingest_cmd->add_option("--max-clipped", ingest.max_clipped, "Largest negative mass sanitize may clip")
        ->capture_default_str();
    ingest_cmd->add_flag("--skip-bad", ingest.skip_bad, "Skip files that fail validation instead of aborting");
    ingest_cmd->add_option("--threads", ingest.threads, "Worker threads (0 = all cores)")->capture_default_str();
    ingest_cmd->add_option("--out", ingest.out_path, "Output CSV path (default stdout)");

    auto* codes_cmd = app.add_subcommand("codes", "Inspect built-in or file codes");
    codes_cmd->require_subcommand(1);
    std::string show_name;
    auto* show_cmd = codes_cmd->add_subcommand("show", "Print generators, logicals, destabilizers and distance");
    show_cmd->add_option("code", show_name, "Built-in label or code file")->required();
    auto* list_cmd = codes_cmd->add_subcommand("list", "List built-in code labels");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval_cmd) return cmd_eval(eval, out, err);
        if (*sweep_cmd) return cmd_sweep(sweep, out, err);
        if (*search_cmd) return cmd_search(search, out, err);
        if (*ingest_cmd) return cmd_ingest(ingest, out, err);
        if (*show_cmd) return cmd_codes_show(show_name, out);
        if (*list_cmd) {
            for (const auto& l : named_code_labels()) {
                out << l << '\n';
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsage;
}

}  // namespace tailor::cli
