#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "ccstop/errors.hpp"
#include "ccstop/exact.hpp"
#include "ccstop/generators.hpp"
#include "ccstop/graph_io.hpp"
#include "ccstop/metagame.hpp"
#include "ccstop/montecarlo.hpp"
#include "ccstop/strategy.hpp"
#include "json.hpp"

#ifndef CCSTOP_VERSION
#define CCSTOP_VERSION "dev"
#endif

using namespace ccstop;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

// Where an instance comes from: a named family, a random k-tree, or a file.
struct InstanceOptions {
    std::string family;
    std::optional<int> ktree;
    std::string input;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> side;
    std::optional<std::string> ratio;
    std::optional<Vertex> attach;
    std::uint64_t graph_seed = 1;

    void attach_to(CLI::App& app) {
        app.add_option("--family", family, "Named graph family");
        app.add_option("--ktree", ktree, "Random k-tree of this width");
        app.add_option("--input", input, "Graph or construction-sequence file");
        app.add_option("--n", n, "Size parameter");
        app.add_option("--k", k, "Width parameter (k_star)");
        app.add_option("--d", d, "Grid dimension");
        app.add_option("--side", side, "Grid side length");
        app.add_option("--ratio", ratio, "two_star_plus_star 2-star share, e.g. 999/1000");
        app.add_option("--attach", attach, "two_star_plus_star bridge vertex");
        app.add_option("--graph-seed", graph_seed, "Seed for random instances")->capture_default_str();
    }

    Instance build() const {
        const int sources = (family.empty() ? 0 : 1) + (ktree ? 1 : 0) + (input.empty() ? 0 : 1);
        if (sources != 1) throw UsageError("give exactly one of --family, --ktree, --input");
        if (ktree) {
            if (!n) throw UsageError("--ktree needs --n");
            auto seq = gen_random_ktree(*ktree, static_cast<Vertex>(*n), graph_seed);
            return instance_from_sequence(std::move(seq), fmt::format("ktree(k={},n={},seed={})", *ktree, *n, graph_seed));
        }
        if (!input.empty()) {
            auto any = read_any_file(input);
            if (auto* seq = std::get_if<ConstructionSequence>(&any)) return instance_from_sequence(std::move(*seq), input);
            Instance inst;
            inst.description = input;
            inst.graph = std::move(std::get<Graph>(any));
            return inst;
        }
        FamilyParams params;
        params.n = n;
        params.k = k;
        params.d = d;
        params.side = side;
        params.seed = graph_seed;
        if (ratio) params.ratio = parse_rational(*ratio);
        params.attach = attach;
        return gen_named_family(parse_family(family), params);
    }

    Json echo() const {
        Json j;
        if (!family.empty()) j["family"] = family;
        if (ktree) j["ktree"] = *ktree;
        if (!input.empty()) j["input"] = input;
        if (n) j["n"] = *n;
        if (k) j["k"] = *k;
        if (d) j["d"] = *d;
        if (side) j["side"] = *side;
        if (ratio) j["ratio"] = *ratio;
        if (attach) j["attach"] = *attach;
        j["graph_seed"] = graph_seed;
        return j;
    }
};

struct EstimatorOptions {
    std::int64_t reps = 1000;
    std::uint64_t seed = 1;
    double ci = 0.99;
    unsigned threads = 0;

    void attach_to(CLI::App& app) {
        app.add_option("--reps", reps, "Monte Carlo replications")->capture_default_str();
        app.add_option("--seed", seed, "Monte Carlo master seed")->capture_default_str();
        app.add_option("--ci", ci, "Confidence level")->capture_default_str();
        app.add_option("--threads", threads, "Worker threads (default: $CCSTOP_THREADS, else all cores)");
    }

    EstimatorConfig config() const {
        EstimatorConfig cfg;
        cfg.replications = reps;
        cfg.seed = seed;
        cfg.ci_level = ci;
        cfg.threads = resolved_threads();
        return cfg;
    }

    unsigned resolved_threads() const {
        if (threads > 0) return threads;
        if (const char* env = std::getenv("CCSTOP_THREADS")) {
            try {
                const int value = std::stoi(env);
                if (value > 0) return static_cast<unsigned>(value);
            } catch (const std::exception&) {
            }
            throw UsageError(fmt::format("CCSTOP_THREADS must be a positive integer, got '{}'", env));
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    // Thread count is left out: results do not depend on it.
    Json echo() const { return Json{{"reps", reps}, {"seed", seed}, {"ci", ci}}; }
};

Json rational_json(const Rational& r) { return Json{{"exact", to_string(r)}, {"value", to_double(r)}}; }

Json estimate_json(const Estimate& e) {
    return Json{{"mean", e.mean},         {"std_error", e.std_error},       {"ci_low", e.ci_low},
                {"ci_high", e.ci_high},   {"replications", e.replications}, {"seed", e.seed}};
}

Json instance_json(const Instance& inst) {
    Json j{{"description", inst.description}, {"n", inst.graph.n()}, {"edges", inst.graph.edge_count()}};
    if (inst.sequence) j["k"] = inst.sequence->k();
    return j;
}

Json report_header(const std::string& command) { return Json{{"tool", "ccstop"}, {"version", CCSTOP_VERSION}, {"command", command}}; }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open " + out_path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write to " + out_path + " failed");
}

void emit_report(Json report, std::chrono::steady_clock::time_point start, const std::string& out_path) {
    report["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(report.dump(2) + "\n", out_path);
}

std::vector<StrategySpec> bound_strategies(const std::vector<std::string>& texts, const Instance& inst) {
    if (texts.empty()) throw UsageError("give at least one --strategy");
    std::vector<StrategySpec> specs;
    for (const auto& text : texts) specs.push_back(bind_strategy(parse_strategy(text), inst));
    return specs;
}

// --- generate ---

struct GenerateOptions {
    int k = 1;
    std::int64_t n = 0;
    std::uint64_t seed = 1;
    std::string out;
    InstanceOptions family;
    bool as_graph = false;
};

std::string write_instance(const Instance& inst, bool as_graph) {
    std::ostringstream text;
    if (inst.sequence && !as_graph) {
        write_sequence(text, *inst.sequence);
    } else {
        write_graph(text, inst.graph);
    }
    return text.str();
}

// --- blind-scan ---

struct ScanOptions {
    std::string kind = "tree";
    std::int64_t n = 0;
    int k = 1;
    InstanceOptions instance;
    std::string out;
};

std::string blind_scan(const ScanOptions& o) {
    std::optional<WitnessCurve> curve;
    if (o.kind == "tree" || o.kind == "ktree") {
        const int k = o.kind == "tree" ? 1 : o.k;
        if (o.n < 1 || k < 1 || o.n < k) throw ParameterError("blind-scan needs n >= k >= 1");
        curve.emplace(ktree_histogram(k, o.n), o.n);
    } else if (o.kind == "chordal") {
        const auto inst = o.instance.build();
        const auto ordering = clique_ordering(inst.graph);
        if (!ordering) throw ParameterError("blind-scan --kind chordal: " + inst.description + " is not chordal");
        curve.emplace(back_size_histogram(*ordering), inst.graph.n());
    } else {
        throw ParameterError("unknown scan kind '" + o.kind + "' (tree, ktree, chordal)");
    }
    const auto best = curve->argmax();
    std::string csv = "l,expected_cc,is_argmax\n";
    for (std::int64_t l = 0; l <= curve->n(); ++l) {
        const bool is_best = std::binary_search(best.begin(), best.end(), l);
        csv += fmt::format("{},{},{}\n", l, to_double(curve->value(l)), is_best ? 1 : 0);
    }
    return csv;
}

// --- run ---

struct RunOptions {
    InstanceOptions instance;
    EstimatorOptions estimator;
    std::vector<std::string> strategies;
    std::string mode = "mc";
    std::string table_out;
    std::string out;
};

Json run(const RunOptions& o) {
    const auto inst = o.instance.build();
    const auto specs = bound_strategies(o.strategies, inst);
    const auto* seq = inst.sequence ? &*inst.sequence : nullptr;
    const double n = inst.graph.n();

    Json report = report_header("run");
    Json config{{"instance", o.instance.echo()}, {"strategies", o.strategies}, {"mode", o.mode}};
    if (o.mode == "mc") config["estimator"] = o.estimator.echo();
    report["config"] = config;
    report["instance"] = instance_json(inst);

    Json results = Json::array();
    Json diffs;
    if (o.mode == "exact") {
        for (std::size_t i = 0; i < specs.size(); ++i) {
            const Rational value = brute_force_strategy_value(inst.graph, seq, specs[i]);
            Json r{{"strategy", describe(specs[i])}, {"expected", rational_json(value)}, {"per_n", to_double(value) / n}};
            results.push_back(r);
        }
    } else if (o.mode == "dp") {
        for (const auto& spec : specs) {
            if (!std::holds_alternative<DpOptimal>(spec)) throw UsageError("mode dp evaluates the dp strategy only");
        }
        const auto& table = *std::get<DpOptimal>(specs.front()).table;
        Json r{{"strategy", "dp"}};
        if (table.has_exact()) {
            r["expected"] = rational_json(table.exact.front());
        } else {
            r["expected"] = Json{{"value", table.root_value()}};
        }
        r["per_n"] = table.root_value() / n;
        results.push_back(r);
        if (!o.table_out.empty()) {
            std::ostringstream dump;
            write_value_table(dump, table);
            emit(dump.str(), o.table_out);
        }
    } else if (o.mode == "mc") {
        const auto cfg = o.estimator.config();
        if (specs.size() == 1) {
            const auto e = estimate_strategy(inst.graph, seq, specs.front(), cfg);
            results.push_back(Json{{"strategy", describe(specs.front())}, {"estimate", estimate_json(e)}, {"per_n", e.mean / n}});
        } else {
            const auto cmp = compare_strategies(inst.graph, seq, specs, cfg);
            for (std::size_t i = 0; i < specs.size(); ++i) {
                results.push_back(Json{{"strategy", describe(specs[i])},
                                       {"estimate", estimate_json(cmp.estimates[i])},
                                       {"per_n", cmp.estimates[i].mean / n}});
            }
            diffs = Json::array();
            for (const auto& d : cmp.differences) {
                diffs.push_back(Json{{"first", describe(specs[d.first])},
                                     {"second", describe(specs[d.second])},
                                     {"difference", estimate_json(d.difference)}});
            }
        }
    } else {
        throw UsageError("unknown mode '" + o.mode + "' (exact, dp, mc)");
    }
    report["results"] = results;
    if (!diffs.is_null()) report["paired_differences"] = diffs;
    return report;
}

// --- concentration ---

struct ConcentrationOptions {
    InstanceOptions instance;
    EstimatorOptions estimator;
    std::string alpha = "1/2";
    double epsilon = 0.3;
    std::string out;
};

Json concentration(const ConcentrationOptions& o) {
    const auto inst = o.instance.build();
    const Rational alpha = parse_rational(o.alpha);
    if (alpha < 0 || alpha > 1) throw ParameterError("--alpha must lie in [0,1]");
    if (!(o.epsilon > 0)) throw ParameterError("--epsilon must be positive");
    const double n = inst.graph.n();
    const double a = to_double(alpha);
    const double beta = static_cast<double>(inst.graph.edge_count()) / n;
    const double threshold = (a - a * a * beta) * n + 3 * o.epsilon / 10 * n;
    const auto tail = estimate_tail(inst.graph, alpha, threshold, o.estimator.config());

    Json report = report_header("concentration");
    report["config"] = Json{{"instance", o.instance.echo()},
                            {"alpha", o.alpha},
                            {"epsilon", o.epsilon},
                            {"estimator", o.estimator.echo()}};
    report["instance"] = instance_json(inst);
    report["beta"] = beta;
    report["subset_size"] = tail.subset_size;
    report["threshold"] = threshold;
    report["hits"] = tail.hits;
    report["tail"] = estimate_json(tail.frequency);
    report["clopper_pearson"] = Json{{"low", tail.exact_low}, {"high", tail.exact_high}};
    report["bound"] = o.epsilon * o.epsilon * o.epsilon / 2000;
    return report;
}

// --- metagame ---

struct MetagameOptions {
    double grid_step = 0.01;
    double refine_tol = 1e-9;
    std::optional<double> beta;
    int k = 1;
    double mt_step = 1e-3;
    std::string out;
};

Json phi_max(const MetagameOptions& o) {
    PhiSearch search;
    search.grid_step = o.grid_step;
    search.refine_tol = o.refine_tol;
    search.beta = o.beta;
    const auto m = maximize_phi(search);
    Json report = report_header("metagame phi-max");
    Json config{{"grid_step", o.grid_step}, {"refine_tol", o.refine_tol}};
    if (o.beta) config["beta"] = *o.beta;
    report["config"] = config;
    report["max"] = m.value;
    report["max_fixed"] = fmt::format("{:.9f}", m.value);
    report["grid_points"] = m.grid_points;
    Json points = Json::array();
    for (const auto& p : m.maximizers) points.push_back(Json::array({p.alpha, p.beta, p.gamma, p.value}));
    report["argmax"] = points;
    return report;
}

Json mt_argmax(const MetagameOptions& o) {
    const auto m = maximize_mt(o.k, o.mt_step);
    Json report = report_header("metagame mt-argmax");
    report["config"] = Json{{"k", o.k}, {"grid_step", o.mt_step}};
    report["argmax"] = m.alpha;
    report["grid_argmax"] = m.grid_alpha;
    report["max"] = m.value;
    report["max_fixed"] = fmt::format("{:.9f}", m.value);
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stopping experiments for the connected-components arrival game"};
    app.set_version_flag("--version", std::string(CCSTOP_VERSION));
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Write a random k-tree or a named family instance");
    generate->require_subcommand(1);
    auto* gen_ktree = generate->add_subcommand("ktree", "Random k-tree construction sequence");
    gen_ktree->add_option("--k", gen.k, "Width")->required();
    gen_ktree->add_option("--n", gen.n, "Vertex count")->required();
    gen_ktree->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    gen_ktree->add_option("-o,--out", gen.out, "Output file (default stdout)");
    gen_ktree->add_flag("--graph", gen.as_graph, "Write the edge list instead of the sequence");
    auto* gen_family = generate->add_subcommand("family", "Named family instance");
    gen_family->add_option("--name", gen.family.family, "Family name")->required();
    gen_family->add_option("--n", gen.family.n, "Size parameter");
    gen_family->add_option("--k", gen.family.k, "Width parameter");
    gen_family->add_option("--d", gen.family.d, "Grid dimension");
    gen_family->add_option("--side", gen.family.side, "Grid side length");
    gen_family->add_option("--ratio", gen.family.ratio, "two_star_plus_star 2-star share");
    gen_family->add_option("--attach", gen.family.attach, "two_star_plus_star bridge vertex");
    gen_family->add_option("--seed", gen.family.graph_seed, "Generator seed")->capture_default_str();
    gen_family->add_option("-o,--out", gen.out, "Output file (default stdout)");
    gen_family->add_flag("--graph", gen.as_graph, "Write the edge list even when a sequence exists");

    ScanOptions scan;
    auto* blind = app.add_subcommand("blind-scan", "Exact blind expectation for every threshold, as CSV");
    blind->add_option("--kind", scan.kind, "tree, ktree or chordal")->capture_default_str();
    blind->add_option("--n", scan.n, "Vertex count (tree, ktree)");
    blind->add_option("--k", scan.k, "Width (ktree)");
    blind->add_option("--family", scan.instance.family, "Named family (chordal)");
    blind->add_option("--input", scan.instance.input, "Instance file (chordal)");
    blind->add_option("--family-n", scan.instance.n, "Family size parameter (chordal)");
    blind->add_option("--ratio", scan.instance.ratio, "two_star_plus_star 2-star share (chordal)");
    blind->add_option("--graph-seed", scan.instance.graph_seed, "Seed for random instances (chordal)");
    blind->add_option("-o,--out", scan.out, "Output file (default stdout)");

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Evaluate strategies exactly, by dp, or by Monte Carlo");
    run_opts.instance.attach_to(*run_cmd);
    run_opts.estimator.attach_to(*run_cmd);
    run_cmd->add_option("--strategy", run_opts.strategies, "Strategy spec, repeatable")->required();
    run_cmd->add_option("--mode", run_opts.mode, "exact, dp or mc")->capture_default_str();
    run_cmd->add_option("--table-out", run_opts.table_out, "dp mode: write the value table here");
    run_cmd->add_option("-o,--out", run_opts.out, "Report file (default stdout)");

    ConcentrationOptions conc;
    auto* conc_cmd = app.add_subcommand("concentration", "Tail frequency of CC on a random ceil(alpha n)-subset");
    conc.instance.attach_to(*conc_cmd);
    conc.estimator.attach_to(*conc_cmd);
    conc_cmd->add_option("--alpha", conc.alpha, "Subset fraction")->capture_default_str();
    conc_cmd->add_option("--epsilon", conc.epsilon, "Deviation parameter")->capture_default_str();
    conc_cmd->add_option("-o,--out", conc.out, "Report file (default stdout)");

    MetagameOptions meta;
    auto* metagame = app.add_subcommand("metagame", "Closed-form side games");
    metagame->require_subcommand(1);
    auto* phi_cmd = metagame->add_subcommand("phi-max", "Maximize phi over [0,1]^3");
    phi_cmd->add_option("--grid-step", meta.grid_step)->capture_default_str();
    phi_cmd->add_option("--refine-tol", meta.refine_tol)->capture_default_str();
    phi_cmd->add_option("--beta", meta.beta, "Fix beta");
    phi_cmd->add_option("-o,--out", meta.out, "Report file (default stdout)");
    auto* mt_cmd = metagame->add_subcommand("mt-argmax", "Maximize (1-alpha)^k alpha");
    mt_cmd->add_option("--k", meta.k)->required();
    mt_cmd->add_option("--grid-step", meta.mt_step)->capture_default_str();
    mt_cmd->add_option("-o,--out", meta.out, "Report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (gen_ktree->parsed()) {
            auto seq = gen_random_ktree(gen.k, static_cast<Vertex>(gen.n), gen.seed);
            emit(write_instance(instance_from_sequence(std::move(seq), "ktree"), gen.as_graph), gen.out);
        } else if (gen_family->parsed()) {
            emit(write_instance(gen.family.build(), gen.as_graph), gen.out);
        } else if (blind->parsed()) {
            emit(blind_scan(scan), scan.out);
        } else if (run_cmd->parsed()) {
            emit_report(run(run_opts), start, run_opts.out);
        } else if (conc_cmd->parsed()) {
            emit_report(concentration(conc), start, conc.out);
        } else if (phi_cmd->parsed()) {
            emit_report(phi_max(meta), start, meta.out);
        } else if (mt_cmd->parsed()) {
            emit_report(mt_argmax(meta), start, meta.out);
        }
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
