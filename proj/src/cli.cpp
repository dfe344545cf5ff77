#include "treeirr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeirr/claims.hpp"
#include "treeirr/construct.hpp"
#include "treeirr/degseq.hpp"
#include "treeirr/enumerate.hpp"
#include "treeirr/formats.hpp"
#include "treeirr/indices.hpp"

namespace treeirr::cli {

namespace {

using json = nlohmann::ordered_json;

json bundle_to_json(const IndexBundle& b) {
    json j;
    j["n"] = b.n;
    j["m"] = b.m;
    j["max_degree"] = b.max_degree;
    j["min_degree"] = b.min_degree;
    j["irr"] = b.irr;
    j["sigma"] = b.sigma;
    j["irr_t"] = b.irr_t;
    if (b.sigma_t.is_integer())
        j["sigma_t"] = b.sigma_t.numerator();
    else
        j["sigma_t"] = b.sigma_t.to_double();
    j["m1"] = b.m1;
    j["m2"] = b.m2;
    j["forgotten"] = b.forgotten;
    return j;
}

int default_workers() {
    if (const char* env = std::getenv("TREEIRR_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return read_stream(in);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    return read_stream(f);
}

// Writes to `path` ("-" meaning the standard output stream).
void write_output(const std::string& path, std::ostream& out, const std::string& data) {
    if (path.empty() || path == "-") {
        out << data;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output file: " + path);
    f << data;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> vals;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            vals.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad integer token in list: '" + tok + "'");
        }
    }
    if (vals.empty()) throw ParseError("empty integer list");
    return vals;
}

std::string render_graph(const Graph& g, const std::string& format) {
    if (format == "edgelist") return write_edgelist(g);
    return write_graph6(g) + "\n";
}

int cmd_indices(const std::string& format, const std::vector<std::string>& inputs,
                std::istream& in, std::ostream& out) {
    std::vector<std::string> sources = inputs.empty() ? std::vector<std::string>{"-"} : inputs;
    for (const auto& src : sources) {
        std::string text = read_input(src, in);
        std::vector<Graph> graphs;
        if (format == "edgelist")
            graphs.push_back(parse_edgelist(text));
        else
            graphs = parse_graph6_lines(text);
        for (const auto& g : graphs) out << bundle_to_json(compute_bundle(g)).dump() << "\n";
    }
    return 0;
}

struct GenOptions {
    std::string family;
    int n = 0;
    std::string spine;
    std::string fib_convention;
    std::string out_spec = "-";
    std::string format;  // empty: resolve from out_spec
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
    if (!opt.spine.empty() && opt.family != "cat")
        throw ParseError("--spine only applies to gen cat");
    if (opt.family != "cat" && opt.n <= 0)
        throw ParseError("gen " + opt.family + " requires --n");
    Tree t = [&]() {
        if (opt.family == "star") return star(opt.n);
        if (opt.family == "path") return path(opt.n);
        if (opt.family == "cat") {
            if (opt.spine.empty()) throw ParseError("gen cat requires --spine");
            return caterpillar(parse_int_list(opt.spine));
        }
        if (opt.fib_convention.empty())
            throw ParseError("gen fib requires --fib-convention paper|standard");
        return fibonacci_caterpillar(opt.n, fib_convention_from_string(opt.fib_convention));
    }();
    // --out accepts a format name, "-", or a destination path
    std::string format = opt.format;
    std::string dest = opt.out_spec;
    if (dest == "graph6" || dest == "edgelist") {
        if (format.empty()) format = dest;
        dest = "-";
    }
    if (format.empty()) {
        auto ends_with = [&](const char* suffix) {
            std::string s(suffix);
            return dest.size() >= s.size() && dest.compare(dest.size() - s.size(), s.size(), s) == 0;
        };
        format = (ends_with(".edges") || ends_with(".el") || ends_with(".txt")) ? "edgelist"
                                                                                : "graph6";
    }
    write_output(dest, out, render_graph(t, format));
    return 0;
}

int cmd_enumerate(int n, std::optional<int> max_degree, const std::string& out_path,
                  std::ostream& out) {
    TreeClassFilter filter{n, max_degree, std::nullopt};
    std::string data;
    for_each_free_tree(filter, [&](const Tree& t) {
        data += write_graph6(t);
        data += '\n';
        return true;
    });
    write_output(out_path, out, data);
    return 0;
}

int cmd_extremal(int n, const std::string& index, const std::string& objective,
                 std::optional<int> max_degree, std::uint64_t seed, int exhaustive_limit,
                 int restarts, std::ostream& out) {
    TreeClassFilter filter{n, max_degree, std::nullopt};
    ExtremalOptions options;
    options.seed = seed;
    options.exhaustive_limit = exhaustive_limit;
    options.restarts = restarts;
    ExtremalResult r = extremal(filter, index_name_from_string(index),
                                objective == "max" ? Objective::maximize : Objective::minimize,
                                options);
    json j;
    j["value"] = r.value;
    j["witness_graph6"] = write_graph6(r.witness);
    j["exhaustive"] = r.exhaustive;
    out << j.dump() << "\n";
    return 0;
}

int cmd_degseq_check(const std::string& seq, std::ostream& out) {
    DegreeSequence ds = DegreeSequence::from_csv(seq);
    json j;
    j["sequence"] = ds.values();
    j["graphical"] = is_graphical(ds);
    j["tree_realizable"] = is_tree_realizable(ds);
    out << j.dump() << "\n";
    return 0;
}

int cmd_degseq_realize(const std::string& seq, const std::string& as,
                       const std::string& format, std::ostream& out) {
    DegreeSequence ds = DegreeSequence::from_csv(seq);
    Graph g = as == "tree" ? realize_tree(ds) : realize_graph(ds);
    out << render_graph(g, format);
    return 0;
}

int cmd_degseq_majorize(const std::string& a_csv, const std::string& b_csv, std::ostream& out) {
    DegreeSequence a = DegreeSequence::from_csv(a_csv);
    DegreeSequence b = DegreeSequence::from_csv(b_csv);
    json j;
    j["a"] = a.values();
    j["b"] = b.values();
    j["a_majorizes_b"] = majorizes(a, b);
    j["b_majorizes_a"] = majorizes(b, a);
    out << j.dump() << "\n";
    return 0;
}

struct CheckClaimsOptions {
    int n_min = 4;
    int n_max = 9;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string claims;   // comma-separated ids, empty means all
    std::string report;   // path or "-"; empty means no JSON report
    std::string csv;      // path or "-"
    bool fail_on_counterexample = false;
};

int cmd_check_claims(const CheckClaimsOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::string> ids;
    if (!opt.claims.empty()) {
        std::istringstream in(opt.claims);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            claim_by_id(tok);  // validates
            ids.push_back(tok);
        }
    }
    EvalConfig cfg;
    cfg.n_min = opt.n_min;
    cfg.n_max = opt.n_max;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers > 0 ? opt.workers : default_workers();
    EvaluationReport report = evaluate_all(cfg, ids);

    if (!opt.report.empty())
        write_output(opt.report, out, report_to_json(report).dump(2) + "\n");
    if (!opt.csv.empty()) write_output(opt.csv, out, report_to_csv(report));
    if (opt.report.empty() && opt.csv.empty()) {
        for (const auto& v : report.verdicts)
            out << v.id << ": domain=" << v.domain_size << " holds=" << v.holds
                << " fails=" << v.fails << " vacuous=" << v.vacuous << "\n";
    }
    long long failing = 0;
    for (const auto& v : report.verdicts)
        if (v.fails > 0) ++failing;
    if (failing > 0 && opt.fail_on_counterexample) {
        err << failing << " claim(s) with counterexamples\n";
        return 3;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"tree irregularity indices, generators, and claim checking"};
    app.require_subcommand(1);

    // indices
    auto* sub_indices = app.add_subcommand("indices", "compute all indices per input graph");
    std::string idx_format = "graph6";
    std::vector<std::string> idx_inputs;
    sub_indices->add_option("--format", idx_format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    sub_indices->add_option("inputs", idx_inputs, "input files ('-' for stdin)");

    // gen
    auto* sub_gen = app.add_subcommand("gen", "generate a named tree");
    GenOptions gen_opt;
    sub_gen->add_option("family", gen_opt.family, "tree family")
        ->required()
        ->check(CLI::IsMember({"star", "path", "cat", "fib"}));
    sub_gen->add_option("--n", gen_opt.n, "order parameter");
    sub_gen->add_option("--spine", gen_opt.spine, "spine degree list, e.g. 2,3,2");
    sub_gen->add_option("--fib-convention", gen_opt.fib_convention,
                        "fibonacci indexing convention")
        ->check(CLI::IsMember({"paper", "standard"}));
    sub_gen->add_option("--out", gen_opt.out_spec,
                        "output: 'graph6', 'edgelist', '-' or a file path");
    sub_gen->add_option("--format", gen_opt.format, "output format (overrides --out)")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    // enumerate
    auto* sub_enum = app.add_subcommand("enumerate", "list all free trees of an order");
    int enum_n = 0;
    int enum_max_degree = -1;
    std::string enum_out = "-";
    sub_enum->add_option("--n", enum_n, "tree order")->required();
    sub_enum->add_option("--max-degree", enum_max_degree, "cap on the maximum degree");
    sub_enum->add_option("--out", enum_out, "output file ('-' for stdout)");

    // extremal
    auto* sub_ext = app.add_subcommand("extremal", "optimize an index over a tree class");
    int ext_n = 0, ext_max_degree = -1, ext_limit = 14, ext_restarts = 32;
    std::uint64_t ext_seed = 0;
    std::string ext_index, ext_objective;
    sub_ext->add_option("--n", ext_n, "tree order")->required();
    sub_ext->add_option("--index", ext_index, "index to optimize")
        ->required()
        ->check(CLI::IsMember({"irr", "sigma", "irr_t", "sigma_t"}));
    sub_ext->add_option("--objective", ext_objective, "min or max")
        ->required()
        ->check(CLI::IsMember({"min", "max"}));
    sub_ext->add_option("--max-degree", ext_max_degree, "cap on the maximum degree");
    sub_ext->add_option("--seed", ext_seed, "seed for the stochastic search");
    sub_ext->add_option("--exhaustive-limit", ext_limit,
                        "largest order searched exhaustively");
    sub_ext->add_option("--restarts", ext_restarts, "hill-climb restarts");

    // degseq
    auto* sub_ds = app.add_subcommand("degseq", "degree-sequence predicates and realization");
    sub_ds->require_subcommand(1);
    auto* ds_check = sub_ds->add_subcommand("check", "graphical / tree-realizable tests");
    std::string ds_check_seq;
    ds_check->add_option("sequence", ds_check_seq, "comma-separated degrees")->required();
    auto* ds_realize = sub_ds->add_subcommand("realize", "build a graph with the sequence");
    std::string ds_realize_seq, ds_realize_as = "graph", ds_realize_format = "graph6";
    ds_realize->add_option("sequence", ds_realize_seq, "comma-separated degrees")->required();
    ds_realize->add_option("--as", ds_realize_as, "realize as graph or tree")
        ->check(CLI::IsMember({"graph", "tree"}));
    ds_realize->add_option("--format", ds_realize_format, "output format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    auto* ds_major = sub_ds->add_subcommand("majorize", "majorization comparison");
    std::string ds_major_a, ds_major_b;
    ds_major->add_option("a", ds_major_a, "first sequence")->required();
    ds_major->add_option("b", ds_major_b, "second sequence")->required();

    // check-claims
    auto* sub_claims = app.add_subcommand("check-claims", "evaluate the claim registry");
    CheckClaimsOptions cc;
    sub_claims->add_option("--n-min", cc.n_min, "smallest tree order");
    sub_claims->add_option("--n-max", cc.n_max, "largest tree order (<= 14)");
    sub_claims->add_option("--seed", cc.seed, "seed for randomized domains");
    sub_claims->add_option("--claims", cc.claims, "comma-separated claim ids (default all)");
    sub_claims->add_option("--report", cc.report, "JSON report path ('-' for stdout)");
    sub_claims->add_option("--csv", cc.csv, "CSV summary path ('-' for stdout)");
    sub_claims->add_option("--workers", cc.workers,
                           "parallel workers (default: TREEIRR_WORKERS env, else hardware "
                           "concurrency; the flag wins over the environment)");
    bool claims_json = false;
    sub_claims->add_flag("--json", claims_json,
                         "force the JSON report on stdout (same as --report -)");
    sub_claims->add_flag("--fail-on-counterexample", cc.fail_on_counterexample,
                         "exit 3 when any claim has failures");

    std::vector<std::string> argv_copy(args);
    try {
        std::vector<const char*> argv;
        argv.push_back("treeirr");
        for (const auto& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sub_indices->parsed()) return cmd_indices(idx_format, idx_inputs, in, out);
        if (sub_gen->parsed()) return cmd_gen(gen_opt, out);
        if (sub_enum->parsed())
            return cmd_enumerate(enum_n,
                                 enum_max_degree >= 0 ? std::optional<int>(enum_max_degree)
                                                      : std::nullopt,
                                 enum_out, out);
        if (sub_ext->parsed())
            return cmd_extremal(ext_n, ext_index, ext_objective,
                                ext_max_degree >= 0 ? std::optional<int>(ext_max_degree)
                                                    : std::nullopt,
                                ext_seed, ext_limit, ext_restarts, out);
        if (sub_ds->parsed()) {
            if (ds_check->parsed()) return cmd_degseq_check(ds_check_seq, out);
            if (ds_realize->parsed())
                return cmd_degseq_realize(ds_realize_seq, ds_realize_as, ds_realize_format,
                                          out);
            if (ds_major->parsed()) return cmd_degseq_majorize(ds_major_a, ds_major_b, out);
        }
        if (sub_claims->parsed()) {
            if (claims_json && cc.report.empty()) cc.report = "-";
            if (cc.n_min < 1 || cc.n_max < cc.n_min || cc.n_max > 14) {
                err << "check-claims requires 1 <= n-min <= n-max <= 14\n";
                return 1;
            }
            try {
                return cmd_check_claims(cc, out, err);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << "\n";
                return 1;  // unknown claim id or bad configuration
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 1;
}

}  // namespace treeirr::cli
