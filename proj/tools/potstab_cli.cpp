// potstab: command-line front end for the potential-function engine.
//
//   potstab analyze GRAPH
//   potstab build GRAPH pi_tilde I N | rho N | family N
//   potstab check SEQ GRAPH
//   potstab sigma GRAPH N [--threads T]
//   potstab probe SEQ GRAPH [--f-override F] [--delta D] [--epsilon E] [--trace]
//   potstab dist SEQ SEQ
//
// GRAPH is a generator expression ("K 3", "join(K 2, Kbar 3)") or a path to
// an edge-list file. Exit codes: 0 success, 1 parse or usage error, 2 cap
// exceeded, 3 internal invariant violation.

#include "potstab/errors.hpp"
#include "potstab/graph_expr.hpp"
#include "potstab/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace potstab;

namespace {

struct Options {
    bool json = false;
    int cap_n = OracleConfig{}.cap_n;
    int cap_k = OracleConfig{}.cap_k;
    int graph_cap = default_build_cap;
};

SmallGraph load_graph(const std::string& arg, int cap) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_graph(buf.str(), cap);
    }
    return parse_graph(arg, cap);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string pairs(const std::map<int, int>& m) {
    std::string s;
    for (auto [i, v] : m) s += (s.empty() ? "" : " ") + std::to_string(i) + ":" + std::to_string(v);
    return s;
}

std::string vertex_list(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? " " : "") + std::to_string(i + 1) + "->" + std::to_string(vs[i] + 1);
    return s;
}

std::string edge_text(const SmallGraph& g) {
    std::string s;
    for (auto [a, b] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(a + 1) + "-" + std::to_string(b + 1);
    return s;
}

int run_analyze(const Options& o, const std::string& graph) {
    const SmallGraph h = load_graph(graph, o.graph_cap);
    const Json rep = analyze_report(h);
    if (o.json) {
        print(rep);
        return 0;
    }
    const PotentialProfile prof = profile(h);
    const StabilityVerdict sv = classify_sigma(h);
    const WeakVerdict wv = classify_weak(h);
    std::cout << "k: " << prof.k << "\nalpha: " << prof.alpha << "\nnabla: " << pairs(prof.nabla)
              << "\nsigma~_i: " << pairs(prof.sigma_tilde_i) << "\nsigma~: " << prof.sigma_tilde
              << "\ni*: " << prof.i_star << "\ntype: " << to_string(prof.type) << "\nb_H: " << prof.b_h << '\n';
    std::cout << "sigma-stability: " << to_string(sv.status) << " (" << to_string(sv.theorem) << ")\n";
    if (sv.cover) std::cout << "  cover: b1=" << sv.cover->b1 << " b2=" << sv.cover->b2 << '\n';
    if (sv.witness_pattern) std::cout << "  witness: " << *sv.witness_pattern << '\n';
    std::cout << "  " << sv.note << '\n';
    std::cout << "weak sigma-stability: " << to_string(wv.status) << " (" << to_string(wv.basis) << ")\n";
    std::cout << "  " << wv.note << '\n';
    for (const auto& m : rep["targetFamily"])
        std::cout << "P(H,n) member i=" << m["i"].get<int>() << ": " << m["pattern"].get<std::string>()
                  << ", n >= " << m["minN"].get<int>() << '\n';
    return 0;
}

int run_build(const Options& o, const std::string& graph, const std::string& kind, const std::vector<int>& args) {
    const SmallGraph h = load_graph(graph, o.graph_cap);
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw CLI::ValidationError("build " + kind, "expects " + std::to_string(count) + " integer argument(s)");
    };
    if (kind == "pi_tilde") {
        need(2);
        const TargetSequence t = target_sequence(h, args[0], args[1]);
        if (o.json) print(to_json(t));
        else std::cout << format_sequence(t.seq) << '\n';
    } else if (kind == "rho") {
        need(1);
        const ExtremalWitness w = rho(h, args[0]);
        if (o.json) print(to_json(w));
        else std::cout << format_sequence(w.seq) << '\n';
    } else if (kind == "family") {
        need(1);
        const auto fam = target_family(h, args[0]);
        if (o.json) {
            Json a = Json::array();
            for (const auto& t : fam) a.push_back(to_json(t));
            print(a);
        } else {
            for (const auto& t : fam) std::cout << "i=" << t.i << ": " << format_sequence(t.seq) << '\n';
        }
    } else {
        throw CLI::ValidationError("build", "kind must be pi_tilde, rho or family");
    }
    return 0;
}

int run_check(const Options& o, const std::string& seq_text, const std::string& graph) {
    const DegreeSequence seq = parse_sequence(seq_text);
    const SmallGraph h = load_graph(graph, o.graph_cap);
    const PotentialCertificate c = potentially(seq, h, OracleConfig{o.cap_n, o.cap_k});
    if (o.json) {
        print(to_json(c));
        return 0;
    }
    std::cout << "potentially: " << (c.answer ? "true" : "false") << '\n';
    if (c.answer) {
        std::cout << "embedding: " << vertex_list(*c.embedding) << '\n';
        std::cout << "realization: " << edge_text(*c.realization) << '\n';
    }
    return 0;
}

int run_sigma(const Options& o, const std::string& graph, int n, int threads) {
    const SmallGraph h = load_graph(graph, o.graph_cap);
    const SigmaExact s = sigma_exact(h, n, OracleConfig{o.cap_n, o.cap_k}, threads);
    if (o.json) {
        print(to_json(s));
        return 0;
    }
    std::cout << s.value << '\n';
    for (const auto& m : s.extremal_sequences) std::cout << "maximizer: " << format_sequence(m) << '\n';
    return 0;
}

int run_probe_cmd(const Options& o, const std::string& seq_text, const std::string& graph, const ProbeConfig& cfg,
                  bool trace) {
    const DegreeSequence seq = parse_sequence(seq_text);
    const SmallGraph h = load_graph(graph, o.graph_cap);
    const ProbeResult r = run_probe(seq, h, cfg);
    if (trace) {
        std::cout << trace_json_lines(r);
        return 0;
    }
    if (o.json) {
        Json j;
        j["verdict"] = to_json(r.verdict);
        j["trace"] = to_json(r.trace);
        print(j);
        return 0;
    }
    const ProbeVerdict& v = r.verdict;
    std::cout << "verdict: " << to_string(v.kind);
    if (v.reason) std::cout << " (" << to_string(*v.reason) << ")";
    std::cout << '\n';
    if (v.verified) std::cout << "verified: " << (*v.verified ? "true" : "false") << '\n';
    if (v.target) std::cout << "target: " << format_sequence(v.target->seq) << " (i=" << v.target->i << ")\n";
    if (v.distance) std::cout << "distance: " << *v.distance << '\n';
    if (v.embedding) std::cout << "embedding: " << vertex_list(*v.embedding) << '\n';
    if (v.realization) std::cout << "realization: " << edge_text(*v.realization) << '\n';
    std::cout << "note: " << v.note << '\n';
    std::cout << "f: " << r.trace.f << (r.trace.f_overridden ? " (override)" : "") << "  delta: " << r.trace.delta
              << "  iterations: " << r.trace.iterations.size() << "  ell: " << r.trace.final_record.ell << '\n';
    for (const auto& w : r.trace.warnings) std::cout << "warning: " << w << '\n';
    return 0;
}

int run_dist(const Options& o, const std::string& a, const std::string& b) {
    const auto d = l1_distance(parse_sequence(a), parse_sequence(b));
    if (o.json) print(Json{{"distance", d}});
    else std::cout << d << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Potential-function profiles, sigma-stability verdicts and desk-scale oracles"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON");
    app.add_option("--cap-n", o.cap_n, "Oracle limit on sequence length")->check(CLI::PositiveNumber);
    app.add_option("--cap-k", o.cap_k, "Oracle limit on the order of H")->check(CLI::PositiveNumber);
    app.add_option("--graph-cap", o.graph_cap, "Largest graph a generator expression may build")
        ->check(CLI::Range(1, SmallGraph::max_order));

    std::string graph, seq_a, seq_b, kind;
    std::vector<int> build_args;
    int n = 0, threads = 1;
    bool trace = false;
    ProbeConfig pcfg;
    std::optional<double> delta;
    std::optional<std::int64_t> f_override;

    auto* analyze = app.add_subcommand("analyze", "Profile and stability verdicts of H");
    analyze->add_option("graph", graph, "Graph expression or edge-list file")->required();

    auto* build_cmd = app.add_subcommand("build", "Construct pi_tilde, rho or the family P(H,n)");
    build_cmd->add_option("graph", graph)->required();
    build_cmd->add_option("kind", kind, "pi_tilde | rho | family")->required();
    build_cmd->add_option("args", build_args, "i n for pi_tilde, n otherwise")->required();

    auto* check = app.add_subcommand("check", "Decide whether SEQ is potentially H-graphic");
    check->add_option("seq", seq_a)->required();
    check->add_option("graph", graph)->required();

    auto* sigma = app.add_subcommand("sigma", "Exact sigma(H, n)");
    sigma->add_option("graph", graph)->required();
    sigma->add_option("n", n)->required();
    sigma->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* probe = app.add_subcommand("probe", "Run the iteration algorithm on SEQ");
    probe->add_option("seq", seq_a)->required();
    probe->add_option("graph", graph)->required();
    probe->add_option("--f-override", f_override, "Replace f(k)");
    probe->add_option("--delta", delta, "Override delta");
    probe->add_option("--epsilon", pcfg.epsilon, "epsilon in (0, 1/2)");
    probe->add_flag("--trace", trace, "Print the trace as JSON lines");

    auto* dist = app.add_subcommand("dist", "l1 distance of two sequences");
    dist->add_option("a", seq_a)->required();
    dist->add_option("b", seq_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return run_analyze(o, graph);
        if (*build_cmd) return run_build(o, graph, kind, build_args);
        if (*check) return run_check(o, seq_a, graph);
        if (*sigma) return run_sigma(o, graph, n, threads);
        if (*probe) {
            pcfg.delta = delta;
            pcfg.f_override = f_override;
            pcfg.oracle = OracleConfig{o.cap_n, o.cap_k};
            return run_probe_cmd(o, seq_a, graph, pcfg, trace);
        }
        if (*dist) return run_dist(o, seq_a, seq_b);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const CLI::Error& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
