// Command-line front end: generate corpus families, run membership/coloring/
// cut/subdivision analyses on graph6/sparse6/DIMACS inputs, and execute the
// lemma validation suite with machine-readable reports.
//
// Exit codes: 0 = no check failed, 1 = at least one Fail, 2 = input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddhole/oddhole.hpp"

namespace {

using namespace oddhole;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("ODDHOLE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed ODDHOLE_BUDGET\n";
    }
    return 5'000'000;
}

std::string read_stream(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
    std::string text;
    if (path == "-") {
        text = read_stream(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw io_error(io_errc::bad_header, "cannot open " + path);
        text = read_stream(in);
    }
    std::vector<Graph> out;
    if (format == "dimacs") {
        out.push_back(load_dimacs(text));
    } else if (format == "g6") {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
                line.pop_back();
            if (line.empty()) continue;
            out.push_back(load_graph6_or_sparse6(line));
        }
    } else {
        throw io_error(io_errc::bad_header, "unknown input format: " + format);
    }
    return out;
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error(io_errc::bad_header, "cannot write " + path);
    out << data;
}

int cmd_generate(const std::string& family, int k, int a, int b, int c,
                 const std::vector<int>& arrises, int n, int m, int girth_min,
                 std::uint64_t seed, int n_max, int girth, const std::string& out) {
    std::vector<Graph> graphs;
    if (family == "cycle") {
        graphs.push_back(gen_cycle(k));
    } else if (family == "theta") {
        graphs.push_back(gen_theta(a, b, c));
    } else if (family == "k4sub") {
        if (arrises.size() != 6)
            throw std::invalid_argument("k4sub needs --arrises p1,p2,q1,q2,l1,l2");
        graphs.push_back(gen_k4_subdivision({arrises[0], arrises[1], arrises[2],
                                             arrises[3], arrises[4], arrises[5]})
                             .graph);
    } else if (family == "random") {
        auto r = random_girth_graph(n, m, girth_min, seed);
        if (!r.complete)
            std::cerr << "warning: budget exhausted at " << r.graph.m() << "/" << m
                      << " edges (partial graph emitted)\n";
        graphs.push_back(r.graph);
    } else if (family == "petersen") {
        graphs.push_back(petersen());
    } else if (family == "exhaustive") {
        graphs = exhaustive_girth_graphs(n_max, girth);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    std::string data;
    for (const auto& g : graphs) data += write_graph6(g) + "\n";
    write_output(out, data);
    return 0;
}

int cmd_membership(int l, const std::string& input, const std::string& format,
                   std::uint64_t budget, bool as_json) {
    auto graphs = read_graphs(input, format);
    json lines = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        SearchBudget b(budget);
        auto v = is_in_Gl(graphs[i], l, b);
        const char* status = v.status == MembershipVerdict::Status::InGl    ? "in"
                             : v.status == MembershipVerdict::Status::OutGl ? "out"
                                                                            : "unknown";
        if (as_json) {
            json j{{"index", i},
                   {"n", graphs[i].n()},
                   {"m", graphs[i].m()},
                   {"status", status},
                   {"reason", v.reason},
                   {"certificate", v.certificate ? json(v.certificate->v) : json(nullptr)},
                   {"budget_used", v.budget.used}};
            lines.push_back(std::move(j));
        } else {
            std::cout << "graph " << i << " (n=" << graphs[i].n()
                      << ", m=" << graphs[i].m() << "): " << status << " -- "
                      << v.reason << "\n";
        }
    }
    if (as_json) std::cout << lines.dump(2) << "\n";
    return 0;
}

int cmd_color(const std::string& input, const std::string& format, int k,
              bool chromatic, std::uint64_t budget) {
    auto graphs = read_graphs(input, format);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        SearchBudget b(budget);
        if (chromatic) {
            auto r = chromatic_number(g, b);
            if (r.status == ChromaticResult::Status::Exact)
                std::cout << "graph " << i << ": chi = " << r.chromatic_number << "\n";
            else
                std::cout << "graph " << i << ": chi unknown (budget exhausted)\n";
        } else {
            auto r = k_colorable(g, k, b);
            if (r.found()) {
                std::cout << "graph " << i << ": " << k << "-colorable:";
                for (int v = 0; v < g.n(); ++v) std::cout << " " << r.coloring->color[v];
                std::cout << "\n";
            } else if (r.exhausted()) {
                std::cout << "graph " << i << ": not " << k << "-colorable (search exhausted)\n";
            } else {
                std::cout << "graph " << i << ": unknown (budget exhausted)\n";
            }
        }
    }
    return 0;
}

int cmd_cuts(const std::string& input, const std::string& format) {
    auto graphs = read_graphs(input, format);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        std::cout << "graph " << i << " (n=" << g.n() << ", m=" << g.m() << ")\n";
        auto d2 = degree_two_vertices(g);
        std::cout << "  degree-2 vertices (" << d2.size() << "):";
        for (int v : d2) std::cout << " " << v;
        std::cout << "\n";
        if (!is_connected(g)) {
            std::cout << "  disconnected: cut detectors skipped\n";
            continue;
        }
        auto tec = two_edge_cuts(g);
        std::cout << "  2-edge-cuts (" << tec.size() << "):";
        for (const auto& w : tec)
            std::cout << " {" << w.edges[0].first << "-" << w.edges[0].second
                      << "," << w.edges[1].first << "-" << w.edges[1].second << "}";
        std::cout << "\n";
        auto k2 = k2_cuts(g);
        std::cout << "  K2-cuts (" << k2.size() << "):";
        for (const auto& w : k2)
            std::cout << " {" << w.vertices[0] << "," << w.vertices[1] << "}";
        std::cout << "\n";
        auto p3 = p3_cuts(g);
        std::cout << "  P3-cuts (" << p3.size() << "):";
        for (const auto& w : p3)
            std::cout << " {" << w.vertices[0] << "," << w.vertices[1] << ","
                      << w.vertices[2] << "}";
        std::cout << "\n";
    }
    return 0;
}

int cmd_subdivisions(const std::string& input, const std::string& format, int cap,
                     std::uint64_t budget) {
    auto graphs = read_graphs(input, format);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        SearchBudget b(budget);
        auto scan = find_k4_subdivisions(graphs[i], cap, b);
        std::cout << "graph " << i << ": " << scan.found.size()
                  << " K4-subdivision(s) with arris cap " << cap
                  << (scan.exhausted ? " (budget exhausted, incomplete)" : "") << "\n";
        for (const auto& h : scan.found) {
            auto lens = h.arris_lengths();
            std::cout << "  branch {" << h.u[0] << "," << h.u[1] << "," << h.u[2]
                      << "," << h.u[3] << "} arrises (" << lens[0] << "," << lens[1]
                      << "," << lens[2] << "," << lens[3] << "," << lens[4] << ","
                      << lens[5] << ") class " << to_string(classify(h));
            if (is_odd_k4(h)) std::cout << " difference " << difference(h);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_lemmas(int l, const std::string& corpus_dir, const std::string& json_out,
               std::uint64_t budget, std::uint64_t seed, int threads) {
    std::vector<CorpusEntry> corpus =
        l == 2 ? builtin_corpus_l2() : builtin_corpus_l4(seed);
    if (!corpus_dir.empty()) {
        auto extra = load_corpus_dir(corpus_dir);
        corpus.insert(corpus.end(), extra.begin(), extra.end());
    }
    SuiteOptions opt;
    opt.l = l;
    opt.budget = budget;
    opt.seed = seed;
    opt.threads = threads;
    auto rep = run_lemma_suite(corpus, opt);
    std::cout << report_text(rep);
    if (!json_out.empty()) write_output(json_out, emit_report(rep, "json"));
    return rep.any_fail() ? 1 : 0;
}

int cmd_report(const std::string& input, const std::string& format) {
    std::ifstream in(input);
    if (!in) throw io_error(io_errc::bad_header, "cannot open " + input);
    json j = json::parse(read_stream(in));
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (format != "text") throw std::invalid_argument("unknown format: " + format);
    std::cout << j["tool"].get<std::string>() << " " << j["version"].get<std::string>()
              << "  lemma suite  l=" << j["l"] << "  budget=" << j["budget_limit"]
              << "  seed=" << j["seed"] << "\n";
    for (const auto& e : j["entries"]) {
        std::cout << "\n" << e["id"].get<std::string>() << "  ("
                  << e["provenance"].get<std::string>() << ")  n=" << e["n"]
                  << " m=" << e["m"] << "  membership="
                  << e["membership"]["status"].get<std::string>() << "\n";
        for (const auto& c : e["checks"]) {
            std::cout << "  " << c["id"].get<std::string>() << " "
                      << c["status"].get<std::string>() << " pass=" << c["pass"]
                      << " fail=" << c["fail"] << " skip=" << c["skipped"]
                      << " unk=" << c["unknown"] << "\n";
        }
    }
    const auto& s = j["summary"];
    std::cout << "\nsummary: pass=" << s["pass"] << " fail=" << s["fail"]
              << " skipped=" << s["skipped"] << " unknown=" << s["unknown"] << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural analysis of girth-constrained graphs"};
    app.require_subcommand(1);
    std::uint64_t budget = default_budget();

    // generate
    auto* gen = app.add_subcommand("generate", "emit a graph family as graph6");
    std::string family, gen_out;
    int gk = 9, ga = 4, gb = 5, gc = 5, gn = 20, gm = 22, ggirth_min = 9;
    int gnmax = 7, ggirth = 5;
    std::uint64_t gseed = 0;
    std::vector<int> garrises;
    gen->add_option("--family", family,
                    "cycle|theta|k4sub|random|petersen|exhaustive")
        ->required();
    gen->add_option("--k", gk, "cycle length");
    gen->add_option("--a", ga, "theta branch a");
    gen->add_option("--b", gb, "theta branch b");
    gen->add_option("--c", gc, "theta branch c");
    gen->add_option("--arrises", garrises, "k4sub arris lengths p1,p2,q1,q2,l1,l2")
        ->delimiter(',');
    gen->add_option("--n", gn, "random: vertex count");
    gen->add_option("--m", gm, "random: edge count");
    gen->add_option("--girth-min", ggirth_min, "random: minimum girth");
    gen->add_option("--seed", gseed, "random: seed");
    gen->add_option("--n-max", gnmax, "exhaustive: max vertices");
    gen->add_option("--girth", ggirth, "exhaustive: exact girth");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // membership
    auto* mem = app.add_subcommand("membership", "G_l membership with certificates");
    int ml = 4;
    std::string minput, mformat = "g6";
    bool mjson = false;
    mem->add_option("--l", ml, "family parameter l >= 2");
    mem->add_option("--input", minput, "input file or - for stdin")->required();
    mem->add_option("--format", mformat, "g6|dimacs");
    mem->add_option("--budget", budget, "search budget (nodes)");
    mem->add_flag("--json", mjson, "JSON output");

    // color
    auto* col = app.add_subcommand("color", "exact coloring");
    std::string cinput, cformat = "g6";
    int ck = 3;
    bool cchrom = false;
    col->add_option("--input", cinput, "input file or -")->required();
    col->add_option("--format", cformat, "g6|dimacs");
    col->add_option("--k", ck, "test k-colorability");
    col->add_flag("--chromatic", cchrom, "compute the chromatic number");
    col->add_option("--budget", budget, "search budget (nodes)");

    // cuts
    auto* cut = app.add_subcommand("cuts", "degree-2 vertices and small cuts");
    std::string xinput, xformat = "g6";
    cut->add_option("--input", xinput, "input file or -")->required();
    cut->add_option("--format", xformat, "g6|dimacs");

    // subdivisions
    auto* sub = app.add_subcommand("subdivisions", "K4-subdivision search");
    std::string sinput, sformat = "g6";
    int scap = 4;
    sub->add_option("--input", sinput, "input file or -")->required();
    sub->add_option("--format", sformat, "g6|dimacs");
    sub->add_option("--cap", scap, "max arris length");
    sub->add_option("--budget", budget, "search budget (nodes)");

    // lemmas
    auto* lem = app.add_subcommand("lemmas", "run the lemma suite over a corpus");
    int ll = 4, lthreads = 1;
    std::string lcorpus, ljson;
    std::uint64_t lseed = 0;
    lem->add_option("--l", ll, "family parameter (2 or 4 select built-in corpora)");
    lem->add_option("--corpus", lcorpus, "directory of extra .g6/.s6/.col files");
    lem->add_option("--json", ljson, "write the JSON report here ('-' = stdout)");
    lem->add_option("--budget", budget, "per-phase search budget (nodes)");
    lem->add_option("--seed", lseed, "seed offset for the random corpus entries");
    lem->add_option("--threads", lthreads, "worker threads over corpus entries");

    // report
    auto* repc = app.add_subcommand("report", "re-render a JSON report");
    std::string rinput, rformat = "text";
    repc->add_option("--input", rinput, "report JSON file")->required();
    repc->add_option("--format", rformat, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(family, gk, ga, gb, gc, garrises, gn, gm,
                                ggirth_min, gseed, gnmax, ggirth, gen_out);
        if (mem->parsed()) return cmd_membership(ml, minput, mformat, budget, mjson);
        if (col->parsed()) return cmd_color(cinput, cformat, ck, cchrom, budget);
        if (cut->parsed()) return cmd_cuts(xinput, xformat);
        if (sub->parsed()) return cmd_subdivisions(sinput, sformat, scap, budget);
        if (lem->parsed()) return cmd_lemmas(ll, lcorpus, ljson, budget, lseed, lthreads);
        if (repc->parsed()) return cmd_report(rinput, rformat);
    } catch (const io_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
