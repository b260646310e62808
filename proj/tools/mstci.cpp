// Command-line front end: exact solves, bound reports, mu-regular
// construction, and the exhaustive/sampled scans with CSV output.
//
// Exit codes: 0 ok, 1 usage error, 2 data error, 3 invariant violation
// found by a verification scan.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mstci/mstci.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitViolation = 3;

unsigned env_default_jobs() {
    if (const char* env = std::getenv("MSTCI_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

struct GraphInput {
    std::string graph6_line;
    std::string edges_spec;
    int n = 0;
    std::string input_path;

    void register_options(CLI::App* cmd) {
        auto* g6 = cmd->add_option("--graph6", graph6_line, "inline graph6 line");
        auto* ed = cmd->add_option("--edges", edges_spec, "inline edge list, e.g. \"0-1,1-2,0-2\" (needs -n)");
        auto* in = cmd->add_option("--input,-i", input_path, "graph6 file, one graph per line");
        cmd->add_option("-n", n, "vertex count for --edges");
        g6->excludes(ed)->excludes(in);
        ed->excludes(in);
        ed->needs(cmd->get_option("-n"));
    }

    std::vector<mstci::Graph> load() const {
        if (!graph6_line.empty()) return {mstci::parse_graph6(graph6_line)};
        if (!edges_spec.empty()) {
            std::vector<std::pair<int, int>> pairs;
            std::stringstream ss(edges_spec);
            std::string item;
            while (std::getline(ss, item, ',')) {
                const auto dash = item.find('-');
                if (dash == std::string::npos)
                    mstci::fail(mstci::errc::malformed_graph6, "bad edge token '" + item + "'");
                pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
            }
            return {mstci::Graph::from_edge_list(n, pairs)};
        }
        if (!input_path.empty()) return mstci::read_graph6_file(input_path);
        mstci::fail(mstci::errc::io_error, "no graph given; use --graph6, --edges or --input");
    }
};

std::string edge_list_string(const mstci::Graph& g, const mstci::SpanningTree& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.tree_edges.size(); ++i) {
        const mstci::Edge& e = g.edge(t.tree_edges[i]);
        if (i) out << ' ';
        out << '(' << int(e.u) << ',' << int(e.v) << ')';
    }
    return out.str();
}

// Scan inputs: either a graph6 corpus file or the internal generator.
std::vector<mstci::Graph> load_scan_corpus(int n, const std::string& input_path) {
    std::vector<mstci::Graph> graphs;
    if (!input_path.empty())
        graphs = mstci::read_graph6_file(input_path);
    else
        graphs = mstci::generate_connected(n);
    const int expect = n > 0 ? n : (graphs.empty() ? 0 : graphs.front().vertex_count());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].vertex_count() != expect)
            mstci::fail(mstci::errc::infeasible,
                        "graph " + std::to_string(i + 1) + " has n=" + std::to_string(graphs[i].vertex_count()) +
                            ", expected " + std::to_string(expect));
        if (!graphs[i].is_connected())
            mstci::fail(mstci::errc::not_connected, "graph " + std::to_string(i + 1) + " is not connected");
    }
    return graphs;
}

int parse_range(const std::string& spec, int& lo, int& hi) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(spec);
    } else {
        lo = std::stoi(spec.substr(0, dots));
        hi = std::stoi(spec.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) mstci::fail(mstci::errc::infeasible, "bad range '" + spec + "'");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver, lower bounds and experiment scans for minimum-intersection spanning trees"};
    app.require_subcommand(1);
    unsigned jobs = env_default_jobs();
    app.add_option("--jobs,-j", jobs, "worker threads for scans (env MSTCI_JOBS)")->check(CLI::PositiveNumber);

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "exact intersection number of one or more graphs");
    GraphInput solve_in;
    solve_in.register_options(solve_cmd);
    bool all_minimizers = false, no_shortcut = false;
    std::string solve_out;
    solve_cmd->add_flag("--all-minimizers", all_minimizers, "collect every minimizing tree");
    solve_cmd->add_flag("--no-star-shortcut", no_shortcut, "always enumerate, even with a universal vertex");
    solve_cmd->add_option("--out,-o", solve_out, "write results as JSON");

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form lower bounds for given n, m");
    int bn = 0;
    std::int64_t bm = 0;
    std::string bounds_out;
    bounds_cmd->add_option("-n", bn, "vertex count")->required();
    bounds_cmd->add_option("-m", bm, "edge count")->required();
    bounds_cmd->add_option("--out,-o", bounds_out, "write report as JSON");

    // ---- mu-regular ----
    auto* mureg_cmd = app.add_subcommand("mu-regular", "build the canonical mu-regular graph for n, m");
    int rn = 0;
    std::int64_t rm = 0;
    std::string mureg_out;
    mureg_cmd->add_option("-n", rn, "vertex count")->required();
    mureg_cmd->add_option("-m", rm, "edge count")->required();
    mureg_cmd->add_option("--out,-o", mureg_out, "write graph6 line to file");

    // ---- gen ----
    auto* gen_cmd = app.add_subcommand("gen", "emit one canonical graph6 line per connected graph class");
    std::string gen_range;
    std::string gen_out;
    gen_cmd->add_option("-n", gen_range, "vertex count or range, e.g. 6 or 5..7")->required();
    gen_cmd->add_option("--out,-o", gen_out, "write lines to file instead of stdout");

    // ---- scan-bounds ----
    auto* sb_cmd = app.add_subcommand("scan-bounds", "per-graph bound diagnostics and per-m aggregates");
    int sb_n = 0;
    std::string sb_input, sb_out, sb_agg_out;
    sb_cmd->add_option("-n", sb_n, "vertex count (generates internally unless --input)");
    sb_cmd->add_option("--input,-i", sb_input, "graph6 corpus file");
    sb_cmd->add_option("--out,-o", sb_out, "per-graph records CSV");
    sb_cmd->add_option("--agg-out", sb_agg_out, "per-m aggregates CSV");

    // ---- scan-dominance ----
    auto* sd_cmd = app.add_subcommand("scan-dominance", "graphs whose intersection number beats all successors");
    int sd_n = 0;
    std::string sd_input, sd_out;
    sd_cmd->add_option("-n", sd_n, "vertex count (generates internally unless --input)");
    sd_cmd->add_option("--input,-i", sd_input, "graph6 corpus file (must cover every class)");
    sd_cmd->add_option("--out,-o", sd_out, "records CSV");

    // ---- scan-maxdeg ----
    auto* sm_cmd = app.add_subcommand("scan-maxdeg", "graphs where no minimizer reaches max-deg(G)");
    int sm_n = 0;
    std::string sm_input, sm_out, sm_checkpoint;
    bool sm_resume = false;
    sm_cmd->add_option("-n", sm_n, "vertex count (generates internally unless --input)");
    sm_cmd->add_option("--input,-i", sm_input, "graph6 corpus file");
    sm_cmd->add_option("--out,-o", sm_out, "per-m histogram CSV");
    sm_cmd->add_option("--checkpoint", sm_checkpoint, "append-only per-graph results file");
    sm_cmd->add_flag("--resume", sm_resume, "skip graphs already in the checkpoint");

    // ---- sample ----
    auto* sp_cmd = app.add_subcommand("sample", "random connected graphs, conjectured-bound check");
    int sp_n = 9, sp_samples = 50;
    std::uint64_t sp_seed = 0;
    std::string sp_out;
    sp_cmd->add_option("-n", sp_n, "vertex count");
    sp_cmd->add_option("--samples", sp_samples, "number of graphs to draw")->check(CLI::PositiveNumber);
    sp_cmd->add_option("--seed", sp_seed, "rng seed")->required();
    sp_cmd->add_option("--out,-o", sp_out, "records CSV with a metadata comment line");

    // ---- verify ----
    auto* vf_cmd = app.add_subcommand("verify", "run the per-graph lemma checklist");
    GraphInput vf_in;
    vf_in.register_options(vf_cmd);
    std::string vf_out;
    vf_cmd->add_option("--out,-o", vf_out, "write checklist as JSON");

    // let app-level flags like --jobs appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve_cmd) {
            const auto graphs = solve_in.load();
            json out = json::array();
            for (const mstci::Graph& g : graphs) {
                const mstci::MstciResult res = mstci::solve_mstci(
                    g, {.want_all_minimizers = all_minimizers, .allow_star_shortcut = !no_shortcut});
                const std::string g6 = mstci::to_graph6(g);
                std::cout << "graph " << g6 << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
                          << ", mu=" << g.cyclomatic_number() << ")\n";
                std::cout << "intersection number: " << res.intersection_number << "\n";
                std::cout << "minimizer: " << edge_list_string(g, res.minimizer) << "\n";
                if (res.used_star_shortcut)
                    std::cout << "trees enumerated: 0 (star shortcut)\n";
                else
                    std::cout << "trees enumerated: " << res.trees_enumerated << "\n";
                if (res.all_minimizers) std::cout << "minimizing trees: " << res.all_minimizers->size() << "\n";
                json j{{"graph6", g6},
                       {"n", g.vertex_count()},
                       {"m", g.edge_count()},
                       {"intersection_number", res.intersection_number},
                       {"trees_enumerated", res.trees_enumerated},
                       {"used_star_shortcut", res.used_star_shortcut},
                       {"minimizer", edge_list_string(g, res.minimizer)}};
                if (res.all_minimizers) j["minimizer_count"] = res.all_minimizers->size();
                out.push_back(std::move(j));
            }
            if (!solve_out.empty()) mstci::write_text_file(solve_out, out.dump(2) + "\n");
            return kExitOk;
        }

        if (*bounds_cmd) {
            const mstci::BoundsReport rep = mstci::bounds_report(bn, bm);
            std::cout << "n=" << rep.n << " m=" << rep.m << " mu=" << rep.mu << "\n";
            std::cout << "l = " << rep.l.str() << "\n";
            std::cout << "q=" << rep.q << " r=" << rep.r << "\n";
            std::cout << "l_bar = " << rep.l_bar << "\n";
            if (!bounds_out.empty()) {
                json j{{"n", rep.n},   {"m", rep.m}, {"mu", rep.mu},      {"l", rep.l.str()},
                       {"q", rep.q},   {"r", rep.r}, {"l_bar", rep.l_bar}};
                mstci::write_text_file(bounds_out, j.dump(2) + "\n");
            }
            return kExitOk;
        }

        if (*mureg_cmd) {
            const mstci::Graph g = mstci::build_mu_regular(rn, rm);
            const std::string g6 = mstci::to_graph6(g);
            std::cout << g6 << "\n";
            std::cerr << "edges:";
            for (const mstci::Edge& e : g.edges()) std::cerr << " (" << int(e.u) << ',' << int(e.v) << ')';
            std::cerr << "\n";
            if (!mureg_out.empty()) mstci::write_text_file(mureg_out, g6 + "\n");
            return kExitOk;
        }

        if (*gen_cmd) {
            int lo = 0, hi = 0;
            parse_range(gen_range, lo, hi);
            std::string buffer;
            for (int n = lo; n <= hi; ++n)
                for (const mstci::Graph& g : mstci::generate_connected(n)) buffer += mstci::to_graph6(g) + "\n";
            if (gen_out.empty())
                std::cout << buffer;
            else
                mstci::write_text_file(gen_out, buffer);
            return kExitOk;
        }

        if (*sb_cmd) {
            if (sb_n == 0 && sb_input.empty())
                mstci::fail(mstci::errc::io_error, "scan-bounds needs -n or --input");
            const auto graphs = load_scan_corpus(sb_n, sb_input);
            const mstci::BoundsScanResult result = mstci::scan_bounds(graphs, jobs);
            std::cout << "graphs: " << result.records.size() << "\n";
            std::cout << mstci::aggregates_csv(result.aggregates);
            if (!sb_out.empty()) mstci::write_text_file(sb_out, mstci::scan_records_csv(result.records));
            if (!sb_agg_out.empty()) mstci::write_text_file(sb_agg_out, mstci::aggregates_csv(result.aggregates));
            return kExitOk;
        }

        if (*sd_cmd) {
            if (sd_n == 0 && sd_input.empty())
                mstci::fail(mstci::errc::io_error, "scan-dominance needs -n or --input");
            const auto graphs = load_scan_corpus(sd_n, sd_input);
            const auto records = mstci::scan_successor_dominance(graphs, jobs);
            std::uint64_t dominant = 0;
            for (const auto& rec : records)
                if (rec.dominant) {
                    ++dominant;
                    std::cout << "dominant: " << rec.graph6 << " m=" << rec.m << " cap=" << rec.cap
                              << " successors=" << rec.successor_count << "\n";
                }
            std::cout << "graphs: " << records.size() << ", dominant: " << dominant << "\n";
            if (!sd_out.empty()) mstci::write_text_file(sd_out, mstci::dominance_csv(records));
            return kExitOk;
        }

        if (*sm_cmd) {
            if (sm_n == 0 && sm_input.empty())
                mstci::fail(mstci::errc::io_error, "scan-maxdeg needs -n or --input");
            const auto graphs = load_scan_corpus(sm_n, sm_input);
            const auto result = mstci::scan_maxdeg(graphs, jobs, sm_checkpoint, sm_resume);
            const int n = graphs.empty() ? sm_n : graphs.front().vertex_count();
            std::cout << "graphs: " << result.records.size()
                      << ", counterexamples: " << result.counterexample_count << "\n";
            std::cout << mstci::maxdeg_csv(result, n);
            if (!sm_out.empty()) mstci::write_text_file(sm_out, mstci::maxdeg_csv(result, n));
            return kExitOk;
        }

        if (*sp_cmd) {
            const auto result = mstci::random_sample_scan(sp_n, sp_samples, sp_seed, jobs);
            long double rbar_sum = 0;
            std::uint64_t rbar_count = 0;
            for (const auto& rec : result.records)
                if (rec.r_bar) {
                    rbar_sum += static_cast<long double>(rec.r_bar->num) / rec.r_bar->den;
                    ++rbar_count;
                }
            std::cout << "samples: " << result.records.size() << ", violations of l_bar <= cap: "
                      << result.violations << "\n";
            if (rbar_count > 0)
                std::cout << "mean r_bar over positive-cap samples: "
                          << static_cast<double>(rbar_sum / rbar_count) << "\n";
            if (!sp_out.empty()) mstci::write_text_file(sp_out, mstci::sample_csv(result));
            return result.violations == 0 ? kExitOk : kExitViolation;
        }

        if (*vf_cmd) {
            const auto graphs = vf_in.load();
            bool all_ok = true;
            json out = json::array();
            for (const mstci::Graph& g : graphs) {
                const mstci::LemmaReport report = mstci::verify_lemmas(g);
                const std::string g6 = mstci::to_graph6(g);
                json checks = json::array();
                for (const mstci::LemmaCheck& c : report.checks) {
                    std::cout << g6 << " " << (c.passed ? "PASS" : "FAIL") << " " << c.name;
                    if (!c.passed) std::cout << " [" << c.witness << "]";
                    std::cout << "\n";
                    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
                }
                all_ok = all_ok && report.all_passed();
                out.push_back(json{{"graph6", g6}, {"checks", std::move(checks)}});
            }
            if (!vf_out.empty()) mstci::write_text_file(vf_out, out.dump(2) + "\n");
            return all_ok ? kExitOk : kExitViolation;
        }
    } catch (const mstci::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
