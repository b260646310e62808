#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "mstci/bounds.hpp"
#include "mstci/canonical.hpp"
#include "mstci/graph.hpp"
#include "mstci/graph6.hpp"
#include "mstci/parallel.hpp"
#include "mstci/solver.hpp"

namespace mstci {

// One row per analyzed graph; everything downstream (CSV, acceptance
// checks, aggregate statistics) reads off these.
struct ScanRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int mu = 0;
    std::uint32_t cap = 0;  // intersection number
    bool universal = false;
    bool mu_regular = false;
    Rational l;
    std::int64_t l_bar = 0;
    int max_deg_g = 0;
    bool minimizer_matches_max_deg = false;  // some minimizer attains max-deg(G)
    std::optional<Rational> r;
    std::optional<Rational> r_bar;
};

struct AggregateRow {
    int n = 0;
    int m = 0;
    std::uint64_t count = 0;
    std::uint32_t min_cap = 0;
    std::uint32_t max_cap = 0;
    double mean_cap = 0.0;
    Rational l;
    std::int64_t l_bar = 0;
    std::optional<double> r_mean, r_std, rbar_mean, rbar_std;
};

namespace detail {

inline int tree_max_degree(const Graph& g, const SpanningTree& t) {
    std::array<int, kMaxVertices> deg{};
    int best = 0;
    for (std::uint8_t i : t.tree_edges) {
        const Edge& e = g.edge(i);
        best = std::max({best, ++deg[e.u], ++deg[e.v]});
    }
    return best;
}

}  // namespace detail

// Full per-graph analysis. The minimizer max-degree flag needs the whole
// minimizer set, so this always enumerates (no star shortcut).
inline ScanRecord make_scan_record(const Graph& g) {
    ScanRecord rec;
    rec.graph6 = to_graph6(g);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.mu = g.cyclomatic_number();
    rec.universal = g.universal_vertex().has_value();
    rec.mu_regular = is_mu_regular(g);
    rec.l = lower_bound_l(rec.n, rec.m);
    rec.l_bar = lower_bound_bar(rec.n, rec.m);
    rec.max_deg_g = g.max_degree();
    const MstciResult res = solve_mstci(g, {.want_all_minimizers = true, .allow_star_shortcut = false});
    rec.cap = res.intersection_number;
    for (const SpanningTree& t : *res.all_minimizers)
        if (detail::tree_max_degree(g, t) == rec.max_deg_g) {
            rec.minimizer_matches_max_deg = true;
            break;
        }
    if (rec.cap > 0) {
        const RatioReport rr = ratios(g, rec.cap);
        rec.r = rr.r;
        rec.r_bar = rr.r_bar;
    }
    return rec;
}

struct BoundsScanResult {
    std::vector<ScanRecord> records;      // sorted by (m, graph6)
    std::vector<AggregateRow> aggregates;  // one row per edge count
};

namespace detail {

inline std::vector<AggregateRow> aggregate_records(const std::vector<ScanRecord>& records) {
    std::map<int, std::vector<const ScanRecord*>> by_m;
    for (const ScanRecord& r : records) by_m[r.m].push_back(&r);
    std::vector<AggregateRow> rows;
    for (const auto& [m, group] : by_m) {
        AggregateRow row;
        row.n = group.front()->n;
        row.m = m;
        row.count = group.size();
        row.l = group.front()->l;
        row.l_bar = group.front()->l_bar;
        row.min_cap = row.max_cap = group.front()->cap;
        std::uint64_t cap_sum = 0;
        long double r_sum = 0, rb_sum = 0;
        std::vector<long double> rs, rbs;
        for (const ScanRecord* rec : group) {
            row.min_cap = std::min(row.min_cap, rec->cap);
            row.max_cap = std::max(row.max_cap, rec->cap);
            cap_sum += rec->cap;
            if (rec->r) {
                rs.push_back(static_cast<long double>(rec->r->num) / rec->r->den);
                rbs.push_back(static_cast<long double>(rec->r_bar->num) / rec->r_bar->den);
                r_sum += rs.back();
                rb_sum += rbs.back();
            }
        }
        row.mean_cap = static_cast<double>(cap_sum) / static_cast<double>(row.count);
        if (!rs.empty()) {
            const long double rm = r_sum / rs.size(), rbm = rb_sum / rbs.size();
            long double rv = 0, rbv = 0;
            for (long double x : rs) rv += (x - rm) * (x - rm);
            for (long double x : rbs) rbv += (x - rbm) * (x - rbm);
            row.r_mean = static_cast<double>(rm);
            row.r_std = static_cast<double>(std::sqrt(static_cast<double>(rv / rs.size())));
            row.rbar_mean = static_cast<double>(rbm);
            row.rbar_std = static_cast<double>(std::sqrt(static_cast<double>(rbv / rbs.size())));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void sort_by_m_and_key(std::vector<ScanRecord>& records) {
    std::sort(records.begin(), records.end(), [](const ScanRecord& a, const ScanRecord& b) {
        if (a.m != b.m) return a.m < b.m;
        return a.graph6 < b.graph6;
    });
}

}  // namespace detail

inline BoundsScanResult scan_bounds(const std::vector<Graph>& graphs, unsigned jobs) {
    BoundsScanResult out;
    out.records.resize(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) { out.records[i] = make_scan_record(graphs[i]); });
    detail::sort_by_m_and_key(out.records);
    out.aggregates = detail::aggregate_records(out.records);
    return out;
}

struct DominanceRecord {
    std::string graph6;
    int m = 0;
    int successor_count = 0;
    std::uint32_t cap = 0;
    std::vector<std::uint32_t> successor_caps;  // ascending, one entry per non-edge
    bool dominant = false;                      // strictly above every successor; K_n has none
};

// Solves each isomorphism class once (star shortcut on), then resolves
// every successor through the canonical memo so Table-style multisets
// collapse isomorphic successors to the same value.
inline std::vector<DominanceRecord> scan_successor_dominance(const std::vector<Graph>& graphs, unsigned jobs) {
    std::vector<std::uint32_t> caps(graphs.size());
    std::vector<std::uint64_t> keys(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        caps[i] = solve_mstci(graphs[i]).intersection_number;
        keys[i] = canonical_key(graphs[i]).bits;
    });
    std::unordered_map<std::uint64_t, std::uint32_t> memo;
    memo.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) memo.emplace(keys[i], caps[i]);

    std::vector<DominanceRecord> records(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const Graph& g = graphs[i];
        DominanceRecord rec;
        rec.graph6 = to_graph6(g);
        rec.m = g.edge_count();
        rec.cap = caps[i];
        for (auto [u, v] : g.non_edges()) {
            const std::uint64_t key = canonical_key(g.with_edge(u, v)).bits;
            const auto it = memo.find(key);
            if (it == memo.end())
                fail(errc::infeasible, "successor class missing from corpus; input is not a full sweep");
            rec.successor_caps.push_back(it->second);
        }
        rec.successor_count = static_cast<int>(rec.successor_caps.size());
        std::sort(rec.successor_caps.begin(), rec.successor_caps.end());
        rec.dominant = rec.successor_count > 0 && rec.cap > rec.successor_caps.back();
        records[i] = std::move(rec);
    });
    std::sort(records.begin(), records.end(), [](const DominanceRecord& a, const DominanceRecord& b) {
        if (a.m != b.m) return a.m < b.m;
        return a.graph6 < b.graph6;
    });
    return records;
}

struct MaxDegRecord {
    std::string graph6;
    int m = 0;
    std::uint32_t cap = 0;
    bool counterexample = false;  // every minimizer has max-deg(T) < max-deg(G)
};

struct MaxDegScanResult {
    std::vector<MaxDegRecord> records;
    std::uint64_t counterexample_count = 0;
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> by_m;  // m -> (graphs, counterexamples)
};

// The costliest sweep: needs every minimizer of every graph, so the star
// shortcut is off. Appends one line per finished graph to the checkpoint
// file (graph6, cap, counterexample flag) and skips those on resume.
inline MaxDegScanResult scan_maxdeg(const std::vector<Graph>& graphs, unsigned jobs,
                                    const std::string& checkpoint_path = {}, bool resume = false) {
    std::unordered_map<std::string, std::pair<std::uint32_t, bool>> done;
    if (resume && !checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        std::string line;
        while (std::getline(in, line)) {
            const auto t1 = line.find('\t');
            const auto t2 = line.rfind('\t');
            if (t1 == std::string::npos || t2 == t1) continue;
            done[line.substr(0, t1)] = {static_cast<std::uint32_t>(std::stoul(line.substr(t1 + 1, t2 - t1 - 1))),
                                        line.substr(t2 + 1) == "1"};
        }
    }
    std::ofstream checkpoint;
    std::mutex checkpoint_mutex;
    if (!checkpoint_path.empty()) {
        checkpoint.open(checkpoint_path, resume ? std::ios::app : std::ios::trunc);
        if (!checkpoint) fail(errc::io_error, "cannot open checkpoint " + checkpoint_path);
    }

    MaxDegScanResult out;
    out.records.resize(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const Graph& g = graphs[i];
        MaxDegRecord rec;
        rec.graph6 = to_graph6(g);
        rec.m = g.edge_count();
        if (const auto it = done.find(rec.graph6); it != done.end()) {
            rec.cap = it->second.first;
            rec.counterexample = it->second.second;
            out.records[i] = std::move(rec);
            return;
        }
        const int max_deg_g = g.max_degree();
        const MstciResult res = solve_mstci(g, {.want_all_minimizers = true, .allow_star_shortcut = false});
        rec.cap = res.intersection_number;
        rec.counterexample = true;
        for (const SpanningTree& t : *res.all_minimizers)
            if (detail::tree_max_degree(g, t) == max_deg_g) {
                rec.counterexample = false;
                break;
            }
        if (checkpoint.is_open()) {
            std::lock_guard lock(checkpoint_mutex);
            checkpoint << rec.graph6 << '\t' << rec.cap << '\t' << (rec.counterexample ? 1 : 0) << std::endl;
        }
        out.records[i] = std::move(rec);
    });
    std::sort(out.records.begin(), out.records.end(), [](const MaxDegRecord& a, const MaxDegRecord& b) {
        if (a.m != b.m) return a.m < b.m;
        return a.graph6 < b.graph6;
    });
    for (const MaxDegRecord& rec : out.records) {
        auto& [total, bad] = out.by_m[rec.m];
        ++total;
        if (rec.counterexample) {
            ++bad;
            ++out.counterexample_count;
        }
    }
    return out;
}

struct SampleScanResult {
    std::vector<ScanRecord> records;  // in sample order
    std::uint64_t violations = 0;     // records with l_bar > cap
    std::string scheme;
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
    // unbiased rejection; bound is tiny so this rarely loops
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x <= limit) return x % bound;
    }
}

inline Graph random_connected_graph(int n, std::mt19937_64& rng) {
    const int slots = n * (n - 1) / 2;
    std::vector<int> pool(slots);
    for (;;) {
        const int m = n - 1 + static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(slots - n + 2)));
        for (int i = 0; i < slots; ++i) pool[i] = i;
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) {
            const int j = i + static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(slots - i)));
            std::swap(pool[i], pool[j]);
            // slot t is the t-th pair in column-major order
            int col = 1;
            int t = pool[i];
            while (t >= col) t -= col++;
            edges.push_back({static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(col)});
        }
        std::sort(edges.begin(), edges.end());
        Graph g = Graph::from_sorted_edges(n, std::move(edges));
        if (g.is_connected()) return g;
    }
}

}  // namespace detail

// Uniform random connected graphs: edge count uniform over [n-1, n(n-1)/2],
// then a uniform subset of that size, with full redraw on disconnection.
inline SampleScanResult random_sample_scan(int n, int samples, std::uint64_t seed, unsigned jobs) {
    if (n < 2 || n > kMaxVertices) fail(errc::infeasible, "sampling needs 2 <= n <= 16");
    if (samples < 1) fail(errc::infeasible, "need at least one sample");
    SampleScanResult out;
    out.n = n;
    out.samples = samples;
    out.seed = seed;
    out.scheme =
        "m uniform on [n-1,n(n-1)/2]; uniform m-subset of vertex pairs; "
        "redraw while disconnected; rng mt19937_64(seed)";
    std::mt19937_64 rng(seed);
    std::vector<Graph> graphs;
    graphs.reserve(samples);
    for (int s = 0; s < samples; ++s) graphs.push_back(detail::random_connected_graph(n, rng));
    out.records.resize(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) { out.records[i] = make_scan_record(graphs[i]); });
    for (const ScanRecord& rec : out.records)
        if (rec.l_bar > static_cast<std::int64_t>(rec.cap)) ++out.violations;
    return out;
}

// ---- CSV emission ------------------------------------------------------

namespace detail {

inline std::string decimal6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace detail

inline std::string scan_records_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream out;
    out << "graph6,n,m,mu,cap,universal,mu_regular,l_num,l_den,l_bar,max_deg_g,minimizer_matches_max_deg\n";
    for (const ScanRecord& r : records) {
        out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.mu << ',' << r.cap << ',' << (r.universal ? 1 : 0)
            << ',' << (r.mu_regular ? 1 : 0) << ',' << r.l.num << ',' << r.l.den << ',' << r.l_bar << ','
            << r.max_deg_g << ',' << (r.minimizer_matches_max_deg ? 1 : 0) << '\n';
    }
    return out.str();
}

inline std::string aggregates_csv(const std::vector<AggregateRow>& rows) {
    std::ostringstream out;
    out << "n,m,count,min_cap,max_cap,mean_cap,l,l_bar,r_mean,r_std,rbar_mean,rbar_std\n";
    for (const AggregateRow& a : rows) {
        out << a.n << ',' << a.m << ',' << a.count << ',' << a.min_cap << ',' << a.max_cap << ','
            << detail::decimal6(a.mean_cap) << ',' << detail::decimal6(a.l.to_double()) << ',' << a.l_bar << ',';
        auto opt = [&](const std::optional<double>& v) { return v ? detail::decimal6(*v) : std::string(); };
        out << opt(a.r_mean) << ',' << opt(a.r_std) << ',' << opt(a.rbar_mean) << ',' << opt(a.rbar_std) << '\n';
    }
    return out.str();
}

inline std::string dominance_csv(const std::vector<DominanceRecord>& records) {
    std::ostringstream out;
    out << "graph6,m,successors,cap,successor_caps,dominant\n";
    for (const DominanceRecord& r : records) {
        out << r.graph6 << ',' << r.m << ',' << r.successor_count << ',' << r.cap << ',';
        for (std::size_t i = 0; i < r.successor_caps.size(); ++i) {
            if (i) out << ';';
            out << r.successor_caps[i];
        }
        out << ',' << (r.dominant ? 1 : 0) << '\n';
    }
    return out.str();
}

inline std::string maxdeg_csv(const MaxDegScanResult& result, int n) {
    std::ostringstream out;
    out << "n,m,graphs,counterexamples\n";
    for (const auto& [m, counts] : result.by_m)
        out << n << ',' << m << ',' << counts.first << ',' << counts.second << '\n';
    return out.str();
}

inline std::string sample_csv(const SampleScanResult& result) {
    std::ostringstream out;
    out << "# n=" << result.n << " samples=" << result.samples << " seed=" << result.seed << " scheme=\""
        << result.scheme << "\"\n";
    out << scan_records_csv(result.records);
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    out << content;
    if (!out) fail(errc::io_error, "short write to " + path);
}

}  // namespace mstci
