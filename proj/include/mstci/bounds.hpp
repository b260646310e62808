#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "mstci/graph.hpp"
#include "mstci/rational.hpp"
#include "mstci/solver.hpp"

namespace mstci {

namespace detail {

inline void require_feasible(int n, std::int64_t m) {
    if (n < 2) fail(errc::infeasible, "need n >= 2");
    const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m)
        fail(errc::infeasible, "m=" + std::to_string(m) + " outside [n-1, n(n-1)/2] for n=" + std::to_string(n));
}

inline std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

}  // namespace detail

// Proven lower bound: half of (mu^2/(n-1) - mu), exact and possibly negative.
inline Rational lower_bound_l(int n, std::int64_t m) {
    detail::require_feasible(n, m);
    const std::int64_t mu = m - n + 1;
    return Rational(mu * mu - mu * (n - 1), 2 * (n - 1));
}

// Integer division 2*mu = q*(n-1) + r with 0 <= r < n-1.
inline std::pair<std::int64_t, std::int64_t> qr_decompose(int n, std::int64_t m) {
    detail::require_feasible(n, m);
    const std::int64_t mu = m - n + 1;
    return {2 * mu / (n - 1), 2 * mu % (n - 1)};
}

// Conjectured tight lower bound (n-1)*C(q,2) + q*r; equals the star-tree
// count of the graphs whose non-hub degrees split as q+1 and q+2.
inline std::int64_t lower_bound_bar(int n, std::int64_t m) {
    const auto [q, r] = qr_decompose(n, m);
    return (n - 1) * detail::choose2(q) + q * r;
}

struct BoundsReport {
    int n = 0;
    std::int64_t m = 0;
    std::int64_t mu = 0;
    Rational l;
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t l_bar = 0;
};

inline BoundsReport bounds_report(int n, std::int64_t m) {
    BoundsReport rep;
    rep.n = n;
    rep.m = m;
    rep.l = lower_bound_l(n, m);
    rep.mu = m - n + 1;
    std::tie(rep.q, rep.r) = qr_decompose(n, m);
    rep.l_bar = lower_bound_bar(n, m);
    return rep;
}

// A graph is mu-regular when it has a universal vertex and the other
// degrees are as equal as the handshake total allows: n-1-r of them q+1
// and r of them q+2.
inline bool is_mu_regular(const Graph& g) {
    const auto center = g.universal_vertex();
    if (!center) return false;
    const int n = g.vertex_count();
    if (n < 2) return false;
    const auto [q, r] = qr_decompose(n, g.edge_count());
    std::int64_t at_q1 = 0, at_q2 = 0;
    for (int v = 0; v < n; ++v) {
        if (v == *center) continue;
        const int d = g.degree(v);
        if (d == q + 1)
            ++at_q1;
        else if (d == q + 2)
            ++at_q2;
        else
            return false;
    }
    return at_q1 == n - 1 - r && at_q2 == r;
}

// Deterministic mu-regular graph with the given size: vertex 0 is the hub
// and the rest realize the near-regular degree sequence greedily, highest
// remaining degree first with ties by vertex index.
inline Graph build_mu_regular(int n, std::int64_t m) {
    detail::require_feasible(n, m);
    const auto [q, r] = qr_decompose(n, m);
    std::vector<int> want(n, 0);  // degrees inside the non-hub subgraph
    for (int v = 1; v < n; ++v) want[v] = static_cast<int>(q) + (v <= r ? 1 : 0);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v) pairs.emplace_back(0, v);
    for (;;) {
        int a = -1;
        for (int v = 1; v < n; ++v)
            if (want[v] > 0 && (a < 0 || want[v] > want[a])) a = v;
        if (a < 0) break;
        std::vector<int> targets;
        for (int v = 1; v < n; ++v)
            if (v != a && want[v] > 0) targets.push_back(v);
        std::stable_sort(targets.begin(), targets.end(), [&](int x, int y) { return want[x] > want[y]; });
        if (static_cast<int>(targets.size()) < want[a])
            fail(errc::infeasible, "degree sequence not realizable");  // cannot happen for near-regular sequences
        const int need = want[a];
        for (int k = 0; k < need; ++k) {
            pairs.emplace_back(a, targets[k]);
            --want[targets[k]];
        }
        want[a] = 0;
    }
    return Graph::from_edge_list(n, pairs);
}

// Above m = n(n-2)/2 a universal vertex always exists, so the star tree
// solves the instance outright.
inline std::optional<std::uint32_t> dense_shortcut(const Graph& g) {
    const int n = g.vertex_count();
    if (2 * static_cast<std::int64_t>(g.edge_count()) <= static_cast<std::int64_t>(n) * (n - 2))
        return std::nullopt;
    const auto center = g.universal_vertex();
    if (!center) fail(errc::infeasible, "dense graph without a universal vertex; should be impossible");
    return star_formula(g, *center);
}

struct RatioReport {
    Rational r;      // l / intersection number
    Rational r_bar;  // l_bar / intersection number
};

inline RatioReport ratios(const Graph& g, std::uint32_t intersection) {
    if (intersection == 0) fail(errc::zero_intersection, "ratios need a positive intersection number");
    const int n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    return {lower_bound_l(n, m) / Rational(static_cast<std::int64_t>(intersection)),
            Rational(lower_bound_bar(n, m), static_cast<std::int64_t>(intersection))};
}

}  // namespace mstci
