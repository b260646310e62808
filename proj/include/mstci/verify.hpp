#pragma once

#include <bit>
#include <sstream>
#include <string>
#include <vector>

#include "mstci/graph.hpp"
#include "mstci/solver.hpp"
#include "mstci/tree_cycles.hpp"

namespace mstci {

struct LemmaCheck {
    std::string name;
    bool passed = true;
    std::string witness;  // set on failure
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;

    bool all_passed() const {
        for (const LemmaCheck& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Checks the structural facts the solver relies on, on one graph: bond
// members pairwise intersect, chords live in exactly the bonds of their
// tree path (hence at least two), the thinned bonds partition the edges
// with the counting inequality, deleting a chord never raises the
// intersection number, and when adding an edge lowers it, every minimizer
// of the bigger graph uses that edge.
inline LemmaReport verify_lemmas(const Graph& g) {
    if (!g.is_connected()) fail(errc::not_connected, "lemma checks need a connected graph");
    if (g.vertex_count() > 8) fail(errc::unsupported, "lemma checks are sized for n <= 8");
    LemmaReport report;
    auto& checks = report.checks;
    auto fail_check = [&](LemmaCheck& c, const std::string& witness) {
        c.passed = false;
        c.witness = witness;
    };

    const MstciResult solved = solve_mstci(g, {.allow_star_shortcut = false});
    const std::uint32_t cap = solved.intersection_number;
    const SpanningTree& t = solved.minimizer;
    const FundamentalCycleSet fcs = fundamental_cycles(g, t);
    const BondSet bond_set = bonds(g, t);

    std::uint16_t path_of_edge[kMaxEdges] = {};
    for (const FundamentalCycle& c : fcs.cycles) path_of_edge[c.chord_edge] = c.tree_path;

    {
        LemmaCheck& c = checks.emplace_back(LemmaCheck{"bond_members_pairwise_intersect"});
        for (int p = 0; p < bond_set.size() && c.passed; ++p) {
            const std::vector<int> members = bond_set.edges_of(p);
            for (std::size_t a = 0; a < members.size() && c.passed; ++a) {
                if (t.edge_mask & edge_bit(members[a])) continue;
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    if (t.edge_mask & edge_bit(members[b])) continue;
                    if ((path_of_edge[members[a]] & path_of_edge[members[b]]) == 0) {
                        std::ostringstream w;
                        w << "bond " << p << ": chords " << members[a] << " and " << members[b] << " miss";
                        fail_check(c, w.str());
                        break;
                    }
                }
            }
        }
    }

    {
        LemmaCheck& c = checks.emplace_back(LemmaCheck{"chord_in_exactly_path_bonds"});
        for (const FundamentalCycle& fc : fcs.cycles) {
            std::uint16_t member_of = 0;
            for (int p = 0; p < bond_set.size(); ++p)
                if (bond_set.bond[p] & edge_bit(fc.chord_edge)) member_of |= static_cast<std::uint16_t>(1u << p);
            if (member_of != fc.tree_path) {
                std::ostringstream w;
                w << "chord " << int(fc.chord_edge) << ": bonds " << member_of << " vs path " << fc.tree_path;
                fail_check(c, w.str());
                break;
            }
        }
    }

    {
        LemmaCheck& c = checks.emplace_back(LemmaCheck{"chord_in_two_or_more_bonds"});
        for (const FundamentalCycle& fc : fcs.cycles)
            if (std::popcount(fc.tree_path) < 2) {
                fail_check(c, "chord " + std::to_string(fc.chord_edge) + " has a length-1 tree path");
                break;
            }
    }

    {
        LemmaCheck& c = checks.emplace_back(LemmaCheck{"thinned_bonds_partition_and_bound"});
        const NonRedundantBondSet nb = non_redundant_bond_set(g, t);
        EdgeMask all = 0;
        int total = 0;
        bool overlap = false;
        for (int p = 0; p < nb.size(); ++p) {
            if (all & nb.bond[p]) overlap = true;
            all |= nb.bond[p];
            total += nb.chord_count[p];
        }
        const EdgeMask everything = g.edge_count() == 0 ? 0 : (edge_bit(g.edge_count() - 1) << 1) - 1;
        if (overlap || all != everything)
            fail_check(c, "thinned bonds do not partition the edge set");
        else if (total != g.cyclomatic_number())
            fail_check(c, "chord counts sum to " + std::to_string(total));
        else {
            std::int64_t pairs = 0;
            for (int p = 0; p < nb.size(); ++p)
                pairs += static_cast<std::int64_t>(nb.chord_count[p]) * (nb.chord_count[p] - 1) / 2;
            if (pairs > static_cast<std::int64_t>(cap))
                fail_check(c, "pair lower bound " + std::to_string(pairs) + " exceeds " + std::to_string(cap));
        }
    }

    {
        LemmaCheck& c = checks.emplace_back(LemmaCheck{"chord_deletion_never_raises"});
        for (const FundamentalCycle& fc : fcs.cycles) {
            // removing a chord of the minimizer keeps the tree, so the graph stays connected
            int idx = fc.chord_edge;
            const std::uint32_t sub = solve_mstci(g.without_edge(idx)).intersection_number;
            if (sub > cap) {
                fail_check(c, "deleting edge " + std::to_string(idx) + " gives " + std::to_string(sub) + " > " +
                                  std::to_string(cap));
                break;
            }
        }
    }

    {
        LemmaCheck& c = checks.emplace_back(LemmaCheck{"improving_edge_in_every_minimizer"});
        for (auto [u, v] : g.non_edges()) {
            const Graph h = g.with_edge(u, v);
            const std::uint32_t hcap = solve_mstci(h).intersection_number;
            if (hcap >= cap) continue;
            int added = -1;
            for (int i = 0; i < h.edge_count(); ++i)
                if (h.edge(i).u == u && h.edge(i).v == v) added = i;
            const MstciResult all =
                solve_mstci(h, {.want_all_minimizers = true, .allow_star_shortcut = false});
            for (const SpanningTree& mt : *all.all_minimizers)
                if (!(mt.edge_mask & edge_bit(added))) {
                    std::ostringstream w;
                    w << "adding (" << u << "," << v << ") improves to " << hcap << " but a minimizer skips it";
                    fail_check(c, w.str());
                    break;
                }
            if (!c.passed) break;
        }
    }

    return report;
}

}  // namespace mstci
