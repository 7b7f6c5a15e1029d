#ifndef MATROID_MULTIGRAPH_HPP
#define MATROID_MULTIGRAPH_HPP

// Labeled multigraphs with loops and parallel edges, their GF(2) circuit
// matroids, structural predicates used as quotient-graph filters, and
// one-element extension / coextension / exhaustive enumeration machinery.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/binary_matroid.hpp"
#include "matroid/errors.hpp"

namespace matroid {

struct GraphEdge {
    std::string label;
    std::size_t u, v;  // indices into vertex list; u == v is a loop
};

class Multigraph {
public:
    std::size_t add_vertex(const std::string& name) {
        for (const auto& n : vertices_)
            if (n == name) throw LabelError("graph: duplicate vertex '" + name + "'");
        vertices_.push_back(name);
        return vertices_.size() - 1;
    }

    void add_edge(const std::string& label, std::size_t u, std::size_t v) {
        if (u >= vertices_.size() || v >= vertices_.size())
            throw LabelError("graph: edge endpoint out of range");
        for (const auto& e : edges_)
            if (e.label == label) throw LabelError("graph: duplicate edge label '" + label + "'");
        edges_.push_back({label, u, v});
    }

    void add_edge_named(const std::string& label, const std::string& u, const std::string& v) {
        add_edge(label, vertex_index(u), vertex_index(v));
    }

    std::size_t vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == name) return i;
        throw LabelError("graph: unknown vertex '" + name + "'");
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    const GraphEdge& edge_by_label(const std::string& label) const {
        for (const auto& e : edges_)
            if (e.label == label) return e;
        throw LabelError("graph: unknown edge '" + label + "'");
    }

    // Degree with each loop counting twice.
    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (const auto& e : edges_) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;
        }
        return d;
    }

    std::size_t loop_count() const {
        std::size_t n = 0;
        for (const auto& e : edges_)
            if (e.u == e.v) ++n;
        return n;
    }

    bool connected() const {
        if (vertices_.empty()) return true;
        std::vector<bool> seen(vertices_.size(), false);
        std::vector<std::size_t> stack = {0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& e : edges_) {
                std::size_t w = vertices_.size();
                if (e.u == v) w = e.v;
                else if (e.v == v) w = e.u;
                if (w < vertices_.size() && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        for (bool s : seen)
            if (!s) return false;
        return true;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<GraphEdge> edges_;
};

// ---------------------------------------------------------------------------
// Circuit matroid
// ---------------------------------------------------------------------------

// Binary matroid of the mod-2 vertex/edge incidence matrix. Loops give zero
// columns; rank is |V| minus the number of connected components.
inline BinaryMatroid circuit_matroid(const Multigraph& g) {
    Gf2Matrix inc(g.vertex_count(), g.edge_count());
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const GraphEdge& e = g.edges()[j];
        labels.push_back(e.label);
        if (e.u != e.v) {
            inc.set(e.u, j, true);
            inc.set(e.v, j, true);
        }
    }
    return BinaryMatroid::from_matrix(std::move(labels), inc);
}

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

inline bool is_eulerian(const Multigraph& g) {
    // Connected up to isolated vertices, all degrees even.
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t start = g.vertex_count();
    for (const auto& e : g.edges()) { start = e.u; break; }
    if (start == g.vertex_count()) return g.vertex_count() <= 1;
    std::vector<std::size_t> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges()) {
            std::size_t w = g.vertex_count();
            if (e.u == v) w = e.v;
            else if (e.v == v) w = e.u;
            if (w < g.vertex_count() && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        if (!seen[v]) return false;
        if (g.degree(v) % 2 != 0) return false;
    }
    return true;
}

namespace detail {

struct BlockDfs {
    const Multigraph& g;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // vertex -> (edge idx, other end)
    std::vector<int> disc, low;
    std::vector<bool> edge_used;
    std::vector<std::size_t> edge_stack;
    std::vector<std::set<std::string>> blocks;
    int timer = 0;

    explicit BlockDfs(const Multigraph& graph) : g(graph) {
        adj.resize(g.vertex_count());
        disc.assign(g.vertex_count(), -1);
        low.assign(g.vertex_count(), 0);
        edge_used.assign(g.edge_count(), false);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const GraphEdge& e = g.edges()[i];
            if (e.u == e.v) continue;  // loops are their own blocks
            adj[e.u].push_back({i, e.v});
            adj[e.v].push_back({i, e.u});
        }
    }

    void pop_block(std::size_t until_edge) {
        std::set<std::string> block;
        while (true) {
            std::size_t ei = edge_stack.back();
            edge_stack.pop_back();
            block.insert(g.edges()[ei].label);
            if (ei == until_edge) break;
        }
        blocks.push_back(std::move(block));
    }

    void dfs(std::size_t v, int parent_edge) {
        disc[v] = low[v] = timer++;
        for (auto [ei, w] : adj[v]) {
            if (static_cast<int>(ei) == parent_edge || edge_used[ei]) continue;
            edge_used[ei] = true;
            edge_stack.push_back(ei);
            if (disc[w] == -1) {
                dfs(w, static_cast<int>(ei));
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) pop_block(ei);
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace detail

// 2-connected components as edge-label sets; every loop is its own block.
inline std::vector<std::set<std::string>> blocks(const Multigraph& g) {
    if (!g.connected()) throw StructureError("blocks: graph must be connected");
    detail::BlockDfs dfs(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (dfs.disc[v] == -1) dfs.dfs(v, -1);
    for (const auto& e : g.edges())
        if (e.u == e.v) dfs.blocks.push_back({e.label});
    std::sort(dfs.blocks.begin(), dfs.blocks.end());
    return dfs.blocks;
}

inline bool connected_without(const Multigraph& g, std::size_t skip1, std::size_t skip2) {
    if (g.vertex_count() == 0) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (i == skip1 || i == skip2) continue;
            const GraphEdge& e = g.edges()[i];
            std::size_t w = g.vertex_count();
            if (e.u == v) w = e.v;
            else if (e.v == v) w = e.u;
            if (w < g.vertex_count() && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

inline bool has_bridge(const Multigraph& g) {
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!connected_without(g, i, i)) return true;
    return false;
}

// Some 2-edge set whose removal disconnects the graph, label-sorted first.
inline std::optional<std::pair<std::string, std::string>> has_two_edge_cut(const Multigraph& g) {
    std::vector<std::size_t> order(g.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.edges()[a].label < g.edges()[b].label;
    });
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (!connected_without(g, order[a], order[b]))
                return std::make_pair(g.edges()[order[a]].label, g.edges()[order[b]].label);
    return std::nullopt;
}

// Sizes of the non-loop parallel classes.
inline std::vector<std::size_t> parallel_class_sizes(const Multigraph& g) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> classes;
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;
        classes[{std::min(e.u, e.v), std::max(e.u, e.v)}]++;
    }
    std::vector<std::size_t> sizes;
    for (auto& [k, n] : classes) sizes.push_back(n);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

struct StructuralProfile {
    std::size_t loop_count = 0;
    std::vector<std::size_t> parallel_class_sizes;  // descending
    std::size_t block_count = 0;
    bool one_block_is_loop = false;
    bool eulerian = false;
    bool two_edge_cut = false;
};

inline StructuralProfile structural_profile(const Multigraph& g) {
    if (!g.connected()) throw StructureError("structural_profile: graph must be connected");
    StructuralProfile p;
    p.loop_count = g.loop_count();
    p.parallel_class_sizes = parallel_class_sizes(g);
    auto bs = blocks(g);
    p.block_count = bs.size();
    for (const auto& b : bs) {
        if (b.size() != 1) continue;
        const GraphEdge& e = g.edge_by_label(*b.begin());
        if (e.u == e.v) p.one_block_is_loop = true;
    }
    p.eulerian = is_eulerian(g);
    p.two_edge_cut = has_two_edge_cut(g).has_value();
    return p;
}

// The quotient-graph admissibility filter: a single block (or two with one a
// loop), at most one loop, no parallel class above two, no 2-edge cut, and
// Eulerian when demanded.
inline bool quotient_admissible(const StructuralProfile& p, bool require_eulerian) {
    bool block_ok = p.block_count == 1 || (p.block_count == 2 && p.one_block_is_loop);
    if (!block_ok) return false;
    if (p.loop_count > 1) return false;
    if (!p.parallel_class_sizes.empty() && p.parallel_class_sizes.front() > 2) return false;
    if (p.two_edge_cut) return false;
    if (require_eulerian && !p.eulerian) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Isomorphism and canonical keys
// ---------------------------------------------------------------------------

namespace detail {

// Iteratively refined vertex classes from label-independent invariants.
inline std::vector<std::size_t> vertex_classes(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> cls(n);
    std::vector<std::string> key(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t loops = 0;
        for (const auto& e : g.edges())
            if (e.u == v && e.v == v) ++loops;
        key[v] = std::to_string(g.degree(v)) + ":" + std::to_string(loops);
    }
    for (int round = 0; round < 8; ++round) {
        // class ids assigned over sorted keys, so they are label-independent
        std::map<std::string, std::size_t> ids;
        {
            std::vector<std::string> ks(key.begin(), key.end());
            std::sort(ks.begin(), ks.end());
            ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
            for (std::size_t i = 0; i < ks.size(); ++i) ids[ks[i]] = i;
        }
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < n; ++v) next[v] = ids[key[v]];
        bool stable = (round > 0 && next == cls);
        cls = next;
        if (stable) break;
        for (std::size_t v = 0; v < n; ++v) {
            std::multiset<std::pair<std::size_t, std::size_t>> nb;  // (class, multiplicity)
            std::map<std::size_t, std::size_t> mult;
            for (const auto& e : g.edges()) {
                if (e.u == e.v) continue;
                if (e.u == v) mult[e.v]++;
                else if (e.v == v) mult[e.u]++;
            }
            for (auto& [w, m] : mult) nb.insert({cls[w], m});
            std::ostringstream os;
            os << cls[v];
            for (auto& p : nb) os << "," << p.first << "x" << p.second;
            key[v] = os.str();
        }
    }
    return cls;
}

// Edge multiset encoding of g under a vertex renumbering.
inline std::vector<std::uint32_t> encode_under(const Multigraph& g,
                                               const std::vector<std::size_t>& pos) {
    std::vector<std::uint32_t> enc;
    enc.reserve(g.edge_count() + 1);
    enc.push_back(static_cast<std::uint32_t>(g.vertex_count()));
    std::vector<std::uint32_t> es;
    for (const auto& e : g.edges()) {
        std::uint32_t a = static_cast<std::uint32_t>(std::min(pos[e.u], pos[e.v]));
        std::uint32_t b = static_cast<std::uint32_t>(std::max(pos[e.u], pos[e.v]));
        es.push_back(a * 64 + b);
    }
    std::sort(es.begin(), es.end());
    enc.insert(enc.end(), es.begin(), es.end());
    return enc;
}

inline void class_preserving_positions(
    const Multigraph& g, const std::vector<std::size_t>& cls,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
    const std::size_t n = g.vertex_count();
    // Position blocks: class c occupies a contiguous range of positions.
    std::vector<std::size_t> class_sizes;
    for (std::size_t v = 0; v < n; ++v) {
        if (cls[v] >= class_sizes.size()) class_sizes.resize(cls[v] + 1, 0);
        class_sizes[cls[v]]++;
    }
    std::vector<std::size_t> base(class_sizes.size(), 0);
    for (std::size_t c = 1; c < class_sizes.size(); ++c)
        base[c] = base[c - 1] + class_sizes[c - 1];
    std::vector<std::size_t> pos(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            fn(pos);
            return;
        }
        // assign vertex v to each free position of its class
        std::size_t c = cls[v];
        for (std::size_t p = base[c]; p < base[c] + class_sizes[c]; ++p) {
            bool taken = false;
            for (std::size_t w = 0; w < v; ++w)
                if (cls[w] == c && pos[w] == p) { taken = true; break; }
            if (taken) continue;
            pos[v] = p;
            rec(v + 1);
        }
    };
    rec(0);
}

}  // namespace detail

// Canonical encoding: minimal edge multiset over all class-preserving vertex
// renumberings. Equal keys if and only if isomorphic.
inline std::vector<std::uint32_t> canonical_key(const Multigraph& g) {
    std::vector<std::size_t> cls = detail::vertex_classes(g);
    std::vector<std::uint32_t> best;
    detail::class_preserving_positions(g, cls, [&](const std::vector<std::size_t>& pos) {
        std::vector<std::uint32_t> enc = detail::encode_under(g, pos);
        if (best.empty() || enc < best) best = std::move(enc);
    });
    if (g.vertex_count() == 0) best = {0};
    return best;
}

struct GraphIso {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

// Isomorphism respecting incidence, loops and parallel multiplicity.
inline std::optional<GraphIso> graph_isomorphic(const Multigraph& g, const Multigraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    if (canonical_key(g) != canonical_key(h)) return std::nullopt;
    // Recover an explicit bijection: find renumberings of both onto the
    // canonical key, then compose.
    std::vector<std::size_t> cg = detail::vertex_classes(g), ch = detail::vertex_classes(h);
    std::vector<std::uint32_t> key = canonical_key(g);
    std::vector<std::size_t> pg, ph;
    detail::class_preserving_positions(g, cg, [&](const std::vector<std::size_t>& pos) {
        if (pg.empty() && detail::encode_under(g, pos) == key) pg = pos;
    });
    detail::class_preserving_positions(h, ch, [&](const std::vector<std::size_t>& pos) {
        if (ph.empty() && detail::encode_under(h, pos) == key) ph = pos;
    });
    if (pg.empty() || ph.empty()) return std::nullopt;
    GraphIso iso;
    std::vector<std::size_t> inv_ph(h.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v) inv_ph[ph[v]] = v;
    std::vector<std::size_t> gv_to_hv(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        gv_to_hv[v] = inv_ph[pg[v]];
        iso.vertex_map[g.vertices()[v]] = h.vertices()[gv_to_hv[v]];
    }
    // Pair edges within corresponding parallel classes in label order.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> ge, he;
    for (const auto& e : g.edges()) {
        std::size_t a = gv_to_hv[e.u], b = gv_to_hv[e.v];
        ge[{std::min(a, b), std::max(a, b)}].push_back(e.label);
    }
    for (const auto& e : h.edges())
        he[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.label);
    for (auto& [k, labels] : ge) {
        auto it = he.find(k);
        if (it == he.end() || it->second.size() != labels.size()) return std::nullopt;
        std::sort(labels.begin(), labels.end());
        std::sort(it->second.begin(), it->second.end());
        for (std::size_t i = 0; i < labels.size(); ++i) iso.edge_map[labels[i]] = it->second[i];
    }
    return iso;
}

// ---------------------------------------------------------------------------
// Graph edit helpers (used by fixture validation and enumeration)
// ---------------------------------------------------------------------------

inline Multigraph delete_edge(const Multigraph& g, const std::string& label) {
    Multigraph out;
    for (const auto& v : g.vertices()) out.add_vertex(v);
    for (const auto& e : g.edges())
        if (e.label != label) out.add_edge(e.label, e.u, e.v);
    g.edge_by_label(label);  // throws on unknown
    return out;
}

inline Multigraph contract_edge(const Multigraph& g, const std::string& label) {
    const GraphEdge& target = g.edge_by_label(label);
    if (target.u == target.v) return delete_edge(g, label);  // loop contraction
    Multigraph out;
    // merge v into u
    const std::size_t keep = std::min(target.u, target.v);
    const std::size_t gone = std::max(target.u, target.v);
    std::vector<std::size_t> remap(g.vertex_count());
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (v == gone) continue;
        remap[v] = next++;
        out.add_vertex(g.vertices()[v]);
    }
    remap[gone] = remap[keep];
    for (const auto& e : g.edges()) {
        if (e.label == label) continue;
        out.add_edge(e.label, remap[e.u], remap[e.v]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// One-element coextensions (vertex splits) and extensions
// ---------------------------------------------------------------------------

// All graphs G' with a distinguished new edge whose contraction gives G,
// enumerated by splitting each vertex's incident edge-ends across two new
// adjacent vertices. Splits leaving a side with no ends (pendant new edge,
// a bridge/coloop) are emitted only when allow_coloops is set. Results are
// filtered, then deduplicated up to isomorphism, in canonical-key order.
inline std::vector<Multigraph> one_element_coextensions(
    const Multigraph& g, const std::function<bool(const Multigraph&)>& filter,
    bool allow_coloops = false, const std::string& new_edge_label = "e*") {
    if (!g.connected()) throw StructureError("coextensions: graph must be connected");
    std::vector<std::pair<std::vector<std::uint32_t>, Multigraph>> found;

    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        // Ends at v: (edge index, which endpoint). A loop contributes both.
        std::vector<std::pair<std::size_t, int>> ends;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (g.edges()[i].u == v) ends.push_back({i, 0});
            if (g.edges()[i].v == v) ends.push_back({i, 1});
        }
        const std::size_t k = ends.size();
        // Unordered 2-partitions: end 0 (if any) always stays on side A.
        const std::size_t limit = k == 0 ? 1 : (std::size_t(1) << (k - 1));
        for (std::size_t bits = 0; bits < limit; ++bits) {
            std::size_t side_b = 0;
            for (std::size_t i = 1; i < k; ++i)
                if (bits & (std::size_t(1) << (i - 1))) ++side_b;
            if (side_b == 0 && !allow_coloops) continue;  // pendant split
            Multigraph cand;
            for (std::size_t w = 0; w < g.vertex_count(); ++w) cand.add_vertex(g.vertices()[w]);
            std::size_t v2 = cand.add_vertex(g.vertices()[v] + "'");
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                const GraphEdge& e = g.edges()[i];
                std::size_t eu = e.u, ev = e.v;
                for (std::size_t j = 0; j < k; ++j) {
                    if (ends[j].first != i) continue;
                    bool to_b = j > 0 && (bits & (std::size_t(1) << (j - 1)));
                    if (ends[j].second == 0) eu = to_b ? v2 : e.u;
                    else ev = to_b ? v2 : e.v;
                }
                cand.add_edge(e.label, eu, ev);
            }
            cand.add_edge(new_edge_label, v, v2);
            if (!filter(cand)) continue;
            auto key = canonical_key(cand);
            bool dup = false;
            for (auto& [k2, g2] : found)
                if (k2 == key) { dup = true; break; }
            if (!dup) found.push_back({std::move(key), std::move(cand)});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Multigraph> out;
    for (auto& [k, gr] : found) out.push_back(std::move(gr));
    return out;
}

// Coextension classes counted at the matroid level: the union of the vertex
// splits and the adjoined-loop graph, filtered, deduplicated by circuit
// matroid isomorphism. Loop placement is invisible to the matroid, so split
// variants differing only in where a loop sits collapse to one class here.
inline std::vector<Multigraph> coextension_matroid_classes(
    const Multigraph& g, const std::function<bool(const Multigraph&)>& filter,
    const std::string& new_edge_label = "e*") {
    std::vector<Multigraph> candidates = one_element_coextensions(g, filter, false, new_edge_label);
    {
        Multigraph with_loop;
        for (const auto& v : g.vertices()) with_loop.add_vertex(v);
        for (const auto& e : g.edges()) with_loop.add_edge(e.label, e.u, e.v);
        with_loop.add_edge(new_edge_label, 0, 0);
        if (filter(with_loop)) candidates.push_back(std::move(with_loop));
    }
    std::vector<Multigraph> classes;
    std::vector<BinaryMatroid> reps;
    for (Multigraph& cand : candidates) {
        BinaryMatroid m = circuit_matroid(cand);
        bool dup = false;
        for (const auto& r : reps)
            if (r.size() == m.size() && is_isomorphic(r, m)) { dup = true; break; }
        if (dup) continue;
        reps.push_back(std::move(m));
        classes.push_back(std::move(cand));
    }
    return classes;
}

enum class ExtensionMode { Loop, Parallel, AnyNewEdge };

// Graphs obtained by adding one edge of the requested kind, up to isomorphism.
inline std::vector<Multigraph> one_element_extensions(const Multigraph& g, ExtensionMode mode,
                                                      const std::string& new_edge_label = "e*") {
    std::vector<std::pair<std::vector<std::uint32_t>, Multigraph>> found;
    auto offer = [&](std::size_t u, std::size_t v) {
        Multigraph cand;
        for (const auto& w : g.vertices()) cand.add_vertex(w);
        for (const auto& e : g.edges()) cand.add_edge(e.label, e.u, e.v);
        cand.add_edge(new_edge_label, u, v);
        auto key = canonical_key(cand);
        for (auto& [k2, g2] : found)
            if (k2 == key) return;
        found.push_back({std::move(key), std::move(cand)});
    };
    if (mode == ExtensionMode::Loop) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) offer(v, v);
    } else if (mode == ExtensionMode::Parallel) {
        for (const auto& e : g.edges())
            if (e.u != e.v) offer(e.u, e.v);
    } else {
        for (std::size_t u = 0; u < g.vertex_count(); ++u)
            for (std::size_t v = u; v < g.vertex_count(); ++v) offer(u, v);
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Multigraph> out;
    for (auto& [k, gr] : found) out.push_back(std::move(gr));
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small connected multigraphs
// ---------------------------------------------------------------------------

struct GraphEnumConstraints {
    std::optional<std::size_t> vertices;      // exact vertex count
    std::optional<std::size_t> exact_edges;   // exact edge count (otherwise 1..max_edges)
    bool require_simple = false;
    bool require_two_connected = false;       // no cut vertex: exactly one block
    bool require_no_two_edge_cut = false;
    bool require_no_bridge = false;
    bool require_eulerian = false;
    std::size_t max_loops = static_cast<std::size_t>(-1);
    std::size_t max_parallel = static_cast<std::size_t>(-1);  // multiplicity cap per vertex pair
    std::size_t min_degree = 0;
    bool lift_budget_guard = false;  // callers opting into larger sweeps
};

namespace detail {

// Connected simple spanning skeletons on n labeled vertices, deduplicated.
inline std::vector<Multigraph> simple_skeletons(std::size_t n, std::size_t max_edges) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::vector<Multigraph> out;
    std::set<std::vector<std::uint32_t>> seen;
    const std::size_t total = std::size_t(1) << pairs.size();
    for (std::size_t bits = 0; bits < total; ++bits) {
        std::size_t cnt = static_cast<std::size_t>(__builtin_popcountll(bits));
        if (cnt > max_edges) continue;
        if (n >= 2 && cnt < n - 1) continue;  // cannot span
        Multigraph g;
        for (std::size_t v = 0; v < n; ++v) g.add_vertex(std::to_string(v + 1));
        std::size_t ei = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (bits & (std::size_t(1) << p))
                g.add_edge("s" + std::to_string(++ei), pairs[p].first, pairs[p].second);
        if (!g.connected()) continue;
        auto key = canonical_key(g);
        if (seen.insert(key).second) out.push_back(std::move(g));
    }
    return out;
}

inline void compositions(std::size_t total, std::size_t parts, std::size_t each_min,
                         std::size_t each_max, std::vector<std::size_t>& cur,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (cur.size() == parts) {
        if (total == 0) fn(cur);
        return;
    }
    std::size_t remaining_parts = parts - cur.size() - 1;
    for (std::size_t x = each_min; x <= std::min(total, each_max); ++x) {
        if (total - x < remaining_parts * each_min) break;
        cur.push_back(x);
        compositions(total - x, parts, each_min, each_max, cur, fn);
        cur.pop_back();
    }
}

}  // namespace detail

// All connected multigraphs with at most max_edges edges satisfying the
// constraints, up to isomorphism, in canonical-key order. Guarded to desk
// scale unless the caller lifts the budget.
inline std::vector<Multigraph> enumerate_connected_multigraphs(
    std::size_t max_edges, const GraphEnumConstraints& c = {}) {
    if (max_edges > 10 && !c.lift_budget_guard)
        throw ResourceError("enumerate: edge budget above 10 requires lifting the guard");
    if (max_edges > 14) throw ResourceError("enumerate: edge budget above 14 is out of scope");

    std::map<std::vector<std::uint32_t>, Multigraph> found;

    auto consider = [&](const Multigraph& g) {
        if (c.exact_edges && g.edge_count() != *c.exact_edges) return;
        if (!c.exact_edges && g.edge_count() == 0) return;
        if (c.require_simple && (g.loop_count() > 0 ||
                                 (!parallel_class_sizes(g).empty() &&
                                  parallel_class_sizes(g).front() > 1)))
            return;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) < c.min_degree) return;
        if (c.require_no_bridge && has_bridge(g)) return;
        if (c.require_no_two_edge_cut && (has_bridge(g) || has_two_edge_cut(g))) return;
        if (c.require_eulerian && !is_eulerian(g)) return;
        if (c.require_two_connected) {
            if (g.loop_count() > 0) return;
            if (g.vertex_count() >= 2 && blocks(g).size() != 1) return;
        }
        auto key = canonical_key(g);
        if (!found.count(key)) found.emplace(std::move(key), g);
    };

    // Implied vertex caps: a graph with no 2-edge cut has every vertex at
    // non-loop degree >= 3 (n >= 2), and the blind skeleton sweep is only
    // viable up to 8 vertices.
    std::size_t vertex_cap = max_edges + 1;
    if (c.require_no_two_edge_cut || c.min_degree >= 3)
        vertex_cap = std::max<std::size_t>(1, (2 * max_edges) / 3);
    else if (c.require_two_connected || c.require_eulerian || c.min_degree >= 2)
        vertex_cap = std::max<std::size_t>(1, max_edges);
    if (vertex_cap > 8 && !c.vertices)
        throw ResourceError("enumerate: constrain the vertex count for sweeps this wide");
    if (c.vertices && *c.vertices > 8)
        throw ResourceError("enumerate: vertex counts above 8 are out of scope");

    std::vector<std::size_t> vertex_counts;
    if (c.vertices) vertex_counts.push_back(*c.vertices);
    else
        for (std::size_t n = 1; n <= vertex_cap; ++n) vertex_counts.push_back(n);

    for (std::size_t n : vertex_counts) {
        if (n == 0) continue;
        if (n == 1) {
            // Single vertex: loops only.
            std::size_t top = std::min(max_edges, c.max_loops);
            for (std::size_t l = 1; l <= top; ++l) {
                Multigraph g;
                g.add_vertex("1");
                for (std::size_t i = 0; i < l; ++i) g.add_edge("e" + std::to_string(i + 1), 0, 0);
                consider(g);
            }
            continue;
        }
        if (n > max_edges + 1) continue;
        for (const Multigraph& skel : detail::simple_skeletons(n, max_edges)) {
            const std::size_t s = skel.edge_count();
            const std::size_t max_mult = c.require_simple ? 1 : c.max_parallel;
            const std::size_t loop_top =
                c.require_simple ? 0 : std::min(c.max_loops, max_edges - s);
            for (std::size_t loops_total = 0; loops_total <= loop_top; ++loops_total) {
                if (s + loops_total > max_edges) continue;
                // exact non-loop edge totals from s .. max_edges - loops_total
                for (std::size_t target = s; target + loops_total <= max_edges; ++target) {
                    std::vector<std::size_t> cur;
                    detail::compositions(target, s, 1, max_mult, cur,
                                         [&](const std::vector<std::size_t>& m) {
                        // distribute loops over vertices
                        std::vector<std::size_t> lcur;
                        detail::compositions(loops_total, n, 0, loops_total, lcur,
                                             [&](const std::vector<std::size_t>& lv) {
                            Multigraph g;
                            for (std::size_t v = 0; v < n; ++v)
                                g.add_vertex(std::to_string(v + 1));
                            std::size_t ei = 0;
                            for (std::size_t i = 0; i < s; ++i)
                                for (std::size_t rep = 0; rep < m[i]; ++rep)
                                    g.add_edge("e" + std::to_string(++ei), skel.edges()[i].u,
                                               skel.edges()[i].v);
                            for (std::size_t v = 0; v < n; ++v)
                                for (std::size_t rep = 0; rep < lv[v]; ++rep)
                                    g.add_edge("e" + std::to_string(++ei), v, v);
                            consider(g);
                        });
                    });
                }
            }
        }
    }

    std::vector<Multigraph> out;
    for (auto& [k, g] : found) out.push_back(std::move(g));
    return out;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

// graph <name>
// edge <label> <u> <v>     (u == v for a loop)
// vertex <name>            (optional, for declaring order / isolated vertices)
inline std::pair<std::string, Multigraph> parse_graph(std::istream& in) {
    std::string line, name;
    Multigraph g;
    std::set<std::string> declared;
    bool have_header = false;
    std::vector<std::array<std::string, 3>> pending;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "graph") {
            if (!(ls >> name)) throw FixtureError("graph file: missing name");
            have_header = true;
        } else if (kw == "vertex") {
            std::string v;
            if (!(ls >> v)) throw FixtureError("graph file: bad vertex line");
            if (declared.insert(v).second) g.add_vertex(v);
        } else if (kw == "edge") {
            std::string l, u, v;
            if (!(ls >> l >> u >> v)) throw FixtureError("graph file: bad edge line");
            pending.push_back({l, u, v});
            if (declared.insert(u).second) g.add_vertex(u);
            if (declared.insert(v).second) g.add_vertex(v);
        } else {
            throw FixtureError("graph file: unknown keyword '" + kw + "'");
        }
    }
    if (!have_header) throw FixtureError("graph file: missing 'graph <name>' header");
    for (auto& [l, u, v] : pending) g.add_edge_named(l, u, v);
    return {name, g};
}

inline std::string print_graph(const std::string& name, const Multigraph& g) {
    std::ostringstream os;
    os << "graph " << name << "\n";
    for (const auto& v : g.vertices()) os << "vertex " << v << "\n";
    for (const auto& e : g.edges())
        os << "edge " << e.label << " " << g.vertices()[e.u] << " " << g.vertices()[e.v] << "\n";
    return os.str();
}

}  // namespace matroid

#endif
