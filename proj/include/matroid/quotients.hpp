#ifndef MATROID_QUOTIENTS_HPP
#define MATROID_QUOTIENTS_HPP

// Graphic quotients of a binary matroid via single-element binary extensions:
// for every column c over GF(2)^r, form the lift N = F + a(c), contract a,
// and keep the quotients whose dual passes the excluded-minor test.
//
// Quotients are deduplicated up to matroid isomorphism; each class then
// carries its admissible connected graph realizations (no 2-edge cut, at
// most one loop, at most doubled parallel classes, block shape, Eulerian
// whenever the base partitions into circuits). A loop is invisible to the
// matroid but not to the graph, so one quotient class can have several
// realizations; the realization count is what the case analyses tally.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matroid/binary_matroid.hpp"
#include "matroid/catalog.hpp"
#include "matroid/multigraph.hpp"
#include "matroid/obstruction.hpp"

namespace matroid {

// All 2^rank(F) single-element binary extensions of F by a fresh element.
// The zero column (a a loop) is included; a coloop never arises because the
// column space of a standard representation is full.
inline std::vector<BinaryMatroid> binary_extensions(const BinaryMatroid& f,
                                                    const std::string& fresh) {
    if (f.has_element(fresh))
        throw LabelError("binary_extensions: element '" + fresh + "' already present");
    std::vector<BinaryMatroid> out;
    const std::size_t r = f.rank();
    for (Word c = 0; c < (Word(1) << r); ++c) {
        Gf2Matrix m(r, f.size() + 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < f.size(); ++j)
                if (f.representation().at(i, j)) m.set(i, j, true);
        for (std::size_t i = 0; i < r; ++i)
            if (c & (Word(1) << i)) m.set(i, f.size(), true);
        std::vector<std::string> labels = f.elements();
        labels.push_back(fresh);
        out.push_back(BinaryMatroid::from_matrix(std::move(labels), m));
    }
    return out;
}

// Whether the ground set partitions into disjoint circuits.
inline bool matroid_eulerian(const BinaryMatroid& m) {
    std::vector<Mask> cs = circuit_masks(m);
    const Mask full = m.size() ? (Mask(1) << m.size()) - 1 : 0;
    std::function<bool(Mask)> cover = [&](Mask todo) {
        if (!todo) return true;
        Mask low = todo & -todo;
        for (Mask c : cs)
            if ((c & low) && (c & ~todo) == 0 && cover(todo & ~c)) return true;
        return false;
    };
    return cover(full);
}

struct QuotientRealization {
    Multigraph graph;
    std::optional<std::string> catalog_name;
};

struct QuotientResult {
    BinaryMatroid base;              // F
    std::vector<int> extension_column;
    BinaryMatroid lift;              // N with N \ a == base
    BinaryMatroid quotient;          // N / a
    bool graphic = false;
    std::vector<QuotientRealization> realizations;  // admissible graphs, up to iso
    bool excluded_as_extension = false;   // quotient is a one-element extension of the pattern
    bool excluded_as_minor = false;       // quotient has the pattern as a minor
};

struct QuotientClasses {
    std::vector<QuotientResult> classes;   // one per quotient isomorphism class
    bool exclusion_readings_differ = false;

    std::size_t realization_count() const {
        std::size_t n = 0;
        for (const auto& c : classes) n += c.realizations.size();
        return n;
    }
};

namespace detail {

// Admissible connected realizations of a graphic matroid, up to graph
// isomorphism: enumerate loopless cores on rank+1 vertices, then place the
// loops over the vertex orbits.
inline std::vector<Multigraph> admissible_realizations(const BinaryMatroid& q,
                                                       bool require_eulerian) {
    std::vector<Multigraph> out;
    const std::size_t nloops = loops(q).size();
    if (nloops > 1) return out;  // more than one loop is never admissible
    BinaryMatroid core = deletion(q, loops(q));
    if (core.size() == 0) return out;
    GraphEnumConstraints c;
    c.vertices = core.rank() + 1;
    c.exact_edges = core.size();
    c.max_loops = 0;
    std::vector<std::vector<std::uint32_t>> seen;
    for (const Multigraph& cand : enumerate_connected_multigraphs(core.size(), c)) {
        if (!is_isomorphic(circuit_matroid(cand), core)) continue;
        for (std::size_t v = 0; v < (nloops ? cand.vertex_count() : 1); ++v) {
            Multigraph g;
            for (const auto& name : cand.vertices()) g.add_vertex(name);
            for (const auto& e : cand.edges()) g.add_edge(e.label, e.u, e.v);
            if (nloops) g.add_edge("lp", v, v);
            if (!quotient_admissible(structural_profile(g), require_eulerian)) continue;
            auto key = canonical_key(g);
            bool dup = false;
            for (const auto& k : seen)
                if (k == key) { dup = true; break; }
            if (dup) continue;
            seen.push_back(std::move(key));
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace detail

// Graphic quotient classes of F with their admissible realizations. When
// exclude is given, quotients that are a single-element extension of it are
// dropped; the looser has-minor reading is evaluated alongside and any
// divergence between the two readings is flagged.
inline QuotientClasses graphic_quotients(const BinaryMatroid& f,
                                         const BinaryMatroid* exclude = nullptr,
                                         const Catalog* match_against = nullptr,
                                         const std::string& fresh = "a") {
    QuotientClasses out;
    const bool base_eulerian = matroid_eulerian(f);
    for (const BinaryMatroid& lift : binary_extensions(f, fresh)) {
        QuotientResult qr;
        qr.base = f;
        qr.lift = lift;
        qr.extension_column.assign(f.rank(), 0);
        for (std::size_t i = 0; i < f.rank(); ++i)
            if (lift.representation().at(i, f.size())) qr.extension_column[i] = 1;
        qr.quotient = contraction(lift, {fresh});
        qr.graphic = is_graphic(qr.quotient);
        if (!qr.graphic) continue;
        if (exclude) {
            for (const auto& e : qr.quotient.elements()) {
                if (is_isomorphic(deletion(qr.quotient, {e}), *exclude)) {
                    qr.excluded_as_extension = true;
                    break;
                }
            }
            qr.excluded_as_minor = has_minor(qr.quotient, *exclude).has_value();
            if (qr.excluded_as_extension != qr.excluded_as_minor)
                out.exclusion_readings_differ = true;
            if (qr.excluded_as_extension) continue;
        }
        bool dup = false;
        for (const auto& seen : out.classes)
            if (is_isomorphic(seen.quotient, qr.quotient)) { dup = true; break; }
        if (dup) continue;
        for (Multigraph& g : detail::admissible_realizations(qr.quotient, base_eulerian)) {
            QuotientRealization real;
            if (match_against) {
                std::string names;
                for (const auto& [name, entry] : *match_against) {
                    if (!entry.is_graph) continue;
                    if (entry.graph->edge_count() != g.edge_count()) continue;
                    if (graph_isomorphic(*entry.graph, g)) {
                        if (!names.empty()) names += "=";
                        names += name;
                    }
                }
                if (!names.empty()) real.catalog_name = names;
            }
            real.graph = std::move(g);
            qr.realizations.push_back(std::move(real));
        }
        out.classes.push_back(std::move(qr));
    }
    return out;
}

// No element of N/a may lie in both a 2-circuit and an odd circuit, given
// that N \ a is the 3x3 complete bipartite circuit matroid.
inline bool qlemma_check(const BinaryMatroid& n, const std::string& a) {
    static const BinaryMatroid k33 = [] {
        Multigraph g;
        for (int i = 1; i <= 6; ++i) g.add_vertex(std::to_string(i));
        int c = 0;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) g.add_edge("k" + std::to_string(++c), u, v);
        return circuit_matroid(g);
    }();
    if (!is_isomorphic(deletion(n, {a}), k33))
        throw ContractError("qlemma_check: deleting '" + a + "' must leave the 3x3 bipartite matroid");
    BinaryMatroid q = contraction(n, {a});
    std::vector<Mask> cs = circuit_masks(q);
    Mask in_two = 0, in_odd = 0;
    for (Mask c : cs) {
        if (popcount(c) == 2) in_two |= c;
        if (popcount(c) % 2 == 1) in_odd |= c;
    }
    return (in_two & in_odd) == 0;
}

}  // namespace matroid

#endif
