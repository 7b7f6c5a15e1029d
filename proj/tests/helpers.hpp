#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

// Shared builders and independent brute-force oracles for the test suite.
// The oracles deliberately avoid the library's rref/circuit machinery: ranks
// come from greedy column elimination over plain integer vectors, circuits
// from direct subset enumeration.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "matroid/binary_matroid.hpp"
#include "matroid/multigraph.hpp"

namespace testutil {

using matroid::BinaryMatroid;
using matroid::Gf2Matrix;
using matroid::Multigraph;

// --- builders --------------------------------------------------------------

inline BinaryMatroid f7() {
    return BinaryMatroid::from_matrix({"f1", "f2", "f3", "f4", "f5", "f6", "f7"},
                                      Gf2Matrix::from_strings({
                                          "1000111",
                                          "0101011",
                                          "0011101",
                                      }));
}

inline BinaryMatroid f7star() {
    // Dual arrangement of the same ground set size: [I4 | transposed D].
    return BinaryMatroid::from_matrix({"g1", "g2", "g3", "g4", "g5", "g6", "g7"},
                                      Gf2Matrix::from_strings({
                                          "1000011",
                                          "0100101",
                                          "0010110",
                                          "0001111",
                                      }));
}

inline Multigraph k4() {
    Multigraph g;
    for (int i = 1; i <= 4; ++i) g.add_vertex(std::to_string(i));
    g.add_edge("e12", 0, 1);
    g.add_edge("e13", 0, 2);
    g.add_edge("e14", 0, 3);
    g.add_edge("e23", 1, 2);
    g.add_edge("e24", 1, 3);
    g.add_edge("e34", 2, 3);
    return g;
}

inline Multigraph k5() {
    Multigraph g;
    for (int i = 1; i <= 5; ++i) g.add_vertex(std::to_string(i));
    int n = 0;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge("e" + std::to_string(++n), u, v);
    return g;
}

inline Multigraph k33() {
    Multigraph g;
    for (int i = 1; i <= 6; ++i) g.add_vertex(std::to_string(i));
    int n = 0;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) g.add_edge("e" + std::to_string(++n), u, v);
    return g;
}

inline Multigraph triangle() {
    Multigraph g;
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_vertex("3");
    g.add_edge("a", 0, 1);
    g.add_edge("b", 1, 2);
    g.add_edge("c", 0, 2);
    return g;
}

inline Multigraph cycle(int n) {
    Multigraph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i)
        g.add_edge("c" + std::to_string(i + 1), i, (i + 1) % n);
    return g;
}

inline BinaryMatroid random_binary_matroid(std::mt19937& rng, std::size_t max_elems) {
    std::uniform_int_distribution<std::size_t> nd(1, max_elems);
    std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> rd(1, n);
    std::size_t r = rd(rng);
    Gf2Matrix m(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng() & 1) m.set(i, j, true);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < n; ++j) {
        std::string l = "x";
        l += static_cast<char>('a' + j);
        labels.push_back(l);
    }
    return BinaryMatroid::from_matrix(labels, m);
}

// --- oracles ---------------------------------------------------------------

// Rank by greedy elimination over int vectors (independent of gf2.hpp).
inline int oracle_rank(const std::vector<std::vector<int>>& cols) {
    std::vector<std::vector<int>> basis;
    for (auto v : cols) {
        for (const auto& b : basis) {
            std::size_t lead = 0;
            while (lead < b.size() && b[lead] == 0) ++lead;
            if (lead < v.size() && v[lead] == 1)
                for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= b[i];
        }
        bool zero = true;
        for (int x : v)
            if (x) zero = false;
        if (!zero) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
}

// Circuits of the column matroid of an int matrix, by subset enumeration.
inline std::set<std::set<std::string>> oracle_circuits(
    const std::vector<std::string>& labels, const std::vector<std::vector<int>>& columns) {
    const std::size_t n = labels.size();
    auto sub_rank = [&](unsigned mask) {
        std::vector<std::vector<int>> pick;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) pick.push_back(columns[i]);
        return oracle_rank(pick);
    };
    auto independent = [&](unsigned mask) {
        return sub_rank(mask) == __builtin_popcount(mask);
    };
    std::set<std::set<std::string>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (independent(mask)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i)
            if ((mask & (1u << i)) && !independent(mask & ~(1u << i))) minimal = false;
        if (!minimal) continue;
        std::set<std::string> c;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) c.insert(labels[i]);
        out.insert(c);
    }
    return out;
}

inline std::vector<std::vector<int>> matroid_columns(const BinaryMatroid& m) {
    std::vector<std::vector<int>> cols(m.size(), std::vector<int>(m.rank(), 0));
    for (std::size_t c = 0; c < m.size(); ++c)
        for (std::size_t r = 0; r < m.rank(); ++r)
            if (m.representation().at(r, c)) cols[c][r] = 1;
    return cols;
}

inline std::set<std::set<std::string>> oracle_circuits(const BinaryMatroid& m) {
    return oracle_circuits(m.elements(), matroid_columns(m));
}

// Cycle edge sets of a multigraph: nonempty edge subsets where every vertex
// has even degree, connected on their support, enumerated directly.
inline std::set<std::set<std::string>> oracle_graph_cycles(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    std::set<std::set<std::string>> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask & (1u << i))) continue;
            const auto& e = g.edges()[i];
            if (e.u == e.v) continue;  // loop adds 2, stays even
            deg[e.u]++;
            deg[e.v]++;
        }
        bool even = true;
        for (int d : deg)
            if (d % 2) even = false;
        if (!even) continue;
        // connectivity over the supporting edges
        std::set<std::size_t> verts;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                verts.insert(g.edges()[i].u);
                verts.insert(g.edges()[i].v);
            }
        if (verts.empty()) continue;
        std::set<std::size_t> seen = {*verts.begin()};
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < m; ++i) {
                if (!(mask & (1u << i))) continue;
                const auto& e = g.edges()[i];
                if (seen.count(e.u) && !seen.count(e.v)) { seen.insert(e.v); grew = true; }
                if (seen.count(e.v) && !seen.count(e.u)) { seen.insert(e.u); grew = true; }
            }
        }
        if (seen.size() != verts.size()) continue;
        std::set<std::string> edges;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) edges.insert(g.edges()[i].label);
        out.insert(edges);
    }
    // keep only minimal ones (cycles, not unions of cycles)
    std::set<std::set<std::string>> minimal;
    for (const auto& c : out) {
        bool is_min = true;
        for (const auto& d : out) {
            if (d == c) continue;
            if (std::includes(c.begin(), c.end(), d.begin(), d.end())) { is_min = false; break; }
        }
        if (is_min) minimal.insert(c);
    }
    return minimal;
}

inline std::set<std::set<std::string>> to_set(const std::vector<std::set<std::string>>& v) {
    return {v.begin(), v.end()};
}

}  // namespace testutil

#endif
