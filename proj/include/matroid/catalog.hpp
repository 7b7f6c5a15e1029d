#ifndef MATROID_CATALOG_HPP
#define MATROID_CATALOG_HPP

// Named fixture store. Every graph and matroid the toolkit reasons about by
// name lives in a text file under the fixture directory, together with
// `# check ...` directives recording the facts the fixture must satisfy.
// load_catalog() parses everything and runs every check; a failing check is
// a FixtureError naming the entry and predicate.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/binary_matroid.hpp"
#include "matroid/errors.hpp"
#include "matroid/multigraph.hpp"

namespace matroid {

struct CatalogEntry {
    std::string name;
    bool is_graph = false;
    std::optional<Multigraph> graph;
    BinaryMatroid m;  // the matroid itself, or the circuit matroid of the graph
    std::string provenance;
    std::set<std::string> split_set;  // named T set, when the fixture carries one
    std::vector<std::pair<std::string, std::string>> validations;  // (predicate, args)
};

using Catalog = std::map<std::string, CatalogEntry>;

inline std::string default_fixture_dir() {
    if (const char* env = std::getenv("MATROID_FIXTURES")) return env;
#ifdef MATROID_FIXTURE_DIR
    return MATROID_FIXTURE_DIR;
#else
    return "data/fixtures";
#endif
}

// True iff the matroid has a minor isomorphic to M(K5) or M(K3,3); the
// operational membership test for the trivial forbidden-minor family.
inline bool trivial_family_member(const BinaryMatroid& m, int k = 2) {
    if (k < 1 || k > 3) throw DomainError("trivial_family_member: k must be 1, 2 or 3");
    static const BinaryMatroid k5 = [] {
        Multigraph g;
        for (int i = 1; i <= 5; ++i) g.add_vertex(std::to_string(i));
        int n = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) g.add_edge("k" + std::to_string(++n), u, v);
        return circuit_matroid(g);
    }();
    static const BinaryMatroid k33 = [] {
        Multigraph g;
        for (int i = 1; i <= 6; ++i) g.add_vertex(std::to_string(i));
        int n = 0;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) g.add_edge("k" + std::to_string(++n), u, v);
        return circuit_matroid(g);
    }();
    return has_minor(m, k5).has_value() || has_minor(m, k33).has_value();
}

namespace detail {

struct RawFixture {
    std::string name;
    bool is_graph = false;
    std::vector<std::string> body;  // non-comment lines
    std::string provenance;
    std::set<std::string> split_set;
    std::vector<std::pair<std::string, std::string>> validations;
};

inline RawFixture read_fixture_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture " + path.string());
    RawFixture raw;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# check ", 0) == 0) {
            std::istringstream ls(line.substr(8));
            std::string pred;
            ls >> pred;
            std::string args, word;
            while (ls >> word) {
                if (!args.empty()) args += ' ';
                args += word;
            }
            raw.validations.push_back({pred, args});
            continue;
        }
        if (line.rfind("# tset ", 0) == 0) {
            std::istringstream ls(line.substr(7));
            std::string word;
            while (ls >> word) raw.split_set.insert(word);
            continue;
        }
        if (line.rfind("# source:", 0) == 0) {
            raw.provenance = line.substr(9);
            if (!raw.provenance.empty() && raw.provenance.front() == ' ')
                raw.provenance.erase(0, 1);
            continue;
        }
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first)) continue;
        raw.body.push_back(line);
    }
    if (raw.body.empty()) throw FixtureError("fixture has no content: " + path.string());
    std::istringstream head(raw.body.front());
    std::string kind;
    head >> kind >> raw.name;
    if (kind == "graph") raw.is_graph = true;
    else if (kind != "matroid")
        throw FixtureError("fixture must start with 'graph' or 'matroid': " + path.string());
    if (raw.name.empty()) throw FixtureError("fixture missing name: " + path.string());
    return raw;
}

inline BinaryMatroid parse_matroid_body(const RawFixture& raw) {
    // line 0: matroid <name>; line 1: elements ...; rest: matrix rows
    if (raw.body.size() < 2) throw FixtureError(raw.name + ": missing elements line");
    std::istringstream els(raw.body[1]);
    std::string kw;
    els >> kw;
    if (kw != "elements") throw FixtureError(raw.name + ": expected 'elements' line");
    std::vector<std::string> labels;
    std::string l;
    while (els >> l) labels.push_back(l);
    std::vector<std::string> rows(raw.body.begin() + 2, raw.body.end());
    for (auto& r : rows) {
        std::istringstream rs(r);
        rs >> r;
    }
    Gf2Matrix m = rows.empty() ? Gf2Matrix(0, labels.size()) : Gf2Matrix::from_strings(rows);
    if (m.cols() != labels.size())
        throw FixtureError(raw.name + ": matrix width differs from element count");
    return BinaryMatroid::from_matrix(labels, m);
}

inline Multigraph parse_graph_body(const RawFixture& raw) {
    std::ostringstream joined;
    for (const auto& l : raw.body) joined << l << '\n';
    std::istringstream in(joined.str());
    return parse_graph(in).second;
}

inline bool parse_flag(const std::string& s) { return s == "1" || s == "true"; }

inline void run_validation(const Catalog& cat, const CatalogEntry& e, const std::string& pred,
                           const std::string& args) {
    auto fail = [&](const std::string& detail) {
        throw FixtureError("fixture " + e.name + ": check '" + pred + " " + args +
                           "' failed (" + detail + ")");
    };
    std::istringstream as(args);
    auto num = [&]() {
        std::size_t n = 0;
        as >> n;
        return n;
    };
    auto lookup = [&](const std::string& other) -> const CatalogEntry& {
        auto it = cat.find(other);
        if (it == cat.end()) fail("unknown fixture '" + other + "'");
        return it->second;
    };

    if (pred == "vertices") {
        if (!e.graph || e.graph->vertex_count() != num()) fail("vertex count");
    } else if (pred == "edges") {
        if (!e.graph || e.graph->edge_count() != num()) fail("edge count");
    } else if (pred == "elements") {
        if (e.m.size() != num()) fail("element count " + std::to_string(e.m.size()));
    } else if (pred == "rank") {
        if (e.m.rank() != num()) fail("rank " + std::to_string(e.m.rank()));
    } else if (pred == "loops") {
        if (loops(e.m).size() != num()) fail("loop count");
    } else if (pred == "simple") {
        std::string a;
        as >> a;
        bool simple = loops(e.m).empty();
        for (Mask c : circuit_masks(e.m))
            if (popcount(c) <= 2) simple = false;
        if (simple != parse_flag(a)) fail("simplicity");
    } else if (pred == "eulerian") {
        std::string a;
        as >> a;
        if (!e.graph || is_eulerian(*e.graph) != parse_flag(a)) fail("eulerian flag");
    } else if (pred == "two_connected") {
        std::string a;
        as >> a;
        if (!e.graph) fail("not a graph");
        bool tc = e.graph->loop_count() == 0 && blocks(*e.graph).size() == 1;
        if (tc != parse_flag(a)) fail("2-connectivity");
    } else if (pred == "blocks") {
        if (!e.graph || blocks(*e.graph).size() != num()) fail("block count");
    } else if (pred == "block_loop") {
        std::string a;
        as >> a;
        if (!e.graph) fail("not a graph");
        if (structural_profile(*e.graph).one_block_is_loop != parse_flag(a)) fail("loop block");
    } else if (pred == "two_edge_cut") {
        std::string a;
        as >> a;
        if (!e.graph || has_two_edge_cut(*e.graph).has_value() != parse_flag(a))
            fail("2-edge-cut flag");
    } else if (pred == "parallel_pairs") {
        std::size_t want = num();
        std::size_t got = 0;
        for (Mask c : circuit_masks(e.m))
            if (popcount(c) == 2) ++got;
        if (got != want) fail("parallel pair count " + std::to_string(got));
    } else if (pred == "circuits_of_size") {
        std::size_t size = num(), want = num(), got = 0;
        for (Mask c : circuit_masks(e.m))
            if (static_cast<std::size_t>(popcount(c)) == size) ++got;
        if (got != want) fail("circuit count " + std::to_string(got));
    } else if (pred == "graph_iso") {
        std::string other;
        as >> other;
        const CatalogEntry& o = lookup(other);
        if (!e.graph || !o.graph || !graph_isomorphic(*e.graph, *o.graph)) fail("graph iso");
    } else if (pred == "matroid_iso") {
        std::string other;
        as >> other;
        if (!is_isomorphic(e.m, lookup(other).m)) fail("matroid iso");
    } else if (pred == "coextension_of") {
        std::string other;
        as >> other;
        const CatalogEntry& o = lookup(other);
        if (!e.graph || !o.graph) fail("not graphs");
        bool found = false;
        for (const auto& edge : e.graph->edges())
            if (graph_isomorphic(contract_edge(*e.graph, edge.label), *o.graph)) found = true;
        if (!found) fail("no contractible edge");
    } else if (pred == "extension_of") {
        std::string other;
        as >> other;
        const CatalogEntry& o = lookup(other);
        if (!e.graph || !o.graph) fail("not graphs");
        bool found = false;
        for (const auto& edge : e.graph->edges())
            if (graph_isomorphic(delete_edge(*e.graph, edge.label), *o.graph)) found = true;
        if (!found) fail("no deletable edge");
    } else if (pred == "planar") {
        // no K5 and no K3,3 minor in the circuit matroid
        std::string a;
        as >> a;
        if (!trivial_family_member(e.m) != parse_flag(a)) fail("planarity surrogate");
    } else if (pred == "trivial_family") {
        std::string a;
        as >> a;
        if (trivial_family_member(e.m) != parse_flag(a)) fail("trivial family flag");
    } else if (pred == "has_matroid_minor") {
        std::string other, flag;
        as >> other >> flag;
        if (has_minor(e.m, lookup(other).m).has_value() != parse_flag(flag)) fail("minor flag");
    } else {
        fail("unknown predicate");
    }
}

}  // namespace detail

inline Catalog load_catalog(const std::string& dir = default_fixture_dir()) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw FixtureError("fixture directory missing: " + dir);
    Catalog cat;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        auto ext = entry.path().extension();
        if (ext == ".graph" || ext == ".matroid") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        detail::RawFixture raw = detail::read_fixture_file(path);
        CatalogEntry e;
        e.name = raw.name;
        e.is_graph = raw.is_graph;
        e.provenance = raw.provenance;
        e.split_set = raw.split_set;
        e.validations = raw.validations;
        if (raw.is_graph) {
            e.graph = detail::parse_graph_body(raw);
            e.m = circuit_matroid(*e.graph);
        } else {
            e.m = detail::parse_matroid_body(raw);
        }
        if (cat.count(e.name)) throw FixtureError("duplicate fixture name " + e.name);
        cat.emplace(e.name, std::move(e));
    }
    // cross-fixture validations run after everything is parsed
    for (const auto& [name, e] : cat)
        for (const auto& [pred, args] : e.validations)
            detail::run_validation(cat, e, pred, args);
    return cat;
}

inline const CatalogEntry& catalog_get(const Catalog& cat, const std::string& name) {
    auto it = cat.find(name);
    if (it == cat.end()) throw FixtureError("unknown fixture '" + name + "'");
    return it->second;
}

}  // namespace matroid

#endif
