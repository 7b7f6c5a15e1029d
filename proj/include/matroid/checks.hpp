#ifndef MATROID_CHECKS_HPP
#define MATROID_CHECKS_HPP

// Named verification checks: each reproduces one verified statement as a
// pass/fail record with a one-line detail. The CLI `verify` subcommand and
// the acceptance suite both run these.

#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/catalog.hpp"
#include "matroid/obstruction.hpp"
#include "matroid/quotients.hpp"
#include "matroid/splitting.hpp"

namespace matroid {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

namespace checks {

namespace detail {

inline std::vector<std::set<std::string>> subsets_up_to(const BinaryMatroid& m, std::size_t k) {
    std::vector<std::set<std::string>> out;
    const auto& els = m.elements();
    const std::size_t n = els.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
        std::set<std::string> t;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) t.insert(els[i]);
        out.push_back(std::move(t));
    }
    return out;
}

// All four commutation identities for one (M, T); returns an empty string or
// a description of the first failure.
inline std::string splitting_identities(const BinaryMatroid& m, const std::set<std::string>& t) {
    BinaryMatroid st = split(m, t);
    for (const auto& x : m.elements()) {
        if (t.count(x)) continue;
        if (!matroid_equal(deletion(st, {x}), split(deletion(m, {x}), t)))
            return "deletion commutation failed at " + x;
        if (!matroid_equal(contraction(st, {x}), split(contraction(m, {x}), t)))
            return "contraction commutation failed at " + x;
    }
    for (const auto& y : t) {
        std::set<std::string> rest = t;
        rest.erase(y);
        if (!matroid_equal(deletion(st, {y}), split(deletion(m, {y}), rest)))
            return "in-set deletion identity failed at " + y;
    }
    if (!matroid_equal(deletion(st, t), deletion(m, t)))
        return "residual deletion identity failed";
    return "";
}

inline std::string quotient_class_names(const QuotientClasses& qc) {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : qc.classes)
        for (const auto& r : c.realizations) {
            if (!first) os << ",";
            first = false;
            os << (r.catalog_name ? *r.catalog_name : "?");
        }
    return os.str();
}

// The admissible realizations must cover the named catalog graphs exactly
// once each; realizations beyond the named list are tolerated only when they
// share the matroid of a class that already has a named realization (a
// 2-isomorphic variant), and they are counted into *extras.
inline bool realizations_are(const QuotientClasses& qc, const Catalog& cat,
                             const std::vector<std::string>& names, std::size_t* extras,
                             std::string* extra_names) {
    std::vector<bool> used(names.size(), false);
    *extras = 0;
    for (const auto& c : qc.classes) {
        if (c.realizations.empty()) return false;  // a quotient with no admissible graph
        bool class_named = false;
        std::vector<const QuotientRealization*> unmatched;
        for (const auto& r : c.realizations) {
            bool matched = false;
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (used[i]) continue;
                const CatalogEntry& want = catalog_get(cat, names[i]);
                if (want.graph && graph_isomorphic(*want.graph, r.graph)) {
                    used[i] = true;
                    matched = true;
                    class_named = true;
                    break;
                }
            }
            if (!matched) unmatched.push_back(&r);
        }
        if (!class_named) return false;
        for (const auto* r : unmatched) {
            ++*extras;
            if (extra_names) {
                if (!extra_names->empty()) *extra_names += ",";
                *extra_names += r->catalog_name ? *r->catalog_name : std::string("unnamed");
            }
        }
    }
    for (bool u : used)
        if (!u) return false;
    return true;
}

}  // namespace detail

// Splitting commutation identities over all catalog matroids with at most 10
// elements and all T with |T| <= 3, plus 500 seeded random binary matroids
// with at most 8 elements, plus the cocircuit fixed-point identity.
inline CheckResult lemma_2_2(const Catalog& cat) {
    CheckResult res{"lemma-2.2", true, ""};
    std::size_t pairs = 0;
    for (const auto& [name, e] : cat) {
        if (e.m.size() > 10) continue;
        for (const auto& t : detail::subsets_up_to(e.m, 3)) {
            std::string err = detail::splitting_identities(e.m, t);
            ++pairs;
            if (!err.empty()) {
                res.pass = false;
                res.detail = name + ": " + err;
                return res;
            }
        }
        for (const auto& cc : cocircuits(e.m)) {
            if (!matroid_equal(split(e.m, cc), e.m)) {
                res.pass = false;
                res.detail = name + ": cocircuit splitting changed the matroid";
                return res;
            }
        }
    }
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<std::size_t> nd(1, 8);
        std::size_t n = nd(rng);
        std::uniform_int_distribution<std::size_t> rd(1, n);
        std::size_t r = rd(rng);
        Gf2Matrix mm(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rng() & 1) mm.set(i, j, true);
        std::vector<std::string> labels;
        for (std::size_t j = 0; j < n; ++j) labels.push_back("e" + std::to_string(j + 1));
        BinaryMatroid m = BinaryMatroid::from_matrix(labels, mm);
        for (const auto& t : detail::subsets_up_to(m, 3)) {
            std::string err = detail::splitting_identities(m, t);
            ++pairs;
            if (!err.empty()) {
                res.pass = false;
                res.detail = "random trial " + std::to_string(trial) + ": " + err;
                return res;
            }
        }
    }
    res.detail = std::to_string(pairs) + " (matroid,T) pairs, zero failures";
    return res;
}

// Graphic quotients of the Fano and its dual: one realization for the Fano,
// two for the dual.
inline CheckResult lemma_3_2(const Catalog& cat) {
    CheckResult res{"lemma-3.2", false, ""};
    QuotientClasses f7q = graphic_quotients(catalog_get(cat, "F7").m, nullptr, &cat);
    QuotientClasses f7sq = graphic_quotients(catalog_get(cat, "F7star").m, nullptr, &cat);
    std::size_t x7 = 0, x7s = 0;
    bool ok7 = detail::realizations_are(f7q, cat, {"H3"}, &x7, nullptr);
    bool ok7s = detail::realizations_are(f7sq, cat, {"H1", "H2"}, &x7s, nullptr);
    res.pass = ok7 && ok7s && x7 == 0 && x7s == 0;
    res.detail = "F7 -> " + std::to_string(f7q.realization_count()) + " realization (" +
                 detail::quotient_class_names(f7q) + "), F7star -> " +
                 std::to_string(f7sq.realization_count()) + " realizations (" +
                 detail::quotient_class_names(f7sq) + ")";
    return res;
}

// Graphic quotients of M(K5): two matroid classes, three admissible graph
// realizations (the loop placement is invisible to the matroid).
inline CheckResult lemma_3_3(const Catalog& cat) {
    CheckResult res{"lemma-3.3", false, ""};
    QuotientClasses q = graphic_quotients(catalog_get(cat, "K5").m, nullptr, &cat);
    std::size_t extras = 0;
    res.pass = detail::realizations_are(q, cat, {"H4", "H5", "H6"}, &extras, nullptr) &&
               extras == 0;
    // rank bookkeeping from the lifts
    bool rank_ok = true;
    for (const auto& qr : q.classes) {
        bool loop = true;
        for (int b : qr.extension_column)
            if (b) loop = false;
        std::size_t expect = qr.lift.rank() - (loop ? 0 : 1);
        if (qr.quotient.rank() != expect || qr.quotient.size() != qr.base.size()) rank_ok = false;
    }
    res.pass = res.pass && rank_ok;
    res.detail = std::to_string(q.classes.size()) + " matroid classes, " +
                 std::to_string(q.realization_count()) + " realizations (" +
                 detail::quotient_class_names(q) + ")";
    return res;
}

// For all 32 binary single-element extensions N of M(K3,3): no element of
// N/a lies in both a 2-circuit and an odd circuit.
inline CheckResult lemma_3_5(const Catalog& cat) {
    CheckResult res{"lemma-3.5", true, ""};
    const BinaryMatroid& k33 = catalog_get(cat, "K33").m;
    std::size_t count = 0;
    for (const BinaryMatroid& n : binary_extensions(k33, "a")) {
        ++count;
        if (!qlemma_check(n, "a")) {
            res.pass = false;
            res.detail = "extension " + std::to_string(count) + " violates the property";
            return res;
        }
    }
    res.detail = std::to_string(count) + " extensions, all clean";
    return res;
}

// Graphic quotients of M(K3,3) under the one-element-extension exclusion:
// four matroid classes, five admissible realizations.
inline CheckResult lemma_3_6(const Catalog& cat) {
    CheckResult res{"lemma-3.6", false, ""};
    const BinaryMatroid& g2 = catalog_get(cat, "G2").m;
    QuotientClasses q = graphic_quotients(catalog_get(cat, "K33").m, &g2, &cat);
    std::size_t extras = 0;
    std::string extra_names;
    res.pass = detail::realizations_are(q, cat, {"H7", "H8", "H9", "H10", "H11"}, &extras,
                                        &extra_names);
    res.detail = std::to_string(q.classes.size()) + " matroid classes, " +
                 std::to_string(q.realization_count()) + " realizations (" +
                 detail::quotient_class_names(q) + ")";
    if (extras)
        res.detail += "; " + std::to_string(extras) +
                      " further 2-isomorphic realization(s) of listed classes: " + extra_names;
    res.detail += std::string("; exclusion readings ") +
                  (q.exclusion_readings_differ ? "DIFFER" : "agree");
    return res;
}

// Forward verification: the named fixtures split to the claimed targets, and
// the one-element extensions reduce through the in-set deletion identity.
inline CheckResult prop_5_1(const Catalog& cat) {
    CheckResult res{"prop-5.1", true, ""};
    std::ostringstream detail;
    auto expect_split = [&](const std::string& name, const std::string& target) {
        const CatalogEntry& e = catalog_get(cat, name);
        BinaryMatroid st = split(e.m, e.split_set);
        bool ok = is_isomorphic(st, catalog_get(cat, target).m).has_value();
        if (!ok) res.pass = false;
        detail << name << "_T" << (ok ? " ~ " : " !~ ") << target << "; ";
    };
    expect_split("G4", "F7star");
    expect_split("G5", "F7star");
    expect_split("G6", "K33");
    expect_split("G7", "K33");

    for (const std::string base : {std::string("G1"), std::string("G3")}) {
        const BinaryMatroid& g = catalog_get(cat, base).m;
        const BinaryMatroid& ext = catalog_get(cat, base + "_ext").m;
        const std::string z = base == "G1" ? "z1" : "z3";
        ObstructionReport rep = classify_splittings(g, 2, base);
        if (!rep.non_cographic) {
            res.pass = false;
            detail << base << " has no pair obstruction; ";
            continue;
        }
        std::set<std::string> t = rep.witness_t;
        t.insert(z);
        BinaryMatroid st = split(ext, t);
        bool route = matroid_equal(deletion(st, {z}), split(g, rep.witness_t));
        bool bad = !is_cographic(st);
        if (!(route && bad)) res.pass = false;
        detail << base << "_ext with T+" << z << (bad ? " non-cographic" : " COGRAPHIC?!")
               << (route ? " via in-set deletion; " : " route mismatch; ");
    }

    // control: every triple splitting of M(K4) stays cographic
    ObstructionReport k4rep = classify_splittings(catalog_get(cat, "K4").m, 3, "K4");
    if (k4rep.non_cographic) res.pass = false;
    detail << "K4 control " << (k4rep.non_cographic ? "FAILED" : "cographic-for-all-T");
    res.detail = detail.str();
    return res;
}

// Exhaustive pair-splitting search: the strict list must be exactly the two
// trivial-free classes, with the third listed graph and its kin surfacing on
// the audited trivial track (it carries a K3,3 minor itself).
inline CheckResult thm_1_2(const Catalog& cat) {
    CheckResult res{"thm-1.2", false, ""};
    SearchResult r = search_forbidden_minors(2, 10);
    auto is_class = [&](const ObstructionReport& rep, const std::string& name) {
        const BinaryMatroid& f = catalog_get(cat, name).m;
        return rep.matroid.size() == f.size() && is_isomorphic(rep.matroid, f).has_value();
    };
    bool strict_ok = r.minimal.size() == 2 &&
                     ((is_class(r.minimal[0], "G1") && is_class(r.minimal[1], "G2")) ||
                      (is_class(r.minimal[0], "G2") && is_class(r.minimal[1], "G1")));
    bool g3_found = false;
    std::size_t extras = 0;
    for (const auto& rep : r.trivial_minimal) {
        if (is_class(rep, "G3")) g3_found = true;
        else ++extras;
    }
    // forward direction: each listed fixture splits non-cographically
    bool forward = true;
    for (const char* name : {"G1", "G2", "G3"})
        if (!classify_splittings(catalog_get(cat, name).m, 2, name).non_cographic)
            forward = false;
    res.pass = strict_ok && g3_found && forward;
    std::ostringstream os;
    os << "forward G1,G2,G3 non-cographic:" << (forward ? "yes" : "NO")
       << " strict={G1,G2}:" << (strict_ok ? "yes" : "NO") << " G3-on-trivial-track:"
       << (g3_found ? "yes(K3,3 minor)" : "NO") << " other-trivial-minimal=" << extras
       << " examined=" << r.candidates_examined;
    res.detail = os.str();
    return res;
}

// Exhaustive triple-splitting search against the claimed list. The named
// fixtures G4, G6, G7 and the extension fixture G1_ext must all appear; the
// companion class (the G5 fixture) is reported through the minor-direction
// question; any further classes must be one-element extensions of the
// pair-splitting forbidden minors (the extension family is named as a family,
// not a single matroid).
inline CheckResult thm_1_4(const Catalog& cat) {
    CheckResult res{"thm-1.4", false, ""};
    SearchResult r = search_forbidden_minors(3, 10);
    auto find_class = [&](const std::string& name) {
        const BinaryMatroid& f = catalog_get(cat, name).m;
        for (const auto& rep : r.minimal)
            if (rep.matroid.size() == f.size() && is_isomorphic(rep.matroid, f)) return true;
        return false;
    };
    bool g4 = find_class("G4"), g5 = find_class("G5"), g6 = find_class("G6"),
         g7 = find_class("G7"), g1e = find_class("G1_ext");
    // every remaining class must delete down to M(G1), i.e. be an extension
    std::size_t extension_classes = 0, unexplained = 0;
    const BinaryMatroid& g1 = catalog_get(cat, "G1").m;
    for (const auto& rep : r.minimal) {
        const BinaryMatroid& m = rep.matroid;
        bool named = false;
        for (const char* n : {"G4", "G5", "G6", "G7"}) {
            const BinaryMatroid& f = catalog_get(cat, n).m;
            if (m.size() == f.size() && is_isomorphic(m, f)) named = true;
        }
        if (named) continue;
        bool ext_of_g1 = false;
        for (const auto& e : m.elements())
            if (is_isomorphic(deletion(m, {e}), g1)) ext_of_g1 = true;
        if (ext_of_g1) ++extension_classes;
        else ++unexplained;
    }
    bool exact = g4 && g5 && g6 && g7 && g1e && unexplained == 0;
    // direction of the G2/G5 minor relation, computed not assumed
    bool g2_has_g5 = has_minor(catalog_get(cat, "G2").m, catalog_get(cat, "G5").m).has_value();
    bool g5_has_g2 = has_minor(catalog_get(cat, "G5").m, catalog_get(cat, "G2").m).has_value();
    res.pass = exact && g2_has_g5 && !g5_has_g2;
    std::ostringstream os;
    os << "named fixtures {G4,G6,G7,G1_ext}:" << ((g4 && g6 && g7 && g1e) ? "yes" : "NO")
       << " extension-of-G1 classes=" << extension_classes
       << " unexplained=" << unexplained
       << "; G5-verdict: minimal-class-present=" << (g5 ? "yes" : "no")
       << ", G2-has-G5-minor=" << (g2_has_g5 ? "yes" : "no")
       << ", G5-has-G2-minor=" << (g5_has_g2 ? "yes" : "no")
       << "; G3_ext beyond budget (11 elements); trivial-minimal=" << r.trivial_minimal.size()
       << " examined=" << r.candidates_examined;
    res.detail = os.str();
    return res;
}

inline std::vector<CheckResult> verify_all(const Catalog& cat) {
    return {lemma_2_2(cat), lemma_3_2(cat), lemma_3_3(cat), lemma_3_5(cat),
            lemma_3_6(cat), prop_5_1(cat), thm_1_2(cat), thm_1_4(cat)};
}

inline CheckResult by_name(const Catalog& cat, const std::string& id) {
    if (id == "lemma-2.2") return lemma_2_2(cat);
    if (id == "lemma-3.2") return lemma_3_2(cat);
    if (id == "lemma-3.3") return lemma_3_3(cat);
    if (id == "lemma-3.5") return lemma_3_5(cat);
    if (id == "lemma-3.6") return lemma_3_6(cat);
    if (id == "prop-5.1") return prop_5_1(cat);
    if (id == "thm-1.2") return thm_1_2(cat);
    if (id == "thm-1.4") return thm_1_4(cat);
    throw DomainError("unknown check '" + id + "'");
}

}  // namespace checks

}  // namespace matroid

#endif
