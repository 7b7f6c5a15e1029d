#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "matroid/splitting.hpp"

using namespace matroid;
using namespace testutil;

namespace {

BinaryMatroid g4_from_matrix() {
    return BinaryMatroid::from_matrix({"x", "y", "z", "e4", "e5", "e6", "e7"},
                                      Gf2Matrix::from_strings({
                                          "1000101",
                                          "0100110",
                                          "0001111",
                                      }));
}

std::vector<std::set<std::string>> subsets_up_to(const BinaryMatroid& m, std::size_t k) {
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

}  // namespace

TEST_CASE("split with the empty set is the identity") {
    BinaryMatroid m = circuit_matroid(k4());
    CHECK(matroid_equal(split(m, {}), m));
}

TEST_CASE("splitting a cocircuit changes nothing") {
    BinaryMatroid m = circuit_matroid(k4());
    for (const auto& cc : cocircuits(m))
        CHECK(matroid_equal(split(m, cc), m));
}

TEST_CASE("splitting the printed fixture at {x,y,z} yields the dual Fano") {
    BinaryMatroid g4 = g4_from_matrix();
    BinaryMatroid st = split(g4, {"x", "y", "z"});
    CHECK(st.rank() == 4);
    CHECK(st.size() == 7);
    CHECK(is_isomorphic(st, f7star()).has_value());
    CHECK_FALSE(is_isomorphic(st, f7()).has_value());
}

TEST_CASE("split rank grows by one exactly outside the cocircuit space") {
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
        BinaryMatroid m = random_binary_matroid(rng, 8);
        for (const auto& tset : subsets_up_to(m, 2)) {
            BinaryMatroid st = split(m, tset);
            std::vector<int> indicator(m.size(), 0);
            for (const auto& l : tset) indicator[m.index_of(l)] = 1;
            bool inside = in_row_space(m.representation(), indicator);
            CHECK(st.rank() == m.rank() + (inside ? 0 : 1));
        }
    }
}

TEST_CASE("split errors on unknown labels") {
    BinaryMatroid m = circuit_matroid(k4());
    CHECK_THROWS_AS(split(m, {"nope"}), LabelError);
    CHECK_THROWS_AS(split_with_element(m, {"e12"}, "e13"), LabelError);
}

TEST_CASE("split_with_element deletes back to the split and contracts back to the base") {
    std::mt19937 rng(37);
    for (int t = 0; t < 30; ++t) {
        BinaryMatroid m = random_binary_matroid(rng, 7);
        for (const auto& tset : subsets_up_to(m, 2)) {
            BinaryMatroid lift = split_with_element(m, tset, "a+");
            CHECK(matroid_equal(deletion(lift, {"a+"}), split(m, tset)));
            CHECK(is_isomorphic(contraction(lift, {"a+"}), m).has_value());
        }
    }
    BinaryMatroid g4 = g4_from_matrix();
    BinaryMatroid lift = split_with_element(g4, {"x", "y", "z"}, "a");
    CHECK(matroid_equal(deletion(lift, {"a"}), split(g4, {"x", "y", "z"})));
    CHECK(is_isomorphic(contraction(lift, {"a"}), g4).has_value());
}

TEST_CASE("split_with_element on the empty set adds a coloop") {
    BinaryMatroid m = circuit_matroid(testutil::triangle());
    BinaryMatroid lift = split_with_element(m, {}, "w");
    CHECK(lift.rank() == m.rank() + 1);
    CHECK(coloops(lift) == std::set<std::string>{"w"});
    CHECK(matroid_equal(deletion(lift, {"w"}), split(m, {})));
    CHECK(is_isomorphic(contraction(lift, {"w"}), m).has_value());
}

TEST_CASE("splitting commutes with minors away from T") {
    std::mt19937 rng(41);
    for (int t = 0; t < 25; ++t) {
        BinaryMatroid m = random_binary_matroid(rng, 7);
        for (const auto& tset : subsets_up_to(m, 2)) {
            BinaryMatroid st = split(m, tset);
            for (const auto& x : m.elements()) {
                if (tset.count(x)) continue;
                CHECK(matroid_equal(deletion(st, {x}), split(deletion(m, {x}), tset)));
                CHECK(matroid_equal(contraction(st, {x}), split(contraction(m, {x}), tset)));
            }
            for (const auto& y : tset) {
                std::set<std::string> rest = tset;
                rest.erase(y);
                CHECK(matroid_equal(deletion(st, {y}), split(deletion(m, {y}), rest)));
            }
            CHECK(matroid_equal(deletion(st, tset), deletion(m, tset)));
        }
    }
}

TEST_CASE("the indicator of T joins the cocircuit space of the split") {
    std::mt19937 rng(43);
    for (int t = 0; t < 20; ++t) {
        BinaryMatroid m = random_binary_matroid(rng, 7);
        for (const auto& tset : subsets_up_to(m, 3)) {
            if (tset.empty()) continue;
            BinaryMatroid st = split(m, tset);
            std::vector<int> indicator(m.size(), 0);
            for (const auto& l : tset) indicator[m.index_of(l)] = 1;
            CHECK(in_row_space(st.representation(), indicator));

            // consequently T is a disjoint union of cocircuits of M_T
            Mask tmask = st.mask_of(tset);
            auto ccs = cocircuit_masks(st);
            Mask remaining = tmask;
            bool progress = true;
            while (remaining && progress) {
                progress = false;
                for (Mask cc : ccs)
                    if (cc && (cc & remaining) == cc) {
                        remaining &= ~cc;
                        progress = true;
                    }
            }
            CHECK(remaining == 0);
        }
    }
}

TEST_CASE("three 2-circuits force a 2-circuit in every pair split") {
    // triangle with every edge doubled has three 2-circuits
    Multigraph g = testutil::triangle();
    g.add_edge("a2", 0, 1);
    g.add_edge("b2", 1, 2);
    g.add_edge("c2", 0, 2);
    BinaryMatroid m = circuit_matroid(g);

    auto two_circuits = [](const BinaryMatroid& mm) {
        int n = 0;
        for (Mask c : circuit_masks(mm))
            if (popcount(c) == 2) ++n;
        return n;
    };
    REQUIRE(two_circuits(m) >= 3);
    for (const auto& tset : subsets_up_to(m, 2)) {
        if (tset.size() != 2) continue;
        CHECK(two_circuits(split(m, tset)) >= 1);
    }
}
