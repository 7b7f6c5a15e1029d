#include "doctest.h"

#include <random>
#include <sstream>

#include "matroid/gf2.hpp"

using namespace matroid;

namespace {

Gf2Matrix a4() {
    return Gf2Matrix::from_strings({
        "1000101",
        "0100110",
        "0001111",
    });
}

Gf2Matrix a4_split() {
    return Gf2Matrix::from_strings({
        "1000101",
        "0100110",
        "0001111",
        "1110000",
    });
}

Gf2Matrix random_matrix(std::mt19937& rng, std::size_t max_rows, std::size_t max_cols) {
    std::uniform_int_distribution<std::size_t> rd(1, max_rows), cd(1, max_cols);
    std::uniform_int_distribution<int> bit(0, 1);
    Gf2Matrix m(rd(rng), cd(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    Gf2Matrix id3 = Gf2Matrix::from_strings({"100", "010", "001"});
    RrefResult r = rref(id3);
    CHECK(r.matrix == id3);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});

    Gf2Matrix zero(2, 4);
    RrefResult z = rref(zero);
    CHECK(z.matrix.rows() == 0);
    CHECK(z.matrix.cols() == 4);
    CHECK(z.pivot_cols.empty());
}

TEST_CASE("rref of the appended-row matrix reproduces the reduced form") {
    RrefResult r = rref(a4_split());
    REQUIRE(r.matrix.rows() == 4);
    CHECK(r.matrix.row_string(0) == "1000101");
    CHECK(r.matrix.row_string(1) == "0100110");
    CHECK(r.matrix.row_string(2) == "0010011");
    CHECK(r.matrix.row_string(3) == "0001111");
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("rank") {
    CHECK(rank(Gf2Matrix::from_strings({"100", "010", "001"})) == 3);
    CHECK(rank(Gf2Matrix(2, 4)) == 0);
    CHECK(rank(a4_split()) == 4);
    CHECK(rank(a4()) == 3);
}

TEST_CASE("in_row_space") {
    Gf2Matrix id2 = Gf2Matrix::from_strings({"10", "01"});
    CHECK(in_row_space(id2, {1, 1}));
    CHECK_FALSE(in_row_space(Gf2Matrix(1, 3), {0, 0, 1}));
    CHECK_THROWS_AS(in_row_space(id2, {1, 1, 0}), DimensionError);

    // Oracle: enumerate all 8 combinations of the three rows directly.
    Word rows[3] = {a4().row_bits(0), a4().row_bits(1), a4().row_bits(2)};
    Word target = pack_bits({1, 1, 1, 0, 0, 0, 0});
    bool hit = false;
    for (int s = 0; s < 8; ++s) {
        Word acc = 0;
        for (int i = 0; i < 3; ++i)
            if (s & (1 << i)) acc ^= rows[i];
        if (acc == target) hit = true;
    }
    CHECK_FALSE(hit);
    CHECK_FALSE(in_row_space(a4(), {1, 1, 1, 0, 0, 0, 0}));
}

TEST_CASE("standard_form") {
    Gf2Matrix id3 = Gf2Matrix::from_strings({"100", "010", "001"});
    StandardForm s = standard_form(id3);
    CHECK(s.matrix == id3);
    CHECK(s.col_to_input == std::vector<std::size_t>{0, 1, 2});

    Gf2Matrix m = Gf2Matrix::from_strings({"011", "110"});
    StandardForm sm = standard_form(m);
    REQUIRE(sm.matrix.rows() == 2);
    CHECK(sm.matrix.at(0, 0));
    CHECK_FALSE(sm.matrix.at(0, 1));
    CHECK(sm.matrix.at(1, 1));
    CHECK_FALSE(sm.matrix.at(1, 0));
    bool d_nonzero = sm.matrix.at(0, 2) || sm.matrix.at(1, 2);
    CHECK(d_nonzero);
    // Round trip: permuting the output back must preserve the row space.
    for (std::size_t r = 0; r < 2; ++r) {
        std::vector<int> v(3, 0);
        for (std::size_t j = 0; j < 3; ++j)
            if (sm.matrix.at(r, j)) v[sm.col_to_input[j]] = 1;
        CHECK(in_row_space(m, v));
    }
}

TEST_CASE("gf2 properties on random matrices") {
    std::mt19937 rng(20240511);
    for (int trial = 0; trial < 200; ++trial) {
        Gf2Matrix m = random_matrix(rng, 8, 12);
        RrefResult r = rref(m);

        // idempotence
        CHECK(rref(r.matrix).matrix == r.matrix);

        // row-space preservation on a random vector
        std::vector<int> v(m.cols());
        for (auto& x : v) x = static_cast<int>(rng() & 1);
        CHECK(in_row_space(m, v) == in_row_space(r.matrix, v));

        // rank(m) == rank(m^T)
        CHECK(rank(m) == rank(m.transposed()));

        // identity block in the first rank(m) columns of the standard form
        StandardForm s = standard_form(m);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            for (std::size_t j = 0; j < r.pivot_cols.size(); ++j)
                CHECK(s.matrix.at(i, j) == (i == j));
    }
}

TEST_CASE("text round trip") {
    Gf2Matrix m = a4();
    std::string text = to_text(m);
    std::istringstream in(text);
    CHECK(gf2_from_text(in) == m);
}
