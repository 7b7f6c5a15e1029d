#ifndef MATROID_GF2_HPP
#define MATROID_GF2_HPP

// Exact linear algebra over GF(2). Matrices are dense and bit-packed, one
// 64-bit word per row; ground sets in this toolkit stay far below that.
// Addition is XOR, multiplication is AND. All operations are pure.

#include <cstdint>
#include <cstddef>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/errors.hpp"

namespace matroid {

using Word = std::uint64_t;

class Gf2Matrix {
public:
    Gf2Matrix() : rows_(0), cols_(0) {}

    Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows, 0) {
        check_width(cols);
    }

    static Gf2Matrix from_rows(std::size_t cols, std::vector<Word> rows) {
        check_width(cols);
        Gf2Matrix m;
        m.rows_ = rows.size();
        m.cols_ = cols;
        m.bits_ = std::move(rows);
        const Word mask = width_mask(cols);
        for (Word r : m.bits_) {
            if (r & ~mask) throw DimensionError("gf2: row has bits beyond declared width");
        }
        return m;
    }

    // Rows as '0'/'1' strings, all of equal length.
    static Gf2Matrix from_strings(const std::vector<std::string>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Gf2Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("gf2: ragged row strings");
            for (std::size_t j = 0; j < cols; ++j) {
                if (rows[i][j] == '1') m.set(i, j, true);
                else if (rows[i][j] != '0') throw DimensionError("gf2: row characters must be 0/1");
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool at(std::size_t r, std::size_t c) const { return (bits_[r] >> c) & 1u; }

    void set(std::size_t r, std::size_t c, bool v) {
        if (v) bits_[r] |= Word(1) << c;
        else bits_[r] &= ~(Word(1) << c);
    }

    Word row_bits(std::size_t r) const { return bits_[r]; }

    void xor_row(std::size_t dst, Word value) { bits_[dst] ^= value; }

    void append_row(Word value) {
        if (value & ~width_mask(cols_)) throw DimensionError("gf2: appended row too wide");
        bits_.push_back(value);
        ++rows_;
    }

    // Column c as a bitmask over row indices.
    Word column_bits(std::size_t c) const {
        Word out = 0;
        for (std::size_t r = 0; r < rows_; ++r)
            if (at(r, c)) out |= Word(1) << r;
        return out;
    }

    Gf2Matrix transposed() const {
        Gf2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (at(r, c)) t.set(c, r, true);
        return t;
    }

    // Keeps the columns listed in `keep`, in that order.
    Gf2Matrix select_columns(const std::vector<std::size_t>& keep) const {
        Gf2Matrix out(rows_, keep.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (at(r, keep[j])) out.set(r, j, true);
        return out;
    }

    bool operator==(const Gf2Matrix& o) const = default;

    std::string row_string(std::size_t r) const {
        std::string s(cols_, '0');
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c)) s[c] = '1';
        return s;
    }

    static Word width_mask(std::size_t cols) {
        return cols >= 64 ? ~Word(0) : (Word(1) << cols) - 1;
    }

private:
    static void check_width(std::size_t cols) {
        if (cols > 64) throw DimensionError("gf2: at most 64 columns supported");
    }

    std::size_t rows_, cols_;
    std::vector<Word> bits_;
};

struct RrefResult {
    Gf2Matrix matrix;                      // reduced row echelon form, zero rows removed
    std::vector<std::size_t> pivot_cols;   // strictly increasing
};

// Reduced row echelon form over GF(2). Pivot choice is leftmost column,
// topmost remaining row, so the output is deterministic. Zero rows are
// dropped; callers needing the original row count keep it themselves.
inline RrefResult rref(const Gf2Matrix& m) {
    std::vector<Word> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) work.push_back(m.row_bits(r));

    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < work.size(); ++c) {
        const Word bit = Word(1) << c;
        std::size_t pr = next_row;
        while (pr < work.size() && !(work[pr] & bit)) ++pr;
        if (pr == work.size()) continue;
        std::swap(work[next_row], work[pr]);
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != next_row && (work[r] & bit)) work[r] ^= work[next_row];
        pivots.push_back(c);
        ++next_row;
    }
    work.resize(next_row);
    return {Gf2Matrix::from_rows(m.cols(), std::move(work)), std::move(pivots)};
}

inline std::size_t rank(const Gf2Matrix& m) { return rref(m).pivot_cols.size(); }

inline Word pack_bits(const std::vector<int>& v) {
    Word w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0 && v[i] != 1) throw DimensionError("gf2: vector entries must be 0/1");
        if (v[i]) w |= Word(1) << i;
    }
    return w;
}

// True iff v is a GF(2) combination of the rows of m.
inline bool in_row_space(const Gf2Matrix& m, const std::vector<int>& v) {
    if (v.size() != m.cols()) throw DimensionError("gf2: vector length != column count");
    RrefResult r = rref(m);
    Word rem = pack_bits(v);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        if (rem & (Word(1) << r.pivot_cols[i])) rem ^= r.matrix.row_bits(i);
    return rem == 0;
}

struct StandardForm {
    Gf2Matrix matrix;                        // [I_r | D]
    std::vector<std::size_t> col_to_input;   // output column j came from input column col_to_input[j]
};

// Column permutation pulling the pivot columns of the rref to the front,
// yielding [I_r | D]. Non-pivot columns keep their relative order.
inline StandardForm standard_form(const Gf2Matrix& m) {
    RrefResult r = rref(m);
    std::vector<std::size_t> order = r.pivot_cols;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) order.push_back(c);
    return {r.matrix.select_columns(order), std::move(order)};
}

// Text form: header "rows cols", then one '0'/'1' string per row.
inline std::string to_text(const Gf2Matrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) os << m.row_string(r) << '\n';
    return os.str();
}

inline Gf2Matrix gf2_from_text(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw DimensionError("gf2: bad header");
    std::vector<std::string> lines(rows);
    for (auto& s : lines)
        if (!(in >> s)) throw DimensionError("gf2: missing matrix row");
    Gf2Matrix m = Gf2Matrix::from_strings(lines);
    if (m.cols() != cols && rows > 0) throw DimensionError("gf2: header/row width mismatch");
    if (rows == 0) return Gf2Matrix(0, cols);
    return m;
}

}  // namespace matroid

#endif
