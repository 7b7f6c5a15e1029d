#ifndef MATROID_FMINOR_HPP
#define MATROID_FMINOR_HPP

// Fast excluded-minor tests against the four cographicness obstructions,
// working directly on representation columns as bitmasks. The generic
// witness-producing search in binary_matroid.hpp stays the source of record;
// these tests answer the same yes/no questions orders of magnitude faster and
// are cross-checked against it in the test suite.
//
// Key facts used:
//  - contracting an independent set Y sends column x to its reduction modulo
//    a triangulated basis of span(Y); loops/parallels of M/Y collapse there.
//  - a rank-3 minor is the Fano plane exactly when its simplification has all
//    seven points, so an F7 minor exists iff some quotient sees 7 classes.
//  - M(K5) in some basis is the set of all weight-1 and weight-2 vectors of
//    GF(2)^4; M(K3,3) is the double-star configuration over 5 tree columns.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "matroid/binary_matroid.hpp"

namespace matroid::fast {

struct Cols {
    std::vector<Word> cols;  // columns as masks over representation rows
    std::size_t rank = 0;
};

inline Cols from_matroid(const BinaryMatroid& m) {
    Cols c;
    c.rank = m.rank();
    c.cols = column_masks(m);
    return c;
}

// Dual columns from the (rref) primal columns.
inline Cols dual_cols(const Cols& c) {
    const std::size_t n = c.cols.size();
    // rebuild rows, rref them
    std::vector<Word> rows(c.rank, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < c.rank; ++i)
            if (c.cols[j] & (Word(1) << i)) rows[i] |= Word(1) << j;
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
        const Word bit = Word(1) << col;
        std::size_t pr = next;
        while (pr < rows.size() && !(rows[pr] & bit)) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[next], rows[pr]);
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2)
            if (r2 != next && (rows[r2] & bit)) rows[r2] ^= rows[next];
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    Cols d;
    d.rank = n - next;
    d.cols.assign(n, 0);
    std::size_t drow = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (is_pivot[q]) continue;
        d.cols[q] |= Word(1) << drow;
        for (std::size_t i = 0; i < next; ++i)
            if (rows[i] & (Word(1) << q)) d.cols[pivots[i]] |= Word(1) << drow;
        ++drow;
    }
    return d;
}

namespace detail {

// Reduce v by a triangulated basis (masks with distinct leading bits).
inline Word reduce(Word v, const Word* basis, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        Word lead = basis[i] & -basis[i];
        if (v & lead) v ^= basis[i];
    }
    return v;
}

// Distinct nonzero column classes of M/Y, where ybasis triangulates span(Y).
inline void quotient_classes(const std::vector<Word>& cols, const Word* ybasis, std::size_t k,
                             std::vector<Word>& out) {
    out.clear();
    for (Word c : cols) {
        Word r = reduce(c, ybasis, k);
        if (r) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

template <typename Fn>
inline bool for_each_independent_subset(const std::vector<Word>& cols, std::size_t k, Fn&& fn) {
    // iterate independent k-subsets of columns, carrying a triangulated basis
    std::vector<Word> basis(k);
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (pick.size() == k) return fn(basis.data(), k);
        for (std::size_t i = start; i < cols.size(); ++i) {
            if (cols.size() - i < k - pick.size()) break;
            Word red = reduce(cols[i], basis.data(), pick.size());
            if (!red) continue;
            basis[pick.size()] = red;
            pick.push_back(i);
            // keep basis triangulated: distinct leads arise automatically from
            // reduce() because each new vector is reduced by all previous ones
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

inline bool independent(const std::vector<Word>& vs) {
    Word basis[8];
    std::size_t k = 0;
    for (Word v : vs) {
        Word r = reduce(v, basis, k);
        if (!r) return false;
        basis[k++] = r;
    }
    return true;
}

inline bool contains(const std::vector<Word>& sorted, Word v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace detail

// F7 minor: some quotient by an independent (rank-3-leaving) set sees all
// seven projective points.
inline bool has_f7_minor(const Cols& m) {
    if (m.rank < 3 || m.cols.size() < 7) return false;
    const std::size_t k = m.rank - 3;
    std::vector<Word> classes;
    return detail::for_each_independent_subset(m.cols, k, [&](const Word* basis, std::size_t kk) {
        detail::quotient_classes(m.cols, basis, kk, classes);
        return classes.size() >= 7;
    });
}

inline bool has_f7star_minor(const Cols& m) {
    if (m.cols.size() < 7 || m.cols.size() - m.rank < 3) return false;
    return has_f7_minor(dual_cols(m));
}

// M(K5) minor: some rank-4 quotient whose simplification contains, for some
// independent 4-set B, every weight-1 and weight-2 combination of B.
inline bool has_k5_minor(const Cols& m) {
    if (m.rank < 4 || m.cols.size() < 10) return false;
    const std::size_t k = m.rank - 4;
    std::vector<Word> classes;
    return detail::for_each_independent_subset(m.cols, k, [&](const Word* basis, std::size_t kk) {
        detail::quotient_classes(m.cols, basis, kk, classes);
        if (classes.size() < 10) return false;
        const std::size_t s = classes.size();
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = a + 1; b < s; ++b)
                for (std::size_t c = b + 1; c < s; ++c)
                    for (std::size_t d = c + 1; d < s; ++d) {
                        if (!detail::independent(
                                {classes[a], classes[b], classes[c], classes[d]}))
                            continue;
                        Word v[4] = {classes[a], classes[b], classes[c], classes[d]};
                        bool ok = true;
                        for (int i = 0; i < 4 && ok; ++i)
                            for (int j = i + 1; j < 4 && ok; ++j)
                                if (!detail::contains(classes, v[i] ^ v[j])) ok = false;
                        if (ok) return true;
                    }
        return false;
    });
}

// M(K3,3) minor: the double-star configuration a,b,c,d,e with the four
// composite columns d^a^b, d^a^c, e^a^b, e^a^c all present.
inline bool has_k33_minor(const Cols& m) {
    if (m.rank < 5 || m.cols.size() < 9) return false;
    const std::size_t k = m.rank - 5;
    std::vector<Word> classes;
    return detail::for_each_independent_subset(m.cols, k, [&](const Word* basis, std::size_t kk) {
        detail::quotient_classes(m.cols, basis, kk, classes);
        if (classes.size() < 9) return false;
        const std::size_t s = classes.size();
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b) {
                if (b == a) continue;
                for (std::size_t c = b + 1; c < s; ++c) {
                    if (c == a) continue;
                    for (std::size_t d = 0; d < s; ++d) {
                        if (d == a || d == b || d == c) continue;
                        for (std::size_t e = d + 1; e < s; ++e) {
                            if (e == a || e == b || e == c) continue;
                            Word A = classes[a], B = classes[b], C = classes[c],
                                 D = classes[d], E = classes[e];
                            if (!detail::independent({A, B, C, D, E})) continue;
                            if (detail::contains(classes, D ^ A ^ B) &&
                                detail::contains(classes, D ^ A ^ C) &&
                                detail::contains(classes, E ^ A ^ B) &&
                                detail::contains(classes, E ^ A ^ C))
                                return true;
                        }
                    }
                }
            }
        return false;
    });
}

// nullptr when cographic, else the name of the first excluded minor found,
// in the fixed order F7, F7star, M(K5), M(K3,3).
inline const char* cographic_culprit(const Cols& m) {
    if (has_f7_minor(m)) return "F7";
    if (has_f7star_minor(m)) return "F7star";
    if (has_k5_minor(m)) return "M(K5)";
    if (has_k33_minor(m)) return "M(K3,3)";
    return nullptr;
}

inline bool is_cographic_fast(const Cols& m) { return cographic_culprit(m) == nullptr; }

inline bool is_graphic_fast(const Cols& m) { return is_cographic_fast(dual_cols(m)); }

inline bool trivial_family_fast(const Cols& m) { return has_k5_minor(m) || has_k33_minor(m); }

}  // namespace matroid::fast

#endif
