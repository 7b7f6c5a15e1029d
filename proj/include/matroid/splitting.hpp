#ifndef MATROID_SPLITTING_HPP
#define MATROID_SPLITTING_HPP

// The splitting operation M -> M_T: append to a representation of M one row
// carrying 1 exactly on the columns of T, and take the vector matroid of the
// result. The companion construction M_T' additionally adjoins a fresh
// column with a single 1 in the appended row; it deletes back to M_T and
// contracts back to M.
//
// The result depends only on the row space of the representation, so the
// stored rref is as good as any standard form here.

#include <set>
#include <string>

#include "matroid/binary_matroid.hpp"
#include "matroid/errors.hpp"
#include "matroid/gf2.hpp"

namespace matroid {

inline BinaryMatroid split(const BinaryMatroid& m, const std::set<std::string>& t) {
    Word row = 0;
    for (const auto& l : t) row |= Word(1) << m.index_of(l);
    Gf2Matrix a = m.representation();
    a.append_row(row);
    return BinaryMatroid::from_matrix(m.elements(), a);
}

inline BinaryMatroid split_with_element(const BinaryMatroid& m, const std::set<std::string>& t,
                                        const std::string& fresh) {
    if (m.has_element(fresh))
        throw LabelError("split: element '" + fresh + "' already in the ground set");
    Word row = 0;
    for (const auto& l : t) row |= Word(1) << m.index_of(l);
    const std::size_t n = m.size();
    Gf2Matrix a(m.rank() + 1, n + 1);
    for (std::size_t r = 0; r < m.rank(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (m.representation().at(r, c)) a.set(r, c, true);
    for (std::size_t c = 0; c < n; ++c)
        if (row & (Word(1) << c)) a.set(m.rank(), c, true);
    a.set(m.rank(), n, true);  // the fresh column hits only the appended row
    std::vector<std::string> labels = m.elements();
    labels.push_back(fresh);
    return BinaryMatroid::from_matrix(std::move(labels), a);
}

}  // namespace matroid

#endif
