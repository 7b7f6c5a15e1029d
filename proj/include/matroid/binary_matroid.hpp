#ifndef MATROID_BINARY_MATROID_HPP
#define MATROID_BINARY_MATROID_HPP

// Binary matroids as labeled ground sets over a GF(2) representation.
// The stored representation is the reduced row echelon form of whatever
// matrix the matroid was built from, with columns in element order and zero
// rows dropped. Row spaces determine rref uniquely, and the row space of a
// representation is the cocircuit space of the matroid, so two equal
// matroids on the same labels always store identical matrices.
//
// Values are immutable after construction and freely shareable.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matroid/errors.hpp"
#include "matroid/gf2.hpp"

namespace matroid {

// Element subsets by index into BinaryMatroid::elements().
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

class BinaryMatroid {
public:
    BinaryMatroid() : rep_(0, 0) {}

    static BinaryMatroid from_matrix(std::vector<std::string> labels, const Gf2Matrix& m) {
        if (labels.size() != m.cols())
            throw DimensionError("matroid: label count != column count");
        if (labels.size() > 31)
            throw ResourceError("matroid: ground sets above 31 elements are out of scope");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) throw LabelError("matroid: duplicate element labels");
        BinaryMatroid out;
        out.labels_ = std::move(labels);
        out.rep_ = rref(m).matrix;
        return out;
    }

    std::size_t size() const { return labels_.size(); }
    std::size_t rank() const { return rep_.rows(); }
    const std::vector<std::string>& elements() const { return labels_; }
    const Gf2Matrix& representation() const { return rep_; }

    bool has_element(const std::string& label) const {
        return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
    }

    std::size_t index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw LabelError("matroid: unknown element '" + label + "'");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    // Column c as a bitmask over representation rows.
    Word column(std::size_t c) const { return rep_.column_bits(c); }

    // Indices in label-sorted order; all deterministic enumeration uses this.
    std::vector<std::size_t> sorted_indices() const {
        std::vector<std::size_t> idx(size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
        return idx;
    }

    Mask mask_of(const std::set<std::string>& labels) const {
        Mask m = 0;
        for (const auto& l : labels) m |= Mask(1) << index_of(l);
        return m;
    }

    std::set<std::string> labels_of(Mask m) const {
        std::set<std::string> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (m & (Mask(1) << i)) out.insert(labels_[i]);
        return out;
    }

private:
    std::vector<std::string> labels_;
    Gf2Matrix rep_;  // rref, columns aligned with labels_
};

// ---------------------------------------------------------------------------
// Independence and circuits
// ---------------------------------------------------------------------------

// Rank of the column subset `sub` by greedy elimination over column bitmasks.
inline std::size_t subset_rank(const std::vector<Word>& cols, Mask sub) {
    Word pivots[32];
    std::size_t np = 0;
    for (std::size_t i = 0; sub; ++i, sub >>= 1) {
        if (!(sub & 1)) continue;
        Word v = cols[i];
        for (std::size_t p = 0; p < np; ++p) {
            Word lead = pivots[p] & -pivots[p];
            if (v & lead) v ^= pivots[p];
        }
        if (v) pivots[np++] = v;
    }
    return np;
}

inline std::vector<Word> column_masks(const BinaryMatroid& m) {
    std::vector<Word> cols(m.size());
    for (std::size_t c = 0; c < m.size(); ++c) cols[c] = m.column(c);
    return cols;
}

inline bool is_independent(const BinaryMatroid& m, Mask sub) {
    return subset_rank(column_masks(m), sub) == static_cast<std::size_t>(popcount(sub));
}

// All circuits (minimal dependent sets) as index masks, sorted ascending.
// Brute force over all subsets; ground sets here never exceed ~13 elements.
inline std::vector<Mask> circuit_masks(const BinaryMatroid& m) {
    const std::size_t n = m.size();
    if (n > 20) throw ResourceError("matroid: circuit enumeration beyond 20 elements");
    const std::vector<Word> cols = column_masks(m);
    const Mask full = (n == 0) ? 0 : ((Mask(1) << n) - 1);
    std::vector<bool> indep(std::size_t(full) + 1, false);
    for (Mask s = 0; s <= full; ++s) {
        indep[s] = subset_rank(cols, s) == static_cast<std::size_t>(popcount(s));
        if (!full) break;
    }
    std::vector<Mask> circuits;
    for (Mask s = 1; s <= full && full; ++s) {
        if (indep[s]) continue;
        bool minimal = true;
        for (Mask t = s; t; t &= t - 1) {
            Mask without = s & ~(t & -t);
            if (!indep[without]) { minimal = false; break; }
        }
        if (minimal) circuits.push_back(s);
    }
    return circuits;
}

inline std::vector<std::set<std::string>> circuits(const BinaryMatroid& m) {
    std::vector<std::set<std::string>> out;
    for (Mask c : circuit_masks(m)) out.push_back(m.labels_of(c));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Minors, duality, relabeling
// ---------------------------------------------------------------------------

inline BinaryMatroid deletion(const BinaryMatroid& m, const std::set<std::string>& x) {
    for (const auto& l : x) m.index_of(l);  // unknown label -> LabelError
    std::vector<std::string> labels;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!x.count(m.elements()[i])) {
            labels.push_back(m.elements()[i]);
            keep.push_back(i);
        }
    }
    return BinaryMatroid::from_matrix(std::move(labels), m.representation().select_columns(keep));
}

inline BinaryMatroid contraction(const BinaryMatroid& m, const std::set<std::string>& y) {
    for (const auto& l : y) m.index_of(l);
    // Work on a mutable copy of the representation; loops in y contract as
    // deletions, other elements pivot out one row each.
    std::vector<std::string> labels = m.elements();
    Gf2Matrix work = m.representation();
    for (const auto& l : y) {
        std::size_t c = 0;
        while (labels[c] != l) ++c;
        std::size_t rows = work.rows();
        std::size_t pr = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (work.at(r, c)) { pr = r; break; }
        std::vector<Word> next_rows;
        if (pr != rows) {
            const Word pivot_row = work.row_bits(pr);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == pr) continue;
                Word v = work.row_bits(r);
                if (v & (Word(1) << c)) v ^= pivot_row;
                next_rows.push_back(v);
            }
        } else {
            for (std::size_t r = 0; r < rows; ++r) next_rows.push_back(work.row_bits(r));
        }
        // Drop column c.
        std::vector<Word> shrunk;
        for (Word v : next_rows) {
            Word low = v & ((Word(1) << c) - 1);
            Word high = (v >> (c + 1)) << c;
            shrunk.push_back(low | high);
        }
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(c));
        work = Gf2Matrix::from_rows(labels.size(), std::move(shrunk));
    }
    return BinaryMatroid::from_matrix(std::move(labels), work);
}

// Dual on the same ground set: pivot/non-pivot columns of the rref swap roles.
inline BinaryMatroid dual(const BinaryMatroid& m) {
    const Gf2Matrix& a = m.representation();
    const std::size_t n = m.size();
    RrefResult r = rref(a);  // a is already rref; this recovers pivot columns
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    Gf2Matrix d(0, n);
    for (std::size_t q = 0; q < n; ++q) {
        if (is_pivot[q]) continue;
        Word row = Word(1) << q;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            if (a.at(i, q)) row |= Word(1) << r.pivot_cols[i];
        d.append_row(row);
    }
    return BinaryMatroid::from_matrix(m.elements(), d);
}

inline BinaryMatroid relabel(const BinaryMatroid& m,
                             const std::map<std::string, std::string>& to) {
    std::vector<std::string> labels;
    for (const auto& l : m.elements()) {
        auto it = to.find(l);
        labels.push_back(it == to.end() ? l : it->second);
    }
    return BinaryMatroid::from_matrix(std::move(labels), m.representation());
}

// Label-preserving equality: same ground set and same column dependence.
// Columns are aligned by sorted label, then the canonical (rref) forms of the
// row spaces are compared.
inline bool matroid_equal(const BinaryMatroid& a, const BinaryMatroid& b) {
    if (a.size() != b.size() || a.rank() != b.rank()) return false;
    std::vector<std::size_t> ia = a.sorted_indices(), ib = b.sorted_indices();
    for (std::size_t k = 0; k < ia.size(); ++k)
        if (a.elements()[ia[k]] != b.elements()[ib[k]]) return false;
    Gf2Matrix ma = rref(a.representation().select_columns(ia)).matrix;
    Gf2Matrix mb = rref(b.representation().select_columns(ib)).matrix;
    return ma == mb;
}

inline std::set<std::string> loops(const BinaryMatroid& m) {
    std::set<std::string> out;
    for (std::size_t c = 0; c < m.size(); ++c)
        if (m.column(c) == 0) out.insert(m.elements()[c]);
    return out;
}

inline std::set<std::string> coloops(const BinaryMatroid& m) {
    std::set<std::string> out;
    const std::vector<Word> cols = column_masks(m);
    const Mask full = m.size() ? (Mask(1) << m.size()) - 1 : 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        Mask rest = full & ~(Mask(1) << c);
        if (subset_rank(cols, rest) < m.rank()) out.insert(m.elements()[c]);
    }
    return out;
}

inline std::vector<Mask> cocircuit_masks(const BinaryMatroid& m) {
    // Circuits of the dual; dual() preserves element order, so masks align.
    return circuit_masks(dual(m));
}

inline std::vector<std::set<std::string>> cocircuits(const BinaryMatroid& m) {
    return circuits(dual(m));
}

inline std::vector<std::set<std::string>> two_cocircuits(const BinaryMatroid& m) {
    std::vector<std::set<std::string>> out;
    for (Mask c : cocircuit_masks(m))
        if (popcount(c) == 2) out.push_back(m.labels_of(c));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

// Invariant key: equal for isomorphic matroids, not guaranteed complete.
struct Signature {
    std::size_t n = 0, r = 0;
    std::vector<std::pair<std::size_t, std::size_t>> circuit_sizes;  // (size, count)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> profiles;  // sorted per element

    auto operator<=>(const Signature&) const = default;
};

inline std::vector<std::pair<std::size_t, std::size_t>> element_profile(
    const std::vector<Mask>& circuits, std::size_t e) {
    std::map<std::size_t, std::size_t> hist;
    for (Mask c : circuits)
        if (c & (Mask(1) << e)) ++hist[static_cast<std::size_t>(popcount(c))];
    return {hist.begin(), hist.end()};
}

inline Signature invariant_signature(const BinaryMatroid& m) {
    Signature s;
    s.n = m.size();
    s.r = m.rank();
    std::vector<Mask> cs = circuit_masks(m);
    std::map<std::size_t, std::size_t> hist;
    for (Mask c : cs) ++hist[static_cast<std::size_t>(popcount(c))];
    s.circuit_sizes.assign(hist.begin(), hist.end());
    for (std::size_t e = 0; e < m.size(); ++e) s.profiles.push_back(element_profile(cs, e));
    std::sort(s.profiles.begin(), s.profiles.end());
    return s;
}

namespace detail {

struct IsoSide {
    std::vector<std::size_t> order;                 // label-sorted indices
    std::vector<Mask> circuits;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> profile;  // per index
    std::set<Mask> circuit_set;
    std::vector<std::vector<std::size_t>> circuits_at;  // index -> circuit ids
};

inline IsoSide make_side(const BinaryMatroid& m) {
    IsoSide s;
    s.order = m.sorted_indices();
    s.circuits = circuit_masks(m);
    s.circuit_set.insert(s.circuits.begin(), s.circuits.end());
    s.profile.resize(m.size());
    s.circuits_at.resize(m.size());
    for (std::size_t e = 0; e < m.size(); ++e) s.profile[e] = element_profile(s.circuits, e);
    for (std::size_t ci = 0; ci < s.circuits.size(); ++ci)
        for (std::size_t e = 0; e < m.size(); ++e)
            if (s.circuits[ci] & (Mask(1) << e)) s.circuits_at[e].push_back(ci);
    return s;
}

// Backtracking over label-sorted element orders, so the first bijection found
// is lexicographically least. A partial map is rejected as soon as a fully
// mapped circuit of A fails to land on a circuit of B.
inline bool iso_search(const IsoSide& A, const IsoSide& B, std::size_t pos,
                       std::vector<int>& image, std::vector<bool>& used,
                       std::vector<int>& mapped_count) {
    if (pos == A.order.size()) return true;
    const std::size_t a = A.order[pos];
    for (std::size_t bi = 0; bi < B.order.size(); ++bi) {
        const std::size_t b = B.order[bi];
        if (used[b] || A.profile[a] != B.profile[b]) continue;
        image[a] = static_cast<int>(b);
        used[b] = true;
        for (std::size_t ci : A.circuits_at[a]) ++mapped_count[ci];
        bool ok = true;
        for (std::size_t ci : A.circuits_at[a]) {
            if (mapped_count[ci] != popcount(A.circuits[ci])) continue;
            Mask img = 0;
            for (Mask c = A.circuits[ci]; c; c &= c - 1) {
                std::size_t e = static_cast<std::size_t>(__builtin_ctz(c));
                img |= Mask(1) << image[e];
            }
            if (!B.circuit_set.count(img)) { ok = false; break; }
        }
        if (ok && iso_search(A, B, pos + 1, image, used, mapped_count)) return true;
        for (std::size_t ci : A.circuits_at[a]) --mapped_count[ci];
        used[b] = false;
        image[a] = -1;
    }
    return false;
}

}  // namespace detail

// Label bijection carrying circuits of a onto circuits of b, or nullopt.
inline std::optional<std::map<std::string, std::string>> is_isomorphic(
    const BinaryMatroid& a, const BinaryMatroid& b) {
    if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
    detail::IsoSide A = detail::make_side(a), B = detail::make_side(b);
    if (A.circuits.size() != B.circuits.size()) return std::nullopt;
    {
        auto pa = A.profile, pb = B.profile;
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        if (pa != pb) return std::nullopt;
    }
    std::vector<int> image(a.size(), -1);
    std::vector<bool> used(b.size(), false);
    std::vector<int> mapped_count(A.circuits.size(), 0);
    if (!detail::iso_search(A, B, 0, image, used, mapped_count)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (std::size_t e = 0; e < a.size(); ++e)
        out[a.elements()[e]] = b.elements()[static_cast<std::size_t>(image[e])];
    return out;
}

// ---------------------------------------------------------------------------
// Minor search
// ---------------------------------------------------------------------------

// Certificate that host \ deleted / contracted, relabeled through bijection,
// equals the pattern.
struct MinorWitness {
    std::set<std::string> deleted;
    std::set<std::string> contracted;
    std::map<std::string, std::string> bijection;  // surviving host label -> pattern label
};

inline bool replay_witness(const BinaryMatroid& host, const BinaryMatroid& pattern,
                           const MinorWitness& w) {
    BinaryMatroid minor = contraction(deletion(host, w.deleted), w.contracted);
    if (minor.size() != pattern.size()) return false;
    for (const auto& l : minor.elements())
        if (!w.bijection.count(l)) return false;
    return matroid_equal(relabel(minor, w.bijection), pattern);
}

namespace detail {

inline void combinations(const std::vector<std::size_t>& items, std::size_t k,
                         const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (pick.size() == k) return fn(pick);
        if (items.size() - start < k - pick.size()) return false;
        for (std::size_t i = start; i < items.size(); ++i) {
            pick.push_back(items[i]);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(0);
}

// (loop count, sorted parallel-class sizes) -- a cheap isomorphism invariant
// used to reject candidate minors before any circuit enumeration.
inline std::pair<std::size_t, std::vector<std::size_t>> column_shape(const BinaryMatroid& m) {
    std::size_t nloops = 0;
    std::map<Word, std::size_t> classes;
    for (std::size_t c = 0; c < m.size(); ++c) {
        Word col = m.column(c);
        if (col == 0) ++nloops;
        else ++classes[col];
    }
    std::vector<std::size_t> sizes;
    for (auto& [col, cnt] : classes) sizes.push_back(cnt);
    std::sort(sizes.begin(), sizes.end());
    return {nloops, sizes};
}

}  // namespace detail

// Minor containment: a witness with lexicographically least contract-set
// (ordered by size then sorted labels), then least delete-set, then least
// bijection; or nullopt. Contract-sets are restricted to independent sets and
// delete-sets to coindependent ones, which loses no minors.
inline std::optional<MinorWitness> has_minor(const BinaryMatroid& host,
                                             const BinaryMatroid& pattern) {
    if (pattern.size() > host.size() || pattern.rank() > host.rank()) return std::nullopt;
    if (host.size() - pattern.size() < host.rank() - pattern.rank()) return std::nullopt;
    const std::size_t ct = host.rank() - pattern.rank();
    const std::size_t dl = host.size() - pattern.size() - ct;
    if (host.size() - host.rank() < pattern.size() - pattern.rank()) return std::nullopt;

    const Signature target = invariant_signature(pattern);
    const auto target_shape = detail::column_shape(pattern);
    const std::vector<Word> host_cols = column_masks(host);

    std::optional<MinorWitness> found;
    detail::combinations(host.sorted_indices(), ct, [&](const std::vector<std::size_t>& ypick) {
        Mask ymask = 0;
        for (std::size_t i : ypick) ymask |= Mask(1) << i;
        if (subset_rank(host_cols, ymask) != ct) return false;  // contract independent sets only
        std::set<std::string> ylabels;
        for (std::size_t i : ypick) ylabels.insert(host.elements()[i]);
        BinaryMatroid contracted = contraction(host, ylabels);

        const std::vector<Word> ccols = column_masks(contracted);
        detail::combinations(contracted.sorted_indices(), dl,
                             [&](const std::vector<std::size_t>& xpick) {
            Mask xmask = 0;
            for (std::size_t i : xpick) xmask |= Mask(1) << i;
            Mask keep = ((contracted.size() ? (Mask(1) << contracted.size()) - 1 : 0)) & ~xmask;
            if (subset_rank(ccols, keep) != contracted.rank()) return false;  // keep rank
            std::set<std::string> xlabels;
            for (std::size_t i : xpick) xlabels.insert(contracted.elements()[i]);
            BinaryMatroid minor = deletion(contracted, xlabels);
            if (detail::column_shape(minor) != target_shape) return false;
            if (invariant_signature(minor) != target) return false;
            auto bij = is_isomorphic(minor, pattern);
            if (!bij) return false;
            found = MinorWitness{xlabels, ylabels, *bij};
            return true;
        });
        return found.has_value();
    });
    return found;
}

}  // namespace matroid

#endif
