#pragma once

// Reduced simplicial homology over Q and the Reisner test for the
// Cohen-Macaulay property.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lambdacm/complex.hpp"
#include "lambdacm/ground.hpp"
#include "lambdacm/matrix.hpp"

namespace lambdacm {

/// Reduced Betti numbers over Q; values[k + 1] holds beta_k, from k = -1 up.
struct BettiProfile {
    std::vector<std::int64_t> values;

    std::int64_t at(int k) const {
        const auto i = static_cast<std::size_t>(k + 1);
        return k >= -1 && i < values.size() ? values[i] : 0;
    }
    int top() const { return static_cast<int>(values.size()) - 2; }
    bool operator==(const BettiProfile&) const = default;
};

namespace detail {

/// Faces grouped by cardinality, each group sorted by bits.
inline std::vector<FaceSet> faces_by_size(const FaceSet& faces) {
    std::vector<FaceSet> out;
    for (VertexSet f : faces) {
        const auto s = static_cast<std::size_t>(f.size());
        if (out.size() <= s) {
            out.resize(s + 1);
        }
        out[s].push_back(f);
    }
    for (FaceSet& group : out) {
        std::sort(group.begin(), group.end());
    }
    return out;
}

/// Column j lists (row, coefficient) pairs of the boundary of cols[j].
/// Faces of `cols` whose facets are missing from `rows` are a caller error.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

inline std::vector<SparseColumn> sparse_boundary(const FaceSet& rows, const FaceSet& cols) {
    std::unordered_map<std::uint64_t, std::uint32_t> row_index;
    row_index.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        row_index.emplace(rows[i].bits(), static_cast<std::uint32_t>(i));
    }
    std::vector<SparseColumn> out(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int position = 0;
        cols[j].for_each([&](int v) {
            const auto it = row_index.find(cols[j].without(v).bits());
            if (it == row_index.end()) {
                throw InputError("boundary: face set is not closed under taking subsets");
            }
            out[j].emplace_back(it->second, position % 2 == 0 ? 1 : -1);
            ++position;
        });
        std::sort(out[j].begin(), out[j].end());
    }
    return out;
}

/// Rank over Z/p by column reduction on the lowest nonzero row.
inline std::size_t sparse_rank_mod_p(const std::vector<SparseColumn>& columns, std::uint64_t p = kRankPrime) {
    using Entry = std::pair<std::uint32_t, std::uint64_t>;
    auto reduce = [p](std::int64_t v) {
        const auto m = static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(((v % m) + m) % m);
    };
    auto inverse = [p](std::uint64_t b) {
        std::uint64_t r = 1;
        for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
            if (e & 1U) {
                r = r * b % p;
            }
            b = b * b % p;
        }
        return r;
    };
    std::unordered_map<std::uint32_t, std::vector<Entry>> pivots;
    std::size_t rank = 0;
    std::vector<Entry> col;
    std::vector<Entry> merged;
    for (const SparseColumn& raw : columns) {
        col.clear();
        for (auto [r, v] : raw) {
            if (const std::uint64_t x = reduce(v); x != 0) {
                col.emplace_back(r, x);
            }
        }
        while (!col.empty()) {
            const auto it = pivots.find(col.back().first);
            if (it == pivots.end()) {
                break;
            }
            const std::vector<Entry>& other = it->second;  // normalized: last entry is 1
            const std::uint64_t f = col.back().second;
            merged.clear();
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < col.size() || b < other.size()) {
                if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
                    merged.push_back(col[a++]);
                } else if (a == col.size() || other[b].first < col[a].first) {
                    merged.emplace_back(other[b].first, (p - f) * other[b].second % p);
                    ++b;
                } else {
                    const std::uint64_t x = (col[a].second + (p - f) * other[b].second) % p;
                    if (x != 0) {
                        merged.emplace_back(col[a].first, x);
                    }
                    ++a;
                    ++b;
                }
            }
            col.swap(merged);
        }
        if (!col.empty()) {
            const std::uint64_t inv = inverse(col.back().second);
            for (Entry& e : col) {
                e.second = e.second * inv % p;
            }
            pivots.emplace(col.back().first, col);
            ++rank;
        }
    }
    return rank;
}

inline IntMatrix dense(const std::vector<SparseColumn>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (auto [r, v] : columns[j]) {
            m(r, j) = v;
        }
    }
    return m;
}

/// Ranks of the augmented boundary maps: ranks[k] = rank of the map from
/// faces of size k to faces of size k - 1 (ranks[0] = 0).
class BoundaryRanks {
public:
    explicit BoundaryRanks(const FaceSet& faces) : groups_(faces_by_size(faces)) {
        const std::size_t n = groups_.size();
        columns_.resize(n);
        mod_p_.assign(n, 0);
        exact_.assign(n, false);
        for (std::size_t k = 1; k < n; ++k) {
            columns_[k] = sparse_boundary(groups_[k - 1], groups_[k]);
            mod_p_[k] = sparse_rank_mod_p(columns_[k]);
            exact_[k] = mod_p_[k] == std::min(groups_[k - 1].size(), groups_[k].size());
        }
        if (n > 0) {
            exact_[0] = true;
        }
    }

    std::size_t sizes() const { return groups_.size(); }
    std::size_t count(std::size_t size) const { return size < groups_.size() ? groups_[size].size() : 0; }

    /// Z/p Betti number; an upper bound for the rational one.
    std::int64_t betti_upper(int k) const { return betti_with(k, [&](std::size_t s) { return lower(s); }); }

    std::int64_t betti_exact(int k) { return betti_with(k, [&](std::size_t s) { return exact(s); }); }

private:
    std::size_t lower(std::size_t s) const { return s < mod_p_.size() ? mod_p_[s] : 0; }

    std::size_t exact(std::size_t s) {
        if (s >= mod_p_.size()) {
            return 0;
        }
        if (!exact_[s]) {
            mod_p_[s] = exact_rank(dense(columns_[s], groups_[s - 1].size()));
            exact_[s] = true;
        }
        return mod_p_[s];
    }

    template <typename RankOf>
    std::int64_t betti_with(int k, RankOf&& rank_of) const {
        const auto s = static_cast<std::size_t>(k + 1);  // faces of dimension k have k + 1 vertices
        return static_cast<std::int64_t>(count(s)) - static_cast<std::int64_t>(rank_of(s)) -
               static_cast<std::int64_t>(rank_of(s + 1));
    }

    std::vector<FaceSet> groups_;
    std::vector<std::vector<SparseColumn>> columns_;
    std::vector<std::size_t> mod_p_;
    std::vector<bool> exact_;
};

}  // namespace detail

/// Matrix of the boundary map from k-dimensional faces to (k-1)-dimensional
/// faces, both ordered by bits; the sign of dropping a vertex is (-1)^position
/// in increasing vertex order. For k = 0 this is the augmentation onto the empty face.
inline RationalMatrix boundary_matrix(const FaceSet& faces, int k) {
    if (k < 0) {
        throw InputError("boundary_matrix: k must be non-negative");
    }
    const std::vector<FaceSet> groups = detail::faces_by_size(normalized(faces));
    const auto s = static_cast<std::size_t>(k + 1);
    const FaceSet empty;
    const FaceSet& rows = s - 1 < groups.size() ? groups[s - 1] : empty;
    const FaceSet& cols = s < groups.size() ? groups[s] : empty;
    RationalMatrix m(rows.size(), cols.size());
    const auto columns = detail::sparse_boundary(rows, cols);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (auto [r, v] : columns[j]) {
            m(r, j) = static_cast<long>(v);
        }
    }
    return m;
}

/// True iff the composite of consecutive boundary maps vanishes in every degree.
inline bool boundary_squares_to_zero(const FaceSet& faces) {
    const std::vector<FaceSet> groups = detail::faces_by_size(normalized(faces));
    for (std::size_t s = 2; s < groups.size(); ++s) {
        const auto outer = detail::sparse_boundary(groups[s - 2], groups[s - 1]);
        const auto inner = detail::sparse_boundary(groups[s - 1], groups[s]);
        std::vector<std::int64_t> acc(groups[s - 2].size());
        for (const auto& col : inner) {
            std::fill(acc.begin(), acc.end(), 0);
            for (auto [mid, c] : col) {
                for (auto [low, e] : outer[mid]) {
                    acc[low] += c * e;
                }
            }
            if (std::any_of(acc.begin(), acc.end(), [](std::int64_t x) { return x != 0; })) {
                return false;
            }
        }
    }
    return true;
}

/// Reduced Betti numbers over Q of the complex given by all of its faces.
inline BettiProfile reduced_betti(const FaceSet& faces) {
    detail::BoundaryRanks ranks(normalized(faces));
    BettiProfile out;
    const int top = static_cast<int>(ranks.sizes()) - 2;
    for (int k = -1; k <= top; ++k) {
        out.values.push_back(ranks.betti_exact(k));
    }
    return out;
}

/// {t : t n sigma = empty, t u sigma a face}.
inline FaceSet link(const FaceSet& faces, VertexSet sigma) {
    if (!contains_face(faces, sigma)) {
        throw InputError("link: face not in complex");
    }
    FaceSet out;
    for (VertexSet f : faces) {
        if (sigma.subset_of(f)) {
            out.push_back(f - sigma);
        }
    }
    return normalized(std::move(out));
}

inline FaceSet link(const Complex& c, VertexSet sigma) { return link(c.faces(), sigma); }

struct CMVerdict {
    bool cm = true;
    bool pure = true;
    std::optional<VertexSet> face;  ///< face whose link has homology below its top dimension
    int degree = 0;                 ///< the offending homology degree

    explicit operator bool() const { return cm; }
};

/// Reisner's test: for every face sigma (the empty face first, then by size
/// and bits) the link of sigma has vanishing reduced rational homology in
/// every degree below its dimension. Non-pure input is reported as not CM.
inline CMVerdict is_CM(const FaceSet& input) {
    const FaceSet faces = normalized(input);
    CMVerdict verdict;
    const std::vector<VertexSet> facets = maximal_faces(faces);
    if (facets.empty()) {
        return verdict;
    }
    const int d = facets.front().size();
    for (VertexSet f : facets) {
        if (f.size() != d) {
            verdict.cm = false;
            verdict.pure = false;
            return verdict;
        }
    }
    std::vector<VertexSet> order;
    for (VertexSet f : faces) {
        if (f.size() <= d - 2) {
            order.push_back(f);
        }
    }
    std::stable_sort(order.begin(), order.end(), [](VertexSet x, VertexSet y) { return x.size() < y.size(); });
    for (VertexSet sigma : order) {
        const FaceSet lk = link(faces, sigma);
        const int dim = d - sigma.size() - 1;
        detail::BoundaryRanks ranks(lk);
        for (int k = -1; k < dim; ++k) {
            if (ranks.betti_upper(k) != 0 && ranks.betti_exact(k) != 0) {
                verdict.cm = false;
                verdict.face = sigma;
                verdict.degree = k;
                return verdict;
            }
        }
    }
    return verdict;
}

inline CMVerdict is_CM(const Complex& c) { return is_CM(c.faces()); }

}  // namespace lambdacm
