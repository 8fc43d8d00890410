#pragma once

// Pure complexes stored by facets, the complexes Lambda_d(n, a), joins,
// skeleta, and f-/h-vectors.

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "lambdacm/ground.hpp"

namespace lambdacm {

/// A set of faces, kept sorted by raw bits and free of duplicates.
using FaceSet = std::vector<VertexSet>;

inline FaceSet normalized(FaceSet faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

inline bool contains_face(const FaceSet& faces, VertexSet s) { return std::binary_search(faces.begin(), faces.end(), s); }

/// Every subset of every generator, the empty face included.
inline FaceSet downward_closure(const std::vector<VertexSet>& generators) {
    std::unordered_set<std::uint64_t> seen;
    for (VertexSet g : generators) {
        const std::uint64_t full = g.bits();
        for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
            seen.insert(sub);
            if (sub == 0) {
                break;
            }
        }
    }
    FaceSet out;
    out.reserve(seen.size());
    for (std::uint64_t b : seen) {
        out.emplace_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Inclusion-maximal members of a face set.
inline std::vector<VertexSet> maximal_faces(const std::vector<VertexSet>& faces) {
    std::vector<VertexSet> sorted = normalized(faces);
    std::sort(sorted.begin(), sorted.end(), [](VertexSet x, VertexSet y) { return x.size() > y.size() || (x.size() == y.size() && x < y); });
    std::vector<VertexSet> out;
    for (VertexSet f : sorted) {
        const bool dominated = std::any_of(out.begin(), out.end(), [&](VertexSet g) { return f.subset_of(g); });
        if (!dominated) {
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline VertexSet support(const FaceSet& faces) {
    VertexSet s;
    for (VertexSet f : faces) {
        s = s | f;
    }
    return s;
}

/// {t1 u t2 : t1 in first, t2 in second}; the vertex sets must be disjoint.
inline FaceSet join(const FaceSet& first, const FaceSet& second) {
    if (!(support(first) & support(second)).empty()) {
        throw InputError("join: complexes share vertices");
    }
    FaceSet out;
    out.reserve(first.size() * second.size());
    for (VertexSet x : first) {
        for (VertexSet y : second) {
            out.push_back(x | y);
        }
    }
    return normalized(std::move(out));
}

/// Faces with at most k vertices (dimension at most k - 1).
inline FaceSet skeleton(const FaceSet& faces, int k) {
    if (k < 0) {
        throw InputError("skeleton: k must be non-negative");
    }
    FaceSet out;
    std::copy_if(faces.begin(), faces.end(), std::back_inserter(out), [&](VertexSet f) { return f.size() <= k; });
    return out;
}

/// The full simplex on a vertex set, as a face set.
inline FaceSet simplex_faces(VertexSet vertices) { return downward_closure({vertices}); }

/// Face counts by cardinality: out[j] = f_{j-1}, so out[0] = 1 for the empty face.
inline std::vector<std::int64_t> f_vector(const FaceSet& faces) {
    int top = 0;
    for (VertexSet f : faces) {
        top = std::max(top, f.size());
    }
    std::vector<std::int64_t> f(static_cast<std::size_t>(top) + 1, 0);
    for (VertexSet face : faces) {
        ++f[static_cast<std::size_t>(face.size())];
    }
    return f;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Solves sum_i h_i x^{d-i} = sum_i f_{i-1} (x-1)^{d-i} for h.
///
/// `f` uses the f_vector layout (f[0] = f_{-1}); entries of h may come out
/// negative for complexes that are not Cohen-Macaulay.
inline std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f, int d) {
    if (d < 0 || f.size() != static_cast<std::size_t>(d) + 1) {
        throw InputError("h_from_f: f must have d + 1 entries");
    }
    if (f[0] != 1) {
        throw InputError("h_from_f: f_{-1} must be 1");
    }
    std::vector<std::int64_t> h(f.size(), 0);
    for (int i = 0; i <= d; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j <= i; ++j) {
            const std::int64_t term = binomial(d - j, i - j) * f[static_cast<std::size_t>(j)];
            s += ((i - j) % 2 == 0) ? term : -term;
        }
        h[static_cast<std::size_t>(i)] = s;
    }
    return h;
}

/// A pure (d-1)-dimensional subcomplex of Lambda_d, stored as its facet list
/// in revlex-descending order.
class Complex {
public:
    Complex(Instance instance, std::vector<VertexSet> facets) : instance_(std::move(instance)), facets_(normalized(std::move(facets))) {
        for (VertexSet f : facets_) {
            instance_.require_facet(f);
        }
    }

    const Instance& instance() const { return instance_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    std::size_t size() const { return facets_.size(); }
    int dimension() const { return instance_.facet_size() - 1; }
    bool contains(VertexSet facet) const { return contains_face(facets_, facet); }

    FaceSet faces() const { return downward_closure(facets_); }

private:
    Instance instance_;
    std::vector<VertexSet> facets_;
};

/// All d-subsets of V taking at most a_i vertices from each V_i.
inline Complex build_lambda(const Instance& inst) {
    std::vector<VertexSet> facets;
    const int d = inst.facet_size();
    const int nv = inst.vertex_count();
    std::vector<int> per_block(static_cast<std::size_t>(inst.blocks()) + 1, 0);
    std::vector<int> chosen;
    auto extend = [&](auto&& self, int next) -> void {
        if (static_cast<int>(chosen.size()) == d) {
            VertexSet s;
            for (int i : chosen) {
                s = s.with(i);
            }
            facets.push_back(s);
            return;
        }
        for (int v = next; v <= nv - (d - static_cast<int>(chosen.size())); ++v) {
            const int b = inst.block_of(v);
            if (per_block[static_cast<std::size_t>(b)] == inst.capacity(b)) {
                continue;
            }
            ++per_block[static_cast<std::size_t>(b)];
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
            --per_block[static_cast<std::size_t>(b)];
        }
    };
    extend(extend, 0);
    return Complex(inst, std::move(facets));
}

/// Lambda_d built literally: the join of the (a_i - 1)-skeleta of the simplices
/// on each V_i, cut down to its (d - 1)-skeleton. Exponential; for checks only.
inline FaceSet build_lambda_literal(const Instance& inst) {
    FaceSet acc{VertexSet{}};
    for (int b = 1; b <= inst.blocks(); ++b) {
        acc = join(acc, skeleton(simplex_faces(inst.block_vertices(b)), inst.capacity(b)));
    }
    return skeleton(acc, inst.facet_size());
}

inline std::vector<std::int64_t> f_vector(const Complex& c) {
    std::vector<std::int64_t> f = f_vector(c.faces());
    f.resize(static_cast<std::size_t>(c.instance().facet_size()) + 1, 0);
    return f;
}

inline std::vector<std::int64_t> h_vector(const Complex& c) { return h_from_f(f_vector(c), c.instance().facet_size()); }

}  // namespace lambdacm
