#pragma once

// The revlex shelling of Lambda_d and its closed-form restriction function,
// together with a definitional shelling checker.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lambdacm/complex.hpp"
#include "lambdacm/ground.hpp"

namespace lambdacm {

/// Combinatorial data attached to a facet of Lambda_d; all vertices are global indices.
struct FacetProfile {
    std::vector<int> full_blocks;   ///< blocks i with |tau n V_i| = a_i
    std::optional<int> gap;         ///< largest vertex outside tau and outside every full block
    std::map<int, int> first_gaps;  ///< full block i with V_i not inside tau -> largest vertex of V_i - tau
    VertexSet tail;                 ///< members of tau below gap
    VertexSet up;                   ///< members of full blocks below that block's first gap

    bool is_full(int block) const {
        for (int b : full_blocks) {
            if (b == block) {
                return true;
            }
        }
        return false;
    }
};

inline FacetProfile profile(const Instance& inst, VertexSet tau) {
    inst.require_facet(tau);
    FacetProfile p;
    VertexSet blocked = tau;
    for (int b = 1; b <= inst.blocks(); ++b) {
        const VertexSet vb = inst.block_vertices(b);
        if ((tau & vb).size() == inst.capacity(b)) {
            p.full_blocks.push_back(b);
            blocked = blocked | vb;
        }
    }
    const VertexSet candidates = inst.all_vertices() - blocked;
    if (!candidates.empty()) {
        p.gap = candidates.first();
        tau.for_each([&](int v) {
            if (v > *p.gap) {
                p.tail = p.tail.with(v);
            }
        });
    }
    for (int b : p.full_blocks) {
        const VertexSet missing = inst.block_vertices(b) - tau;
        if (missing.empty()) {
            continue;
        }
        const int fgap = missing.first();
        p.first_gaps[b] = fgap;
        (tau & inst.block_vertices(b)).for_each([&](int v) {
            if (v > fgap) {
                p.up = p.up.with(v);
            }
        });
    }
    return p;
}

/// R_Lex(tau) = up(tau) u tail(tau).
inline VertexSet restriction(const Instance& inst, VertexSet tau) {
    const FacetProfile p = profile(inst, tau);
    return p.up | p.tail;
}

/// {v in tau : tau - v lies in some facet of `delta` that is revlex-larger than tau}.
inline VertexSet restriction_oracle(const Complex& delta, VertexSet tau) {
    if (!delta.contains(tau)) {
        throw InputError("restriction_oracle: not a facet of the complex");
    }
    VertexSet r;
    for (VertexSet earlier : delta.facets()) {
        if (!(earlier < tau)) {
            break;
        }
        tau.for_each([&](int v) {
            if (tau.without(v).subset_of(earlier)) {
                r = r.with(v);
            }
        });
    }
    return r;
}

/// A facet order with one restriction face per facet.
struct ShellingRecord {
    std::vector<VertexSet> order;
    std::vector<VertexSet> restrictions;
};

/// Facets of Lambda in revlex-descending order with the closed-form restrictions.
inline ShellingRecord lex_shelling(const Complex& lambda) {
    const Instance& inst = lambda.instance();
    if (lambda.size() != build_lambda(inst).size()) {
        throw InputError("lex_shelling: complex is not Lambda_d of its instance");
    }
    ShellingRecord rec;
    rec.order = lambda.facets();
    rec.restrictions.reserve(rec.order.size());
    for (VertexSet tau : rec.order) {
        rec.restrictions.push_back(restriction(inst, tau));
    }
    return rec;
}

/// Restriction faces of an arbitrary facet order, computed straight from the definition.
inline std::vector<VertexSet> definitional_restrictions(const std::vector<VertexSet>& order) {
    std::vector<VertexSet> out;
    out.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexSet r;
        for (std::size_t j = 0; j < i; ++j) {
            const VertexSet common = order[i] & order[j];
            if (common.size() + 1 == order[i].size()) {
                r = r | (order[i] - common);
            }
        }
        out.push_back(r);
    }
    return out;
}

inline ShellingRecord record_from_order(std::vector<VertexSet> order) {
    ShellingRecord rec;
    rec.restrictions = definitional_restrictions(order);
    rec.order = std::move(order);
    return rec;
}

struct ShellingVerdict {
    bool ok = true;
    std::size_t index = 0;  ///< position of the first offending facet
    VertexSet face;         ///< offending face (an intersection or a restriction)
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Checks that every facet after the first meets the union of its
/// predecessors in a complex that is pure of dimension d - 2, and that each
/// recorded restriction is the unique minimal new face.
inline ShellingVerdict verify_shelling(const ShellingRecord& rec) {
    auto fail = [](std::size_t i, VertexSet face, std::string why) { return ShellingVerdict{false, i, face, std::move(why)}; };
    if (rec.restrictions.size() != rec.order.size()) {
        return fail(0, {}, "restriction list does not match facet list");
    }
    if (rec.order.empty()) {
        return {};
    }
    const int d = rec.order.front().size();
    for (std::size_t i = 0; i < rec.order.size(); ++i) {
        if (rec.order[i].size() != d) {
            return fail(i, rec.order[i], "facet has the wrong size");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (rec.order[j] == rec.order[i]) {
                return fail(i, rec.order[i], "facet repeated");
            }
        }
    }

    std::vector<VertexSet> ridges;
    for (std::size_t i = 0; i < rec.order.size(); ++i) {
        const VertexSet tau = rec.order[i];
        ridges.clear();
        VertexSet restr;
        for (std::size_t j = 0; j < i; ++j) {
            const VertexSet common = tau & rec.order[j];
            if (common.size() == d - 1) {
                ridges.push_back(common);
                restr = restr | (tau - common);
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            const VertexSet common = tau & rec.order[j];
            bool covered = false;
            for (VertexSet r : ridges) {
                if (common.subset_of(r)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                return fail(i, common, "intersection with earlier facets is not pure of dimension d-2");
            }
            if (restr.subset_of(rec.order[j])) {
                return fail(i, restr, "restriction lies in an earlier facet");
            }
        }
        if (rec.restrictions[i] != restr) {
            return fail(i, rec.restrictions[i], "recorded restriction differs from the minimal new face");
        }
    }
    return {};
}

/// h_i = number of facets whose restriction has i vertices.
inline std::vector<std::int64_t> h_from_shelling(const ShellingRecord& rec, int d) {
    std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
    for (VertexSet r : rec.restrictions) {
        if (r.size() > d) {
            throw InputError("h_from_shelling: restriction larger than a facet");
        }
        ++h[static_cast<std::size_t>(r.size())];
    }
    return h;
}

}  // namespace lambdacm
