#pragma once

// The bijection Phi between facets of Lambda_d and monomials of S, its
// inverse Psi, the swap facet used to shell subcomplexes, and an exhaustive
// checker for the properties that make revlex order shell every complex
// coming from a (0)-compressed multicomplex.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambdacm/complex.hpp"
#include "lambdacm/ground.hpp"
#include "lambdacm/multicomplex.hpp"
#include "lambdacm/shelling.hpp"

namespace lambdacm {

/// One ordered vertex list paired with one ordered variable list; the single
/// block setting in which phi and psi are defined.
struct BlockMapContext {
    std::vector<int> vertices;   ///< global vertex indices, largest first
    std::vector<int> variables;  ///< global variable indices, largest first
    int capacity = 0;
    std::size_t variable_count = 0;  ///< length of the monomials produced

    void validate() const {
        if (capacity < 0 || variables.size() + static_cast<std::size_t>(capacity) != vertices.size()) {
            throw InputError("block map needs |X| = |V| - a with a >= 0");
        }
    }
};

inline BlockMapContext block_context(const Instance& inst, int block) {
    BlockMapContext ctx;
    inst.block_vertices(block).for_each([&](int v) { ctx.vertices.push_back(v); });
    for (int k = inst.variable_offset(block); k < inst.variable_offset(block + 1); ++k) {
        ctx.variables.push_back(k);
    }
    ctx.capacity = inst.capacity(block);
    ctx.variable_count = static_cast<std::size_t>(inst.variable_count());
    return ctx;
}

/// phi(V, X): an a-subset {v_1..v_t, v_{i_1}..v_{i_s}} with i_1 > t + 1 goes to
/// x_{i_1-(t+1)} ... x_{i_s-(t+s)}.
inline Monomial phi_block(const BlockMapContext& ctx, VertexSet tau) {
    ctx.validate();
    std::vector<int> positions;  // 1-based positions in ctx.vertices
    for (std::size_t p = 0; p < ctx.vertices.size(); ++p) {
        if (tau.contains(ctx.vertices[p])) {
            positions.push_back(static_cast<int>(p) + 1);
        }
    }
    if (static_cast<int>(positions.size()) != ctx.capacity || positions.size() != static_cast<std::size_t>(tau.size())) {
        throw InputError("phi_block: argument must be an a-subset of V");
    }
    int t = 0;
    while (t < ctx.capacity && positions[static_cast<std::size_t>(t)] == t + 1) {
        ++t;
    }
    std::vector<int> e(ctx.variable_count, 0);
    for (int k = 1; t + k <= ctx.capacity; ++k) {
        const int x = positions[static_cast<std::size_t>(t + k - 1)] - (t + k);
        ++e[static_cast<std::size_t>(ctx.variables.at(static_cast<std::size_t>(x - 1)))];
    }
    return Monomial(std::move(e));
}

struct BlockPreimage {
    VertexSet sigma;  ///< initial segment {v_1, ..., v_{a-s}}
    VertexSet rho;    ///< the s vertices encoding the variables of mu
    VertexSet all() const { return sigma | rho; }
};

/// psi(X, V) = sigma u rho, the inverse of phi_block.
inline BlockPreimage psi_block(const BlockMapContext& ctx, const Monomial& mu) {
    ctx.validate();
    if (mu.size() != ctx.variable_count) {
        throw InputError("psi_block: monomial has the wrong number of variables");
    }
    std::vector<int> idx;  // i_1 <= ... <= i_s, 1-based in ctx.variables
    int outside = mu.degree();
    for (std::size_t k = 0; k < ctx.variables.size(); ++k) {
        const int e = mu[static_cast<std::size_t>(ctx.variables[k])];
        outside -= e;
        for (int r = 0; r < e; ++r) {
            idx.push_back(static_cast<int>(k) + 1);
        }
    }
    if (outside != 0) {
        throw InputError("psi_block: monomial is not supported on X");
    }
    const int s = static_cast<int>(idx.size());
    const int a = ctx.capacity;
    if (s > a) {
        throw InputError("psi_block: degree exceeds the capacity");
    }
    BlockPreimage out;
    for (int k = 1; k <= a - s; ++k) {
        out.sigma = out.sigma.with(ctx.vertices[static_cast<std::size_t>(k - 1)]);
    }
    for (int k = 1; k <= s; ++k) {
        const int pos = idx[static_cast<std::size_t>(k - 1)] + a - (s - k);
        out.rho = out.rho.with(ctx.vertices.at(static_cast<std::size_t>(pos - 1)));
    }
    return out;
}

/// The revlex-first a_i-subset of V_i containing tau n V_i.
inline VertexSet fll(const Instance& inst, VertexSet tau, int block) {
    VertexSet part = tau & inst.block_vertices(block);
    const VertexSet vb = inst.block_vertices(block);
    vb.for_each([&](int v) {
        if (part.size() < inst.capacity(block) && !part.contains(v)) {
            part = part.with(v);
        }
    });
    return part;
}

namespace detail {
inline BlockMapContext zero_block_context(const Instance& inst, VertexSet domain, int capacity) {
    BlockMapContext ctx;
    domain.for_each([&](int v) { ctx.vertices.push_back(v); });
    for (int k = 0; k < inst.x0_size(); ++k) {
        ctx.variables.push_back(k);
    }
    ctx.capacity = capacity;
    ctx.variable_count = static_cast<std::size_t>(inst.variable_count());
    return ctx;
}
}  // namespace detail

/// Phi(tau) = Phi_0(tau) * Phi_1(tau) * ... * Phi_m(tau).
inline Monomial Phi(const Instance& inst, VertexSet tau) {
    inst.require_facet(tau);
    Monomial mu = inst.one();
    VertexSet domain;  // V[tau]
    for (int b = 1; b <= inst.blocks(); ++b) {
        const Monomial part = phi_block(block_context(inst, b), fll(inst, tau, b));
        domain = domain | inst.block_prefix(b, inst.capacity(b) - part.degree());
        mu = mu * part;
    }
    const VertexSet tau0 = tau & domain;
    if (domain.size() - tau0.size() != inst.x0_size()) {
        throw std::logic_error("Phi: |V[tau]| - |tau[0]| differs from |X_0|");
    }
    return mu * phi_block(detail::zero_block_context(inst, domain, tau0.size()), tau0);
}

/// Psi(mu) = Psi_0(mu) u ... u Psi_m(mu); the inverse of Phi.
inline VertexSet Psi(const Instance& inst, const Monomial& mu) {
    if (!inst.in_poset(mu)) {
        throw InputError("Psi: monomial is not in S");
    }
    VertexSet tau;
    VertexSet domain;  // V[mu]
    for (int b = 1; b <= inst.blocks(); ++b) {
        const Monomial part = inst.block_part(mu, b);
        tau = tau | psi_block(block_context(inst, b), part).rho;
        domain = domain | inst.block_prefix(b, inst.capacity(b) - part.degree());
    }
    const auto zero = detail::zero_block_context(inst, domain, domain.size() - inst.x0_size());
    tau = tau | psi_block(zero, inst.block_part(mu, 0)).all();
    if (!inst.is_facet(tau)) {
        throw std::logic_error("Psi: image is not a facet of Lambda");
    }
    return tau;
}

/// (tau - v) u w, where w is Gap(tau) if v is in tail(tau) and the first gap
/// of v's block otherwise. `v` must lie in R_Lex(tau).
inline VertexSet swap_back(const Instance& inst, VertexSet tau, int v) {
    const FacetProfile p = profile(inst, tau);
    int w = -1;
    if (p.tail.contains(v)) {
        w = *p.gap;
    } else if (p.up.contains(v)) {
        w = p.first_gaps.at(inst.block_of(v));
    } else {
        throw InputError("swap_back: vertex is not in the restriction");
    }
    return tau.without(v).with(w);
}

/// bk(tau, gamma), swapping out the largest vertex of R_Lex(tau) - gamma.
inline VertexSet back_facet(const Instance& inst, VertexSet tau, VertexSet gamma) {
    inst.require_facet(tau);
    if (!gamma.subset_of(tau) || gamma == tau) {
        throw InputError("back_facet: gamma must be a proper subset of tau");
    }
    const VertexSet free = restriction(inst, tau) - gamma;
    if (free.empty()) {
        throw InputError("back_facet: gamma contains the restriction of tau");
    }
    return swap_back(inst, tau, free.first());
}

inline std::vector<Monomial> divisors(const Monomial& mu) {
    std::vector<Monomial> out;
    std::vector<int> e(mu.size(), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == mu.size()) {
            out.emplace_back(e);
            return;
        }
        for (int x = 0; x <= mu[k]; ++x) {
            e[k] = x;
            self(self, k + 1);
        }
        e[k] = 0;
    };
    rec(rec, 0);
    return out;
}

/// Looks for a divisor mu'' of `mu` and a block i with deg(mu'') = deg(target),
/// equal parts off X_0 u X_i, and target's (X_0 u X_i)-part revlex-at-least mu''s.
inline std::optional<std::pair<Monomial, int>> find_dominated_divisor(const Instance& inst, const Monomial& mu, const Monomial& target) {
    for (const Monomial& div : divisors(mu)) {
        if (div.degree() != target.degree()) {
            continue;
        }
        for (int b = 1; b <= inst.blocks(); ++b) {
            const auto [t_in, t_out] = inst.split_zero_block(target, b);
            const auto [d_in, d_out] = inst.split_zero_block(div, b);
            if (t_out == d_out && revlex_mono_cmp(t_in, d_in) != std::strong_ordering::less) {
                return std::make_pair(div, b);
            }
        }
    }
    return std::nullopt;
}

/// Thrown when a verification job is larger than the caller allowed.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BijectionFailure {
    VertexSet tau;
    VertexSet gamma;
    VertexSet swapped;
    std::string reason;
};

struct BijectionReport {
    std::size_t facets = 0;
    std::size_t pairs = 0;  ///< (tau, gamma, v) triples examined
    std::optional<BijectionFailure> failure;
    bool ok() const { return !failure; }
};

/// Exhaustively checks, for every facet tau and every gamma strictly inside
/// tau that misses part of R_Lex(tau), that bk(tau, gamma) and a divisor of
/// Phi(tau) satisfy conditions (a)-(e); also checks deg Phi = |R_Lex| and the
/// two swap properties along the way. With `all_choices` every admissible v is
/// swapped, not only the largest.
inline BijectionReport verify_bijection_theorem(const Complex& lambda, std::size_t budget, bool all_choices = false) {
    const Instance& inst = lambda.instance();
    if (lambda.size() > budget) {
        throw BudgetExceeded("verify_bijection_theorem: " + std::to_string(lambda.size()) + " facets exceeds budget " +
                             std::to_string(budget));
    }
    BijectionReport rep;
    auto fail = [&](VertexSet tau, VertexSet gamma, VertexSet swapped, std::string why) {
        rep.failure = BijectionFailure{tau, gamma, swapped, std::move(why)};
        return rep;
    };
    for (VertexSet tau : lambda.facets()) {
        ++rep.facets;
        const VertexSet r = restriction(inst, tau);
        const Monomial mu = Phi(inst, tau);
        if (mu.degree() != r.size()) {
            return fail(tau, {}, {}, "deg Phi(tau) differs from |R_Lex(tau)|");
        }
        const std::uint64_t full = tau.bits();
        if (full == 0) {
            continue;  // d = 0: the empty facet has no proper subsets
        }
        for (std::uint64_t sub = (full - 1) & full;; sub = (sub - 1) & full) {
            const VertexSet gamma(sub);
            if (!r.subset_of(gamma)) {
                const VertexSet free = r - gamma;
                std::vector<int> choices = all_choices ? free.indices() : std::vector<int>{free.first()};
                for (int v : choices) {
                    ++rep.pairs;
                    const VertexSet other = swap_back(inst, tau, v);
                    if (!inst.is_facet(other)) {
                        return fail(tau, gamma, other, "swapped set is not a facet");
                    }
                    if (!gamma.subset_of(other) || gamma == other) {
                        return fail(tau, gamma, other, "(a) gamma not strictly inside the swapped facet");
                    }
                    if (revlex_set_cmp(other, tau) != std::strong_ordering::greater) {
                        return fail(tau, gamma, other, "(b) swapped facet is not revlex-earlier");
                    }
                    if (restriction(inst, other).size() > r.size()) {
                        return fail(tau, gamma, other, "restriction grew under the swap");
                    }
                    const Monomial mu2 = Phi(inst, other);
                    const int vb = inst.block_of(v);
                    for (int t = 1; t <= inst.blocks(); ++t) {
                        const int before = inst.block_degree(mu, t);
                        const int after = inst.block_degree(mu2, t);
                        if ((t != vb && inst.block_part(mu, t) != inst.block_part(mu2, t)) || (t == vb && after > before)) {
                            return fail(tau, gamma, other, "swap changed Phi outside the swapped block");
                        }
                    }
                    if (!find_dominated_divisor(inst, mu, mu2)) {
                        return fail(tau, gamma, other, "(c)-(e) no dominated divisor of Phi(tau)");
                    }
                }
            }
            if (sub == 0) {
                break;
            }
        }
    }
    return rep;
}

/// Gamma: the facets Psi(mu) for mu in a (0)-compressed multicomplex M.
inline Complex gamma_from_M(const MonomialPoset& poset, const MonomialSet& m) {
    detail::require_in_poset(poset, m);
    if (m.empty()) {
        throw InputError("gamma_from_M: the multicomplex is empty");
    }
    if (!poset.is_0_compressed(poset.to_mask(m))) {
        throw InputError("gamma_from_M: the multicomplex is not (0)-compressed");
    }
    std::vector<VertexSet> facets;
    facets.reserve(m.size());
    for (const Monomial& mu : m) {
        facets.push_back(Psi(poset.instance(), mu));
    }
    return Complex(poset.instance(), std::move(facets));
}

/// Revlex order on the facets of a subcomplex of Lambda, each facet paired
/// with its Lambda-wide closed-form restriction.
inline ShellingRecord subcomplex_lex_record(const Complex& gamma) {
    ShellingRecord rec;
    rec.order = gamma.facets();
    for (VertexSet tau : rec.order) {
        rec.restrictions.push_back(restriction(gamma.instance(), tau));
    }
    return rec;
}

}  // namespace lambdacm
