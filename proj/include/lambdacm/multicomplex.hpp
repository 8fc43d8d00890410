#pragma once

// The monomial poset S = S_d(X, (inf, a)), multicomplexes inside it, and the
// (0,i)- and (0)-compression operators.
//
// Two representations are used. MonomialSet is the plain value type used at
// API boundaries. PosetMask is a membership vector over the elements of one
// MonomialPoset and is what the compression loop runs on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambdacm/ground.hpp"

namespace lambdacm {

using MonomialSet = std::set<Monomial>;
using PosetMask = std::vector<bool>;

#ifdef NDEBUG
inline constexpr bool kCheckFibers = false;
#else
inline constexpr bool kCheckFibers = true;
#endif

/// F_j = number of members of degree j, for j = 0..d.
inline std::vector<std::int64_t> F_vector(const MonomialSet& m, int d) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1, 0);
    for (const Monomial& mu : m) {
        if (mu.degree() > d) {
            throw InputError("F_vector: monomial above the degree cap");
        }
        ++f[static_cast<std::size_t>(mu.degree())];
    }
    return f;
}

/// Closed under divisibility. Checking the divisors mu / x for single
/// variables x suffices, since every divisor is reached by a chain of them.
inline bool is_multicomplex(const MonomialSet& m) {
    for (const Monomial& mu : m) {
        std::vector<int> e = mu.exponents();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) {
                continue;
            }
            --e[k];
            if (!m.contains(Monomial(e))) {
                return false;
            }
            ++e[k];
        }
    }
    return true;
}

/// Product of all members.
inline Monomial potential(const MonomialSet& m, std::size_t variables) {
    std::vector<int> e(variables, 0);
    for (const Monomial& mu : m) {
        if (mu.size() != variables) {
            throw InputError("potential: monomial over a different variable set");
        }
        for (std::size_t k = 0; k < variables; ++k) {
            e[k] += mu[k];
        }
    }
    return Monomial(std::move(e));
}

struct CompressionWitness {
    int block = 0;
    Monomial member;   ///< mu in M
    Monomial missing;  ///< revlex-larger replacement that is in S but not in M
};

class MonomialPoset {
public:
    explicit MonomialPoset(Instance inst) : inst_(std::move(inst)) {
        enumerate();
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            index_[elems_[k]] = k;
        }
        lower_.resize(elems_.size());
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            std::vector<int> e = elems_[k].exponents();
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] > 0) {
                    --e[v];
                    lower_[k].push_back(index_.at(Monomial(e)));
                    ++e[v];
                }
            }
        }
        fibers_.resize(static_cast<std::size_t>(inst_.blocks()) + 1);
        for (int b = 1; b <= inst_.blocks(); ++b) {
            build_fiber_tables(b);
        }
    }

    const Instance& instance() const { return inst_; }
    int degree_cap() const { return inst_.facet_size(); }
    std::size_t size() const { return elems_.size(); }

    /// Every element of S: degree ascending, revlex-descending within a degree.
    const std::vector<Monomial>& elements() const { return elems_; }
    const Monomial& at(std::size_t k) const { return elems_.at(k); }
    int degree_of(std::size_t k) const { return degree_[k]; }

    std::optional<std::size_t> index_of(const Monomial& mu) const {
        const auto it = index_.find(mu);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    bool contains(const Monomial& mu) const { return index_.contains(mu); }

    /// Indices of mu / x over the variables x dividing mu.
    const std::vector<std::size_t>& lower_covers(std::size_t k) const { return lower_[k]; }

    // --- conversions ------------------------------------------------------

    PosetMask to_mask(const MonomialSet& m) const {
        PosetMask mask(elems_.size(), false);
        for (const Monomial& mu : m) {
            const auto k = index_of(mu);
            if (!k) {
                throw InputError("monomial is not an element of S");
            }
            mask[*k] = true;
        }
        return mask;
    }

    MonomialSet from_mask(const PosetMask& mask) const {
        MonomialSet m;
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (mask[k]) {
                m.insert(elems_[k]);
            }
        }
        return m;
    }

    std::vector<std::int64_t> F_vector(const PosetMask& mask) const {
        std::vector<std::int64_t> f(static_cast<std::size_t>(degree_cap()) + 1, 0);
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (mask[k]) {
                ++f[static_cast<std::size_t>(degree_[k])];
            }
        }
        return f;
    }

    bool is_multicomplex(const PosetMask& mask) const {
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (!mask[k]) {
                continue;
            }
            for (std::size_t lo : lower_[k]) {
                if (!mask[lo]) {
                    return false;
                }
            }
        }
        return true;
    }

    // --- compression --------------------------------------------------------

    /// C_i: replace every fiber M_nu by the revlex-initial segments of
    /// S(X_0 u X_i, a_i, d) with the same degree counts.
    PosetMask compress_block(const PosetMask& mask, int block, bool check_fibers = kCheckFibers) const {
        const Fibers& fb = fibers(block);
        const std::size_t deg_slots = static_cast<std::size_t>(degree_cap()) + 1;
        // outside index -> degree counts of its fiber
        std::map<std::size_t, std::vector<int>> counts;
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (!mask[k]) {
                continue;
            }
            auto [it, fresh] = counts.try_emplace(fb.outside_of[k]);
            if (fresh) {
                it->second.assign(deg_slots, 0);
            }
            ++it->second[static_cast<std::size_t>(fb.inside_degree[fb.inside_of[k]])];
        }
        PosetMask out(elems_.size(), false);
        std::vector<bool> segment;
        for (const auto& [outside, cnt] : counts) {
            if (check_fibers) {
                segment.assign(fb.inside.size(), false);
            }
            for (std::size_t j = 0; j < deg_slots; ++j) {
                const auto& stratum = fb.strata[j];
                if (static_cast<std::size_t>(cnt[j]) > stratum.size()) {
                    throw std::logic_error("compress_block: fiber larger than its stratum");
                }
                for (int r = 0; r < cnt[j]; ++r) {
                    const std::size_t in = stratum[static_cast<std::size_t>(r)];
                    const long s = fb.compose[in * elems_.size() + outside];
                    if (s < 0) {
                        throw std::logic_error("compress_block: recombined monomial left S");
                    }
                    out[static_cast<std::size_t>(s)] = true;
                    if (check_fibers) {
                        segment[in] = true;
                    }
                }
            }
            if (check_fibers) {
                for (std::size_t in = 0; in < fb.inside.size(); ++in) {
                    if (!segment[in]) {
                        continue;
                    }
                    for (std::size_t lo : fb.inside_lower[in]) {
                        if (!segment[lo]) {
                            throw std::logic_error("compress_block: initial segment is not a multicomplex");
                        }
                    }
                }
            }
        }
        return out;
    }

    /// Definition-level (0,i)-compression test driven by the precomputed
    /// strata: every revlex-larger replacement of the (X_0 u X_i)-part that
    /// stays in S must also be a member.
    std::optional<CompressionWitness> find_uncompressed(const PosetMask& mask, int block) const {
        const Fibers& fb = fibers(block);
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (!mask[k]) {
                continue;
            }
            const std::size_t in = fb.inside_of[k];
            const auto& stratum = fb.strata[static_cast<std::size_t>(fb.inside_degree[in])];
            for (std::size_t r = 0; r < fb.rank[in]; ++r) {
                const long s = fb.compose[stratum[r] * elems_.size() + fb.outside_of[k]];
                if (s >= 0 && !mask[static_cast<std::size_t>(s)]) {
                    return CompressionWitness{block, elems_[k], elems_[static_cast<std::size_t>(s)]};
                }
            }
        }
        return std::nullopt;
    }

    bool is_0i_compressed(const PosetMask& mask, int block) const { return !find_uncompressed(mask, block); }

    bool is_0_compressed(const PosetMask& mask) const {
        for (int b = 1; b <= inst_.blocks(); ++b) {
            if (!is_0i_compressed(mask, b)) {
                return false;
            }
        }
        return true;
    }

    struct CompressResult {
        PosetMask mask;
        int cycles = 0;  ///< full passes over i = 1..m, the final unchanged pass included
    };

    /// Applies C_1, ..., C_m cyclically until a whole pass changes nothing.
    CompressResult compress(PosetMask mask, bool check_fibers = kCheckFibers) const {
        const long cap = static_cast<long>(elems_.size()) * static_cast<long>(elems_.size()) + 2;
        CompressResult res;
        for (;;) {
            ++res.cycles;
            if (res.cycles > cap) {
                throw std::runtime_error("compress: iteration cap reached");
            }
            bool changed = false;
            for (int b = 1; b <= inst_.blocks(); ++b) {
                PosetMask next = compress_block(mask, b, check_fibers);
                if (next != mask) {
                    changed = true;
                    mask = std::move(next);
                }
            }
            if (!changed) {
                break;
            }
        }
        res.mask = std::move(mask);
        return res;
    }

    // --- enumeration ------------------------------------------------------

    /// Calls `visit` on every multicomplex in S (the empty one included)
    /// unless there are more than `budget`; returns false if it stopped early.
    template <typename Visit>
    bool enumerate_multicomplexes(std::size_t budget, Visit&& visit) const {
        PosetMask mask(elems_.size(), false);
        std::size_t seen = 0;
        bool complete = true;
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (!complete) {
                return;
            }
            if (k == elems_.size()) {
                if (++seen > budget) {
                    complete = false;
                    return;
                }
                visit(static_cast<const PosetMask&>(mask));
                return;
            }
            self(self, k + 1);
            for (std::size_t lo : lower_[k]) {
                if (!mask[lo]) {
                    return;
                }
            }
            mask[k] = true;
            self(self, k + 1);
            mask[k] = false;
        };
        rec(rec, 0);
        return complete;
    }

    /// Number of multicomplexes in S, or nullopt when above `budget`.
    std::optional<std::size_t> count_multicomplexes(std::size_t budget) const {
        std::size_t n = 0;
        if (!enumerate_multicomplexes(budget, [&](const PosetMask&) { ++n; })) {
            return std::nullopt;
        }
        return n;
    }

    /// A random nonempty multicomplex: walk S upward and keep each element
    /// whose lower covers are all kept with a per-sample probability.
    template <typename Rng>
    PosetMask random_multicomplex(Rng& rng) const {
        std::uniform_real_distribution<double> density(0.05, 0.95);
        std::bernoulli_distribution keep(density(rng));
        PosetMask mask(elems_.size(), false);
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            const bool allowed = std::all_of(lower_[k].begin(), lower_[k].end(), [&](std::size_t lo) { return mask[lo]; });
            mask[k] = allowed && (k == 0 || keep(rng));
        }
        return mask;
    }

private:
    struct Fibers {
        std::vector<Monomial> inside;                      ///< elements of S(X_0 u X_i, a_i, d)
        std::vector<int> inside_degree;
        std::vector<std::vector<std::size_t>> inside_lower;
        std::vector<std::vector<std::size_t>> strata;      ///< per degree, revlex-descending
        std::vector<std::size_t> rank;                     ///< position inside its stratum
        std::vector<std::size_t> inside_of;                ///< S index -> inside index
        std::vector<std::size_t> outside_of;               ///< S index -> S index of the outside part
        std::vector<long> compose;                         ///< inside * |S| + outside -> S index or -1
    };

    const Fibers& fibers(int block) const {
        if (block < 1 || block > inst_.blocks()) {
            throw InputError("compression block index out of range");
        }
        return fibers_[static_cast<std::size_t>(block)];
    }

    void enumerate() {
        const int nv = inst_.variable_count();
        const int d = inst_.facet_size();
        std::vector<int> e(static_cast<std::size_t>(nv), 0);
        std::vector<int> used(static_cast<std::size_t>(inst_.blocks()) + 1, 0);
        auto rec = [&](auto&& self, int v, int deg) -> void {
            if (v == nv) {
                elems_.emplace_back(e);
                return;
            }
            const int b = inst_.variable_block_of(v);
            const int cap = b == 0 ? d : inst_.capacity(b);
            for (int x = 0; deg + x <= d && used[static_cast<std::size_t>(b)] + x <= cap; ++x) {
                e[static_cast<std::size_t>(v)] = x;
                used[static_cast<std::size_t>(b)] += x;
                self(self, v + 1, deg + x);
                used[static_cast<std::size_t>(b)] -= x;
            }
            e[static_cast<std::size_t>(v)] = 0;
        };
        rec(rec, 0, 0);
        std::sort(elems_.begin(), elems_.end(), [](const Monomial& x, const Monomial& y) {
            if (x.degree() != y.degree()) {
                return x.degree() < y.degree();
            }
            return revlex_mono_cmp(x, y) == std::strong_ordering::greater;
        });
        degree_.reserve(elems_.size());
        for (const Monomial& mu : elems_) {
            degree_.push_back(mu.degree());
        }
    }

    void build_fiber_tables(int block) {
        Fibers& fb = fibers_[static_cast<std::size_t>(block)];
        std::map<Monomial, std::size_t> inside_index;
        // elems_ is already degree-then-revlex sorted, so the (X_0 u X_i)-only
        // elements come out in stratum order.
        for (const Monomial& mu : elems_) {
            if (inst_.split_zero_block(mu, block).second.is_one()) {
                inside_index[mu] = fb.inside.size();
                fb.inside.push_back(mu);
            }
        }
        const std::size_t n_in = fb.inside.size();
        fb.strata.resize(static_cast<std::size_t>(degree_cap()) + 1);
        fb.inside_lower.resize(n_in);
        for (std::size_t in = 0; in < n_in; ++in) {
            const int deg = fb.inside[in].degree();
            fb.inside_degree.push_back(deg);
            fb.rank.push_back(fb.strata[static_cast<std::size_t>(deg)].size());
            fb.strata[static_cast<std::size_t>(deg)].push_back(in);
            for (std::size_t lo : lower_[index_.at(fb.inside[in])]) {
                fb.inside_lower[in].push_back(inside_index.at(elems_[lo]));
            }
        }
        fb.inside_of.resize(elems_.size());
        fb.outside_of.resize(elems_.size());
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            auto [inside, outside] = inst_.split_zero_block(elems_[k], block);
            fb.inside_of[k] = inside_index.at(inside);
            fb.outside_of[k] = index_.at(outside);
        }
        fb.compose.assign(n_in * elems_.size(), -1);
        for (std::size_t in = 0; in < n_in; ++in) {
            for (std::size_t k = 0; k < elems_.size(); ++k) {
                if (fb.outside_of[k] != k) {
                    continue;  // k is not supported away from X_0 u X_i
                }
                if (const auto s = index_of(fb.inside[in] * elems_[k])) {
                    fb.compose[in * elems_.size() + k] = static_cast<long>(*s);
                }
            }
        }
    }

    Instance inst_;
    std::vector<Monomial> elems_;
    std::vector<int> degree_;
    std::map<Monomial, std::size_t> index_;
    std::vector<std::vector<std::size_t>> lower_;
    std::vector<Fibers> fibers_;
};

/// All of S, in the poset's canonical order.
inline const std::vector<Monomial>& enumerate_S(const MonomialPoset& poset) { return poset.elements(); }

namespace detail {
inline void require_in_poset(const MonomialPoset& poset, const MonomialSet& m) {
    for (const Monomial& mu : m) {
        if (!poset.contains(mu)) {
            throw InputError("monomial set is not contained in S");
        }
    }
    if (!is_multicomplex(m)) {
        throw InputError("monomial set is not a multicomplex");
    }
}
}  // namespace detail

inline MonomialSet compress_i(const MonomialPoset& poset, const MonomialSet& m, int block) {
    detail::require_in_poset(poset, m);
    return poset.from_mask(poset.compress_block(poset.to_mask(m), block));
}

inline MonomialSet compress(const MonomialPoset& poset, const MonomialSet& m) {
    detail::require_in_poset(poset, m);
    return poset.from_mask(poset.compress(poset.to_mask(m)).mask);
}

/// Brute-force (0,i)-compression test over all pairs (mu in M, mu' in S),
/// using only revlex_mono_cmp. Independent of the poset's fiber tables.
inline std::optional<CompressionWitness> find_uncompressed_brute(const MonomialPoset& poset, const MonomialSet& m, int block) {
    const Instance& inst = poset.instance();
    for (const Monomial& mu : m) {
        const auto [mu_in, mu_out] = inst.split_zero_block(mu, block);
        for (const Monomial& cand : poset.elements()) {
            if (cand.degree() != mu.degree()) {
                continue;
            }
            const auto [c_in, c_out] = inst.split_zero_block(cand, block);
            if (c_out != mu_out || c_in.degree() != mu_in.degree()) {
                continue;
            }
            if (revlex_mono_cmp(c_in, mu_in) == std::strong_ordering::greater && !m.contains(cand)) {
                return CompressionWitness{block, mu, cand};
            }
        }
    }
    return std::nullopt;
}

inline bool is_0i_compressed(const MonomialPoset& poset, const MonomialSet& m, int block) {
    return !find_uncompressed_brute(poset, m, block);
}

inline bool is_0_compressed(const MonomialPoset& poset, const MonomialSet& m) {
    for (int b = 1; b <= poset.instance().blocks(); ++b) {
        if (!is_0i_compressed(poset, m, b)) {
            return false;
        }
    }
    return true;
}

}  // namespace lambdacm
