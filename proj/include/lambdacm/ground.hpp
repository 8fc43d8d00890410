#pragma once

// Blocked vertex and variable sets of an instance (m, n, a, d), together with
// the reverse-lexicographic orders on vertex sets and monomials.
//
// Conventions used throughout the library:
//   * Blocks are numbered from 1 (vertices) or 0 (variables, block 0 = X_0).
//   * Ranks are numbered from 1; rank 1 is the largest element of its block.
//   * Vertices get a global index in decreasing order, so index 0 is the
//     largest vertex and a larger index always means a smaller vertex.
//   * Variables are laid out X_0, X_1, ..., X_m, also in decreasing order.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lambdacm {

/// Thrown for any violated precondition on caller-supplied data.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxVertices = 64;

struct Vertex {
    int block = 0;
    int rank = 0;
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Variable {
    int block = 0;
    int rank = 0;
    friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
};

/// A set of at most 64 vertices, stored as a bitmask over global indices.
///
/// Because index 0 is the largest vertex, comparing two equal-size sets by
/// their raw bits gives the revlex order reversed: S is revlex-larger than T
/// exactly when bits(S) < bits(T). Sorting ascending by bits therefore lists
/// sets in revlex-descending order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int index) { return VertexSet(std::uint64_t{1} << index); }

    /// The first `count` indices starting at `first`.
    static constexpr VertexSet range(int first, int count) {
        if (count <= 0) {
            return {};
        }
        const std::uint64_t low = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
        return VertexSet(low << first);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int index) const { return (bits_ >> index) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr VertexSet with(int index) const { return VertexSet(bits_ | (std::uint64_t{1} << index)); }
    constexpr VertexSet without(int index) const { return VertexSet(bits_ & ~(std::uint64_t{1} << index)); }

    /// Index of the largest member (smallest index); -1 when empty.
    constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
    /// Index of the smallest member (largest index); -1 when empty.
    constexpr int last() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
            f(std::countr_zero(rest));
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet x, VertexSet y) { return VertexSet(x.bits_ | y.bits_); }
    friend constexpr VertexSet operator&(VertexSet x, VertexSet y) { return VertexSet(x.bits_ & y.bits_); }
    friend constexpr VertexSet operator^(VertexSet x, VertexSet y) { return VertexSet(x.bits_ ^ y.bits_); }
    friend constexpr VertexSet operator-(VertexSet x, VertexSet y) { return VertexSet(x.bits_ & ~y.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet x, VertexSet y) { return x.bits_ <=> y.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Exponent vector over the full variable list X_0, X_1, ..., X_m.
///
/// The default ordering is plain lexicographic on exponents and exists only so
/// monomials can live in ordered containers; use revlex_mono_cmp for the
/// mathematical order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
        for (int e : exp_) {
            if (e < 0) {
                throw InputError("monomial exponents must be non-negative");
            }
        }
    }

    static Monomial one(std::size_t variables) { return Monomial(std::vector<int>(variables, 0)); }

    const std::vector<int>& exponents() const { return exp_; }
    std::size_t size() const { return exp_.size(); }
    int operator[](std::size_t i) const { return exp_[i]; }
    int degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& other) const {
        if (other.size() != size()) {
            return false;
        }
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            if (exp_[i] > other.exp_[i]) {
                return false;
            }
        }
        return true;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        if (x.size() != y.size()) {
            throw InputError("monomials over different variable sets");
        }
        std::vector<int> e(x.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = x.exp_[i] + y.exp_[i];
        }
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exp_;
};

/// Homogeneous revlex comparison: `greater` means x is revlex-larger than y.
///
/// Scans variables from the smallest (last index) upward; at the first
/// disagreement the monomial with the smaller exponent is the larger one.
inline std::strong_ordering revlex_mono_cmp(const Monomial& x, const Monomial& y) {
    if (x.size() != y.size()) {
        throw InputError("revlex_mono_cmp: monomials over different variable sets");
    }
    if (x.degree() != y.degree()) {
        throw InputError("revlex_mono_cmp: monomials of different degree");
    }
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) {
            return y[i] <=> x[i];
        }
    }
    return std::strong_ordering::equal;
}

/// Revlex comparison of equal-size vertex sets: `greater` means s is larger,
/// i.e. the smallest element of the symmetric difference lies in t.
inline std::strong_ordering revlex_set_cmp(VertexSet s, VertexSet t) {
    if (s.size() != t.size()) {
        throw InputError("revlex_set_cmp: sets of different size");
    }
    const VertexSet diff = s ^ t;
    if (diff.empty()) {
        return std::strong_ordering::equal;
    }
    return t.contains(diff.last()) ? std::strong_ordering::greater : std::strong_ordering::less;
}

/// The parameters (n, a, d) with m = n.size(), plus every derived index map.
class Instance {
public:
    Instance(std::vector<int> n, std::vector<int> a, int d) : n_(std::move(n)), a_(std::move(a)), d_(d) {
        if (n_.empty()) {
            throw InputError("instance needs at least one block");
        }
        if (n_.size() != a_.size()) {
            throw InputError("n and a must have the same length");
        }
        int total_a = 0;
        int total_n = 0;
        for (std::size_t i = 0; i < n_.size(); ++i) {
            if (a_[i] < 1 || a_[i] > n_[i]) {
                throw InputError("block " + std::to_string(i + 1) + ": need n_i >= a_i > 0");
            }
            total_a += a_[i];
            total_n += n_[i];
        }
        if (d_ < 0 || d_ > total_a) {
            throw InputError("need 0 <= d <= sum(a)");
        }
        if (total_n > kMaxVertices) {
            throw InputError("at most 64 vertices are supported");
        }

        vertex_offset_.push_back(0);
        for (int ni : n_) {
            vertex_offset_.push_back(vertex_offset_.back() + ni);
        }
        variable_offset_ = {0, total_a - d_};
        for (std::size_t i = 0; i < n_.size(); ++i) {
            variable_offset_.push_back(variable_offset_.back() + n_[i] - a_[i]);
        }
        for (int b = 1; b <= blocks(); ++b) {
            for (int k = 0; k < n_[b - 1]; ++k) {
                vertex_block_.push_back(b);
            }
        }
        for (int b = 0; b <= blocks(); ++b) {
            for (int k = 0; k < variable_block_size(b); ++k) {
                variable_block_.push_back(b);
            }
        }
    }

    int blocks() const { return static_cast<int>(n_.size()); }
    int facet_size() const { return d_; }
    const std::vector<int>& n() const { return n_; }
    const std::vector<int>& a() const { return a_; }
    int block_size(int block) const { return n_.at(static_cast<std::size_t>(block - 1)); }
    int capacity(int block) const { return a_.at(static_cast<std::size_t>(block - 1)); }
    int total_capacity() const { return std::accumulate(a_.begin(), a_.end(), 0); }
    int x0_size() const { return total_capacity() - d_; }

    // --- vertices -------------------------------------------------------

    int vertex_count() const { return vertex_offset_.back(); }

    bool valid(Vertex v) const { return v.block >= 1 && v.block <= blocks() && v.rank >= 1 && v.rank <= block_size(v.block); }

    int index_of(Vertex v) const {
        if (!valid(v)) {
            throw InputError("invalid vertex [" + std::to_string(v.block) + "," + std::to_string(v.rank) + "]");
        }
        return vertex_offset_[static_cast<std::size_t>(v.block - 1)] + v.rank - 1;
    }

    Vertex vertex_at(int index) const {
        const int b = block_of(index);
        return {b, index - vertex_offset_[static_cast<std::size_t>(b - 1)] + 1};
    }

    int block_of(int index) const {
        if (index < 0 || index >= vertex_count()) {
            throw InputError("vertex index out of range");
        }
        return vertex_block_[static_cast<std::size_t>(index)];
    }

    /// All of V_block.
    VertexSet block_vertices(int block) const {
        return VertexSet::range(vertex_offset_.at(static_cast<std::size_t>(block - 1)), block_size(block));
    }

    /// The first `count` vertices of V_block.
    VertexSet block_prefix(int block, int count) const {
        return VertexSet::range(vertex_offset_.at(static_cast<std::size_t>(block - 1)), count);
    }

    VertexSet all_vertices() const { return VertexSet::range(0, vertex_count()); }

    VertexSet make_set(const std::vector<Vertex>& vs) const {
        VertexSet s;
        for (const Vertex& v : vs) {
            const int i = index_of(v);
            if (s.contains(i)) {
                throw InputError("duplicate vertex in set");
            }
            s = s.with(i);
        }
        return s;
    }

    std::vector<Vertex> vertices_of(VertexSet s) const {
        std::vector<Vertex> out;
        s.for_each([&](int i) { out.push_back(vertex_at(i)); });
        return out;
    }

    /// True iff s is a d-subset respecting every block capacity.
    bool is_facet(VertexSet s) const {
        if (!s.subset_of(all_vertices()) || s.size() != d_) {
            return false;
        }
        for (int b = 1; b <= blocks(); ++b) {
            if ((s & block_vertices(b)).size() > capacity(b)) {
                return false;
            }
        }
        return true;
    }

    void require_facet(VertexSet s) const {
        if (!is_facet(s)) {
            throw InputError("vertex set is not a facet of Lambda");
        }
    }

    // --- variables ------------------------------------------------------

    int variable_count() const { return variable_offset_.back(); }

    /// |X_0| = sum(a) - d, |X_i| = n_i - a_i.
    int variable_block_size(int block) const {
        return variable_offset_.at(static_cast<std::size_t>(block) + 1) - variable_offset_.at(static_cast<std::size_t>(block));
    }

    int variable_offset(int block) const { return variable_offset_.at(static_cast<std::size_t>(block)); }

    int variable_index(Variable x) const {
        if (x.block < 0 || x.block > blocks() || x.rank < 1 || x.rank > variable_block_size(x.block)) {
            throw InputError("invalid variable [" + std::to_string(x.block) + "," + std::to_string(x.rank) + "]");
        }
        return variable_offset(x.block) + x.rank - 1;
    }

    Variable variable_at(int index) const {
        const int b = variable_block_[static_cast<std::size_t>(index)];
        return {b, index - variable_offset(b) + 1};
    }

    int variable_block_of(int index) const { return variable_block_.at(static_cast<std::size_t>(index)); }

    Monomial one() const { return Monomial::one(static_cast<std::size_t>(variable_count())); }

    Monomial variable(Variable x) const {
        std::vector<int> e(static_cast<std::size_t>(variable_count()), 0);
        e[static_cast<std::size_t>(variable_index(x))] = 1;
        return Monomial(std::move(e));
    }

    int block_degree(const Monomial& mu, int block) const {
        int s = 0;
        for (int k = variable_offset(block); k < variable_offset(block + 1); ++k) {
            s += mu[static_cast<std::size_t>(k)];
        }
        return s;
    }

    /// mu_{X_block}: the part of mu supported on one variable block.
    Monomial block_part(const Monomial& mu, int block) const {
        require_shape(mu);
        std::vector<int> e(mu.size(), 0);
        for (int k = variable_offset(block); k < variable_offset(block + 1); ++k) {
            e[static_cast<std::size_t>(k)] = mu[static_cast<std::size_t>(k)];
        }
        return Monomial(std::move(e));
    }

    /// Splits mu into its (X_0 u X_i)-part and the rest.
    std::pair<Monomial, Monomial> split_zero_block(const Monomial& mu, int block) const {
        require_shape(mu);
        std::vector<int> inside(mu.size(), 0);
        std::vector<int> outside(mu.exponents());
        for (int b : {0, block}) {
            for (int k = variable_offset(b); k < variable_offset(b + 1); ++k) {
                inside[static_cast<std::size_t>(k)] = mu[static_cast<std::size_t>(k)];
                outside[static_cast<std::size_t>(k)] = 0;
            }
        }
        return {Monomial(std::move(inside)), Monomial(std::move(outside))};
    }

    /// Membership in S = S_d(X, (inf, a)).
    bool in_poset(const Monomial& mu) const {
        if (mu.size() != static_cast<std::size_t>(variable_count()) || mu.degree() > d_) {
            return false;
        }
        for (int b = 1; b <= blocks(); ++b) {
            if (block_degree(mu, b) > capacity(b)) {
                return false;
            }
        }
        return true;
    }

    void require_shape(const Monomial& mu) const {
        if (mu.size() != static_cast<std::size_t>(variable_count())) {
            throw InputError("monomial has " + std::to_string(mu.size()) + " variables, instance has " +
                             std::to_string(variable_count()));
        }
    }

    friend bool operator==(const Instance& x, const Instance& y) { return x.n_ == y.n_ && x.a_ == y.a_ && x.d_ == y.d_; }

private:
    std::vector<int> n_;
    std::vector<int> a_;
    int d_ = 0;
    std::vector<int> vertex_offset_;
    std::vector<int> variable_offset_;
    std::vector<int> vertex_block_;
    std::vector<int> variable_block_;
};

/// `greater` means u is larger than v: earlier block, or same block and lower rank.
inline std::strong_ordering vertex_cmp(const Instance& inst, Vertex u, Vertex v) {
    return inst.index_of(v) <=> inst.index_of(u);
}

/// Revlex comparison restricted to the (X_0 u X_i)-parts of two monomials.
inline std::strong_ordering revlex_zero_block_cmp(const Instance& inst, const Monomial& x, const Monomial& y, int block) {
    return revlex_mono_cmp(inst.split_zero_block(x, block).first, inst.split_zero_block(y, block).first);
}

}  // namespace lambdacm
