#pragma once

// The block matrix g^{-1} = [[-A, ABC], [0, C]] with random rational entries,
// and the check that each facet's rows against the last d columns are
// nonsingular.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "lambdacm/complex.hpp"
#include "lambdacm/ground.hpp"
#include "lambdacm/matrix.hpp"

namespace lambdacm {

/// Parameters for one random specialization. Within block i the first
/// n_i - a_i vertices get variables in X_i and the last a_i get variables in
/// Y_i. Variables are ordered X_1, ..., X_m, then Y_1, ..., Y_m.
struct GenericMatrixSpec {
    Instance instance;
    std::uint64_t seed = 0;
    std::int64_t range = 1000000;  ///< numerators and denominators drawn from [1, range]
    int max_attempts = 16;

    int x_size() const {
        int s = 0;
        for (int b = 1; b <= instance.blocks(); ++b) {
            s += instance.block_size(b) - instance.capacity(b);
        }
        return s;
    }
    int y_size() const { return instance.total_capacity(); }
    int side() const { return instance.vertex_count(); }

    /// Row/column of g^{-1} carrying the variable of vertex v.
    std::size_t variable_of(int v) const {
        const Vertex u = instance.vertex_at(v);
        int x_off = 0;
        int y_off = x_size();
        for (int b = 1; b < u.block; ++b) {
            x_off += instance.block_size(b) - instance.capacity(b);
            y_off += instance.capacity(b);
        }
        const int split = instance.block_size(u.block) - instance.capacity(u.block);
        return static_cast<std::size_t>(u.rank <= split ? x_off + u.rank - 1 : y_off + u.rank - split - 1);
    }

    /// Rows H of a facet.
    std::vector<std::size_t> rows_of(VertexSet facet) const {
        std::vector<std::size_t> h;
        facet.for_each([&](int v) { h.push_back(variable_of(v)); });
        return h;
    }

    /// The last d variables.
    std::vector<std::size_t> last_columns() const {
        std::vector<std::size_t> l;
        for (int j = side() - instance.facet_size(); j < side(); ++j) {
            l.push_back(static_cast<std::size_t>(j));
        }
        return l;
    }
};

struct GInverse {
    RationalMatrix matrix;
    RationalMatrix a;  ///< block diagonal A_1, ..., A_m
    RationalMatrix c;
    int attempts = 0;
};

inline GInverse build_g_inverse(const GenericMatrixSpec& spec) {
    if (spec.range < 1) {
        throw InputError("build_g_inverse: range must be at least 1");
    }
    const Instance& inst = spec.instance;
    const auto nx = static_cast<std::size_t>(spec.x_size());
    const auto ny = static_cast<std::size_t>(spec.y_size());
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::int64_t> draw(1, spec.range);
    auto sample = [&] {
        mpq_class q(static_cast<long>(draw(rng)), static_cast<long>(draw(rng)));
        q.canonicalize();
        return q;
    };

    for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
        GInverse g;
        g.attempts = attempt;
        g.a = RationalMatrix(nx, nx);
        RationalMatrix b(nx, ny);
        std::size_t xo = 0;
        std::size_t yo = 0;
        for (int blk = 1; blk <= inst.blocks(); ++blk) {
            const auto xs = static_cast<std::size_t>(inst.block_size(blk) - inst.capacity(blk));
            const auto ys = static_cast<std::size_t>(inst.capacity(blk));
            for (std::size_t i = 0; i < xs; ++i) {
                for (std::size_t j = 0; j < xs; ++j) {
                    g.a(xo + i, xo + j) = sample();
                }
                for (std::size_t j = 0; j < ys; ++j) {
                    b(xo + i, yo + j) = sample();
                }
            }
            xo += xs;
            yo += ys;
        }
        g.c = RationalMatrix(ny, ny);
        for (std::size_t i = 0; i < ny; ++i) {
            for (std::size_t j = 0; j < ny; ++j) {
                g.c(i, j) = sample();
            }
        }
        if (determinant(g.a) == 0 || determinant(g.c) == 0) {
            continue;
        }
        const RationalMatrix abc = g.a * b * g.c;
        g.matrix = RationalMatrix(nx + ny, nx + ny);
        for (std::size_t i = 0; i < nx; ++i) {
            for (std::size_t j = 0; j < nx; ++j) {
                g.matrix(i, j) = -g.a(i, j);
            }
            for (std::size_t j = 0; j < ny; ++j) {
                g.matrix(i, nx + j) = abc(i, j);
            }
        }
        for (std::size_t i = 0; i < ny; ++i) {
            for (std::size_t j = 0; j < ny; ++j) {
                g.matrix(nx + i, nx + j) = g.c(i, j);
            }
        }
        return g;
    }
    throw std::runtime_error("build_g_inverse: A or C singular on every attempt");
}

/// det g^{-1} = (-1)^{|A|} det A det C, checked exactly.
inline bool block_determinant_identity(const GInverse& g) {
    const mpq_class lhs = determinant(g.matrix);
    mpq_class rhs = determinant(g.a) * determinant(g.c);
    if (g.a.rows() % 2 == 1) {
        rhs = -rhs;
    }
    return lhs == rhs;
}

/// det of the rows of `facet` against the last d columns.
inline mpq_class facet_determinant(const GenericMatrixSpec& spec, const RationalMatrix& ginv, VertexSet facet) {
    const std::vector<std::size_t> h = spec.rows_of(facet);
    const std::vector<std::size_t> l = spec.last_columns();
    return determinant(ginv.submatrix(h, l));
}

struct KiklVerdict {
    bool ok = true;
    std::optional<VertexSet> facet;  ///< first facet with a vanishing determinant

    explicit operator bool() const { return ok; }
};

inline KiklVerdict check_kikl(const Complex& lambda, const GenericMatrixSpec& spec, const RationalMatrix& ginv) {
    if (!(lambda.instance() == spec.instance)) {
        throw InputError("check_kikl: matrix built for a different instance");
    }
    const auto side = static_cast<std::size_t>(spec.side());
    if (ginv.rows() != side || ginv.cols() != side) {
        throw InputError("check_kikl: matrix has the wrong size");
    }
    for (VertexSet tau : lambda.facets()) {
        if (facet_determinant(spec, ginv, tau) == 0) {
            return {false, tau};
        }
    }
    return {};
}

}  // namespace lambdacm
