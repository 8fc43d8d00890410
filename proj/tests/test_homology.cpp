#include <catch_amalgamated.hpp>

#include <vector>

#include "lambdacm/homology.hpp"

using namespace lambdacm;

namespace {

VertexSet vs(std::initializer_list<int> v) {
    VertexSet s;
    for (int x : v) {
        s = s.with(x);
    }
    return s;
}

FaceSet closure(std::vector<VertexSet> facets) { return downward_closure(facets); }

// Relabels every vertex through perm.
FaceSet relabel(const FaceSet& faces, const std::vector<int>& perm) {
    FaceSet out;
    for (VertexSet f : faces) {
        VertexSet g;
        f.for_each([&](int v) { g = g.with(perm[static_cast<std::size_t>(v)]); });
        out.push_back(g);
    }
    return normalized(std::move(out));
}

}  // namespace

TEST_CASE("boundary matrices") {
    const FaceSet triangle = closure({vs({0, 1}), vs({0, 2}), vs({1, 2})});
    const RationalMatrix d1 = boundary_matrix(triangle, 1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    CHECK(rank(d1) == 2);
    // edge {0,1} maps to {1} - {0}
    CHECK(d1(0, 0) == -1);
    CHECK(d1(1, 0) == 1);
    CHECK(d1(2, 0) == 0);

    const RationalMatrix d0 = boundary_matrix(closure({vs({0})}), 0);
    CHECK(d0.rows() == 1);
    CHECK(d0.cols() == 1);
    CHECK(d0(0, 0) == 1);

    CHECK(boundary_squares_to_zero(triangle));
    CHECK(boundary_squares_to_zero(simplex_faces(VertexSet::range(0, 6))));
    CHECK_THROWS_AS(boundary_matrix(triangle, -1), InputError);

    const FaceSet tet = simplex_faces(VertexSet::range(0, 4));
    for (int k = 1; k <= 3; ++k) {
        const RationalMatrix prod = boundary_matrix(tet, k - 1) * boundary_matrix(tet, k);
        CHECK(prod == RationalMatrix(prod.rows(), prod.cols()));
    }
}

TEST_CASE("reduced Betti numbers") {
    const FaceSet triangle = closure({vs({0, 1}), vs({0, 2}), vs({1, 2})});
    const BettiProfile b = reduced_betti(triangle);
    CHECK(b.at(-1) == 0);
    CHECK(b.at(0) == 0);
    CHECK(b.at(1) == 1);

    const FaceSet edges = closure({vs({0, 1}), vs({2, 3})});
    CHECK(reduced_betti(edges).at(0) == 1);
    CHECK(reduced_betti(edges).at(1) == 0);

    const BettiProfile simplex = reduced_betti(simplex_faces(VertexSet::range(0, 5)));
    for (auto x : simplex.values) {
        CHECK(x == 0);
    }

    // the empty complex {empty} has beta_{-1} = 1
    CHECK(reduced_betti(FaceSet{VertexSet{}}).at(-1) == 1);

    // boundary of the tetrahedron is a 2-sphere
    FaceSet sphere;
    for (VertexSet f : simplex_faces(VertexSet::range(0, 4))) {
        if (f.size() < 4) {
            sphere.push_back(f);
        }
    }
    const BettiProfile s2 = reduced_betti(sphere);
    CHECK(s2.at(0) == 0);
    CHECK(s2.at(1) == 0);
    CHECK(s2.at(2) == 1);

    // torus: 7-vertex triangulation, beta_1 = 2, beta_2 = 1
    std::vector<VertexSet> torus;
    for (int i = 0; i < 7; ++i) {
        torus.push_back(vs({i, (i + 1) % 7, (i + 3) % 7}));
        torus.push_back(vs({i, (i + 2) % 7, (i + 3) % 7}));
    }
    const BettiProfile t = reduced_betti(closure(torus));
    CHECK(t.at(0) == 0);
    CHECK(t.at(1) == 2);
    CHECK(t.at(2) == 1);
}

TEST_CASE("links") {
    const FaceSet triangle = closure({vs({0, 1}), vs({0, 2}), vs({1, 2})});
    CHECK(link(triangle, vs({0})) == FaceSet{VertexSet{}, vs({1}), vs({2})});
    CHECK(link(triangle, VertexSet{}) == triangle);
    CHECK(link(triangle, vs({0, 1})) == FaceSet{VertexSet{}});
    CHECK_THROWS_AS(link(triangle, vs({0, 1, 2})), InputError);
}

TEST_CASE("Cohen-Macaulay test") {
    const FaceSet triangle = closure({vs({0, 1}), vs({0, 2}), vs({1, 2})});
    CHECK(is_CM(triangle));

    const CMVerdict edges = is_CM(closure({vs({0, 1}), vs({2, 3})}));
    CHECK_FALSE(edges);
    CHECK(edges.pure);
    REQUIRE(edges.face);
    CHECK(edges.face->empty());
    CHECK(edges.degree == 0);

    const CMVerdict mixed = is_CM(closure({vs({0, 1}), vs({2})}));
    CHECK_FALSE(mixed);
    CHECK_FALSE(mixed.pure);

    // two triangles glued at a vertex: connected, but the link of that vertex is not
    const CMVerdict bowtie = is_CM(closure({vs({0, 1, 2}), vs({0, 3, 4})}));
    CHECK_FALSE(bowtie);
    REQUIRE(bowtie.face);
    CHECK(*bowtie.face == vs({0}));

    // spheres and balls are CM, the torus is not
    CHECK(is_CM(simplex_faces(VertexSet::range(0, 4))));
    std::vector<VertexSet> torus;
    for (int i = 0; i < 7; ++i) {
        torus.push_back(vs({i, (i + 1) % 7, (i + 3) % 7}));
        torus.push_back(vs({i, (i + 2) % 7, (i + 3) % 7}));
    }
    CHECK_FALSE(is_CM(closure(torus)));

    CHECK(is_CM(build_lambda(Instance({4, 3, 3}, {2, 2, 1}, 4))));
    CHECK(is_CM(FaceSet{VertexSet{}}));
}

TEST_CASE("Cohen-Macaulay test is invariant under relabeling") {
    const std::vector<std::vector<VertexSet>> cases{
        {vs({0, 1}), vs({0, 2}), vs({1, 2})},
        {vs({0, 1}), vs({2, 3})},
        {vs({0, 1, 2}), vs({0, 3, 4})},
        {vs({0, 1, 2}), vs({1, 2, 3}), vs({2, 3, 4})},
    };
    const std::vector<int> perm{4, 2, 0, 3, 1};
    for (const auto& c : cases) {
        const FaceSet f = closure(c);
        CHECK(static_cast<bool>(is_CM(f)) == static_cast<bool>(is_CM(relabel(f, perm))));
        CHECK(reduced_betti(f) == reduced_betti(relabel(f, perm)));
    }
}
