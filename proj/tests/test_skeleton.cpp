#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "orient/skeleton.hpp"

using namespace orient;
using namespace orient::skel;

namespace {

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// faces of k wholly inside the given vertex set, as a selection
SubcomplexSelection select_within(const SimplicialComplex& k, const std::set<int>& vertices) {
    SubcomplexSelection out;
    for (const auto& f : k.all_faces())
        if (std::all_of(f.begin(), f.end(), [&](int v) { return vertices.count(v) > 0; }))
            out.faces.push_back(f);
    return out;
}

std::set<int> end_vertices(const SimplicialComplex& prism, const std::string& suffix) {
    std::set<int> out;
    for (std::size_t i = 0; i < prism.vertex_labels().size(); ++i)
        if (prism.vertex_labels()[i].ends_with(suffix)) out.insert(int(i));
    return out;
}

} // namespace

TEST_CASE("library complexes have the expected face counts") {
    auto tri = library::triangle();
    CHECK(tri.dimension() == 2);
    CHECK(tri.face_count(0) == 3);
    CHECK(tri.euler_characteristic() == 1);

    auto oct = library::octahedron();
    CHECK(oct.face_count(0) == 6);
    CHECK(oct.face_count(1) == 12);
    CHECK(oct.face_count(2) == 8);
    CHECK(oct.euler_characteristic() == 2);

    auto ico = library::icosahedron();
    CHECK(ico.face_count(0) == 12);
    CHECK(ico.face_count(1) == 30);
    CHECK(ico.face_count(2) == 20);
    CHECK(ico.euler_characteristic() == 2);

    auto s3 = library::boundary_4_simplex();
    CHECK(s3.face_count(0) == 5);
    CHECK(s3.face_count(1) == 10);
    CHECK(s3.face_count(2) == 10);
    CHECK(s3.face_count(3) == 5);
    CHECK(s3.euler_characteristic() == 0);

    auto torus = library::torus_18();
    CHECK(torus.face_count(0) == 9);
    CHECK(torus.face_count(1) == 27);
    CHECK(torus.face_count(2) == 18);
    CHECK(torus.euler_characteristic() == 0);

    CHECK_THROWS_AS(library::by_name("projective-plane"), UnsupportedModelError);
}

TEST_CASE("containment-redundant input simplices are dropped") {
    auto k = SimplicialComplex::from_labels({{"1", "2", "3"}, {"1", "2"}, {"3"}});
    CHECK(k.maximal_simplices().size() == 1);
    CHECK(k.pure());
}

TEST_CASE("barycentric subdivision of an edge: 3 vertices, 2 edges") {
    auto edge = SimplicialComplex::from_labels({{"1", "2"}});
    auto sub = barycentric_subdivision(edge);
    CHECK(sub.complex.face_count(0) == 3);
    CHECK(sub.complex.face_count(1) == 2);
}

TEST_CASE("barycentric subdivision cell counts are (k+1)! per cell") {
    auto tri_sub = barycentric_subdivision(library::triangle());
    CHECK(tri_sub.complex.face_count(2) == factorial(3));

    auto oct_sub = barycentric_subdivision(library::octahedron());
    CHECK(oct_sub.complex.face_count(2) == 8 * factorial(3));

    auto s3_sub = barycentric_subdivision(library::boundary_4_simplex());
    CHECK(s3_sub.complex.face_count(3) == 5 * factorial(4));
}

TEST_CASE("barycentric subdivision preserves the euler characteristic") {
    for (const auto& name : library::names()) {
        auto k = library::by_name(name);
        auto sub = barycentric_subdivision(k);
        CHECK(sub.complex.euler_characteristic() == k.euler_characteristic());
    }
}

TEST_CASE("subdividing twice stays consistent") {
    auto sub1 = barycentric_subdivision(library::triangle());
    auto sub2 = barycentric_subdivision(sub1.complex);
    CHECK(sub2.complex.face_count(2) == 36);
    CHECK(sub2.complex.euler_characteristic() == 1);
}

TEST_CASE("barycentre tagging matches vertex labels") {
    auto sub = barycentric_subdivision(library::triangle());
    for (std::size_t v = 0; v < sub.complex.vertex_labels().size(); ++v) {
        const Face& f = sub.barycentre_of[v];
        CHECK(int(f.size()) - 1 == sub.face_dimension(int(v)));
    }
    long verts = 0, edges = 0, tris = 0;
    for (std::size_t v = 0; v < sub.barycentre_of.size(); ++v) {
        int d = sub.face_dimension(int(v));
        verts += d == 0;
        edges += d == 1;
        tris += d == 2;
    }
    CHECK(verts == 3);
    CHECK(edges == 3);
    CHECK(tris == 1);
}

TEST_CASE("relative skeleton: absolute mode") {
    auto oct = library::octahedron();
    auto verts = relative_skeleton(oct, 0);
    CHECK(verts.faces.size() == 6);

    auto tri = library::triangle();
    auto one_skel = relative_skeleton(tri, 1);
    CHECK(one_skel.count_of_dimension(0) == 3);
    CHECK(one_skel.count_of_dimension(1) == 3);

    auto s3 = library::boundary_4_simplex();
    auto sk1 = relative_skeleton(s3, 1);
    CHECK(sk1.count_of_dimension(0) == 5);
    CHECK(sk1.count_of_dimension(1) == 10);

    CHECK_THROWS_AS(relative_skeleton(tri, 3), RangeError);
    CHECK_THROWS_AS(relative_skeleton(tri, -1), RangeError);
}

TEST_CASE("relative skeleton excludes top-dimension faces inside the boundary") {
    // square prism over an edge; ends are the two boundary edges
    auto edge = SimplicialComplex::from_labels({{"1", "2"}});
    auto prism = prism_triangulation(edge);
    // the boundary is each end separately; their union would admit the diagonal
    auto bottom = select_within(prism, end_vertices(prism, "_0"));
    auto top = select_within(prism, end_vertices(prism, "_1"));
    SubcomplexSelection ends;
    ends.faces = bottom.faces;
    ends.faces.insert(ends.faces.end(), top.faces.begin(), top.faces.end());
    std::sort(ends.faces.begin(), ends.faces.end());
    auto rel = relative_skeleton(prism, 1, ends);
    CHECK(rel.count_of_dimension(0) == 4);
    // of the 5 edges (two ends, two verticals, one diagonal), the ends drop out
    CHECK(rel.count_of_dimension(1) == 3);
}

TEST_CASE("dual skeleton of the icosahedron is the dodecahedron graph") {
    auto ico = library::icosahedron();
    auto sub = barycentric_subdivision(ico);
    auto dual = dual_skeleton(sub, 2);

    // 20 face barycentres + 30 edge barycentres, 60 subdivision half-edges
    CHECK(dual.count_of_dimension(0) == 50);
    CHECK(dual.count_of_dimension(1) == 60);
    CHECK(dual.count_of_dimension(2) == 0);

    // one dual edge per original edge
    CHECK(dual_cell_count(ico, 1) == 30);
    // each dual edge consists of the two half-edges through one edge barycentre
    for (const auto& f : ico.faces_of_dimension(1)) {
        long halves = 0;
        for (const auto& cell : dual.faces) {
            if (cell.size() != 2) continue;
            for (int v : cell)
                if (sub.barycentre_of[std::size_t(v)] == f) ++halves;
        }
        CHECK(halves == 2);
    }
    // twelve pentagons: every original vertex has five incident faces
    CHECK(dual_cell_count(ico, 2) == 12);

    // disjoint from the 12 original vertices (the 0-skeleton)
    auto zero_skel = embed_in_subdivision(sub, relative_skeleton(ico, 0));
    auto dual_verts = dual.vertex_set();
    for (int v : zero_skel.vertex_set()) CHECK(dual_verts.count(v) == 0);
}

TEST_CASE("dual skeleton of a single triangle with d=1 is the barycentre") {
    auto sub = barycentric_subdivision(library::triangle());
    auto dual = dual_skeleton(sub, 1);
    CHECK(dual.faces.size() == 1);
    CHECK(dual.count_of_dimension(0) == 1);
    CHECK(sub.face_dimension(dual.faces[0][0]) == 2);
}

TEST_CASE("dual skeleton of the 3-sphere model with d=2") {
    auto s3 = library::boundary_4_simplex();
    auto sub = barycentric_subdivision(s3);
    auto dual = dual_skeleton(sub, 2);
    CHECK(dual.count_of_dimension(0) == 10 + 5);
    CHECK(dual.count_of_dimension(1) == 20); // four triangles per tetrahedron
    CHECK(dual.count_of_dimension(2) == 0);

    auto one_skel = embed_in_subdivision(sub, relative_skeleton(s3, 1));
    auto dual_verts = dual.vertex_set();
    for (int v : one_skel.vertex_set()) CHECK(dual_verts.count(v) == 0);
}

TEST_CASE("dual and relative skeletons are disjoint at complementary dimensions") {
    for (const auto& name : library::names()) {
        auto k = library::by_name(name);
        auto sub = barycentric_subdivision(k);
        const int n = k.dimension();
        for (int d = 1; d <= n; ++d) {
            auto dual = dual_skeleton(sub, d);
            auto skel = embed_in_subdivision(sub, relative_skeleton(k, n - d));
            for (const auto& f : skel.faces) CHECK_FALSE(dual.contains(f));
            auto dual_verts = dual.vertex_set();
            for (int v : skel.vertex_set()) CHECK(dual_verts.count(v) == 0);
            // dimension bounds
            for (const auto& f : dual.faces) CHECK(int(f.size()) - 1 <= d - 1);
            for (const auto& f : skel.faces) CHECK(int(f.size()) - 1 <= n - d);
        }
    }
}

TEST_CASE("every subdivision cell outside the skeleton has a face in the dual core") {
    auto k = library::octahedron();
    auto sub = barycentric_subdivision(k);
    const int n = k.dimension();
    for (int d = 1; d <= n; ++d) {
        auto dual = dual_skeleton(sub, d);
        auto skel = embed_in_subdivision(sub, relative_skeleton(k, n - d));
        for (const auto& f : sub.complex.all_faces()) {
            if (skel.contains(f)) continue;
            Face core;
            for (int v : f)
                if (sub.face_dimension(v) >= n - d + 1) core.push_back(v);
            CHECK(!core.empty());
            CHECK(dual.contains(core));
        }
    }
}

TEST_CASE("dual skeleton rejects non-pure complexes and bad parameters") {
    auto impure = SimplicialComplex::from_labels({{"1", "2", "3"}, {"4", "5"}});
    CHECK_FALSE(impure.pure());
    auto sub = barycentric_subdivision(impure);
    CHECK_THROWS_AS(dual_skeleton(sub, 1), PurityError);

    auto tri_sub = barycentric_subdivision(library::triangle());
    CHECK_THROWS_AS(dual_skeleton(tri_sub, 0), RangeError);
    CHECK_THROWS_AS(dual_skeleton(tri_sub, 3), RangeError);
    CHECK_THROWS_AS(prism_triangulation(impure), PurityError);
}

TEST_CASE("prism triangulation: staircase counts and end restrictions") {
    auto edge = SimplicialComplex::from_labels({{"1", "2"}});
    auto square = prism_triangulation(edge);
    CHECK(square.face_count(1 + 1) == 2);

    auto tri_prism = prism_triangulation(library::triangle());
    CHECK(tri_prism.face_count(3) == 3);

    auto oct = library::octahedron();
    auto oct_prism = prism_triangulation(oct);
    CHECK(oct_prism.face_count(3) == long(oct.maximal_simplices().size()) * 3);
    CHECK(prism_end(oct_prism, 0) == oct);
    CHECK(prism_end(oct_prism, 1) == oct);

    // prism over the torus: chi of a product with an interval is unchanged
    auto torus = library::torus_18();
    auto torus_prism = prism_triangulation(torus);
    CHECK(torus_prism.euler_characteristic() == 0);
    CHECK(prism_end(torus_prism, 0) == torus);
}

TEST_CASE("text import/export round trip and determinism") {
    for (const auto& name : library::names()) {
        auto k = library::by_name(name);
        std::string text = write_complex(k);
        CHECK(parse_complex(text) == k);
        CHECK(write_complex(parse_complex(text)) == text);
    }
    // comments and blank lines are accepted
    auto k = parse_complex("# a triangle\n\n1 2 3\n");
    CHECK(k == library::triangle());
}

TEST_CASE("parse errors carry line information") {
    try {
        parse_complex("1 2 3\n4 4 5\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK_THROWS_AS(parse_complex("a|b c\n"), ParseError);
}
