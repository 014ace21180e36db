#include "qgeom/triangulation.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace {

using qgeom::ErrorCode;
using qgeom::Perm4;
using qgeom::SurfaceTriangulation;
using qgeom::Triangulation;
using qgeom::TriangulationSpec;

template <typename F>
void expect_error(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "no error thrown";
    } catch (const qgeom::Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

const std::string kData = QGEOM_DATA_DIR;

void expect_counts(const Triangulation& t, int v, int e, int f, int n) {
    EXPECT_EQ(t.num_vertices(), v);
    EXPECT_EQ(t.num_edges(), e);
    EXPECT_EQ(t.num_triangles(), f);
    EXPECT_EQ(t.num_tets(), n);
}

TEST(Triangulation, BoundaryOf4SimplexCounts) {
    const auto t = qgeom::boundary_of_4_simplex();
    expect_counts(t, 5, 10, 10, 5);
    EXPECT_TRUE(t.is_closed());
    EXPECT_TRUE(t.is_orientable());
    EXPECT_EQ(t.euler_characteristic(), 0);
    for (int d : t.edge_triangle_degree()) EXPECT_EQ(d, 3);
}

TEST(Triangulation, DroppedGluingLeavesTwoBoundaryFaces) {
    TriangulationSpec spec = qgeom::boundary_of_4_simplex().to_spec();
    spec.gluings.pop_back();
    const auto t = Triangulation::build(spec);
    EXPECT_EQ(t.num_boundary_faces(), 2);
    EXPECT_FALSE(t.is_closed());
}

TEST(Triangulation, LoneTetrahedronIsAllBoundary) {
    TriangulationSpec spec;
    spec.num_tets = 1;
    const auto t = Triangulation::build(spec);
    expect_counts(t, 4, 6, 4, 1);
    EXPECT_EQ(t.num_boundary_faces(), 4);
    for (int e = 0; e < 6; ++e) EXPECT_TRUE(t.edge_on_boundary(e));
}

TEST(Triangulation, FaceGluedTwiceIsRejected) {
    TriangulationSpec spec;
    spec.num_tets = 2;
    spec.gluings.push_back({0, 0, 1, 0, Perm4(0, 1, 2, 3)});
    spec.gluings.push_back({0, 0, 1, 1, Perm4(1, 0, 2, 3)});
    expect_error(ErrorCode::NonInvolutiveGluing, [&] { Triangulation::build(spec); });
}

TEST(Triangulation, FaceGluedToItselfIsRejected) {
    TriangulationSpec spec;
    spec.num_tets = 1;
    spec.gluings.push_back({0, 0, 0, 0, Perm4(0, 2, 1, 3)});
    expect_error(ErrorCode::NonInvolutiveGluing, [&] { Triangulation::build(spec); });
}

TEST(Triangulation, MalformedGluings) {
    TriangulationSpec spec;
    spec.num_tets = 2;
    spec.gluings.push_back({0, 0, 2, 0, Perm4(0, 1, 2, 3)});
    expect_error(ErrorCode::MalformedGluing, [&] { Triangulation::build(spec); });

    spec.gluings = {{0, 0, 1, 1, Perm4(0, 1, 2, 3)}};  // perm sends face 0 to face 0, not 1
    expect_error(ErrorCode::MalformedGluing, [&] { Triangulation::build(spec); });

    expect_error(ErrorCode::MalformedGluing, [] { Triangulation::build(TriangulationSpec{}); });
}

TEST(Triangulation, SelfFoldedEdgeIsRejected) {
    // Face 3 (corners 012) onto face 2 (corners 013) swapping 0 and 1 reverses edge 01.
    TriangulationSpec spec;
    spec.num_tets = 1;
    spec.gluings.push_back({0, 3, 0, 2, Perm4(1, 0, 3, 2)});
    expect_error(ErrorCode::MalformedGluing, [&] { Triangulation::build(spec); });
}

TEST(Triangulation, OrientedFlagRejectsOrientationPreservingGluing) {
    TriangulationSpec spec = qgeom::boundary_of_4_simplex().to_spec();
    spec.oriented = true;
    bool all_reversing = true;
    for (const auto& g : spec.gluings) all_reversing = all_reversing && g.perm.sign() == -1;
    if (all_reversing) {
        EXPECT_NO_THROW(Triangulation::build(spec));
        // Compose one gluing with a swap inside the target face.
        auto& g = spec.gluings.front();
        const auto fc = qgeom::face_corners(g.f2);
        g.perm = Perm4::transposition(fc[0], fc[1]) * g.perm;
    }
    expect_error(ErrorCode::OrientationMismatch, [&] { Triangulation::build(spec); });
}

TEST(Triangulation, FormatRoundTrip) {
    for (const auto& t : {qgeom::boundary_of_4_simplex(), qgeom::load_triangulation(kData + "/s2xs1.tri"),
                          qgeom::pachner_14(qgeom::boundary_of_4_simplex(), 2)}) {
        const std::string text = qgeom::serialize(t);
        std::istringstream in(text);
        const auto back = Triangulation::build(qgeom::parse_triangulation(in));
        EXPECT_EQ(back, t);
        EXPECT_EQ(qgeom::serialize(back), text);
    }
}

TEST(Triangulation, ParserAcceptsCommentsAndSparseIds) {
    std::istringstream in("# two tets\ntet 10\n\ntet 7  # second\nglue 10 0 7 0 123\n");
    const auto spec = qgeom::parse_triangulation(in);
    ASSERT_EQ(spec.num_tets, 2);
    ASSERT_EQ(spec.gluings.size(), 1u);
    EXPECT_EQ(spec.gluings[0].t1, 0);
    EXPECT_EQ(spec.gluings[0].t2, 1);
}

TEST(Triangulation, ParseErrorsCarryPosition) {
    const std::vector<std::pair<std::string, int>> cases = {
        {"tet 0\nglu 0 0 0 1 230\n", 2},
        {"tet 0\ntet 0\n", 2},
        {"tet 0\ntet 1\nglue 0 0 1 0 12\n", 3},
        {"tet 0\ntet 1\nglue 0 0 1 0 129\n", 3},
        {"tet 0\nglue 0 0 5 0 123\n", 2},
        {"tet 0 extra\n", 1},
        {"tet\n", 1},
    };
    for (const auto& [text, line] : cases) {
        std::istringstream in(text);
        try {
            qgeom::parse_triangulation(in);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const qgeom::ParseFailure& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError);
            EXPECT_EQ(e.line(), line) << e.what();
        }
    }
}

TEST(Triangulation, MissingFile) {
    expect_error(ErrorCode::FileNotFound, [] { qgeom::load_triangulation(kData + "/no-such.tri"); });
}

TEST(Triangulation, BundledFiles) {
    const auto b = qgeom::load_triangulation(kData + "/boundary-4-simplex.tri");
    expect_counts(b, 5, 10, 10, 5);
    const auto s = qgeom::load_triangulation(kData + "/s2xs1.tri");
    EXPECT_EQ(s.num_tets(), 2);
    EXPECT_TRUE(s.is_closed());
    EXPECT_TRUE(s.is_orientable());
}

TEST(Pachner, TwoThreeCounts) {
    const auto t = qgeom::boundary_of_4_simplex();
    const auto sites = qgeom::pachner_23_sites(t);
    ASSERT_FALSE(sites.empty());
    const auto u = qgeom::pachner_23(t, sites.front());
    EXPECT_EQ(u.num_tets(), 6);
    EXPECT_EQ(u.num_vertices(), 5);
    EXPECT_EQ(u.num_edges(), 11);
    EXPECT_TRUE(u.is_closed());
    EXPECT_TRUE(u.is_orientable());
}

TEST(Pachner, OneFourCounts) {
    const auto u = qgeom::pachner_14(qgeom::boundary_of_4_simplex(), 0);
    expect_counts(u, 6, 14, 16, 8);
    EXPECT_TRUE(u.is_closed());
    EXPECT_TRUE(u.is_orientable());
}

TEST(Pachner, EdgeReachedInBothDirectionsStaysOneClass) {
    // One-vertex complex with a folded tetrahedron; tet 0 meets the same edge
    // as 0->2 and 3->0.
    std::istringstream in(
        "tet 0\ntet 1\ntet 2\nglue 0 0 1 0 213\nglue 0 1 1 1 203\nglue 0 2 1 3 012\n"
        "glue 0 3 2 2 013\nglue 1 2 2 3 012\nglue 2 0 2 1 023\n");
    const auto t = Triangulation::build(qgeom::parse_triangulation(in));
    expect_counts(t, 1, 4, 6, 3);
    EXPECT_EQ(t.edge_class(0, 1), t.edge_class(0, 2));
    const auto u = qgeom::pachner_23(t, 4);
    expect_counts(u, 1, 5, 8, 4);
    EXPECT_EQ(u.edge_class(0, 1), u.edge_class(0, 2));
}

TEST(Pachner, NotApplicable) {
    const auto t = qgeom::boundary_of_4_simplex();
    expect_error(ErrorCode::MoveNotApplicable, [&] { qgeom::pachner_23(t, 99); });
    expect_error(ErrorCode::MoveNotApplicable, [&] { qgeom::pachner_14(t, -1); });
    TriangulationSpec spec;
    spec.num_tets = 1;
    expect_error(ErrorCode::MoveNotApplicable, [&] { qgeom::pachner_23(Triangulation::build(spec), 0); });
}

TEST(Pachner, RandomSequencesKeepEulerCharacteristic) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto t = qgeom::boundary_of_4_simplex();
        for (int step = 0; step < 5; ++step) {
            const auto sites = qgeom::pachner_23_sites(t);
            if (rng() % 2 == 0 && !sites.empty()) {
                const int n = t.num_tets();
                t = qgeom::pachner_23(t, sites[rng() % sites.size()]);
                EXPECT_EQ(t.num_tets(), n + 1);
            } else {
                const int v = t.num_vertices();
                t = qgeom::pachner_14(t, static_cast<int>(rng() % static_cast<unsigned>(t.num_tets())));
                EXPECT_EQ(t.num_vertices(), v + 1);
            }
            EXPECT_TRUE(t.is_closed());
            EXPECT_TRUE(t.is_orientable());
            EXPECT_EQ(t.euler_characteristic(), 0);
        }
    }
}

TEST(Triangulation, DisjointUnionAddsCounts) {
    const auto a = qgeom::boundary_of_4_simplex();
    const auto b = qgeom::load_triangulation(kData + "/s2xs1.tri");
    const auto u = qgeom::disjoint_union(a, b);
    expect_counts(u, a.num_vertices() + b.num_vertices(), a.num_edges() + b.num_edges(),
                  a.num_triangles() + b.num_triangles(), a.num_tets() + b.num_tets());
}

TEST(Surface, TetrahedronBoundaryAndTorus) {
    const auto s = SurfaceTriangulation::tetrahedron_boundary();
    EXPECT_EQ(s.num_vertices(), 4);
    EXPECT_EQ(s.num_edges(), 6);
    EXPECT_EQ(s.genus(), 0);
    const auto t = SurfaceTriangulation::seven_vertex_torus();
    EXPECT_EQ(t.num_vertices(), 7);
    EXPECT_EQ(t.num_edges(), 21);
    EXPECT_EQ(t.num_triangles(), 14);
    EXPECT_EQ(t.genus(), 1);
}

TEST(Surface, Validation) {
    expect_error(ErrorCode::MalformedGluing, [] {
        SurfaceTriangulation::build({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 1);
    });
    // Open disc: edges used once.
    expect_error(ErrorCode::MalformedGluing, [] { SurfaceTriangulation::build({{0, 1, 2}, {0, 2, 3}}); });
    expect_error(ErrorCode::MalformedGluing, [] { SurfaceTriangulation::build({{0, 0, 1}}); });
}

TEST(Surface, FormatRoundTripAndBundledFiles) {
    const auto sphere = qgeom::load_surface(kData + "/sphere.surf");
    const auto torus = qgeom::load_surface(kData + "/torus.surf");
    EXPECT_EQ(sphere.genus(), 0);
    EXPECT_EQ(torus.genus(), 1);
    EXPECT_EQ(torus.num_triangles(), 14);
    for (const auto& s : {sphere, torus}) {
        std::istringstream in(qgeom::serialize(s));
        const auto back = qgeom::parse_surface(in);
        EXPECT_EQ(back.triangles(), s.triangles());
    }
    std::istringstream bad("tri 0 1\n");
    EXPECT_THROW(qgeom::parse_surface(bad), qgeom::ParseFailure);
}

TEST(Prism, SphereTimesInterval) {
    const auto p = qgeom::prism(SurfaceTriangulation::tetrahedron_boundary());
    EXPECT_EQ(p.tri.num_tets(), 12);
    EXPECT_EQ(p.tri.num_vertices(), 8);
    EXPECT_TRUE(p.tri.is_orientable());
    const auto comps = qgeom::boundary_components(p.tri);
    ASSERT_EQ(comps.size(), 2u);
    for (const auto& c : comps) {
        EXPECT_EQ(c.num_triangles(), 4);
        EXPECT_EQ(c.genus(), 0);
    }
    for (std::size_t e = 0; e < p.bottom_edge.size(); ++e) {
        EXPECT_TRUE(p.tri.edge_on_boundary(p.bottom_edge[e]));
        EXPECT_TRUE(p.tri.edge_on_boundary(p.top_edge[e]));
        EXPECT_NE(p.bottom_edge[e], p.top_edge[e]);
    }
}

TEST(Prism, TorusTimesInterval) {
    const auto p = qgeom::prism(SurfaceTriangulation::seven_vertex_torus());
    EXPECT_EQ(p.tri.num_tets(), 42);
    const auto comps = qgeom::boundary_components(p.tri);
    ASSERT_EQ(comps.size(), 2u);
    for (const auto& c : comps) {
        EXPECT_EQ(c.num_triangles(), 14);
        EXPECT_EQ(c.genus(), 1);
    }
    // Interior edges: the vertical ones and one diagonal per square.
    int interior = 0;
    for (int e = 0; e < p.tri.num_edges(); ++e) interior += !p.tri.edge_on_boundary(e);
    EXPECT_EQ(interior, 7 + 21);
}

}  // namespace
