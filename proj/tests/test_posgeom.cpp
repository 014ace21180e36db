#include "qgeom/posgeom.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace {

using qgeom::ErrorCode;
using qgeom::Rational;
using qgeom::RationalMatrix;

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

// Leibniz expansion; independent of the elimination used by the library.
Rational leibniz(const std::vector<std::vector<Rational>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Rational term = inversions % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<std::vector<Rational>> rows_of(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j));
    return out;
}

Rational det3(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    return leibniz({a, b, c});
}

std::vector<Rational> row(const RationalMatrix& m, int i) { return rows_of(m)[i]; }

long long binomial(int n, int k) {
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// -- Plücker coordinates ------------------------------------------------------

TEST(Pluecker, ReferenceExamples) {
    RationalMatrix id(2, 4);
    id(0, 0) = 1;
    id(1, 1) = 1;
    const auto p = qgeom::pluecker(id);
    for (const auto& [s, v] : p.coords) EXPECT_EQ(v, (s == std::vector<int>{0, 1}) ? 1 : 0);

    const auto q = qgeom::pluecker(RationalMatrix{{1, 1, 1}});
    EXPECT_EQ(q.coords.size(), 3u);
    for (const auto& [s, v] : q.coords) EXPECT_EQ(v, 1);

    const auto c = qgeom::pluecker(qgeom::load_matrix(kData + "/c-example.mat"));
    EXPECT_EQ(c.at({0, 1}), 1);
    EXPECT_EQ(c.at({0, 2}), 2);
    EXPECT_EQ(c.at({1, 2}), 1);
}

TEST(Pluecker, LexicographicOrderAndCount) {
    const auto subs = qgeom::subsets(6, 3);
    EXPECT_EQ(static_cast<long long>(subs.size()), binomial(6, 3));
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
    EXPECT_EQ(subs.front(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(subs.back(), (std::vector<int>{3, 4, 5}));
}

TEST(Pluecker, RankDeficient) {
    expect_error(ErrorCode::RankDeficient, [] { qgeom::pluecker(RationalMatrix{{1, 2, 3}, {2, 4, 6}}); });
    expect_error(ErrorCode::RankDeficient, [] { qgeom::pluecker(RationalMatrix{{0, 0, 0}}); });
    expect_error(ErrorCode::RankDeficient, [] { qgeom::pluecker(RationalMatrix{{1}, {1}}); });
}

TEST(Pluecker, CoordinatesMatchLeibnizAndRelationsHold) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-5, 5);
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (int trial = 0; trial < 6; ++trial) {
                RationalMatrix C(k, n);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < n; ++j) C(i, j) = Rational(entry(rng), 1 + trial % 3);
                if (qgeom::rank(C) < k) continue;
                const auto p = qgeom::pluecker(C);
                for (const auto& s : qgeom::subsets(n, k))
                    EXPECT_EQ(p.at(s), leibniz(rows_of(C.select_cols(s))));
                EXPECT_TRUE(qgeom::plucker_relations_hold(p)) << "k=" << k << " n=" << n;
                ++checked;
            }
    EXPECT_GT(checked, 80);
}

TEST(Pluecker, RelationsDetectCorruption) {
    auto p = qgeom::pluecker(RationalMatrix{{1, 0, -1, 2}, {0, 1, 2, 3}});
    ASSERT_TRUE(qgeom::plucker_relations_hold(p));
    p.coords[{0, 1}] += 1;
    EXPECT_FALSE(qgeom::plucker_relations_hold(p));
}

// -- positivity ---------------------------------------------------------------

TEST(Positivity, ReferenceExamples) {
    const auto Z = qgeom::moment_curve(5, 4);
    EXPECT_TRUE(qgeom::is_totally_positive(Z));
    auto swapped = Z.select_rows({1, 0, 2, 3, 4});
    EXPECT_FALSE(qgeom::is_totally_positive(swapped));
    EXPECT_FALSE(qgeom::is_totally_positive(RationalMatrix{{0, 0, 0}}));
    EXPECT_FALSE(qgeom::is_totally_nonneg(RationalMatrix{{0, 0, 0}}));
}

TEST(Positivity, MomentCurveForAllSmallShapes) {
    for (int n = 1; n <= 10; ++n)
        for (int d = 1; d <= std::min(n, 5); ++d) EXPECT_TRUE(qgeom::is_totally_positive(qgeom::moment_curve(n, d))) << n << "x" << d;
}

TEST(Positivity, BundledPositiveC) {
    const auto C = qgeom::load_matrix(kData + "/c-pos-2x4.mat");
    EXPECT_TRUE(qgeom::is_totally_positive(C));
    EXPECT_TRUE(qgeom::is_totally_nonneg(C));
    const auto p = qgeom::pluecker(C);
    for (const auto& [s, v] : p.coords) EXPECT_GT(v, 0);
}

TEST(Positivity, RandomTnnIsTnn) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 6;
        const int k = 1 + trial % std::min(3, n);
        const auto C = qgeom::random_tnn(k, n, rng);
        const auto p = qgeom::pluecker(C);
        for (const auto& s : qgeom::subsets(n, k)) EXPECT_GE(leibniz(rows_of(C.select_cols(s))), 0);
        EXPECT_TRUE(qgeom::is_totally_nonneg(C));
        EXPECT_GT(p.coords.size(), 0u);
    }
}

// -- amplituhedron map ----------------------------------------------------------

TEST(Amplituhedron, ReferenceExamples) {
    const auto Z = qgeom::moment_curve(4, 3);
    for (int i = 0; i < 4; ++i) {
        RationalMatrix e(1, 4);
        e(0, i) = 1;
        EXPECT_EQ(qgeom::amplituhedron_point(e, Z).matrix(), Z.select_rows({i}));
    }
    const auto Y = qgeom::amplituhedron_point(RationalMatrix{{1, 1, 1, 1}}, Z).matrix();
    for (int j = 0; j < 3; ++j) {
        Rational s = 0;
        for (int i = 0; i < 4; ++i) s += Z(i, j);
        EXPECT_EQ(Y(0, j), s);
    }
    expect_error(ErrorCode::RankDeficient, [&] { qgeom::amplituhedron_point(RationalMatrix{{1, 1, 0, 0}, {2, 2, 0, 0}}, Z); });
    expect_error(ErrorCode::DimensionMismatch, [&] { qgeom::amplituhedron_point(RationalMatrix{{1, 1, 1}}, Z); });
    // Rows of C Z dependent although C has full rank.
    RationalMatrix Zlow(4, 3);
    for (int i = 0; i < 4; ++i) Zlow(i, 0) = i + 1;
    expect_error(ErrorCode::RankCollapse, [&] { qgeom::amplituhedron_point(RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}, Zlow); });
}

TEST(Amplituhedron, GlInvariance) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + trial % 3, m = 2, n = k + m + 1 + trial % 3;
        const auto Z = qgeom::moment_curve(n, k + m);
        const auto C = qgeom::random_tnn(k, n, rng);
        RationalMatrix G(k, k);
        do {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) G(i, j) = entry(rng);
        } while (qgeom::determinant(G) == 0);
        const auto a = qgeom::amplituhedron_point(C, Z), b = qgeom::amplituhedron_point(G * C, Z);
        EXPECT_TRUE(a.same_point(b));
        // Brackets scale by det G, so their signs flip together.
        const int sign = qgeom::determinant(G) > 0 ? 1 : -1;
        for (const auto& idx : qgeom::subsets(n, m)) {
            const Rational x = qgeom::bracket(a.matrix(), Z, idx), y = qgeom::bracket(b.matrix(), Z, idx);
            EXPECT_EQ(y, x * qgeom::determinant(G));
            EXPECT_EQ((y > 0) - (y < 0), sign * ((x > 0) - (x < 0)));
        }
    }
}

TEST(Amplituhedron, ImageDimensionIsKM) {
    std::mt19937 rng(29);
    for (int k = 1; k <= 2; ++k)
        for (int m = 1; m <= 3; ++m)
            for (int n = k + m; n <= 7; ++n) {
                const auto C = qgeom::random_tnn(k, n, rng);
                const auto Z = qgeom::moment_curve(n, k + m);
                EXPECT_EQ(qgeom::amplituhedron_image_dimension(C, Z), k * m) << k << " " << m << " " << n;
            }
}

// -- moment map -----------------------------------------------------------------

TEST(MomentMap, ReferenceExamples) {
    EXPECT_EQ(qgeom::moment_map(RationalMatrix{{1, 1, 1}}), (std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    EXPECT_EQ(qgeom::moment_map(RationalMatrix{{1, 0, 0}}), (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(qgeom::moment_map(RationalMatrix{{1, 2, 2}}), (std::vector<Rational>{Rational(1, 9), Rational(4, 9), Rational(4, 9)}));
    expect_error(ErrorCode::RankDeficient, [] { qgeom::moment_map(RationalMatrix{{0, 0}}); });
}

TEST(MomentMap, CauchyBinetOracle) {
    // sum_J p_J^2 = det(C C^T); the part avoiding i is the same with column i removed.
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 5, k = 1 + trial % 3;
        if (k >= n) continue;
        const auto C = qgeom::random_tnn(k, n, rng);
        const auto mu = qgeom::moment_map(C);
        const Rational total = leibniz(rows_of(C * C.transpose()));
        for (int i = 0; i < n; ++i) {
            std::vector<int> others;
            for (int j = 0; j < n; ++j)
                if (j != i) others.push_back(j);
            const auto Ci = C.select_cols(others);
            const Rational avoid = qgeom::rank(Ci) < k ? Rational(0) : leibniz(rows_of(Ci * Ci.transpose()));
            EXPECT_EQ(mu[i], (total - avoid) / total);
        }
    }
}

TEST(MomentMap, RandomTnnLandsInHypersimplex) {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 6;
        const int k = 1 + (trial / 6) % std::min(3, n - 1);
        const auto C = qgeom::random_tnn(k, n, rng);
        EXPECT_TRUE(qgeom::hypersimplex_contains(qgeom::moment_map(C), k, n)) << "trial " << trial;
    }
}

TEST(MomentMap, CoordinateSubspacesHitVertices) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            const auto verts = qgeom::hypersimplex_vertices(k, n);
            EXPECT_EQ(static_cast<long long>(verts.size()), binomial(n, k));
            for (const auto& s : qgeom::subsets(n, k)) {
                RationalMatrix C(k, n);
                for (int i = 0; i < k; ++i) C(i, s[i]) = Rational(i + 2, 3);  // any nonzero scaling
                const auto mu = qgeom::moment_map(C);
                std::vector<int> as_int;
                for (const auto& x : mu) as_int.push_back(static_cast<int>(x.convert_to<double>()));
                EXPECT_NE(std::find(verts.begin(), verts.end(), as_int), verts.end());
                for (std::size_t i = 0; i < mu.size(); ++i) EXPECT_EQ(mu[i], as_int[i]);
            }
        }
}

TEST(Hypersimplex, Membership) {
    EXPECT_TRUE(qgeom::hypersimplex_contains({Rational(1, 3), Rational(1, 3), Rational(1, 3)}, 1, 3));
    EXPECT_FALSE(qgeom::hypersimplex_contains({1, 1, 0}, 1, 3));
    EXPECT_FALSE(qgeom::hypersimplex_contains({Rational(3, 2), Rational(-1, 2), 0}, 1, 3));
    EXPECT_FALSE(qgeom::hypersimplex_contains({1, 0}, 1, 3));
    EXPECT_EQ(qgeom::hypersimplex_vertices(2, 4).size(), 6u);
}

// -- brackets and polygon forms -------------------------------------------------------

TEST(Bracket, ReferenceExamples) {
    const auto Z = qgeom::moment_curve(5, 3);
    EXPECT_EQ(qgeom::bracket(Z.select_rows({0}), Z, {0, 1}), 0);
    EXPECT_GT(qgeom::bracket(RationalMatrix(0, 3), Z, {0, 1, 2}), 0);
    const auto Y = qgeom::load_matrix(kData + "/y-interior-5.mat");
    for (const auto& b : qgeom::cyclic_brackets(Y, Z)) EXPECT_GT(b, 0);
    expect_error(ErrorCode::DimensionMismatch, [&] { qgeom::bracket(Y, Z, {0}); });
    expect_error(ErrorCode::DimensionMismatch, [&] { qgeom::bracket(Y, Z, {0, 9}); });
}

TEST(Bracket, MatchesLeibniz) {
    const auto Z = qgeom::moment_curve(6, 3);
    const RationalMatrix Y{{Rational(7, 2), 1, Rational(-3, 5)}};
    for (const auto& idx : qgeom::subsets(6, 2))
        EXPECT_EQ(qgeom::bracket(Y, Z, idx), det3(row(Y, 0), row(Z, idx[0]), row(Z, idx[1])));
}

TEST(PolygonTriangulations, CatalanCountsAndValidity) {
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 3; n <= 9; ++n) {
        const auto all = qgeom::polygon_triangulations(n);
        EXPECT_EQ(static_cast<long long>(all.size()), catalan[n - 2]) << n;
        for (const auto& t : all) EXPECT_NO_THROW(qgeom::check_polygon_triangulation(t, n));
        for (int apex = 0; apex < n; ++apex) EXPECT_NO_THROW(qgeom::check_polygon_triangulation(qgeom::fan_triangulation(n, apex), n));
    }
}

TEST(PolygonTriangulations, Rejections) {
    using T = qgeom::PolygonTriangulation;
    for (const T& bad : {T{{0, 1, 2}}, T{{0, 1, 2}, {0, 1, 2}}, T{{0, 1, 2}, {1, 2, 3}}, T{{0, 2, 3}, {0, 1, 4}},
                         T{{0, 1, 3}, {0, 2, 3}}, T{{0, 0, 1}, {0, 2, 3}}}) {
        expect_error(ErrorCode::NotATriangulation, [&] { qgeom::check_polygon_triangulation(bad, 4); });
    }
    // Crossing diagonals 0-2 and 1-3 in a hexagon.
    expect_error(ErrorCode::NotATriangulation,
                 [] { qgeom::check_polygon_triangulation({{0, 1, 2}, {0, 2, 5}, {1, 3, 4}, {2, 3, 4}}, 6); });
}

TEST(PolygonTriangulations, Parse) {
    EXPECT_EQ(qgeom::parse_polygon_triangulation("1,2,3;1,3,4"), (qgeom::PolygonTriangulation{{0, 1, 2}, {0, 2, 3}}));
    for (const char* bad : {"1,2", "1,2,x", "1,2,3;4", "1,2,3,4"})
        expect_error(ErrorCode::ParseError, [&] { qgeom::parse_polygon_triangulation(bad); });
}

Rational triangle_form(const std::vector<Rational>& Y, const std::vector<Rational>& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& c) {
    const Rational abc = det3(a, b, c);
    return abc * abc / (det3(Y, a, b) * det3(Y, b, c) * det3(Y, c, a));
}

TEST(PolygonForm, ReferenceExamples) {
    const auto Z3 = qgeom::moment_curve(3, 3);
    const auto Y3 = RationalMatrix{{1, 1, 1}} * Z3;
    EXPECT_EQ(qgeom::polygon_canonical_form(Z3, {{0, 1, 2}}, Y3),
              triangle_form(row(Y3, 0), row(Z3, 0), row(Z3, 1), row(Z3, 2)));

    const auto Z4 = qgeom::moment_curve(4, 3);
    const auto Y4 = RationalMatrix{{1, 1, 1, 1}} * Z4;
    EXPECT_EQ(qgeom::polygon_canonical_form(Z4, qgeom::parse_polygon_triangulation("1,2,3;1,3,4"), Y4),
              qgeom::polygon_canonical_form(Z4, qgeom::parse_polygon_triangulation("2,3,4;2,4,1"), Y4));

    const auto Z6 = qgeom::moment_curve(6, 3);
    std::mt19937 rng(41);
    const std::vector<qgeom::PolygonTriangulation> three = {qgeom::fan_triangulation(6, 0), qgeom::fan_triangulation(6, 3),
                                                            {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {0, 2, 4}}};
    for (int i = 0; i < 100; ++i) {
        const auto Y = qgeom::random_interior_point(Z6, rng);
        const Rational v = qgeom::polygon_canonical_form(Z6, three[0], Y);
        EXPECT_EQ(qgeom::polygon_canonical_form(Z6, three[1], Y), v);
        EXPECT_EQ(qgeom::polygon_canonical_form(Z6, three[2], Y), v);
    }
}

TEST(PolygonForm, ExternalReferencePointOracle) {
    // Signed cone decomposition from an arbitrary point X, not necessarily inside.
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int n = 3; n <= 8; ++n) {
        const auto Z = qgeom::moment_curve(n, 3);
        for (int trial = 0; trial < 10; ++trial) {
            const auto Y = qgeom::random_interior_point(Z, rng);
            std::vector<Rational> X;
            Rational sum = 0;
            bool degenerate = true;
            while (degenerate) {
                X = {Rational(entry(rng), 3), Rational(entry(rng), 2), Rational(entry(rng), 5)};
                degenerate = false;
                for (int i = 0; i < n && !degenerate; ++i) {
                    const auto a = row(Z, i), b = row(Z, (i + 1) % n);
                    degenerate = det3(X, a, b) == 0 || det3(row(Y, 0), X, a) == 0 || det3(row(Y, 0), X, b) == 0;
                }
            }
            sum = 0;
            for (int i = 0; i < n; ++i) sum += triangle_form(row(Y, 0), X, row(Z, i), row(Z, (i + 1) % n));
            EXPECT_EQ(qgeom::polygon_canonical_form(Z, qgeom::fan_triangulation(n), Y), sum) << "n=" << n;
        }
    }
}

TEST(PolygonForm, TriangulationIndependenceAndPositivity) {
    std::mt19937 rng(47);
    for (int n = 3; n <= 8; ++n) {
        const auto Z = qgeom::moment_curve(n, 3);
        const auto all = qgeom::polygon_triangulations(n);
        for (int i = 0; i < 10; ++i) {
            const auto Y = qgeom::random_interior_point(Z, rng);
            const Rational v = qgeom::polygon_canonical_form(Z, all.front(), Y);
            EXPECT_GT(v, 0);
            for (const auto& t : all) ASSERT_EQ(qgeom::polygon_canonical_form(Z, t, Y), v) << "n=" << n;
        }
    }
}

TEST(PolygonForm, RandomInteriorPointsAvoidChords) {
    std::mt19937 rng(53);
    for (int n = 3; n <= 8; ++n) {
        const auto Z = qgeom::moment_curve(n, 3);
        for (int i = 0; i < 200; ++i) {
            const auto Y = qgeom::random_interior_point(Z, rng);
            for (const auto& b : qgeom::cyclic_brackets(Y, Z)) ASSERT_GT(b, 0);
            for (int a = 0; a < n; ++a)
                for (int c = a + 2; c < n; ++c) ASSERT_NE(leibniz({row(Y, 0), row(Z, a), row(Z, c)}), 0) << n;
        }
    }
    // The row sum of the pentagon sits on the chord Z_1 Z_4.
    const auto Z = qgeom::moment_curve(5, 3);
    const auto centre = RationalMatrix{{1, 1, 1, 1, 1}} * Z;
    expect_error(ErrorCode::PointOnBoundary, [&] { qgeom::polygon_canonical_form(Z, qgeom::fan_triangulation(5), centre); });
}

TEST(PolygonForm, SimplePoleAtFacet) {
    const int n = 6;
    const auto Z = qgeom::moment_curve(n, 3);
    const auto Y0 = RationalMatrix{{1, 1, 1, 1, 1, 1}} * Z;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        RationalMatrix facet(1, 3);
        for (int c = 0; c < 3; ++c) facet(0, c) = (Z(i, c) + Z(j, c)) / 2;
        std::vector<double> products;
        for (int e : {10000, 100000, 1000000}) {
            const Rational t(1, e);
            RationalMatrix Y(1, 3);
            for (int c = 0; c < 3; ++c) Y(0, c) = (1 - t) * facet(0, c) + t * Y0(0, c);
            const Rational prod = qgeom::bracket(Y, Z, {i, j}) * qgeom::polygon_canonical_form(Z, qgeom::fan_triangulation(n), Y);
            products.push_back(prod.convert_to<double>());
        }
        EXPECT_NE(products.back(), 0.0);
        // The product approaches its limit linearly in t.
        EXPECT_NEAR(products[0] / products[1], 1.0, 0.01) << "facet " << i;
        EXPECT_NEAR(products[1] / products[2], 1.0, 0.01) << "facet " << i;
        EXPECT_LT(std::abs(products[1] / products[2] - 1), std::abs(products[0] / products[1] - 1));
    }
}

TEST(PolygonForm, BoundaryAndShapeErrors) {
    const auto Z = qgeom::moment_curve(4, 3);
    expect_error(ErrorCode::PointOnBoundary, [&] { qgeom::polygon_canonical_form(Z, qgeom::fan_triangulation(4), Z.select_rows({0})); });
    expect_error(ErrorCode::NotATriangulation, [&] { qgeom::polygon_canonical_form(Z, {{0, 1, 2}}, RationalMatrix{{4, 10, 30}}); });
    expect_error(ErrorCode::DimensionMismatch, [&] { qgeom::polygon_canonical_form(qgeom::moment_curve(4, 4), qgeom::fan_triangulation(4), RationalMatrix{{1, 1, 1, 1}}); });
}

// -- matrix files -----------------------------------------------------------------

TEST(MatrixFile, ParsesRationalsAndComments) {
    std::istringstream in("# C\n1/2, -3 ,+4\n\n 0, 6/4, -7/3  # tail\n");
    const auto m = qgeom::parse_matrix(in);
    EXPECT_EQ(m, (RationalMatrix{{Rational(1, 2), -3, 4}, {0, Rational(3, 2), Rational(-7, 3)}}));
    std::istringstream back(m.str());
    EXPECT_EQ(qgeom::parse_matrix(back), m);
}

TEST(MatrixFile, Errors) {
    const std::vector<std::pair<std::string, int>> cases = {
        {"1,2\n3\n", 2}, {"1,x\n", 1}, {"1/0\n", 1}, {"1,,2\n", 1}, {"1/\n", 1}, {"\n# only\n", 3}, {"1.5\n", 1}};
    for (const auto& [text, line] : cases) {
        std::istringstream in(text);
        try {
            qgeom::parse_matrix(in);
            ADD_FAILURE() << "accepted " << text;
        } catch (const qgeom::ParseFailure& e) {
            EXPECT_EQ(e.line(), line) << e.what();
        }
    }
    expect_error(ErrorCode::FileNotFound, [] { qgeom::load_matrix(kData + "/missing.mat"); });
}

TEST(MatrixFile, BundledMomentCurves) {
    for (int n = 4; n <= 8; ++n)
        EXPECT_EQ(qgeom::load_matrix(kData + "/z-moment-" + std::to_string(n) + ".mat"), qgeom::moment_curve(n, 3));
}

}  // namespace
