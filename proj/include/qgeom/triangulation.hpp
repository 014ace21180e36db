// Triangulated 3-manifolds as glued tetrahedra (pseudo-triangulations allowed),
// Pachner moves, closed surfaces and the product construction surface x [-1,1].
//
// Face f of a tetrahedron is the face opposite corner f. A gluing of face f1
// of t1 to face f2 of t2 is a permutation of {0,1,2,3} sending f1 -> f2 and
// the corners of face f1 onto the corners of face f2.
#pragma once

#include "qgeom/error.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qgeom {

class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d) : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                                        static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    constexpr int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }

    constexpr Perm4 inverse() const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return p;
    }

    /// (this o other)(i) = this[other[i]]
    constexpr Perm4 operator*(const Perm4& other) const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img_[i] = img_[other.img_[i]];
        return p;
    }

    constexpr int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) s = -s;
        return s;
    }

    constexpr bool is_bijection() const {
        int mask = 0;
        for (auto v : img_) mask |= (v < 4) ? (1 << v) : 16;
        return mask == 15;
    }

    static constexpr Perm4 transposition(int i, int j) {
        Perm4 p;
        p.img_[i] = static_cast<std::uint8_t>(j);
        p.img_[j] = static_cast<std::uint8_t>(i);
        return p;
    }

    bool operator==(const Perm4&) const = default;

private:
    std::array<std::uint8_t, 4> img_;
};

/// Local edge index of the corner pair {c, d}: 01 02 03 12 13 23 -> 0..5.
constexpr int local_edge(int c, int d) {
    if (c > d) std::swap(c, d);
    constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[c][d];
}

constexpr std::array<std::array<int, 2>, 6> kEdgeCorners = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Corners of face f in increasing order.
constexpr std::array<int, 3> face_corners(int f) {
    std::array<int, 3> out{};
    int k = 0;
    for (int c = 0; c < 4; ++c)
        if (c != f) out[static_cast<std::size_t>(k++)] = c;
    return out;
}

struct FaceGluing {
    int tet = -1;  // -1: boundary face
    Perm4 perm;

    bool glued() const { return tet >= 0; }
    bool operator==(const FaceGluing&) const = default;
};

/// One glue record: face f1 of t1 onto face f2 of t2.
struct GlueSpec {
    int t1, f1, t2, f2;
    Perm4 perm;
};

struct TriangulationSpec {
    int num_tets = 0;
    std::vector<GlueSpec> gluings;
    bool oriented = false;
};

struct TriangleClass {
    std::array<int, 2> tet = {-1, -1};
    std::array<int, 2> face = {-1, -1};
    std::array<int, 3> edges{};  // edge classes of the face edges 01, 12, 02 (in face-corner order)
    bool boundary = false;
};

/// Immutable glued-tetrahedra complex with derived vertex, edge and triangle classes.
class Triangulation {
public:
    static Triangulation build(const TriangulationSpec& spec) {
        if (spec.num_tets <= 0) throw Error(ErrorCode::MalformedGluing, "triangulation has no tetrahedra");
        std::vector<std::array<FaceGluing, 4>> adj(static_cast<std::size_t>(spec.num_tets));
        for (const GlueSpec& g : spec.gluings) {
            const auto label = "glue " + std::to_string(g.t1) + " " + std::to_string(g.f1) + " " +
                               std::to_string(g.t2) + " " + std::to_string(g.f2);
            if (g.t1 < 0 || g.t1 >= spec.num_tets || g.t2 < 0 || g.t2 >= spec.num_tets || g.f1 < 0 || g.f1 > 3 ||
                g.f2 < 0 || g.f2 > 3)
                throw Error(ErrorCode::MalformedGluing, label + ": index out of range");
            if (!g.perm.is_bijection() || g.perm[g.f1] != g.f2)
                throw Error(ErrorCode::MalformedGluing, label + ": corner map is not a face bijection");
            if (g.t1 == g.t2 && g.f1 == g.f2)
                throw Error(ErrorCode::NonInvolutiveGluing, label + ": face glued to itself");
            if (adj[g.t1][g.f1].glued() || adj[g.t2][g.f2].glued())
                throw Error(ErrorCode::NonInvolutiveGluing, label + ": face already glued");
            adj[g.t1][g.f1] = {g.t2, g.perm};
            adj[g.t2][g.f2] = {g.t1, g.perm.inverse()};
        }
        return from_adjacency(std::move(adj), spec.oriented);
    }

    /// Builds the complex whose tetrahedra are the given vertex quadruples,
    /// gluing faces that carry the same vertex triple.
    static Triangulation from_simplices(const std::vector<std::array<int, 4>>& simplices) {
        std::map<std::array<int, 3>, std::vector<std::pair<int, int>>> by_face;
        for (int t = 0; t < static_cast<int>(simplices.size()); ++t)
            for (int f = 0; f < 4; ++f) {
                std::array<int, 3> key{};
                int k = 0;
                for (int c : face_corners(f)) key[static_cast<std::size_t>(k++)] = simplices[t][c];
                std::sort(key.begin(), key.end());
                by_face[key].emplace_back(t, f);
            }
        TriangulationSpec spec;
        spec.num_tets = static_cast<int>(simplices.size());
        for (const auto& [key, slots] : by_face) {
            if (slots.size() > 2) throw Error(ErrorCode::MalformedGluing, "a triangle lies in more than two tetrahedra");
            if (slots.size() < 2) continue;
            const auto [t1, f1] = slots[0];
            const auto [t2, f2] = slots[1];
            int img[4];
            img[f1] = f2;
            for (int c : face_corners(f1))
                for (int d : face_corners(f2))
                    if (simplices[t1][c] == simplices[t2][d]) img[c] = d;
            spec.gluings.push_back({t1, f1, t2, f2, Perm4(img[0], img[1], img[2], img[3])});
        }
        return build(spec);
    }

    static Triangulation from_adjacency(std::vector<std::array<FaceGluing, 4>> adj, bool oriented) {
        Triangulation t;
        t.adj_ = std::move(adj);
        t.oriented_ = oriented;
        t.derive();
        return t;
    }

    int num_tets() const { return static_cast<int>(adj_.size()); }
    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return num_edges_; }
    int num_triangles() const { return static_cast<int>(triangles_.size()); }
    int euler_characteristic() const { return num_vertices_ - num_edges_ + num_triangles() - num_tets(); }
    int num_boundary_faces() const { return num_boundary_faces_; }
    bool is_closed() const { return num_boundary_faces_ == 0; }
    bool is_orientable() const { return orientable_; }
    bool declared_oriented() const { return oriented_; }

    const FaceGluing& gluing(int tet, int face) const { return adj_[tet][face]; }
    const std::vector<std::array<FaceGluing, 4>>& adjacency() const { return adj_; }

    int vertex_class(int tet, int corner) const { return tet_vertex_[tet][corner]; }
    int edge_class(int tet, int local) const { return tet_edge_[tet][local]; }
    int triangle_class(int tet, int face) const { return tet_triangle_[tet][face]; }
    const TriangleClass& triangle(int i) const { return triangles_[i]; }
    const std::vector<TriangleClass>& triangles() const { return triangles_; }
    bool edge_on_boundary(int e) const { return edge_boundary_[e]; }
    bool vertex_on_boundary(int v) const { return vertex_boundary_[v]; }

    /// Number of triangle slots incident to each edge class (with multiplicity).
    std::vector<int> edge_triangle_degree() const {
        std::vector<int> deg(static_cast<std::size_t>(num_edges_), 0);
        for (const auto& tc : triangles_)
            for (int e : tc.edges) ++deg[e];
        return deg;
    }

    /// Spec whose build() reproduces this triangulation.
    TriangulationSpec to_spec() const {
        TriangulationSpec spec;
        spec.num_tets = num_tets();
        spec.oriented = oriented_;
        for (int t = 0; t < num_tets(); ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = adj_[t][f];
                if (!g.glued()) continue;
                const int f2 = g.perm[f];
                if (std::make_pair(t, f) < std::make_pair(g.tet, f2)) spec.gluings.push_back({t, f, g.tet, f2, g.perm});
            }
        return spec;
    }

    bool operator==(const Triangulation& o) const { return adj_ == o.adj_ && oriented_ == o.oriented_; }

private:
    struct UnionFind {
        std::vector<int> parent;
        explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
        int find(int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        }
        void unite(int a, int b) { parent[find(a)] = find(b); }
    };

    void derive() {
        const int T = num_tets();
        for (int t = 0; t < T; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = adj_[t][f];
                if (!g.glued()) continue;
                if (g.tet >= T) throw Error(ErrorCode::MalformedGluing, "gluing to missing tetrahedron");
                const auto& back = adj_[g.tet][g.perm[f]];
                if (back.tet != t || back.perm != g.perm.inverse())
                    throw Error(ErrorCode::NonInvolutiveGluing, "gluing of tet " + std::to_string(t) + " face " +
                                                                    std::to_string(f) + " is not reciprocated");
            }

        // Vertex classes.
        UnionFind uv(4 * T);
        for (int t = 0; t < T; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = adj_[t][f];
                if (!g.glued()) continue;
                for (int c : face_corners(f)) uv.unite(4 * t + c, 4 * g.tet + g.perm[c]);
            }
        tet_vertex_.assign(static_cast<std::size_t>(T), {});
        num_vertices_ = label_classes(uv, 4 * T, [&](int slot, int cls) { tet_vertex_[slot / 4][slot % 4] = cls; });

        // Directed edges: slot 12 t + 2 local + (0: low->high, 1: high->low).
        UnionFind ud(12 * T);
        auto directed = [](int t, int c, int d) { return 12 * t + 2 * local_edge(c, d) + (c < d ? 0 : 1); };
        for (int t = 0; t < T; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = adj_[t][f];
                if (!g.glued()) continue;
                for (int c : face_corners(f))
                    for (int d : face_corners(f))
                        if (c != d) ud.unite(directed(t, c, d), directed(g.tet, g.perm[c], g.perm[d]));
            }
        for (int t = 0; t < T; ++t)
            for (int k = 0; k < 6; ++k)
                if (ud.find(12 * t + 2 * k) == ud.find(12 * t + 2 * k + 1))
                    throw Error(ErrorCode::MalformedGluing,
                                "edge " + std::to_string(k) + " of tet " + std::to_string(t) + " is identified with its reverse");
        // Undirected classes come straight from the gluings: a directed root
        // only names one orientation of its edge.
        UnionFind ue(6 * T);
        for (int t = 0; t < T; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = adj_[t][f];
                if (!g.glued()) continue;
                for (int c : face_corners(f))
                    for (int d : face_corners(f))
                        if (c < d) ue.unite(6 * t + local_edge(c, d), 6 * g.tet + local_edge(g.perm[c], g.perm[d]));
            }
        tet_edge_.assign(static_cast<std::size_t>(T), {});
        num_edges_ = label_classes(ue, 6 * T, [&](int slot, int cls) { tet_edge_[slot / 6][slot % 6] = cls; });

        // Triangles.
        tet_triangle_.assign(static_cast<std::size_t>(T), {-1, -1, -1, -1});
        triangles_.clear();
        num_boundary_faces_ = 0;
        for (int t = 0; t < T; ++t)
            for (int f = 0; f < 4; ++f) {
                if (tet_triangle_[t][f] >= 0) continue;
                TriangleClass tc;
                tc.tet[0] = t;
                tc.face[0] = f;
                const auto fc = face_corners(f);
                tc.edges = {tet_edge_[t][local_edge(fc[0], fc[1])], tet_edge_[t][local_edge(fc[1], fc[2])],
                            tet_edge_[t][local_edge(fc[0], fc[2])]};
                const auto& g = adj_[t][f];
                tet_triangle_[t][f] = static_cast<int>(triangles_.size());
                if (g.glued()) {
                    tc.tet[1] = g.tet;
                    tc.face[1] = g.perm[f];
                    tet_triangle_[g.tet][g.perm[f]] = static_cast<int>(triangles_.size());
                } else {
                    tc.boundary = true;
                    ++num_boundary_faces_;
                }
                triangles_.push_back(tc);
            }

        edge_boundary_.assign(static_cast<std::size_t>(num_edges_), false);
        vertex_boundary_.assign(static_cast<std::size_t>(num_vertices_), false);
        for (const auto& tc : triangles_) {
            if (!tc.boundary) continue;
            for (int e : tc.edges) edge_boundary_[e] = true;
            for (int c : face_corners(tc.face[0])) vertex_boundary_[tet_vertex_[tc.tet[0]][c]] = true;
        }

        orientable_ = compute_orientability();
        if (oriented_) {
            for (int t = 0; t < T; ++t)
                for (int f = 0; f < 4; ++f)
                    if (adj_[t][f].glued() && adj_[t][f].perm.sign() != -1)
                        throw Error(ErrorCode::OrientationMismatch, "gluing of tet " + std::to_string(t) + " face " +
                                                                        std::to_string(f) + " preserves corner orientation");
        }
        if (is_closed() && euler_characteristic() != 0)
            throw Error(ErrorCode::MalformedGluing,
                        "closed complex has V - E + F - T = " + std::to_string(euler_characteristic()));
    }

    template <typename Assign>
    static int label_classes(UnionFind& uf, int n, Assign assign) {
        std::vector<int> label(static_cast<std::size_t>(n), -1);
        int next = 0;
        for (int s = 0; s < n; ++s) {
            const int root = uf.find(s);
            if (label[root] < 0) label[root] = next++;
            assign(s, label[root]);
        }
        return next;
    }

    bool compute_orientability() const {
        std::vector<int> orient(adj_.size(), 0);
        for (std::size_t start = 0; start < adj_.size(); ++start) {
            if (orient[start]) continue;
            orient[start] = 1;
            std::vector<int> stack = {static_cast<int>(start)};
            while (!stack.empty()) {
                const int t = stack.back();
                stack.pop_back();
                for (int f = 0; f < 4; ++f) {
                    const auto& g = adj_[t][f];
                    if (!g.glued()) continue;
                    const int want = -orient[t] * g.perm.sign();
                    if (orient[g.tet] == 0) {
                        orient[g.tet] = want;
                        stack.push_back(g.tet);
                    } else if (orient[g.tet] != want) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    std::vector<std::array<FaceGluing, 4>> adj_;
    bool oriented_ = false;
    bool orientable_ = true;
    int num_vertices_ = 0;
    int num_edges_ = 0;
    int num_boundary_faces_ = 0;
    std::vector<std::array<int, 4>> tet_vertex_;
    std::vector<std::array<int, 6>> tet_edge_;
    std::vector<std::array<int, 4>> tet_triangle_;
    std::vector<TriangleClass> triangles_;
    std::vector<bool> edge_boundary_;
    std::vector<bool> vertex_boundary_;
};

/// Boundary of the 4-simplex: tetrahedron i omits vertex i of {0,...,4}.
inline Triangulation boundary_of_4_simplex() {
    std::vector<std::array<int, 4>> simplices;
    for (int omit = 0; omit < 5; ++omit) {
        std::array<int, 4> s{};
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (v != omit) s[static_cast<std::size_t>(k++)] = v;
        simplices.push_back(s);
    }
    return Triangulation::from_simplices(simplices);
}

inline Triangulation disjoint_union(const Triangulation& x, const Triangulation& y) {
    auto adj = x.adjacency();
    const int shift = x.num_tets();
    for (auto row : y.adjacency()) {
        for (auto& g : row)
            if (g.glued()) g.tet += shift;
        adj.push_back(row);
    }
    return Triangulation::from_adjacency(std::move(adj), x.declared_oriented() && y.declared_oriented());
}

// -- Pachner moves ------------------------------------------------------------

namespace detail {

/// Where an outer face of a removed tetrahedron lands: face `face` of new
/// tetrahedron `tet`, with `corners` mapping old corners to new corners.
struct FaceImage {
    int tet;
    int face;
    Perm4 corners;
};

struct InnerGlue {
    int t1, f1, t2;
    Perm4 perm;
};

inline Triangulation replace_region(const Triangulation& t, const std::vector<int>& removed, int num_new,
                                    const std::vector<InnerGlue>& inner,
                                    const std::map<std::pair<int, int>, FaceImage>& outer) {
    const int T = t.num_tets();
    std::vector<int> new_index(static_cast<std::size_t>(T), -1);
    std::vector<bool> is_removed(static_cast<std::size_t>(T), false);
    for (int r : removed) is_removed[r] = true;
    int kept = 0;
    for (int i = 0; i < T; ++i)
        if (!is_removed[i]) new_index[i] = kept++;
    const int base = kept;
    std::vector<std::array<FaceGluing, 4>> adj(static_cast<std::size_t>(kept + num_new));

    for (int i = 0; i < T; ++i) {
        if (is_removed[i]) continue;
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(i, f);
            if (!g.glued()) continue;
            if (!is_removed[g.tet]) {
                adj[new_index[i]][f] = {new_index[g.tet], g.perm};
            } else {
                const FaceImage& img = outer.at({g.tet, g.perm[f]});
                adj[new_index[i]][f] = {base + img.tet, img.corners * g.perm};
            }
        }
    }
    for (const auto& [slot, img] : outer) {
        const auto [old_tet, old_face] = slot;
        const auto& g = t.gluing(old_tet, old_face);
        if (!g.glued()) continue;
        const Perm4 to_old = img.corners.inverse();
        if (!is_removed[g.tet]) {
            adj[base + img.tet][img.face] = {new_index[g.tet], g.perm * to_old};
        } else {
            const FaceImage& other = outer.at({g.tet, g.perm[old_face]});
            adj[base + img.tet][img.face] = {base + other.tet, other.corners * g.perm * to_old};
        }
    }
    for (const InnerGlue& ig : inner) {
        adj[base + ig.t1][ig.f1] = {base + ig.t2, ig.perm};
        adj[base + ig.t2][ig.perm[ig.f1]] = {base + ig.t1, ig.perm.inverse()};
    }
    return Triangulation::from_adjacency(std::move(adj), t.declared_oriented());
}

}  // namespace detail

/// 2-3 move across an interior triangle shared by two distinct tetrahedra.
/// New tetrahedra N_k have corners (d, e, x_{k+1}, x_{k+2}), where x_0..x_2
/// are the shared corners of the first tetrahedron and d, e the apexes.
inline Triangulation pachner_23(const Triangulation& t, int triangle) {
    if (triangle < 0 || triangle >= t.num_triangles())
        throw Error(ErrorCode::MoveNotApplicable, "no triangle " + std::to_string(triangle));
    const TriangleClass& tc = t.triangle(triangle);
    if (tc.boundary) throw Error(ErrorCode::MoveNotApplicable, "triangle " + std::to_string(triangle) + " is on the boundary");
    const int t1 = tc.tet[0], f1 = tc.face[0];
    const int t2 = tc.tet[1], f2 = tc.face[1];
    if (t1 == t2)
        throw Error(ErrorCode::MoveNotApplicable, "triangle " + std::to_string(triangle) + " has one tetrahedron on both sides");
    const Perm4 P = t.gluing(t1, f1).perm;
    const auto x = face_corners(f1);

    std::map<std::pair<int, int>, detail::FaceImage> outer;
    for (int k = 0; k < 3; ++k) {
        const int xk = x[k], xa = x[(k + 1) % 3], xb = x[(k + 2) % 3];
        // Face of t1 opposite x_k -> face of N_k opposite corner 1 (e).
        int own[4];
        own[f1] = 0;
        own[xk] = 1;
        own[xa] = 2;
        own[xb] = 3;
        outer[{t1, xk}] = {k, 1, Perm4(own[0], own[1], own[2], own[3])};
        // Face of t2 opposite P(x_k) -> face of N_k opposite corner 0 (d).
        int img[4];
        img[f2] = 1;
        img[P[xa]] = 2;
        img[P[xb]] = 3;
        img[P[xk]] = 0;
        outer[{t2, P[xk]}] = {k, 0, Perm4(img[0], img[1], img[2], img[3])};
    }
    std::vector<detail::InnerGlue> inner;
    for (int k = 0; k < 3; ++k) inner.push_back({k, 2, (k + 1) % 3, Perm4(0, 1, 3, 2)});
    return detail::replace_region(t, {t1, t2}, 3, inner, outer);
}

/// 1-4 move: cone a tetrahedron from a new interior vertex. M_k replaces
/// corner k by the new vertex.
inline Triangulation pachner_14(const Triangulation& t, int tet) {
    if (tet < 0 || tet >= t.num_tets()) throw Error(ErrorCode::MoveNotApplicable, "no tetrahedron " + std::to_string(tet));
    std::map<std::pair<int, int>, detail::FaceImage> outer;
    for (int k = 0; k < 4; ++k) outer[{tet, k}] = {k, k, Perm4()};
    std::vector<detail::InnerGlue> inner;
    for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) inner.push_back({j, k, k, Perm4::transposition(j, k)});
    return detail::replace_region(t, {tet}, 4, inner, outer);
}

/// Interior triangles on which a 2-3 move applies.
inline std::vector<int> pachner_23_sites(const Triangulation& t) {
    std::vector<int> out;
    for (int i = 0; i < t.num_triangles(); ++i) {
        const auto& tc = t.triangle(i);
        if (!tc.boundary && tc.tet[0] != tc.tet[1]) out.push_back(i);
    }
    return out;
}

// -- text format ----------------------------------------------------------------
//   tet <id>
//   glue <t1> <f1> <t2> <f2> <perm>     perm: images in t2 of the corners of
//                                       face f1 taken in increasing order
//   oriented                            (optional) declare a coherent orientation

inline std::string perm_code(int f1, const Perm4& p) {
    std::string s;
    for (int c : face_corners(f1)) s += static_cast<char>('0' + p[c]);
    return s;
}

inline TriangulationSpec parse_triangulation(std::istream& in, const std::string& source = "<input>") {
    TriangulationSpec spec;
    std::map<long long, int> tet_index;
    struct Pending {
        long long t1, t2;
        int f1, f2;
        std::string code;
        int line, col;
    };
    std::vector<Pending> pending;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        const int col = static_cast<int>(line.find(kw)) + 1;
        if (kw == "tet") {
            long long id;
            if (!(ls >> id)) throw ParseFailure(source, lineno, col, "expected 'tet <id>'");
            if (tet_index.count(id)) throw ParseFailure(source, lineno, col, "duplicate tet " + std::to_string(id));
            tet_index[id] = spec.num_tets++;
        } else if (kw == "glue") {
            Pending p{};
            if (!(ls >> p.t1 >> p.f1 >> p.t2 >> p.f2 >> p.code))
                throw ParseFailure(source, lineno, col, "expected 'glue <t1> <f1> <t2> <f2> <perm>'");
            p.line = lineno;
            p.col = static_cast<int>(line.find(p.code, line.find(kw) + 4)) + 1;
            pending.push_back(p);
        } else if (kw == "oriented") {
            spec.oriented = true;
        } else {
            throw ParseFailure(source, lineno, col, "unknown keyword '" + kw + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseFailure(source, lineno, static_cast<int>(line.rfind(extra)) + 1, "trailing token");
    }
    for (const Pending& p : pending) {
        const auto a = tet_index.find(p.t1), b = tet_index.find(p.t2);
        if (a == tet_index.end() || b == tet_index.end())
            throw ParseFailure(source, p.line, 1, "glue references an undeclared tet");
        if (p.f1 < 0 || p.f1 > 3 || p.f2 < 0 || p.f2 > 3) throw ParseFailure(source, p.line, 1, "face index must be 0..3");
        if (p.code.size() != 3) throw ParseFailure(source, p.line, p.col, "perm must have exactly 3 corner digits");
        int img[4];
        img[p.f1] = p.f2;
        const auto fc = face_corners(p.f1);
        for (int i = 0; i < 3; ++i) {
            const char ch = p.code[static_cast<std::size_t>(i)];
            if (ch < '0' || ch > '3') throw ParseFailure(source, p.line, p.col + i, "perm digit must be 0..3");
            img[fc[i]] = ch - '0';
        }
        spec.gluings.push_back({a->second, p.f1, b->second, p.f2, Perm4(img[0], img[1], img[2], img[3])});
    }
    return spec;
}

inline Triangulation load_triangulation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, path);
    return Triangulation::build(parse_triangulation(in, path));
}

inline std::string serialize(const Triangulation& t) {
    std::ostringstream os;
    if (t.declared_oriented()) os << "oriented\n";
    for (int i = 0; i < t.num_tets(); ++i) os << "tet " << i << '\n';
    for (const GlueSpec& g : t.to_spec().gluings)
        os << "glue " << g.t1 << ' ' << g.f1 << ' ' << g.t2 << ' ' << g.f2 << ' ' << perm_code(g.f1, g.perm) << '\n';
    return os.str();
}

// -- surfaces -------------------------------------------------------------------

/// Closed triangulated surface given by vertex triples.
class SurfaceTriangulation {
public:
    static SurfaceTriangulation build(std::vector<std::array<int, 3>> triangles, std::optional<int> genus = std::nullopt) {
        SurfaceTriangulation s;
        // Vertex labels are compacted preserving their order.
        std::map<int, int> relabel;
        for (const auto& tri : triangles)
            for (int v : tri) relabel.emplace(v, 0);
        int next = 0;
        for (auto& [label, idx] : relabel) idx = next++;
        for (auto& tri : triangles)
            for (int& v : tri) v = relabel[v];
        s.num_vertices_ = static_cast<int>(relabel.size());
        s.triangles_ = std::move(triangles);

        std::map<std::pair<int, int>, int> edge_id;
        std::vector<int> uses;
        for (const auto& tri : s.triangles_) {
            if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
                throw Error(ErrorCode::MalformedGluing, "degenerate surface triangle");
            std::array<int, 3> ids{};
            const std::array<std::pair<int, int>, 3> sides = {{{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[0], tri[2]}}};
            for (int k = 0; k < 3; ++k) {
                auto key = std::minmax(sides[k].first, sides[k].second);
                auto [it, fresh] = edge_id.emplace(std::make_pair(key.first, key.second), static_cast<int>(uses.size()));
                if (fresh) uses.push_back(0);
                ++uses[it->second];
                ids[k] = it->second;
            }
            s.triangle_edges_.push_back(ids);
        }
        s.edges_.resize(edge_id.size());
        for (const auto& [key, id] : edge_id) s.edges_[id] = {key.first, key.second};
        for (std::size_t e = 0; e < uses.size(); ++e)
            if (uses[e] != 2)
                throw Error(ErrorCode::MalformedGluing, "surface edge " + std::to_string(s.edges_[e][0]) + "-" +
                                                            std::to_string(s.edges_[e][1]) + " lies in " +
                                                            std::to_string(uses[e]) + " triangle(s); surface must be closed");
        s.check_vertex_links();
        s.check_orientable();
        const int chi = s.euler_characteristic();
        if (genus && *genus != (2 - chi) / 2)
            throw Error(ErrorCode::MalformedGluing, "declared genus " + std::to_string(*genus) + " but V - E + F = " + std::to_string(chi));
        return s;
    }

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_triangles() const { return static_cast<int>(triangles_.size()); }
    int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles(); }
    int genus() const { return (2 - euler_characteristic()) / 2; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }
    /// Edge ids of sides (v0v1, v1v2, v0v2) of each triangle.
    const std::vector<std::array<int, 3>>& triangle_edges() const { return triangle_edges_; }

    static SurfaceTriangulation tetrahedron_boundary() { return build({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 0); }

    /// Seven-vertex torus (14 triangles).
    static SurfaceTriangulation seven_vertex_torus() {
        std::vector<std::array<int, 3>> tris;
        for (int i = 0; i < 7; ++i) {
            tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
            tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
        }
        return build(tris, 1);
    }

private:
    void check_orientable() const {
        // Two triangles sharing an edge must traverse it in opposite directions.
        std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> uses;  // edge -> (triangle, direction)
        for (int t = 0; t < num_triangles(); ++t) {
            const auto& tri = triangles_[t];
            for (int k = 0; k < 3; ++k) {
                const int a = tri[k], b = tri[(k + 1) % 3];
                uses[std::minmax(a, b)].emplace_back(t, a < b ? 1 : -1);
            }
        }
        std::vector<int> sign(triangles_.size(), 0);
        for (std::size_t start = 0; start < triangles_.size(); ++start) {
            if (sign[start]) continue;
            sign[start] = 1;
            std::vector<int> stack = {static_cast<int>(start)};
            while (!stack.empty()) {
                const int t = stack.back();
                stack.pop_back();
                const auto& tri = triangles_[t];
                for (int k = 0; k < 3; ++k) {
                    const auto& u = uses[std::minmax(tri[k], tri[(k + 1) % 3])];
                    const auto [t0, d0] = u[0];
                    const auto [t1, d1] = u[1];
                    const int other = (t0 == t) ? t1 : t0;
                    const int mine = (t0 == t) ? d0 : d1;
                    const int theirs = (t0 == t) ? d1 : d0;
                    const int want = -sign[t] * mine * theirs;
                    if (sign[other] == 0) {
                        sign[other] = want;
                        stack.push_back(other);
                    } else if (sign[other] != want) {
                        throw Error(ErrorCode::MalformedGluing, "surface is not orientable");
                    }
                }
            }
        }
    }

    void check_vertex_links() const {
        for (int v = 0; v < num_vertices_; ++v) {
            std::map<int, std::vector<int>> link;
            for (const auto& tri : triangles_) {
                int pos = -1;
                for (int k = 0; k < 3; ++k)
                    if (tri[k] == v) pos = k;
                if (pos < 0) continue;
                const int a = tri[(pos + 1) % 3], b = tri[(pos + 2) % 3];
                link[a].push_back(b);
                link[b].push_back(a);
            }
            if (link.empty()) throw Error(ErrorCode::MalformedGluing, "isolated surface vertex");
            // Every link vertex has degree 2 (edges closed); require one cycle.
            std::set<int> seen;
            int cur = link.begin()->first, prev = -1;
            while (!seen.count(cur)) {
                seen.insert(cur);
                const auto& nb = link[cur];
                const int next = (nb[0] != prev) ? nb[0] : nb[1];
                prev = cur;
                cur = next;
            }
            if (seen.size() != link.size())
                throw Error(ErrorCode::MalformedGluing, "link of surface vertex " + std::to_string(v) + " is not a circle");
        }
    }

    int num_vertices_ = 0;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::array<int, 3>> triangle_edges_;
};

//   tri <a> <b> <c>
//   genus <g>          (optional, checked)
inline SurfaceTriangulation parse_surface(std::istream& in, const std::string& source = "<input>") {
    std::vector<std::array<int, 3>> tris;
    std::optional<int> genus;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        const int col = static_cast<int>(line.find(kw)) + 1;
        if (kw == "tri") {
            std::array<int, 3> t{};
            if (!(ls >> t[0] >> t[1] >> t[2])) throw ParseFailure(source, lineno, col, "expected 'tri <a> <b> <c>'");
            tris.push_back(t);
        } else if (kw == "genus") {
            int g;
            if (!(ls >> g)) throw ParseFailure(source, lineno, col, "expected 'genus <g>'");
            genus = g;
        } else {
            throw ParseFailure(source, lineno, col, "unknown keyword '" + kw + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseFailure(source, lineno, static_cast<int>(line.rfind(extra)) + 1, "trailing token");
    }
    if (tris.empty()) throw ParseFailure(source, lineno, 1, "surface has no triangles");
    return SurfaceTriangulation::build(std::move(tris), genus);
}

inline SurfaceTriangulation load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, path);
    return parse_surface(in, path);
}

inline std::string serialize(const SurfaceTriangulation& s) {
    std::ostringstream os;
    os << "genus " << s.genus() << '\n';
    for (const auto& t : s.triangles()) os << "tri " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return os.str();
}

/// Surface x [-1,1] as glued tetrahedra, three per surface triangle, plus the
/// edge classes of the bottom (-1) and top (+1) copies of every surface edge.
struct Prism {
    Triangulation tri;
    std::vector<int> bottom_edge;
    std::vector<int> top_edge;
    std::vector<int> bottom_vertex;
    std::vector<int> top_vertex;
};

inline Prism prism(const SurfaceTriangulation& s) {
    const int n = s.num_vertices();
    std::vector<std::array<int, 4>> simplices;
    for (auto tri : s.triangles()) {
        std::sort(tri.begin(), tri.end());
        const int a = tri[0], b = tri[1], c = tri[2];
        // Staircase subdivision; a shared square is split along the same
        // diagonal from both sides because vertex order is global.
        simplices.push_back({a, b, c, c + n});
        simplices.push_back({a, b, b + n, c + n});
        simplices.push_back({a, a + n, b + n, c + n});
    }
    Prism out{Triangulation::from_simplices(simplices), {}, {}, {}, {}};
    // Locate edge and vertex classes by the vertex labels they join.
    std::map<std::pair<int, int>, int> edge_of_labels;
    std::map<int, int> vertex_of_label;
    for (int t = 0; t < static_cast<int>(simplices.size()); ++t) {
        for (int k = 0; k < 6; ++k) {
            const auto [c, d] = kEdgeCorners[k];
            auto key = std::minmax(simplices[t][c], simplices[t][d]);
            edge_of_labels[{key.first, key.second}] = out.tri.edge_class(t, k);
        }
        for (int c = 0; c < 4; ++c) vertex_of_label[simplices[t][c]] = out.tri.vertex_class(t, c);
    }
    for (const auto& e : s.edges()) {
        out.bottom_edge.push_back(edge_of_labels.at({e[0], e[1]}));
        out.top_edge.push_back(edge_of_labels.at({e[0] + n, e[1] + n}));
    }
    for (int v = 0; v < n; ++v) {
        out.bottom_vertex.push_back(vertex_of_label.at(v));
        out.top_vertex.push_back(vertex_of_label.at(v + n));
    }
    return out;
}

/// Connected components of the boundary, each as a surface on boundary vertex classes.
inline std::vector<SurfaceTriangulation> boundary_components(const Triangulation& t) {
    std::vector<std::array<int, 3>> faces;
    for (const auto& tc : t.triangles()) {
        if (!tc.boundary) continue;
        std::array<int, 3> f{};
        int k = 0;
        for (int c : face_corners(tc.face[0])) f[static_cast<std::size_t>(k++)] = t.vertex_class(tc.tet[0], c);
        faces.push_back(f);
    }
    std::vector<int> parent(static_cast<std::size_t>(t.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& f : faces) {
        parent[find(f[0])] = find(f[1]);
        parent[find(f[1])] = find(f[2]);
    }
    std::map<int, std::vector<std::array<int, 3>>> groups;
    for (const auto& f : faces) groups[find(f[0])].push_back(f);
    std::vector<SurfaceTriangulation> out;
    for (auto& [root, tris] : groups) out.push_back(SurfaceTriangulation::build(tris));
    return out;
}

}  // namespace qgeom
