// Closed planar trivalent spin networks and their Kauffman-Lins evaluation.
//
// A graph is stored as a combinatorial map. Edge e owns the two darts 2e and
// 2e + 1 (one per end); every vertex lists its incident darts in
// counter-clockwise order. Faces are the orbits of dart -> next-ccw(opposite).
// Vertex-free loops are kept in a separate list.
#pragma once

#include "qgeom/error.hpp"
#include "qgeom/numeric.hpp"
#include "qgeom/recoupling.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qgeom {

struct SpinGraph {
    std::vector<Color> edge_color;
    std::vector<std::vector<int>> rotation;  // darts in ccw order, per vertex
    std::vector<Color> free_loops;

    static constexpr int dart(int edge, int side) { return 2 * edge + side; }
    static constexpr int edge_of(int d) { return d / 2; }
    static constexpr int opposite(int d) { return d ^ 1; }

    int num_vertices() const { return static_cast<int>(rotation.size()); }
    int num_edges() const { return static_cast<int>(edge_color.size()); }

    std::vector<int> dart_vertices() const {
        std::vector<int> out(2 * edge_color.size(), -1);
        for (int v = 0; v < num_vertices(); ++v)
            for (int d : rotation[v]) out[static_cast<std::size_t>(d)] = v;
        return out;
    }

    bool operator==(const SpinGraph&) const = default;

    // -- constructors for the standard nets ---------------------------------

    static SpinGraph loop(Color c) {
        SpinGraph g;
        g.free_loops.push_back(c);
        return g;
    }

    static SpinGraph theta(Color a, Color b, Color c) {
        SpinGraph g;
        g.edge_color = {a, b, c};
        g.rotation = {{dart(0, 0), dart(1, 0), dart(2, 0)}, {dart(2, 1), dart(1, 1), dart(0, 1)}};
        return g;
    }

    /// 1-skeleton of the tetrahedron whose value is Tet[a b e; c d f].
    static SpinGraph tetrahedron(Color a, Color b, Color e, Color c, Color d, Color f) {
        // Planar K4: outer triangle 0,1,2 (ccw), vertex 3 inside.
        // Edges: 0:01=a 1:13=b 2:03=e 3:23=c 4:02=d 5:12=f.
        SpinGraph g;
        g.edge_color = {a, b, e, c, d, f};
        g.rotation = {
            {dart(0, 0), dart(2, 0), dart(4, 0)},  // vertex 0: 01, 03, 02
            {dart(5, 0), dart(1, 0), dart(0, 1)},  // vertex 1: 12, 13, 01
            {dart(4, 1), dart(3, 1), dart(5, 1)},  // vertex 2: 02, 23, 12
            {dart(2, 1), dart(1, 1), dart(3, 0)},  // vertex 3: 03, 13, 23
        };
        return g;
    }

    /// Triangular prism: outer triangle 0,1,2, inner triangle 3,4,5, spokes.
    /// Colors are given for edges 01, 12, 20, 34, 45, 53, 03, 14, 25.
    static SpinGraph prism(const std::array<Color, 9>& colors) {
        SpinGraph g;
        g.edge_color.assign(colors.begin(), colors.end());
        // edge ids: 0:01 1:12 2:20 3:34 4:45 5:53 6:03 7:14 8:25
        g.rotation = {
            {dart(0, 0), dart(6, 0), dart(2, 1)},  // 0: 01, 03, 02
            {dart(1, 0), dart(7, 0), dart(0, 1)},  // 1: 12, 14, 01
            {dart(2, 0), dart(8, 0), dart(1, 1)},  // 2: 20, 25, 21
            {dart(6, 1), dart(3, 0), dart(5, 1)},  // 3: 30, 34, 35
            {dart(4, 0), dart(3, 1), dart(7, 1)},  // 4: 45, 43, 41
            {dart(5, 0), dart(4, 1), dart(8, 1)},  // 5: 53, 54, 52
        };
        return g;
    }

    static SpinGraph disjoint_union(const SpinGraph& x, const SpinGraph& y) {
        SpinGraph g = x;
        const int shift = 2 * x.num_edges();
        g.edge_color.insert(g.edge_color.end(), y.edge_color.begin(), y.edge_color.end());
        for (const auto& rot : y.rotation) {
            std::vector<int> r;
            for (int d : rot) r.push_back(d + shift);
            g.rotation.push_back(std::move(r));
        }
        g.free_loops.insert(g.free_loops.end(), y.free_loops.begin(), y.free_loops.end());
        return g;
    }
};

/// Faces of the embedding as dart orbits; face_of[d] is the face containing d.
struct FaceStructure {
    std::vector<std::vector<int>> faces;
    std::vector<int> face_of;
};

inline FaceStructure trace_faces(const SpinGraph& g) {
    const int darts = 2 * g.num_edges();
    std::vector<int> next_ccw(static_cast<std::size_t>(darts), -1);
    for (const auto& rot : g.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i) next_ccw[rot[i]] = rot[(i + 1) % rot.size()];
    FaceStructure fs;
    fs.face_of.assign(static_cast<std::size_t>(darts), -1);
    for (int start = 0; start < darts; ++start) {
        if (fs.face_of[start] != -1 || next_ccw[start] == -1) continue;
        std::vector<int> face;
        int d = start;
        while (fs.face_of[d] == -1) {
            fs.face_of[d] = static_cast<int>(fs.faces.size());
            face.push_back(d);
            d = next_ccw[SpinGraph::opposite(d)];
        }
        fs.faces.push_back(std::move(face));
    }
    return fs;
}

inline int count_components(const SpinGraph& g) {
    const auto dv = g.dart_vertices();
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        const int u = dv[2 * e], v = dv[2 * e + 1];
        if (u >= 0 && v >= 0) parent[find(u)] = find(v);
    }
    int n = 0;
    for (int v = 0; v < g.num_vertices(); ++v) n += (find(v) == v);
    return n;
}

/// Checks trivalence, colors, vertex admissibility and planarity.
inline void validate(const SpinGraph& g, int r) {
    const int darts = 2 * g.num_edges();
    std::vector<int> seen(static_cast<std::size_t>(darts), 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.rotation[v].size() != 3)
            throw Error(ErrorCode::NotTrivalent,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(g.rotation[v].size()));
        for (int d : g.rotation[v]) {
            if (d < 0 || d >= darts) throw Error(ErrorCode::NotTrivalent, "dangling edge end at vertex " + std::to_string(v));
            ++seen[d];
        }
    }
    for (int d = 0; d < darts; ++d)
        if (seen[d] != 1)
            throw Error(ErrorCode::NotTrivalent, "edge " + std::to_string(d / 2) + " end " + std::to_string(d % 2) +
                                                     (seen[d] == 0 ? " is open" : " used twice"));
    for (Color c : g.edge_color) require_color(c, r);
    for (Color c : g.free_loops) require_color(c, r);
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& rot = g.rotation[v];
        const Color a = g.edge_color[SpinGraph::edge_of(rot[0])];
        const Color b = g.edge_color[SpinGraph::edge_of(rot[1])];
        const Color c = g.edge_color[SpinGraph::edge_of(rot[2])];
        if (!is_admissible(a, b, c, r))
            throw Error(ErrorCode::NotAdmissibleVertex,
                        "vertex " + std::to_string(v) + " carries " + detail::triple_name(a, b, c));
    }
    const FaceStructure fs = trace_faces(g);
    const int chi = g.num_vertices() - g.num_edges() + static_cast<int>(fs.faces.size());
    const int comps = count_components(g);
    if (chi != 2 * comps)
        throw Error(ErrorCode::NotPlanar, "V - E + F = " + std::to_string(chi) + " over " + std::to_string(comps) +
                                              " component(s)");
}

namespace detail {

/// Removes dead edges (color < 0) and empty vertices, renumbering darts.
inline SpinGraph compact(const SpinGraph& g) {
    std::vector<int> new_edge(g.edge_color.size(), -1);
    SpinGraph out;
    out.free_loops = g.free_loops;
    for (std::size_t e = 0; e < g.edge_color.size(); ++e)
        if (g.edge_color[e] >= 0) {
            new_edge[e] = static_cast<int>(out.edge_color.size());
            out.edge_color.push_back(g.edge_color[e]);
        }
    for (const auto& rot : g.rotation) {
        if (rot.empty()) continue;
        std::vector<int> r;
        for (int d : rot) r.push_back(SpinGraph::dart(new_edge[SpinGraph::edge_of(d)], d % 2));
        out.rotation.push_back(std::move(r));
    }
    return out;
}

inline void replace_dart(std::vector<int>& rot, int from, int to) {
    for (int& d : rot)
        if (d == from) d = to;
}

inline void erase_dart(std::vector<int>& rot, int d) { rot.erase(std::remove(rot.begin(), rot.end(), d), rot.end()); }

/// Removes 0-colored edges and smooths the resulting 2-valent vertices.
inline SpinGraph delete_zero_edges(SpinGraph g) {
    bool changed = false;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.edge_color[e] != 0) continue;
        for (auto& rot : g.rotation) {
            erase_dart(rot, SpinGraph::dart(e, 0));
            erase_dart(rot, SpinGraph::dart(e, 1));
        }
        g.edge_color[e] = -1;
        changed = true;
    }
    if (!changed) return g;
    for (int w = 0; w < g.num_vertices(); ++w) {
        auto& rot = g.rotation[w];
        if (rot.size() == 1)
            throw Error(ErrorCode::NotAdmissibleVertex, "vertex with a single nonzero leg after zero-edge deletion");
        if (rot.size() != 2) continue;
        const int x = rot[0], y = rot[1];
        const int ex = SpinGraph::edge_of(x), ey = SpinGraph::edge_of(y);
        rot.clear();
        if (ex == ey) {
            g.free_loops.push_back(g.edge_color[ex]);
            g.edge_color[ex] = -1;
            continue;
        }
        // Edge ex takes over the far end of ey.
        const int far = SpinGraph::opposite(y);
        for (auto& other : g.rotation) replace_dart(other, far, x);
        g.edge_color[ey] = -1;
    }
    return compact(g);
}

/// In-place F-move on edge e (endpoints must differ). Returns the external
/// colors (a, b, c, d) in the order used by fmove_coeff.
inline std::array<Color, 4> recouple_edge(SpinGraph& g, int e, Color f) {
    const auto dv = g.dart_vertices();
    const int e0 = SpinGraph::dart(e, 0), e1 = SpinGraph::dart(e, 1);
    const int u = dv[e0], v = dv[e1];
    auto rotate_to = [](std::vector<int>& rot, int d) {
        std::rotate(rot.begin(), std::find(rot.begin(), rot.end(), d), rot.end());
    };
    rotate_to(g.rotation[u], e0);
    rotate_to(g.rotation[v], e1);
    const int A = g.rotation[u][1], B = g.rotation[u][2];
    const int C = g.rotation[v][1], D = g.rotation[v][2];
    const std::array<Color, 4> legs = {g.edge_color[SpinGraph::edge_of(A)], g.edge_color[SpinGraph::edge_of(B)],
                                       g.edge_color[SpinGraph::edge_of(C)], g.edge_color[SpinGraph::edge_of(D)]};
    g.rotation[u] = {e0, B, C};
    g.rotation[v] = {e1, D, A};
    g.edge_color[e] = f;
    return legs;
}

}  // namespace detail

/// One recoupling step on an internal edge: the weighted branch list whose
/// weighted evaluations sum to the evaluation of g.
template <typename Real>
std::vector<std::pair<Real, SpinGraph>> apply_fmove(const SpinGraph& g, int edge, const RecouplingTable<Real>& table) {
    validate(g, table.r());
    if (edge < 0 || edge >= g.num_edges())
        throw Error(ErrorCode::InvalidArgument, "no edge " + std::to_string(edge));
    const auto dv = g.dart_vertices();
    if (dv[SpinGraph::dart(edge, 0)] == dv[SpinGraph::dart(edge, 1)])
        throw Error(ErrorCode::EdgeIsLoop, "edge " + std::to_string(edge) + " is a loop");
    std::vector<std::pair<Real, SpinGraph>> out;
    const Color e = g.edge_color[edge];
    for (Color f = 0; f < table.num_colors(); ++f) {
        SpinGraph h = g;
        const auto [a, b, c, d] = detail::recouple_edge(h, edge, f);
        if (!table.admissible(b, c, f) || !table.admissible(d, a, f)) continue;
        out.emplace_back(table.fmove(a, b, c, d, e, f), std::move(h));
    }
    return out;
}

/// Reduction engine. Rules, in priority order: delete zero edges, remove free
/// loops (x Delta), zero on nonzero bridges and tadpoles, merge a bubble
/// (x theta / Delta), otherwise F-move an edge of a smallest face. Each F-move
/// shrinks the smallest face, so at most (face size - 2) consecutive moves
/// precede a bubble merge, which removes two vertices.
template <typename Real>
class SpinNetEvaluator {
public:
    explicit SpinNetEvaluator(const RecouplingTable<Real>& table, int max_fmove_depth = 12,
                              long long node_budget = 20'000'000)
        : table_(table), max_depth_(max_fmove_depth), budget_(node_budget) {}

    Real evaluate(const SpinGraph& g) {
        validate(g, table_.r());
        nodes_ = 0;
        return reduce(g, 0);
    }

    long long nodes_visited() const noexcept { return nodes_; }

private:
    Real reduce(SpinGraph g, int consecutive_moves) {
        if (++nodes_ > budget_) throw Error(ErrorCode::GraphIrreducible, "reduction budget exhausted");
        g = detail::delete_zero_edges(std::move(g));
        Real factor(1);
        for (Color c : g.free_loops) factor *= table_.delta(c);
        g.free_loops.clear();
        if (g.num_vertices() == 0) return factor;

        const FaceStructure fs = trace_faces(g);
        for (int e = 0; e < g.num_edges(); ++e)
            if (fs.face_of[2 * e] == fs.face_of[2 * e + 1]) return Real(0);  // nonzero bridge

        std::size_t best = 0;
        for (std::size_t i = 1; i < fs.faces.size(); ++i)
            if (fs.faces[i].size() < fs.faces[best].size()) best = i;
        const auto& face = fs.faces[best];
        if (face.size() == 1) return Real(0);  // tadpole
        const auto dv = g.dart_vertices();

        if (face.size() == 2) return factor * merge_bubble(g, face, dv);

        if (consecutive_moves >= max_depth_)
            throw Error(ErrorCode::GraphIrreducible, "F-move search depth exceeded");
        int edge = -1;
        for (int d : face)
            if (dv[d] != dv[SpinGraph::opposite(d)]) {
                edge = SpinGraph::edge_of(d);
                break;
            }
        if (edge < 0) throw Error(ErrorCode::GraphIrreducible, "no recouplable edge on minimal face");

        Real sum(0);
        const Color e = g.edge_color[edge];
        for (Color f = 0; f < table_.num_colors(); ++f) {
            SpinGraph h = g;
            const auto [a, b, c, d] = detail::recouple_edge(h, edge, f);
            if (!table_.admissible(b, c, f) || !table_.admissible(d, a, f)) continue;
            const Real w = table_.fmove(a, b, c, d, e, f);
            if (w == Real(0)) continue;
            sum += w * reduce(std::move(h), consecutive_moves + 1);
        }
        return factor * sum;
    }

    Real merge_bubble(SpinGraph& g, const std::vector<int>& face, const std::vector<int>& dv) {
        // face = {d1 (u -> v along e1), d2 (v -> u along e2)}
        const int d1 = face[0], d2 = face[1];
        const int u = dv[d1], v = dv[d2];
        const int e1 = SpinGraph::edge_of(d1), e2 = SpinGraph::edge_of(d2);
        auto third = [&](int vertex, int x, int y) {
            for (int d : g.rotation[vertex])
                if (d != x && d != y) return d;
            return -1;
        };
        const int pu = third(u, d1, SpinGraph::opposite(d2));
        const int pv = third(v, d2, SpinGraph::opposite(d1));
        const Color a = g.edge_color[SpinGraph::edge_of(pu)];
        const Color a2 = g.edge_color[SpinGraph::edge_of(pv)];
        if (a != a2) return Real(0);
        const Real w = table_.theta(a, g.edge_color[e1], g.edge_color[e2]) / table_.delta(a);

        g.rotation[u].clear();
        g.rotation[v].clear();
        g.edge_color[e1] = -1;
        g.edge_color[e2] = -1;
        const int ea = SpinGraph::edge_of(pu), eb = SpinGraph::edge_of(pv);
        if (ea == eb) {
            g.free_loops.push_back(a);
            g.edge_color[ea] = -1;
        } else {
            const int far = SpinGraph::opposite(pv);
            for (auto& rot : g.rotation) detail::replace_dart(rot, far, pu);
            g.edge_color[eb] = -1;
        }
        return w * reduce(detail::compact(g), 0);
    }

    const RecouplingTable<Real>& table_;
    int max_depth_;
    long long budget_;
    long long nodes_ = 0;
};

template <typename Real>
Real evaluate(const SpinGraph& g, const RecouplingTable<Real>& table) {
    return SpinNetEvaluator<Real>(table).evaluate(g);
}

// -- text format ------------------------------------------------------------
//   edge <id> <v1> <v2> <color>
//   rot <v> <e_a> <e_b> <e_c>      (ccw; a loop edge is listed twice)
//   loop <id> <color>              (vertex-free closed loop)

inline SpinGraph parse_spin_graph(std::istream& in, const std::string& source = "<input>") {
    struct EdgeLine {
        int v1, v2, color, line;
    };
    std::vector<std::pair<long long, EdgeLine>> edges;
    std::map<long long, int> edge_index;
    std::vector<std::pair<long long, std::vector<long long>>> rots;
    std::vector<int> rot_lines;
    std::map<long long, int> rot_seen;
    SpinGraph g;

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
        auto fail = [&](const std::string& what) -> ParseFailure { return ParseFailure(source, lineno, col, what); };
        if (kw == "edge") {
            long long id;
            int v1, v2, c;
            if (!(ls >> id >> v1 >> v2 >> c)) throw fail("expected 'edge <id> <v1> <v2> <color>'");
            if (edge_index.count(id)) throw fail("duplicate edge id " + std::to_string(id));
            edge_index[id] = static_cast<int>(edges.size());
            edges.push_back({id, {v1, v2, c, lineno}});
        } else if (kw == "rot") {
            long long v;
            std::vector<long long> ids(3);
            if (!(ls >> v >> ids[0] >> ids[1] >> ids[2])) throw fail("expected 'rot <v> <e_a> <e_b> <e_c>'");
            if (rot_seen.count(v)) throw fail("duplicate rotation for vertex " + std::to_string(v));
            rot_seen[v] = static_cast<int>(rots.size());
            rots.emplace_back(v, ids);
            rot_lines.push_back(lineno);
        } else if (kw == "loop") {
            long long id;
            int c;
            if (!(ls >> id >> c)) throw fail("expected 'loop <id> <color>'");
            g.free_loops.push_back(c);
        } else {
            throw fail("unknown keyword '" + kw + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseFailure(source, lineno, static_cast<int>(line.find(extra)) + 1, "trailing token");
    }

    for (const auto& [id, e] : edges) g.edge_color.push_back(e.color);
    std::map<long long, int> vertex_index;
    for (const auto& [v, ids] : rots) vertex_index.emplace(v, static_cast<int>(vertex_index.size()));
    g.rotation.assign(rots.size(), {});
    for (std::size_t k = 0; k < rots.size(); ++k) {
        const auto& [v, ids] = rots[k];
        std::vector<int> used_side0;
        for (long long id : ids) {
            const auto it = edge_index.find(id);
            if (it == edge_index.end())
                throw ParseFailure(source, rot_lines[k], 1, "rotation references unknown edge " + std::to_string(id));
            const EdgeLine& el = edges[it->second].second;
            int side;
            if (el.v1 == v && el.v2 == v) {
                side = std::count(used_side0.begin(), used_side0.end(), it->second) ? 1 : 0;
                used_side0.push_back(it->second);
            } else if (el.v1 == v) {
                side = 0;
            } else if (el.v2 == v) {
                side = 1;
            } else {
                throw ParseFailure(source, rot_lines[k], 1,
                                   "edge " + std::to_string(id) + " is not incident to vertex " + std::to_string(v));
            }
            g.rotation[vertex_index[v]].push_back(SpinGraph::dart(it->second, side));
        }
    }
    for (const auto& [id, e] : edges)
        for (int v : {e.v1, e.v2})
            if (!vertex_index.count(v))
                throw ParseFailure(source, e.line, 1, "edge " + std::to_string(id) + " ends at vertex " +
                                                          std::to_string(v) + " which has no rotation");
    return g;
}

inline SpinGraph parse_spin_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, path);
    return parse_spin_graph(in, path);
}

inline std::string serialize(const SpinGraph& g) {
    const auto dv = g.dart_vertices();
    std::ostringstream os;
    for (int e = 0; e < g.num_edges(); ++e)
        os << "edge " << e << ' ' << dv[2 * e] << ' ' << dv[2 * e + 1] << ' ' << g.edge_color[e] << '\n';
    for (int v = 0; v < g.num_vertices(); ++v) {
        os << "rot " << v;
        for (int d : g.rotation[v]) os << ' ' << SpinGraph::edge_of(d);
        os << '\n';
    }
    for (std::size_t i = 0; i < g.free_loops.size(); ++i) os << "loop " << i << ' ' << g.free_loops[i] << '\n';
    return os.str();
}

}  // namespace qgeom
