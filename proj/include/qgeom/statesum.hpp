// Turaev-Viro state sums over admissible edge colorings.
//
// Weights (Kauffman-Lins normalization): eta^2 per vertex, Delta per edge,
// 1/theta per triangle and Tet per tetrahedron. On a boundary, a vertex
// carries eta, an edge Delta^(1/2) and a triangle theta^(-1/2), so gluing two
// boundaries reproduces interior weights.
//
// Enumeration is a backtracking search over edge classes. The first edge is
// the one in the most triangles; each next edge is the one completing the
// most triangles so far (then touching the most, then highest degree).
// Triangle admissibility is checked as soon as its last edge is colored. The
// search is partitioned on the color of the first edge; partitions may run on
// separate threads and are always combined in color order.
#pragma once

#include "qgeom/error.hpp"
#include "qgeom/numeric.hpp"
#include "qgeom/recoupling.hpp"
#include "qgeom/triangulation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <unordered_map>
#include <vector>

namespace qgeom {

struct StateSumOptions {
    int threads = 0;  // 0: hardware concurrency
};

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Edge elimination order and the simplices completed at each step.
struct StateSumLayout {
    int num_edges = 0;
    std::vector<int> order;
    std::vector<std::vector<int>> triangles_at;
    std::vector<std::vector<int>> tets_at;
    std::vector<std::array<int, 3>> triangle_edges;
    std::vector<bool> triangle_boundary;
    std::vector<std::array<int, 6>> tet_edges;  // Tet argument order: 01 12 13 23 03 02
};

inline StateSumLayout make_layout(const Triangulation& t) {
    StateSumLayout L;
    L.num_edges = t.num_edges();
    const int E = L.num_edges;
    for (const auto& tc : t.triangles()) {
        L.triangle_edges.push_back(tc.edges);
        L.triangle_boundary.push_back(tc.boundary);
    }
    for (int k = 0; k < t.num_tets(); ++k)
        L.tet_edges.push_back({t.edge_class(k, local_edge(0, 1)), t.edge_class(k, local_edge(1, 2)),
                               t.edge_class(k, local_edge(1, 3)), t.edge_class(k, local_edge(2, 3)),
                               t.edge_class(k, local_edge(0, 3)), t.edge_class(k, local_edge(0, 2))});

    std::vector<std::vector<int>> tris_of_edge(static_cast<std::size_t>(E));
    for (int i = 0; i < static_cast<int>(L.triangle_edges.size()); ++i) {
        auto es = L.triangle_edges[i];
        std::sort(es.begin(), es.end());
        for (int k = 0; k < 3; ++k)
            if (k == 0 || es[k] != es[k - 1]) tris_of_edge[es[k]].push_back(i);
    }
    const auto degree = t.edge_triangle_degree();
    std::vector<bool> chosen(static_cast<std::size_t>(E), false);
    auto is_chosen_except = [&](int tri, int e, bool all) {
        int hits = 0, others = 0;
        for (int x : L.triangle_edges[tri]) {
            if (x == e) continue;
            ++others;
            hits += chosen[x] ? 1 : 0;
        }
        return all ? hits == others : hits > 0;
    };
    for (int step = 0; step < E; ++step) {
        int best = -1;
        std::array<int, 3> best_key{-1, -1, -1};
        for (int e = 0; e < E; ++e) {
            if (chosen[e]) continue;
            std::array<int, 3> key{0, 0, degree[e]};
            if (step > 0)
                for (int tri : tris_of_edge[e]) {
                    key[0] += is_chosen_except(tri, e, true) ? 1 : 0;
                    key[1] += is_chosen_except(tri, e, false) ? 1 : 0;
                }
            if (key > best_key) {
                best_key = key;
                best = e;
            }
        }
        chosen[best] = true;
        L.order.push_back(best);
    }
    std::vector<int> pos(static_cast<std::size_t>(E));
    for (int i = 0; i < E; ++i) pos[L.order[i]] = i;
    L.triangles_at.assign(static_cast<std::size_t>(E), {});
    L.tets_at.assign(static_cast<std::size_t>(E), {});
    for (int i = 0; i < static_cast<int>(L.triangle_edges.size()); ++i) {
        int last = 0;
        for (int e : L.triangle_edges[i]) last = std::max(last, pos[e]);
        L.triangles_at[last].push_back(i);
    }
    for (int k = 0; k < static_cast<int>(L.tet_edges.size()); ++k) {
        int last = 0;
        for (int e : L.tet_edges[k]) last = std::max(last, pos[e]);
        L.tets_at[last].push_back(k);
    }
    return L;
}

/// Backtracking enumerator over admissible colorings with multiplicative
/// weights of type W. Leaf receives (partition state, coloring, weight).
template <typename Real, typename W>
class StateSumEnumerator {
public:
    StateSumEnumerator(const StateSumLayout& layout, const RecouplingTable<Real>& table,
                       std::vector<std::vector<W>> edge_weight, std::function<W(const Real&)> full_triangle,
                       std::function<W(const Real&)> boundary_triangle)
        : L_(layout), table_(table), edge_weight_(std::move(edge_weight)) {
        const int n = table.num_colors();
        tri_full_.assign(static_cast<std::size_t>(n * n * n), W(0));
        tri_bdry_.assign(static_cast<std::size_t>(n * n * n), W(0));
        for (Color a = 0; a < n; ++a)
            for (Color b = 0; b < n; ++b)
                for (Color c = 0; c < n; ++c)
                    if (table.admissible(a, b, c)) {
                        tri_full_[(a * n + b) * n + c] = full_triangle(table.theta(a, b, c));
                        tri_bdry_[(a * n + b) * n + c] = boundary_triangle(table.theta(a, b, c));
                    }
    }

    template <typename Acc, typename Leaf>
    std::vector<Acc> run(int threads, const std::function<Acc()>& make_acc, Leaf leaf, std::vector<long long>* visits) const {
        const int n = table_.num_colors();
        std::vector<Acc> results;
        results.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) results.push_back(make_acc());
        std::vector<long long> counts(static_cast<std::size_t>(n), 0);
        if (L_.num_edges == 0) {
            // No edges: a single empty coloring, assigned to partition 0.
            std::vector<Color> colors;
            W w(1);
            for (int k = 0; k < static_cast<int>(L_.tet_edges.size()); ++k) w *= W(table_.tet(0, 0, 0, 0, 0, 0));
            leaf(results[0], colors, w);
            counts[0] = 1;
        } else {
            std::atomic<int> next{0};
            auto worker = [&]() {
                std::vector<Color> colors(static_cast<std::size_t>(L_.num_edges), 0);
                for (int seed = next++; seed < n; seed = next++) {
                    long long nodes = 0;
                    descend(0, seed, W(1), colors, results[seed], leaf, nodes);
                    counts[seed] = nodes;
                }
            };
            const int nt = std::max(1, std::min(threads, n));
            if (nt == 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
                for (auto& th : pool) th.join();
            }
        }
        if (visits) *visits = counts;
        return results;
    }

private:
    template <typename Acc, typename Leaf>
    void descend(int pos, Color c, W acc, std::vector<Color>& colors, Acc& out, Leaf& leaf, long long& nodes) const {
        ++nodes;
        const int e = L_.order[pos];
        colors[e] = c;
        const int n = table_.num_colors();
        W w = acc * edge_weight_[e][c];
        for (int tri : L_.triangles_at[pos]) {
            const auto& te = L_.triangle_edges[tri];
            const Color a = colors[te[0]], b = colors[te[1]], d = colors[te[2]];
            if (!table_.admissible(a, b, d)) return;
            w *= (L_.triangle_boundary[tri] ? tri_bdry_ : tri_full_)[(a * n + b) * n + d];
        }
        for (int k : L_.tets_at[pos]) {
            const auto& x = L_.tet_edges[k];
            w *= W(table_.tet(colors[x[0]], colors[x[1]], colors[x[2]], colors[x[3]], colors[x[4]], colors[x[5]]));
        }
        if (pos + 1 == L_.num_edges) {
            leaf(out, colors, w);
            return;
        }
        for (Color next = 0; next < n; ++next) descend(pos + 1, next, w, colors, out, leaf, nodes);
    }

    const StateSumLayout& L_;
    const RecouplingTable<Real>& table_;
    std::vector<std::vector<W>> edge_weight_;
    std::vector<W> tri_full_;
    std::vector<W> tri_bdry_;
};

template <typename Real>
struct StateSumResult {
    Real value{0};
    long long colorings = 0;
    long long visits = 0;
    std::vector<long long> partition_visits;
};

template <typename Real>
StateSumResult<Real> tv_state_sum(const Triangulation& t, const RecouplingTable<Real>& table,
                                  const StateSumOptions& opt = {}) {
    if (!t.is_closed())
        throw Error(ErrorCode::NotClosed, std::to_string(t.num_boundary_faces()) + " boundary face(s)");
    const StateSumLayout L = make_layout(t);
    const int n = table.num_colors();
    std::vector<std::vector<Real>> edge_w(static_cast<std::size_t>(L.num_edges), std::vector<Real>(n));
    for (auto& row : edge_w)
        for (Color c = 0; c < n; ++c) row[c] = table.delta(c);
    StateSumEnumerator<Real, Real> en(
        L, table, std::move(edge_w), [](const Real& th) { return Real(1) / th; },
        [](const Real& th) { return Real(1) / th; });
    struct Acc {
        Real sum{0};
        long long leaves = 0;
    };
    std::vector<long long> visits;
    const auto parts = en.template run<Acc>(
        resolve_threads(opt.threads), [] { return Acc{}; },
        [](Acc& a, const std::vector<Color>&, const Real& w) {
            a.sum += w;
            ++a.leaves;
        },
        &visits);
    StateSumResult<Real> res;
    Real sum(0);
    for (const auto& p : parts) {
        sum += p.sum;
        res.colorings += p.leaves;
    }
    using std::pow;
    const Real e = eta(table.params());
    Real vertex_factor(1);
    for (int v = 0; v < 2 * t.num_vertices(); ++v) vertex_factor *= e;
    res.value = vertex_factor * sum;
    res.partition_visits = visits;
    for (long long v : visits) res.visits += v;
    return res;
}

template <typename Real>
Real tv_invariant(const Triangulation& t, const RecouplingTable<Real>& table, const StateSumOptions& opt = {}) {
    return tv_state_sum(t, table, opt).value;
}

/// Exact number of admissible edge colorings (boundary edges free).
template <typename Real>
long long count_admissible_colorings(const Triangulation& t, const RecouplingTable<Real>& table,
                                     const StateSumOptions& opt = {}) {
    const StateSumLayout L = make_layout(t);
    const int n = table.num_colors();
    std::vector<std::vector<Real>> edge_w(static_cast<std::size_t>(L.num_edges), std::vector<Real>(n, Real(1)));
    StateSumEnumerator<Real, Real> en(
        L, table, std::move(edge_w), [](const Real&) { return Real(1); }, [](const Real&) { return Real(1); });
    const auto parts = en.template run<long long>(
        resolve_threads(opt.threads), [] { return 0LL; },
        [](long long& a, const std::vector<Color>&, const Real&) { ++a; }, nullptr);
    long long total = 0;
    for (long long p : parts) total += p;
    return total;
}

// -- boundary operator -------------------------------------------------------

/// Admissible colorings of a surface's edges, in lexicographic order.
inline std::vector<std::vector<Color>> surface_colorings(const SurfaceTriangulation& s, int r) {
    const int E = s.num_edges();
    std::vector<std::vector<int>> tris_closing(static_cast<std::size_t>(E));
    for (int i = 0; i < s.num_triangles(); ++i) {
        const auto& te = s.triangle_edges()[i];
        tris_closing[*std::max_element(te.begin(), te.end())].push_back(i);
    }
    std::vector<std::vector<Color>> out;
    std::vector<Color> colors(static_cast<std::size_t>(E), 0);
    std::function<void(int)> rec = [&](int e) {
        if (e == E) {
            out.push_back(colors);
            return;
        }
        for (Color c = 0; c <= r - 2; ++c) {
            colors[e] = c;
            bool ok = true;
            for (int i : tris_closing[e]) {
                const auto& te = s.triangle_edges()[i];
                if (!is_admissible(colors[te[0]], colors[te[1]], colors[te[2]], r)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(e + 1);
        }
    };
    rec(0);
    return out;
}

/// Square matrix M[top][bottom] of the Turaev-Viro operator of surface x [-1,1],
/// indexed by admissible surface colorings.
template <typename Real>
struct BoundaryOperator {
    std::vector<std::vector<Color>> basis;
    std::vector<Complex<Real>> entries;  // row-major, dim x dim
    long long colorings = 0;

    int dim() const { return static_cast<int>(basis.size()); }
    const Complex<Real>& at(int top, int bottom) const { return entries[static_cast<std::size_t>(top) * dim() + bottom]; }
};

template <typename Real>
Complex<Real> principal_sqrt(const Real& x) {
    using std::sqrt;
    if (x >= 0) return make_complex<Real>(sqrt(x), Real(0));
    return make_complex<Real>(Real(0), sqrt(-x));
}

inline constexpr int kMaxBoundaryDimension = 4096;

template <typename Real>
BoundaryOperator<Real> tv_boundary_operator(const SurfaceTriangulation& s, const RecouplingTable<Real>& table,
                                            const StateSumOptions& opt = {}) {
    using C = Complex<Real>;
    const Prism pr = prism(s);
    const Triangulation& t = pr.tri;
    BoundaryOperator<Real> op;
    op.basis = surface_colorings(s, table.r());
    const int N = op.dim();
    if (N > kMaxBoundaryDimension)
        throw Error(ErrorCode::InvalidArgument, "boundary coloring space has dimension " + std::to_string(N));
    const int n = table.num_colors();
    std::unordered_map<std::uint64_t, int> index;
    auto encode = [n](const std::vector<Color>& cols, const std::vector<int>& edges) {
        std::uint64_t key = 0;
        for (int e : edges) key = key * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(cols[e]);
        return key;
    };
    {
        std::vector<int> ident(static_cast<std::size_t>(s.num_edges()));
        std::iota(ident.begin(), ident.end(), 0);
        for (int i = 0; i < N; ++i) index[encode(op.basis[i], ident)] = i;
    }

    const StateSumLayout L = make_layout(t);
    std::vector<std::vector<C>> edge_w(static_cast<std::size_t>(L.num_edges), std::vector<C>(n));
    for (int e = 0; e < L.num_edges; ++e)
        for (Color c = 0; c < n; ++c)
            edge_w[e][c] = t.edge_on_boundary(e) ? principal_sqrt(table.delta(c)) : C(table.delta(c));
    StateSumEnumerator<Real, C> en(
        L, table, std::move(edge_w), [](const Real& th) { return C(Real(1) / th); },
        [](const Real& th) { return C(Real(1)) / principal_sqrt(th); });

    struct Acc {
        std::vector<C> m;
        long long leaves = 0;
    };
    const auto& bottom = pr.bottom_edge;
    const auto& top = pr.top_edge;
    const auto parts = en.template run<Acc>(
        resolve_threads(opt.threads),
        [N] { return Acc{std::vector<C>(static_cast<std::size_t>(N) * N, C(Real(0))), 0}; },
        [&](Acc& a, const std::vector<Color>& cols, const C& w) {
            const int i = index.at(encode(cols, top));
            const int j = index.at(encode(cols, bottom));
            a.m[static_cast<std::size_t>(i) * N + j] += w;
            ++a.leaves;
        },
        nullptr);

    int interior_vertices = 0, boundary_vertices = 0;
    for (int v = 0; v < t.num_vertices(); ++v) (t.vertex_on_boundary(v) ? boundary_vertices : interior_vertices)++;
    const Real e = eta(table.params());
    Real vf(1);
    for (int k = 0; k < 2 * interior_vertices + boundary_vertices; ++k) vf *= e;

    op.entries.assign(static_cast<std::size_t>(N) * N, C(Real(0)));
    for (const auto& p : parts) {
        for (std::size_t k = 0; k < p.m.size(); ++k) op.entries[k] += p.m[k];
        op.colorings += p.leaves;
    }
    for (auto& x : op.entries) x *= C(vf);
    return op;
}

/// max |(M M - M)_{ij}|
template <typename Real>
Real idempotence_defect(const BoundaryOperator<Real>& op) {
    const int N = op.dim();
    Real worst(0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Complex<Real> acc = make_complex<Real>(Real(0), Real(0));
            for (int k = 0; k < N; ++k) acc += op.at(i, k) * op.at(k, j);
            worst = std::max(worst, modulus<Real>(acc - op.at(i, j)));
        }
    return worst;
}

/// max |M_{ij} - M_{ji}|
template <typename Real>
Real symmetry_defect(const BoundaryOperator<Real>& op) {
    Real worst(0);
    for (int i = 0; i < op.dim(); ++i)
        for (int j = 0; j < i; ++j) worst = std::max(worst, modulus<Real>(op.at(i, j) - op.at(j, i)));
    return worst;
}

template <typename Real>
Complex<Real> trace(const BoundaryOperator<Real>& op) {
    Complex<Real> s = make_complex<Real>(Real(0), Real(0));
    for (int i = 0; i < op.dim(); ++i) s += op.at(i, i);
    return s;
}

/// Number of singular values above rel_tol * (largest singular value).
template <typename Real>
int numerical_rank(const BoundaryOperator<Real>& op, double rel_tol = 1e-8) {
    const int N = op.dim();
    if (N == 0) return 0;
    Eigen::MatrixXcd m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const auto& z = op.at(i, j);
            m(i, j) = {static_cast<double>(real_part<Real>(z)), static_cast<double>(imag_part<Real>(z))};
        }
    const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += (sv(i) > rel_tol * sv(0)) ? 1 : 0;
    return rank;
}

}  // namespace qgeom
