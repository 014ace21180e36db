// Exact-rational positive geometry: Plücker coordinates, total positivity,
// the amplituhedron map Y = C Z, the moment map onto the hypersimplex and
// canonical forms of the k = 1, m = 2 amplituhedron (convex polygons).
//
// No floating point anywhere in this file.
#pragma once

#include "qgeom/error.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qgeom {

using Rational = boost::multiprecision::mpq_rational;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    RationalMatrix select_rows(const std::vector<int>& idx) const {
        RationalMatrix m(static_cast<int>(idx.size()), cols_);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }

    RationalMatrix select_cols(const std::vector<int>& idx) const {
        RationalMatrix m(rows_, static_cast<int>(idx.size()));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    RationalMatrix transpose() const {
        RationalMatrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    RationalMatrix operator*(const RationalMatrix& b) const {
        if (cols_ != b.rows_)
            throw Error(ErrorCode::DimensionMismatch, std::to_string(rows_) + "x" + std::to_string(cols_) + " times " +
                                                          std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        RationalMatrix m(rows_, b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }

    /// Rows of b appended below this matrix.
    RationalMatrix stack(const RationalMatrix& b) const {
        if (rows_ > 0 && b.rows_ > 0 && cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "stacking matrices of different widths");
        RationalMatrix m = *this;
        if (rows_ == 0) m.cols_ = b.cols_;
        m.a_.insert(m.a_.end(), b.a_.begin(), b.a_.end());
        m.rows_ += b.rows_;
        return m;
    }

    bool operator==(const RationalMatrix&) const = default;

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).str();
            os << '\n';
        }
        return os.str();
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Reduced row echelon form; `pivots` receives the pivot columns.
inline RationalMatrix rref(RationalMatrix m, std::vector<int>* pivots = nullptr) {
    int row = 0;
    std::vector<int> piv;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        const Rational inv = 1 / m(row, col);
        for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = piv;
    return m;
}

inline int rank(const RationalMatrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return static_cast<int>(piv.size());
}

inline Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const int n = m.rows();
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m(col, j), m(p, j));
            det = -det;
        }
        det *= m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) / m(col, col);
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// Maximal minors of a k x n matrix, keyed by sorted column subsets (0-based).
struct PluckerVector {
    int k = 0;
    int n = 0;
    std::map<std::vector<int>, Rational> coords;

    const Rational& at(const std::vector<int>& sorted_subset) const { return coords.at(sorted_subset); }

    /// Coordinate of an ordered index list: sign of the sorting permutation
    /// times the sorted coordinate; zero on repeated indices.
    Rational ordered(std::vector<int> idx) const {
        int sign = 1;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
                if (idx[j] > idx[j + 1]) {
                    std::swap(idx[j], idx[j + 1]);
                    sign = -sign;
                } else if (idx[j] == idx[j + 1]) {
                    return 0;
                }
        for (std::size_t j = 0; j + 1 < idx.size(); ++j)
            if (idx[j] == idx[j + 1]) return 0;
        return sign * coords.at(idx);
    }
};

inline PluckerVector pluecker(const RationalMatrix& C) {
    const int k = C.rows(), n = C.cols();
    if (k == 0 || k > n || rank(C) < k)
        throw Error(ErrorCode::RankDeficient, "C (" + std::to_string(k) + "x" + std::to_string(n) + ") is not of full rank k");
    PluckerVector pv{k, n, {}};
    for (const auto& s : subsets(n, k)) pv.coords.emplace(s, determinant(C.select_cols(s)));
    return pv;
}

/// Every quadratic Plücker relation
///   sum_l (-1)^l p(I, j_l) p(J \ j_l) = 0,  |I| = k-1, |J| = k+1.
inline bool plucker_relations_hold(const PluckerVector& pv) {
    const int k = pv.k, n = pv.n;
    if (k < 2 || k > n - 2) return true;
    bool nonzero = false;
    for (const auto& [s, v] : pv.coords) nonzero = nonzero || v != 0;
    if (!nonzero) return false;
    for (const auto& I : subsets(n, k - 1))
        for (const auto& J : subsets(n, k + 1)) {
            Rational sum = 0;
            for (int l = 0; l <= k; ++l) {
                std::vector<int> left = I;
                left.push_back(J[l]);
                std::vector<int> right;
                for (int m = 0; m <= k; ++m)
                    if (m != l) right.push_back(J[m]);
                const Rational term = pv.ordered(left) * pv.ordered(right);
                sum += (l % 2 == 0) ? term : Rational(-term);
            }
            if (sum != 0) return false;
        }
    return true;
}

namespace detail {

/// Maximal minors taken along the longer side, rows chosen in increasing order.
inline std::vector<Rational> ordered_maximal_minors(const RationalMatrix& m) {
    const RationalMatrix tall = (m.rows() >= m.cols()) ? m : m.transpose();
    std::vector<Rational> out;
    for (const auto& s : subsets(tall.rows(), tall.cols())) out.push_back(determinant(tall.select_rows(s)));
    return out;
}

}  // namespace detail

/// All ordered maximal minors strictly positive.
inline bool is_totally_positive(const RationalMatrix& Z) {
    if (Z.rows() == 0 || Z.cols() == 0) return false;
    for (const auto& d : detail::ordered_maximal_minors(Z))
        if (d <= 0) return false;
    return true;
}

/// All ordered maximal minors nonnegative and the matrix of full rank.
inline bool is_totally_nonneg(const RationalMatrix& C) {
    if (C.rows() == 0 || C.cols() == 0) return false;
    bool some_positive = false;
    for (const auto& d : detail::ordered_maximal_minors(C)) {
        if (d < 0) return false;
        some_positive = some_positive || d > 0;
    }
    return some_positive;
}

/// Point of the amplituhedron: a k x (k+m) matrix up to row operations.
class AmplituhedronPoint {
public:
    explicit AmplituhedronPoint(RationalMatrix Y) : Y_(std::move(Y)) {}

    const RationalMatrix& matrix() const { return Y_; }
    int k() const { return Y_.rows(); }
    RationalMatrix row_space() const { return rref(Y_); }
    bool same_point(const AmplituhedronPoint& o) const { return row_space() == o.row_space(); }

private:
    RationalMatrix Y_;
};

inline AmplituhedronPoint amplituhedron_point(const RationalMatrix& C, const RationalMatrix& Z) {
    if (C.cols() != Z.rows())
        throw Error(ErrorCode::DimensionMismatch, "C has " + std::to_string(C.cols()) + " columns but Z has " +
                                                      std::to_string(Z.rows()) + " rows");
    if (Z.cols() < C.rows())
        throw Error(ErrorCode::DimensionMismatch, "Z must have at least k = " + std::to_string(C.rows()) + " columns");
    if (rank(C) < C.rows()) throw Error(ErrorCode::RankDeficient, "C is not of full rank");
    RationalMatrix Y = C * Z;
    if (rank(Y) < C.rows()) throw Error(ErrorCode::RankCollapse, "C Z has rank below k");
    return AmplituhedronPoint(std::move(Y));
}

/// mu_i = sum_{J containing i} p_J^2 / sum_J p_J^2.
inline std::vector<Rational> moment_map(const RationalMatrix& C) {
    const PluckerVector pv = pluecker(C);
    std::vector<Rational> num(static_cast<std::size_t>(pv.n), Rational(0));
    Rational total = 0;
    for (const auto& [J, p] : pv.coords) {
        const Rational sq = p * p;
        total += sq;
        for (int i : J) num[i] += sq;
    }
    for (auto& x : num) x /= total;
    return num;
}

inline bool hypersimplex_contains(const std::vector<Rational>& x, int k, int n) {
    if (static_cast<int>(x.size()) != n) return false;
    Rational sum = 0;
    for (const auto& v : x) {
        if (v < 0 || v > 1) return false;
        sum += v;
    }
    return sum == k;
}

inline std::vector<std::vector<int>> hypersimplex_vertices(int k, int n) {
    std::vector<std::vector<int>> out;
    for (const auto& s : subsets(n, k)) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        for (int i : s) v[i] = 1;
        out.push_back(v);
    }
    return out;
}

/// det of Y's rows stacked on the selected rows of Z (0-based indices).
inline Rational bracket(const RationalMatrix& Y, const RationalMatrix& Z, const std::vector<int>& idx) {
    if (Y.cols() != Z.cols() || Y.rows() + static_cast<int>(idx.size()) != Z.cols())
        throw Error(ErrorCode::DimensionMismatch, "bracket needs k + |idx| = k + m");
    for (int i : idx)
        if (i < 0 || i >= Z.rows()) throw Error(ErrorCode::DimensionMismatch, "row index " + std::to_string(i) + " out of range");
    return determinant(Y.stack(Z.select_rows(idx)));
}

// -- polygons (k = 1, m = 2) ---------------------------------------------------

using PolygonTriangle = std::array<int, 3>;
using PolygonTriangulation = std::vector<PolygonTriangle>;

/// Throws NotATriangulation unless `tris` triangulates the convex n-gon 0..n-1.
inline void check_polygon_triangulation(const PolygonTriangulation& tris, int n) {
    auto fail = [](const std::string& why) { return Error(ErrorCode::NotATriangulation, why); };
    if (n < 3) throw fail("polygon needs at least 3 vertices");
    if (static_cast<int>(tris.size()) != n - 2)
        throw fail("expected " + std::to_string(n - 2) + " triangles, got " + std::to_string(tris.size()));
    std::map<std::pair<int, int>, int> uses;
    std::set<PolygonTriangle> seen;
    for (auto t : tris) {
        for (int v : t)
            if (v < 0 || v >= n) throw fail("vertex " + std::to_string(v + 1) + " out of range");
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) throw fail("degenerate triangle");
        if (!seen.insert(t).second) throw fail("repeated triangle");
        ++uses[{t[0], t[1]}];
        ++uses[{t[1], t[2]}];
        ++uses[{t[0], t[2]}];
    }
    std::vector<std::pair<int, int>> chords;
    for (const auto& [e, count] : uses) {
        const bool side = (e.second == e.first + 1) || (e.first == 0 && e.second == n - 1);
        if (side && count != 1) throw fail("polygon side used " + std::to_string(count) + " times");
        if (!side) {
            if (count != 2) throw fail("diagonal not shared by exactly two triangles");
            chords.push_back(e);
        }
    }
    for (int i = 0; i < n; ++i)
        if (!uses.count(std::minmax(i, (i + 1) % n))) throw fail("polygon side not covered");
    for (std::size_t a = 0; a < chords.size(); ++a)
        for (std::size_t b = a + 1; b < chords.size(); ++b) {
            const auto [p, q] = chords[a];
            const auto [s, t] = chords[b];
            const bool crosses = (p < s && s < q && q < t) || (s < p && p < t && t < q);
            if (crosses) throw fail("diagonals cross");
        }
}

/// All triangulations of the convex n-gon with vertices 0..n-1.
inline std::vector<PolygonTriangulation> polygon_triangulations(int n) {
    std::function<std::vector<PolygonTriangulation>(int, int)> rec = [&](int lo, int hi) {
        std::vector<PolygonTriangulation> out;
        if (hi - lo < 2) {
            out.emplace_back();
            return out;
        }
        for (int apex = lo + 1; apex < hi; ++apex)
            for (const auto& left : rec(lo, apex))
                for (const auto& right : rec(apex, hi)) {
                    PolygonTriangulation t = left;
                    t.insert(t.end(), right.begin(), right.end());
                    t.push_back({lo, apex, hi});
                    out.push_back(std::move(t));
                }
        return out;
    };
    return rec(0, n - 1);
}

inline PolygonTriangulation fan_triangulation(int n, int apex = 0) {
    PolygonTriangulation t;
    for (int i = 1; i + 1 < n; ++i) {
        PolygonTriangle tri = {apex, (apex + i) % n, (apex + i + 1) % n};
        std::sort(tri.begin(), tri.end());
        t.push_back(tri);
    }
    return t;
}

/// "1,2,3;1,3,4" (1-based) -> 0-based triangles.
inline PolygonTriangulation parse_polygon_triangulation(const std::string& text) {
    PolygonTriangulation out;
    std::istringstream in(text);
    std::string item;
    int column = 1;
    while (std::getline(in, item, ';')) {
        std::istringstream is(item);
        std::string tok;
        std::vector<int> v;
        while (std::getline(is, tok, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stoi(tok, &used) - 1);
                if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("junk");
            } catch (const std::exception&) {
                throw ParseFailure("--triangulation", 1, column, "bad vertex index '" + tok + "'");
            }
        }
        if (v.size() != 3) throw ParseFailure("--triangulation", 1, column, "each triangle needs 3 indices");
        out.push_back({v[0], v[1], v[2]});
        column += static_cast<int>(item.size()) + 1;
    }
    return out;
}

/// Canonical form of the polygon conv(Z_1..Z_n) at Y, summed over triangles:
///   sum_(a<b<c) <a b c>^2 / (<Y a b> <Y b c> <Y c a>).
inline Rational polygon_canonical_form(const RationalMatrix& Z, const PolygonTriangulation& tris, const RationalMatrix& Y) {
    if (Z.cols() != 3 || Y.rows() != 1 || Y.cols() != 3)
        throw Error(ErrorCode::DimensionMismatch, "polygon forms need Z n x 3 and Y 1 x 3");
    check_polygon_triangulation(tris, Z.rows());
    const RationalMatrix none(0, 3);
    Rational total = 0;
    for (auto t : tris) {
        std::sort(t.begin(), t.end());
        const auto [a, b, c] = t;
        const Rational ab = bracket(Y, Z, {a, b}), bc = bracket(Y, Z, {b, c}), ca = bracket(Y, Z, {c, a});
        if (ab == 0 || bc == 0 || ca == 0) throw Error(ErrorCode::PointOnBoundary, "Y lies on a triangle side");
        const Rational abc = bracket(none, Z, {a, b, c});
        total += abc * abc / (ab * bc * ca);
    }
    return total;
}

/// <Y Z_i Z_{i+1}> for i = 1..n (cyclically).
inline std::vector<Rational> cyclic_brackets(const RationalMatrix& Y, const RationalMatrix& Z) {
    std::vector<Rational> out;
    for (int i = 0; i < Z.rows(); ++i) out.push_back(bracket(Y, Z, {i, (i + 1) % Z.rows()}));
    return out;
}

// -- generators ----------------------------------------------------------------

/// Rows (1, t, t^2, ..., t^(d-1)) for t = 1..n; every ordered maximal minor is
/// a positive Vandermonde determinant.
inline RationalMatrix moment_curve(int n, int d) {
    RationalMatrix Z(n, d);
    for (int i = 0; i < n; ++i) {
        Rational x = 1;
        for (int j = 0; j < d; ++j) {
            Z(i, j) = x;
            x *= (i + 1);
        }
    }
    return Z;
}

/// Random totally nonnegative k x n matrix: the top k rows of a product of
/// elementary nonnegative bidiagonal factors and a positive diagonal.
template <typename Rng>
RationalMatrix random_tnn(int k, int n, Rng& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 4), pick(0, std::max(0, n - 2)), kind(0, 1);
    RationalMatrix M = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i) M(i, i) = Rational(num(rng), den(rng));
    const int factors = 2 * n * n;
    for (int f = 0; f < factors && n > 1; ++f) {
        const int i = pick(rng);
        const Rational t(num(rng), den(rng));
        RationalMatrix E = RationalMatrix::identity(n);
        if (kind(rng) == 0)
            E(i, i + 1) = t;
        else
            E(i + 1, i) = t;
        M = M * E;
    }
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rows[i] = i;
    return M.select_rows(rows);
}

/// Random strictly interior point Y = sum_i c_i Z_i with positive rational c_i.
/// For polygons (three columns) points on a chord Z_i Z_j are redrawn, since
/// every triangle-sum form is singular there term by term.
template <typename Rng>
RationalMatrix random_interior_point(const RationalMatrix& Z, Rng& rng) {
    std::uniform_int_distribution<int> num(1, 50), den(1, 7);
    RationalMatrix C(1, Z.rows());
    while (true) {
        for (int i = 0; i < Z.rows(); ++i) C(0, i) = Rational(num(rng), den(rng));
        RationalMatrix Y = C * Z;
        bool generic = true;
        if (Z.cols() == 3)
            for (int i = 0; i < Z.rows() && generic; ++i)
                for (int j = i + 1; j < Z.rows() && generic; ++j) generic = bracket(Y, Z, {i, j}) != 0;
        if (generic) return Y;
    }
}

/// Dimension of the image of C -> rowspan(C Z) in Gr(k, k+m) near C: the rank
/// of the differential dC -> dC Z composed with the projection onto
/// K^(k+m) / rowspan(Y) in every row.
inline int amplituhedron_image_dimension(const RationalMatrix& C, const RationalMatrix& Z) {
    const AmplituhedronPoint Y = amplituhedron_point(C, Z);
    std::vector<int> piv;
    const RationalMatrix R = rref(Y.matrix(), &piv);
    std::vector<int> free_cols;
    for (int j = 0; j < Z.cols(); ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_cols.push_back(j);
    const int k = C.rows(), m = static_cast<int>(free_cols.size());
    // Quotient images of every Z row; the differential is block diagonal with
    // k copies of this map.
    RationalMatrix Q(Z.rows(), m);
    for (int I = 0; I < Z.rows(); ++I) {
        std::vector<Rational> v(static_cast<std::size_t>(Z.cols()));
        for (int j = 0; j < Z.cols(); ++j) v[j] = Z(I, j);
        for (std::size_t r = 0; r < piv.size(); ++r) {
            const Rational f = v[piv[r]];
            if (f == 0) continue;
            for (int j = 0; j < Z.cols(); ++j) v[j] -= f * R(static_cast<int>(r), j);
        }
        for (int j = 0; j < m; ++j) Q(I, j) = v[free_cols[j]];
    }
    return k * rank(Q);
}

// -- matrix files: comma-separated rationals, one row per line ------------------

inline Rational parse_rational(const std::string& tok, const std::string& source, int line, int col) {
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { return ParseFailure(source, line, col, "'" + tok + "': " + why); };
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    const std::size_t digits_start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == digits_start) throw fail("expected an integer or p/q");
    if (i < tok.size()) {
        if (tok[i] != '/') throw fail("unexpected character");
        ++i;
        const std::size_t den_start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i == den_start || i != tok.size()) throw fail("malformed denominator");
        bool zero = true;
        for (std::size_t j = den_start; j < tok.size(); ++j) zero = zero && tok[j] == '0';
        if (zero) throw fail("zero denominator");
    }
    std::string text = tok;
    if (!text.empty() && text[0] == '+') text.erase(0, 1);
    return Rational(text);
}

inline RationalMatrix parse_matrix(std::istream& in, const std::string& source = "<input>") {
    std::vector<std::vector<Rational>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string raw = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            const std::size_t b = raw.find_first_not_of(" \t\r");
            const std::size_t e = raw.find_last_not_of(" \t\r");
            const std::string tok = (b == std::string::npos) ? "" : raw.substr(b, e - b + 1);
            row.push_back(parse_rational(tok, source, lineno, static_cast<int>(start + (b == std::string::npos ? 0 : b)) + 1));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseFailure(source, lineno, 1, "row has " + std::to_string(row.size()) + " entries, expected " +
                                                      std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseFailure(source, lineno + 1, 1, "empty matrix");
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline RationalMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, path);
    return parse_matrix(in, path);
}

}  // namespace qgeom
