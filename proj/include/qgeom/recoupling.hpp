// Temperley-Lieb recoupling theory at A = exp(2 pi i / 4r), in the
// Kauffman-Lins conventions: integer colors c in {0, ..., r-2}, loop value
// Delta_c = (-1)^c [c+1], theta and tetrahedral nets, 6j (F-move)
// coefficients, framing twists and the surgery constants eta and kappa.
#pragma once

#include "qgeom/error.hpp"
#include "qgeom/numeric.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace qgeom {

/// Kauffman-Lins integer color; the spin label is c / 2.
using Color = int;

/// Root-of-unity datum shared by every quantum computation.
template <typename Real>
class RootParams {
public:
    explicit RootParams(int r) : r_(r) {
        if (r < 2) throw Error(ErrorCode::InvalidArgument, "r must be >= 2, got " + std::to_string(r));
    }

    int r() const noexcept { return r_; }
    Color max_color() const noexcept { return r_ - 2; }
    int num_colors() const noexcept { return r_ - 1; }
    bool valid_color(Color c) const noexcept { return c >= 0 && c <= r_ - 2; }

    static constexpr int precision = precision_bits<Real>();

    /// A^m, with the exponent reduced modulo 4r before any floating point.
    Complex<Real> root_power(long long m) const {
        const long long period = 4LL * r_;
        m %= period;
        if (m < 0) m += period;
        const Real angle = pi<Real>() * Real(2 * m) / Real(period);
        using std::cos;
        using std::sin;
        return make_complex<Real>(cos(angle), sin(angle));
    }

    Complex<Real> A() const { return root_power(1); }
    Complex<Real> q() const { return root_power(2); }

private:
    int r_;
};

/// [n] = sin(n pi / r) / sin(pi / r); exactly zero when r divides n.
template <typename Real>
Real quantum_integer(long long n, const RootParams<Real>& p) {
    const long long r = p.r();
    if (n % r == 0) return Real(0);
    using std::sin;
    const long long reduced = ((n % (2 * r)) + 2 * r) % (2 * r);
    return sin(pi<Real>() * Real(reduced) / Real(r)) / sin(pi<Real>() / Real(r));
}

/// [n]! = [1][2]...[n]; vanishes for n >= r.
template <typename Real>
Real quantum_factorial(long long n, const RootParams<Real>& p) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "quantum_factorial of negative argument");
    Real out(1);
    for (long long m = 2; m <= n; ++m) out *= quantum_integer<Real>(m, p);
    return out;
}

inline void require_color(Color c, int r) {
    if (c < 0 || c > r - 2)
        throw Error(ErrorCode::ColorOutOfRange,
                    "color " + std::to_string(c) + " outside [0, " + std::to_string(r - 2) + "]");
}

template <typename Real>
Real quantum_dimension(Color c, const RootParams<Real>& p) {
    require_color(c, p.r());
    const Real v = quantum_integer<Real>(c + 1, p);
    return (c % 2 == 0) ? v : -v;
}

/// Even sum, triangle inequalities and the level bound a + b + c <= 2r - 4.
inline bool is_admissible(Color a, Color b, Color c, int r) noexcept {
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2 != 0) return false;
    if (c > a + b || a > b + c || b > c + a) return false;
    return a + b + c <= 2 * r - 4;
}

template <typename Real>
bool is_admissible(Color a, Color b, Color c, const RootParams<Real>& p) noexcept {
    return is_admissible(a, b, c, p.r());
}

namespace detail {

inline std::string triple_name(Color a, Color b, Color c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

/// [0]!, ..., [r-1]!; every factorial reached from admissible theta/tet data
/// lies in this range, so indexing past it is a logic error.
template <typename Real>
class FactorialTable {
public:
    explicit FactorialTable(const RootParams<Real>& p) : values_(static_cast<std::size_t>(p.r())) {
        values_[0] = Real(1);
        for (int n = 1; n < p.r(); ++n) values_[n] = values_[n - 1] * quantum_integer<Real>(n, p);
    }

    const Real& operator[](int n) const {
        assert(n >= 0 && n < static_cast<int>(values_.size()) && "quantum factorial outside [0, r)");
        return values_[static_cast<std::size_t>(n)];
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }

private:
    std::vector<Real> values_;
};

template <typename Real>
Real theta_closed_form(Color a, Color b, Color c, const FactorialTable<Real>& fact) {
    // Sorted arguments make the result bitwise symmetric.
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    const int x = (a + b - c) / 2;
    const int y = (b + c - a) / 2;
    const int z = (c + a - b) / 2;
    const Real num = fact[x + y + z + 1] * fact[x] * fact[y] * fact[z];
    const Real den = fact[x + y] * fact[y + z] * fact[z + x];
    const Real v = num / den;
    return ((x + y + z) % 2 == 0) ? v : -v;
}

// Faces (a,d,e), (b,c,e), (a,b,f), (c,d,f); opposite pairs (a,c), (b,d), (e,f).
template <typename Real>
Real tet_closed_form(Color a, Color b, Color e, Color c, Color d, Color f, int r,
                     const FactorialTable<Real>& fact) {
    const std::array<int, 4> lo = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
    const std::array<int, 3> hi = {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
    int s_min = 0;
    for (int v : lo) s_min = std::max(s_min, v);
    int s_max = hi[0];
    for (int v : hi) s_max = std::min(s_max, v);
    // [s+1]! vanishes once s + 1 >= r.
    s_max = std::min(s_max, r - 2);

    Real sum(0);
    for (int s = s_min; s <= s_max; ++s) {
        Real den(1);
        for (int v : lo) den *= fact[s - v];
        for (int v : hi) den *= fact[v - s];
        const Real term = fact[s + 1] / den;
        if (s % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    Real outer(1);
    for (int h : hi)
        for (int l : lo) outer *= fact[h - l];
    const Real edges = fact[a] * fact[b] * fact[c] * fact[d] * fact[e] * fact[f];
    return outer / edges * sum;
}

}  // namespace detail

template <typename Real>
Real theta(Color a, Color b, Color c, const RootParams<Real>& p) {
    for (Color x : {a, b, c}) require_color(x, p.r());
    if (!is_admissible(a, b, c, p.r()))
        throw Error(ErrorCode::NotAdmissible, "theta " + detail::triple_name(a, b, c));
    return detail::theta_closed_form(a, b, c, detail::FactorialTable<Real>(p));
}

/// Tetrahedral net Tet[a b e; c d f] with faces (a,d,e), (b,c,e), (a,b,f), (c,d,f).
template <typename Real>
Real tet(Color a, Color b, Color e, Color c, Color d, Color f, const RootParams<Real>& p) {
    for (Color x : {a, b, c, d, e, f}) require_color(x, p.r());
    const std::array<std::array<Color, 3>, 4> faces = {{{a, d, e}, {b, c, e}, {a, b, f}, {c, d, f}}};
    for (const auto& t : faces)
        if (!is_admissible(t[0], t[1], t[2], p.r()))
            throw Error(ErrorCode::NotAdmissible, "tet face " + detail::triple_name(t[0], t[1], t[2]));
    return detail::tet_closed_form(a, b, e, c, d, f, p.r(), detail::FactorialTable<Real>(p));
}

/// F-move coefficient. Legs a, b, c, d are in cyclic order around a planar
/// region; e joins the vertices (a,b,e) and (c,d,e), f joins (b,c,f) and
/// (d,a,f):
///
///   [e-channel] = sum_f F(a,b,c,d; e,f) [f-channel]
///   F = Tet[a b f; c d e] Delta_f / (theta(a,d,f) theta(b,c,f)).
template <typename Real>
Real fmove_coeff(Color a, Color b, Color c, Color d, Color e, Color f, const RootParams<Real>& p) {
    for (Color x : {a, b, c, d, e, f}) require_color(x, p.r());
    if (!is_admissible(a, b, e, p.r()))
        throw Error(ErrorCode::NotAdmissible, "F-move vertex " + detail::triple_name(a, b, e));
    if (!is_admissible(c, d, e, p.r()))
        throw Error(ErrorCode::NotAdmissible, "F-move vertex " + detail::triple_name(c, d, e));
    if (!is_admissible(a, d, f, p.r()) || !is_admissible(b, c, f, p.r())) return Real(0);
    const detail::FactorialTable<Real> fact(p);
    const Real t = detail::tet_closed_form(a, b, f, c, d, e, p.r(), fact);
    return t * quantum_dimension(f, p) /
           (detail::theta_closed_form(a, d, f, fact) * detail::theta_closed_form(b, c, f, fact));
}

/// Framing twist mu_c = (-1)^c A^{c^2 + 2c}.
template <typename Real>
Complex<Real> twist(Color c, const RootParams<Real>& p) {
    require_color(c, p.r());
    const long long m = 1LL * c * c + 2LL * c + 2LL * p.r() * c;  // (-1)^c = A^{2rc}
    return p.root_power(m);
}

/// eta = (A^2 - A^-2) / (i sqrt(2r)) = sqrt(2/r) sin(pi/r).
template <typename Real>
Real eta(const RootParams<Real>& p) {
    using std::sin;
    using std::sqrt;
    return sqrt(Real(2) / Real(p.r())) * sin(pi<Real>() / Real(p.r()));
}

/// Sum of Delta_c^2 over all colors; equals eta^-2.
template <typename Real>
Real global_dim_sq(const RootParams<Real>& p) {
    Real s(0);
    for (Color c = 0; c <= p.max_color(); ++c) {
        const Real d = quantum_dimension(c, p);
        s += d * d;
    }
    return s;
}

/// kappa = eta * sum_c Delta_c^2 mu_c, the framing-change constant.
template <typename Real>
Complex<Real> kappa(const RootParams<Real>& p) {
    Complex<Real> s = make_complex<Real>(Real(0), Real(0));
    for (Color c = 0; c <= p.max_color(); ++c) {
        const Real d = quantum_dimension(c, p);
        s += twist(c, p) * Complex<Real>(d * d);
    }
    return s * Complex<Real>(eta(p));
}

/// Precomputed Delta, theta and Tet values for one root of unity. Immutable
/// after construction and safe to share between threads. The Tet table is
/// materialized only while it stays small; beyond that Tet is evaluated on
/// demand from the factorial table.
template <typename Real>
class RecouplingTable {
public:
    explicit RecouplingTable(const RootParams<Real>& p) : params_(p), fact_(p), n_(p.num_colors()) {
        delta_.resize(static_cast<std::size_t>(n_));
        for (Color c = 0; c < n_; ++c) delta_[c] = quantum_dimension(c, p);
        theta_.assign(static_cast<std::size_t>(n_ * n_ * n_), Real(0));
        for (Color a = 0; a < n_; ++a)
            for (Color b = 0; b < n_; ++b)
                for (Color c = 0; c < n_; ++c)
                    if (is_admissible(a, b, c, p.r()))
                        theta_[index3(a, b, c)] = detail::theta_closed_form(a, b, c, fact_);
        const long long tet_entries = 1LL * n_ * n_ * n_ * n_ * n_ * n_;
        if (tet_entries <= kMaxTetTable) {
            tet_.assign(static_cast<std::size_t>(tet_entries), Real(0));
            for (Color a = 0; a < n_; ++a)
                for (Color b = 0; b < n_; ++b)
                    for (Color e = 0; e < n_; ++e) {
                        for (Color c = 0; c < n_; ++c) {
                            if (!is_admissible(b, c, e, p.r())) continue;
                            for (Color d = 0; d < n_; ++d) {
                                if (!is_admissible(a, d, e, p.r())) continue;
                                for (Color f = 0; f < n_; ++f) {
                                    if (!is_admissible(a, b, f, p.r()) || !is_admissible(c, d, f, p.r()))
                                        continue;
                                    tet_[index6(a, b, e, c, d, f)] =
                                        detail::tet_closed_form(a, b, e, c, d, f, p.r(), fact_);
                                }
                            }
                        }
                    }
        }
    }

    const RootParams<Real>& params() const noexcept { return params_; }
    int r() const noexcept { return params_.r(); }
    int num_colors() const noexcept { return n_; }

    bool admissible(Color a, Color b, Color c) const noexcept { return is_admissible(a, b, c, params_.r()); }

    const Real& delta(Color c) const { return delta_[static_cast<std::size_t>(c)]; }

    /// Caller guarantees admissibility.
    const Real& theta(Color a, Color b, Color c) const { return theta_[index3(a, b, c)]; }

    /// Caller guarantees that all four faces are admissible.
    Real tet(Color a, Color b, Color e, Color c, Color d, Color f) const {
        if (!tet_.empty()) return tet_[index6(a, b, e, c, d, f)];
        return detail::tet_closed_form(a, b, e, c, d, f, params_.r(), fact_);
    }

    /// F(a,b,c,d; e,f); zero whenever any of the four vertices is inadmissible.
    Real fmove(Color a, Color b, Color c, Color d, Color e, Color f) const {
        if (!admissible(a, b, e) || !admissible(c, d, e) || !admissible(a, d, f) || !admissible(b, c, f))
            return Real(0);
        return tet(a, b, f, c, d, e) * delta(f) / (theta(a, d, f) * theta(b, c, f));
    }

private:
    static constexpr long long kMaxTetTable = 1LL << 21;

    std::size_t index3(Color a, Color b, Color c) const {
        return static_cast<std::size_t>((a * n_ + b) * n_ + c);
    }
    std::size_t index6(Color a, Color b, Color e, Color c, Color d, Color f) const {
        long long i = a;
        for (Color x : {b, e, c, d, f}) i = i * n_ + x;
        return static_cast<std::size_t>(i);
    }

    RootParams<Real> params_;
    detail::FactorialTable<Real> fact_;
    int n_;
    std::vector<Real> delta_;
    std::vector<Real> theta_;
    std::vector<Real> tet_;
};

}  // namespace qgeom
