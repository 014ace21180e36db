// Reshetikhin-Turaev invariants for a small family of surgery presentations,
// normalized as
//
//   tau(M) = eta^(1 + |L|) kappa^(-sigma(L)) sum_colorings prod_i Delta_{c_i} <L(c)>
//
// so that tau(S^3) = eta. Closed forms for the colored link brackets:
//   framed unknot (framing p), color c:          mu_c^p Delta_c
//   Hopf pair (framings p, q), colors (a, b):    mu_a^p mu_b^q (-1)^(a+b) [(a+1)(b+1)]
#pragma once

#include "qgeom/error.hpp"
#include "qgeom/numeric.hpp"
#include "qgeom/recoupling.hpp"
#include "qgeom/statesum.hpp"
#include "qgeom/triangulation.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace qgeom {

class FramedSurgery {
public:
    enum class Kind { Empty, Unknot, HopfPair };

    static FramedSurgery empty() { return FramedSurgery(Kind::Empty, 0, 0); }
    static FramedSurgery unknot(int p) { return FramedSurgery(Kind::Unknot, p, 0); }
    static FramedSurgery hopf(int p, int q) { return FramedSurgery(Kind::HopfPair, p, q); }

    Kind kind() const { return kind_; }
    int framing() const { return p_; }
    int second_framing() const { return q_; }

    int components() const {
        switch (kind_) {
            case Kind::Empty: return 0;
            case Kind::Unknot: return 1;
            case Kind::HopfPair: return 2;
        }
        return 0;
    }

    /// Signature of the linking matrix.
    int signature() const {
        switch (kind_) {
            case Kind::Empty: return 0;
            case Kind::Unknot: return (p_ > 0) - (p_ < 0);
            case Kind::HopfPair: {
                // [[p, 1], [1, q]]: det = pq - 1, trace = p + q.
                const long long det = 1LL * p_ * q_ - 1;
                if (det < 0) return 0;
                if (det > 0) return (p_ + q_ > 0) ? 2 : -2;
                const int tr = p_ + q_;
                return (tr > 0) - (tr < 0);
            }
        }
        return 0;
    }

    /// Text form accepted by parse(): "empty", "unknot:p=N", "hopf:p=N,q=M".
    std::string str() const {
        switch (kind_) {
            case Kind::Empty: return "empty";
            case Kind::Unknot: return "unknot:p=" + std::to_string(p_);
            case Kind::HopfPair: return "hopf:p=" + std::to_string(p_) + ",q=" + std::to_string(q_);
        }
        return "";
    }

    static FramedSurgery parse(const std::string& text) {
        auto fail = [&](const std::string& why) {
            return ParseFailure("--surgery", 1, 1, "'" + text + "': " + why);
        };
        const auto colon = text.find(':');
        const std::string kind = text.substr(0, colon);
        const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
        int p = 0, q = 0;
        bool have_p = false, have_q = false;
        std::istringstream in(args);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw fail("expected key=value");
            const std::string key = item.substr(0, eq);
            int value;
            try {
                std::size_t used = 0;
                value = std::stoi(item.substr(eq + 1), &used);
                if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw fail("framing must be an integer");
            }
            if (key == "p") {
                p = value;
                have_p = true;
            } else if (key == "q") {
                q = value;
                have_q = true;
            } else {
                throw fail("unknown key '" + key + "'");
            }
        }
        if (kind == "empty") {
            if (have_p || have_q) throw fail("empty surgery takes no framings");
            return empty();
        }
        if (kind == "unknot") {
            if (!have_p || have_q) throw fail("unknot needs exactly p=");
            return unknot(p);
        }
        if (kind == "hopf") {
            if (!have_p || !have_q) throw fail("hopf needs p= and q=");
            return hopf(p, q);
        }
        throw fail("unknown surgery kind '" + kind + "'");
    }

private:
    FramedSurgery(Kind k, int p, int q) : kind_(k), p_(p), q_(q) {}

    Kind kind_;
    int p_;
    int q_;
};

template <typename Real>
Complex<Real> complex_power(const Complex<Real>& z, int n) {
    Complex<Real> base = z;
    if (n < 0) {
        using std::conj;
        // Unit-modulus inputs only (twists, kappa).
        base = Complex<Real>(conj(z));
        n = -n;
    }
    Complex<Real> out = make_complex<Real>(Real(1), Real(0));
    for (int i = 0; i < n; ++i) out *= base;
    return out;
}

template <typename Real>
Complex<Real> rt_invariant(const FramedSurgery& s, const RootParams<Real>& p) {
    using C = Complex<Real>;
    const Real e = eta(p);
    C sum = make_complex<Real>(Real(0), Real(0));
    switch (s.kind()) {
        case FramedSurgery::Kind::Empty:
            sum = C(Real(1));
            break;
        case FramedSurgery::Kind::Unknot:
            for (Color c = 0; c <= p.max_color(); ++c) {
                const Real d = quantum_dimension(c, p);
                sum += C(d * d) * complex_power<Real>(twist(c, p), s.framing());
            }
            break;
        case FramedSurgery::Kind::HopfPair:
            for (Color a = 0; a <= p.max_color(); ++a)
                for (Color b = 0; b <= p.max_color(); ++b) {
                    const Real hopf = quantum_integer<Real>(1LL * (a + 1) * (b + 1), p) * Real(((a + b) % 2) ? -1 : 1);
                    const Real w = quantum_dimension(a, p) * quantum_dimension(b, p) * hopf;
                    sum += C(w) * complex_power<Real>(twist(a, p), s.framing()) *
                           complex_power<Real>(twist(b, p), s.second_framing());
                }
            break;
    }
    Real norm(1);
    for (int i = 0; i < 1 + s.components(); ++i) norm *= e;
    return C(norm) * complex_power<Real>(kappa(p), -s.signature()) * sum;
}

/// Normalized Hopf pairing S_ab = eta (-1)^(a+b) [(a+1)(b+1)].
template <typename Real>
std::vector<std::vector<Real>> s_matrix(const RootParams<Real>& p) {
    const int n = p.num_colors();
    const Real e = eta(p);
    std::vector<std::vector<Real>> S(static_cast<std::size_t>(n), std::vector<Real>(static_cast<std::size_t>(n)));
    for (Color a = 0; a < n; ++a)
        for (Color b = 0; b < n; ++b)
            S[a][b] = e * quantum_integer<Real>(1LL * (a + 1) * (b + 1), p) * Real(((a + b) % 2) ? -1 : 1);
    return S;
}

template <typename Real>
struct TvRtReport {
    Real tv{0};
    Real rt_abs_sq{0};
    Real difference{0};
    double tolerance = 1e-8;
    bool pass = false;
};

template <typename Real>
TvRtReport<Real> compare_tv_rt(const Real& tv, const FramedSurgery& s, const RootParams<Real>& p,
                               double tolerance = 1e-8) {
    TvRtReport<Real> rep;
    rep.tv = tv;
    const Real m = modulus<Real>(rt_invariant(s, p));
    rep.rt_abs_sq = m * m;
    using std::abs;
    rep.difference = abs(rep.tv - rep.rt_abs_sq);
    rep.tolerance = tolerance;
    rep.pass = rep.difference <= Real(tolerance);
    return rep;
}

/// TV of the triangulation against |RT|^2 of the surgery. The caller asserts
/// that both present the same manifold; a mismatch is reported, not thrown.
template <typename Real>
TvRtReport<Real> check_tv_rt(const Triangulation& t, const FramedSurgery& s, const RecouplingTable<Real>& table,
                             const StateSumOptions& opt = {}, double tolerance = 1e-8) {
    return compare_tv_rt(tv_invariant(t, table, opt), s, table.params(), tolerance);
}

}  // namespace qgeom
