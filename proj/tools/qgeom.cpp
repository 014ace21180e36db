// qgeom command-line front end. Every result is a single-line record on
// stdout; errors go to stderr as `error code=... message=...`.
//
// Exit codes: 0 success, 1 a requested check failed, 2 bad input.

#include "qgeom/qgeom.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qgeom;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;

struct Globals {
    int r = 3;
    int precision = 64;
    int threads = 0;
    std::uint64_t seed = 0;
    bool timings = false;
};

/// Runs f with a default-constructed value of the real type selected by
/// --precision: <= 53 bits double, <= 64 long double, otherwise 128-bit.
template <typename F>
int with_real(int bits, F&& f) {
    if (bits <= 53) return f(double{});
    if (bits <= 64) return f(static_cast<long double>(0));
    return f(HighReal{});
}

template <typename Real>
int effective_bits() {
    return precision_bits<Real>();
}

std::string sci(double x) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(3) << std::scientific << x;
    return os.str();
}

std::string join_rationals(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s;
}

std::string join_subset(const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out;
}

std::string matrix_inline(const RationalMatrix& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i) {
        if (i) s += ';';
        for (int j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).str();
    }
    return s;
}

template <typename Real>
Record quantum_record(const std::string& kind, const Globals& g) {
    Record rec(kind);
    rec.add("r", g.r).add("precision", effective_bits<Real>());
    return rec;
}

void emit(const Record& rec) { std::cout << rec.str() << '\n'; }

// -- recoupling ---------------------------------------------------------------

int cmd_recoupling_table(const Globals& g, const std::string& format) {
    if (format != "tsv" && format != "records")
        throw Error(ErrorCode::InvalidArgument, "--format must be tsv or records");
    return with_real(g.precision, [&](auto tag) {
        using Real = decltype(tag);
        const RootParams<Real> p(g.r);
        const RecouplingTable<Real> t(p);
        const int n = t.num_colors();
        auto line = [&](const std::string& kind, const std::vector<Color>& cols, const Real& v) {
            static const char* names[] = {"a", "b", "c", "d", "e", "f"};
            if (format == "tsv") {
                std::cout << kind;
                for (Color c : cols) std::cout << '\t' << c;
                std::cout << '\t' << format_real(v) << '\n';
                return;
            }
            Record rec(kind);
            if (kind == "delta") {
                rec.add("c", cols[0]);
            } else if (kind == "tet") {
                static const char* tn[] = {"a", "b", "e", "c", "d", "f"};
                for (std::size_t i = 0; i < cols.size(); ++i) rec.add(tn[i], cols[i]);
            } else {
                for (std::size_t i = 0; i < cols.size(); ++i) rec.add(names[i], cols[i]);
            }
            rec.add("value", format_real(v));
            emit(rec);
        };
        if (format == "records") emit(quantum_record<Real>("recoupling", g).add("colors", n));
        for (Color c = 0; c < n; ++c) line("delta", {c}, t.delta(c));
        for (Color a = 0; a < n; ++a)
            for (Color b = 0; b < n; ++b)
                for (Color c = 0; c < n; ++c)
                    if (t.admissible(a, b, c)) line("theta", {a, b, c}, t.theta(a, b, c));
        for (Color a = 0; a < n; ++a)
            for (Color b = 0; b < n; ++b)
                for (Color e = 0; e < n; ++e)
                    for (Color c = 0; c < n; ++c)
                        for (Color d = 0; d < n; ++d)
                            for (Color f = 0; f < n; ++f)
                                if (t.admissible(a, d, e) && t.admissible(b, c, e) && t.admissible(a, b, f) &&
                                    t.admissible(c, d, f))
                                    line("tet", {a, b, e, c, d, f}, t.tet(a, b, e, c, d, f));
        for (Color a = 0; a < n; ++a)
            for (Color b = 0; b < n; ++b)
                for (Color c = 0; c < n; ++c)
                    for (Color d = 0; d < n; ++d)
                        for (Color e = 0; e < n; ++e)
                            for (Color f = 0; f < n; ++f)
                                if (t.admissible(a, b, e) && t.admissible(c, d, e) && t.admissible(a, d, f) &&
                                    t.admissible(b, c, f))
                                    line("fmove", {a, b, c, d, e, f}, t.fmove(a, b, c, d, e, f));
        return kExitOk;
    });
}

// -- spin networks --------------------------------------------------------------

int cmd_spinnet_eval(const Globals& g, const std::string& file) {
    const SpinGraph graph = parse_spin_graph_file(file);
    return with_real(g.precision, [&](auto tag) {
        using Real = decltype(tag);
        const RootParams<Real> p(g.r);
        const RecouplingTable<Real> t(p);
        SpinNetEvaluator<Real> ev(t);
        const Real v = ev.evaluate(graph);
        emit(quantum_record<Real>("spinnet", g)
                 .add("file", file)
                 .add("digest", file_digest(file))
                 .add("vertices", graph.num_vertices())
                 .add("edges", graph.num_edges())
                 .add("nodes", ev.nodes_visited())
                 .add("value", format_real(v)));
        return kExitOk;
    });
}

// -- Turaev-Viro ----------------------------------------------------------------

int cmd_tv(const Globals& g, const std::string& file, bool report_colorings) {
    const Triangulation tri = load_triangulation(file);
    return with_real(g.precision, [&](auto tag) {
        using Real = decltype(tag);
        const RootParams<Real> p(g.r);
        const RecouplingTable<Real> t(p);
        const auto res = tv_state_sum(tri, t, StateSumOptions{g.threads});
        Record rec = quantum_record<Real>("tv", g);
        rec.add("file", file)
            .add("digest", file_digest(file))
            .add("tets", tri.num_tets())
            .add("vertices", tri.num_vertices())
            .add("edges", tri.num_edges())
            .add("triangles", tri.num_triangles())
            .add("value", format_real(res.value));
        if (report_colorings) rec.add("colorings", res.colorings).add("visits", res.visits);
        emit(rec);
        if (report_colorings)
            for (std::size_t c = 0; c < res.partition_visits.size(); ++c)
                emit(Record("partition").add("first_edge_color", static_cast<int>(c)).add("visits", res.partition_visits[c]));
        return kExitOk;
    });
}

int cmd_pachner(const Globals& g, const std::string& file, const std::string& move, int at, const std::string& output,
                bool check) {
    const Triangulation before = load_triangulation(file);
    Triangulation after;
    if (move == "2-3")
        after = pachner_23(before, at);
    else if (move == "1-4")
        after = pachner_14(before, at);
    else
        throw Error(ErrorCode::InvalidArgument, "--move must be 2-3 or 1-4");

    Record rec("pachner");
    rec.add("file", file)
        .add("digest", file_digest(file))
        .add("move", move)
        .add("at", at)
        .add("tets_before", before.num_tets())
        .add("tets_after", after.num_tets());
    int code = kExitOk;
    if (check) {
        code = with_real(g.precision, [&](auto tag) {
            using Real = decltype(tag);
            const RootParams<Real> p(g.r);
            const RecouplingTable<Real> t(p);
            const Real a = tv_invariant(before, t, StateSumOptions{g.threads});
            const Real b = tv_invariant(after, t, StateSumOptions{g.threads});
            using std::abs;
            const double tol = 1e-8;
            const bool pass = abs(a - b) <= Real(tol);
            rec.add("r", g.r)
                .add("tv_before", format_real(a))
                .add("tv_after", format_real(b))
                .add("tolerance", sci(tol))
                .add("pass", pass);
            return pass ? kExitOk : kExitCheckFailed;
        });
    }
    if (output.empty()) {
        // The new triangulation is the product; the summary goes to stderr.
        std::cout << serialize(after);
        std::cerr << rec.str() << '\n';
    } else {
        std::ofstream out(output);
        if (!out) throw Error(ErrorCode::FileNotFound, output);
        out << serialize(after);
        rec.add("output", output);
        emit(rec);
    }
    return code;
}

int cmd_tvcode(const Globals& g, const std::string& file, bool check_projector, int expect_rank) {
    const SurfaceTriangulation s = load_surface(file);
    return with_real(g.precision, [&](auto tag) {
        using Real = decltype(tag);
        const RootParams<Real> p(g.r);
        const RecouplingTable<Real> t(p);
        const auto op = tv_boundary_operator(s, t, StateSumOptions{g.threads});
        const Real idem = idempotence_defect(op);
        const Real sym = symmetry_defect(op);
        const auto tr = trace(op);
        const int rank = numerical_rank(op);
        const double tol = 1e-8;
        Record rec = quantum_record<Real>("tvcode", g);
        rec.add("surface", file)
            .add("digest", file_digest(file))
            .add("genus", s.genus())
            .add("dim", op.dim())
            .add("colorings", op.colorings)
            .add("trace_re", format_real(real_part<Real>(tr), 12))
            .add("trace_im", format_real(imag_part<Real>(tr), 12))
            .add("rank", rank)
            .add("idempotence_defect", sci(static_cast<double>(idem)))
            .add("symmetry_defect", sci(static_cast<double>(sym)));
        bool pass = true;
        if (check_projector) {
            const bool ok = idem <= Real(tol);
            rec.add("projector", ok).add("tolerance", sci(tol));
            pass = pass && ok;
        }
        if (expect_rank >= 0) {
            const bool ok = rank == expect_rank;
            rec.add("expected_rank", expect_rank).add("rank_ok", ok);
            pass = pass && ok;
        }
        if (check_projector || expect_rank >= 0) rec.add("pass", pass);
        emit(rec);
        return pass ? kExitOk : kExitCheckFailed;
    });
}

// -- surgery --------------------------------------------------------------------

int cmd_rt(const Globals& g, const std::string& spec) {
    const FramedSurgery s = FramedSurgery::parse(spec);
    return with_real(g.precision, [&](auto tag) {
        using Real = decltype(tag);
        const RootParams<Real> p(g.r);
        const auto z = rt_invariant(s, p);
        const Real m = modulus<Real>(z);
        emit(quantum_record<Real>("rt", g)
                 .add("surgery", s.str())
                 .add("signature", s.signature())
                 .add("re", format_real(real_part<Real>(z)))
                 .add("im", format_real(imag_part<Real>(z)))
                 .add("abs", format_real(m))
                 .add("abs_sq", format_real(Real(m * m)))
                 .add("eta", format_real(eta(p))));
        return kExitOk;
    });
}

int cmd_check_tv_rt(const Globals& g, const std::string& file, const std::string& spec, double tol) {
    const Triangulation tri = load_triangulation(file);
    const FramedSurgery s = FramedSurgery::parse(spec);
    return with_real(g.precision, [&](auto tag) {
        using Real = decltype(tag);
        const RootParams<Real> p(g.r);
        const RecouplingTable<Real> t(p);
        const auto rep = check_tv_rt(tri, s, t, StateSumOptions{g.threads}, tol);
        emit(quantum_record<Real>("check", g)
                 .add("name", "tv-rt")
                 .add("triangulation", file)
                 .add("digest", file_digest(file))
                 .add("surgery", s.str())
                 .add("tv", format_real(rep.tv))
                 .add("rt_abs_sq", format_real(rep.rt_abs_sq))
                 .add("difference", sci(static_cast<double>(rep.difference)))
                 .add("tolerance", sci(tol))
                 .add("pass", rep.pass));
        return rep.pass ? kExitOk : kExitCheckFailed;
    });
}

/// TV amplitude and a polygon canonical form side by side. No map between
/// the two sides is computed; they only share r and q.
int cmd_check_thm2(const Globals& g, const std::string& file, const std::string& zfile, const std::string& yfile) {
    const Triangulation tri = load_triangulation(file);
    const RationalMatrix Z = load_matrix(zfile);
    const RationalMatrix Y = load_matrix(yfile);
    const Rational form = polygon_canonical_form(Z, fan_triangulation(Z.rows()), Y);
    return with_real(g.precision, [&](auto tag) {
        using Real = decltype(tag);
        const RootParams<Real> p(g.r);
        const RecouplingTable<Real> t(p);
        const Real tv = tv_invariant(tri, t, StateSumOptions{g.threads});
        const auto q = p.q();
        emit(quantum_record<Real>("thm2", g)
                 .add("q_re", format_real(real_part<Real>(q)))
                 .add("q_im", format_real(imag_part<Real>(q)))
                 .add("triangulation", file)
                 .add("tv", format_real(tv))
                 .add("z", zfile)
                 .add("y", yfile)
                 .add("canonical_form", form.str())
                 .add("map", "none"));
        return kExitOk;
    });
}

// -- positive geometry ------------------------------------------------------------

int cmd_amp_pluecker(const std::string& file) {
    const RationalMatrix C = load_matrix(file);
    const PluckerVector pv = pluecker(C);
    for (const auto& [subset, value] : pv.coords)
        emit(Record("pluecker").add("subset", join_subset(subset)).add("value", value.str()));
    bool nonneg = true;
    for (const auto& [subset, value] : pv.coords) nonneg = nonneg && value >= 0;
    emit(Record("pluecker_summary")
             .add("file", file)
             .add("digest", file_digest(file))
             .add("k", pv.k)
             .add("n", pv.n)
             .add("coordinates", static_cast<int>(pv.coords.size()))
             .add("nonnegative", nonneg)
             .add("relations_hold", plucker_relations_hold(pv)));
    return kExitOk;
}

int cmd_amp_positive(const std::string& file) {
    const RationalMatrix M = load_matrix(file);
    emit(Record("positive")
             .add("file", file)
             .add("digest", file_digest(file))
             .add("rows", M.rows())
             .add("cols", M.cols())
             .add("totally_positive", is_totally_positive(M))
             .add("totally_nonneg", is_totally_nonneg(M)));
    return kExitOk;
}

int cmd_amp_map(const std::string& cfile, const std::string& zfile) {
    const RationalMatrix C = load_matrix(cfile);
    const RationalMatrix Z = load_matrix(zfile);
    const AmplituhedronPoint Y = amplituhedron_point(C, Z);
    const int k = C.rows(), n = C.cols(), m = Z.cols() - k;
    Record rec("amp_map");
    rec.add("c", cfile)
        .add("z", zfile)
        .add("k", k)
        .add("m", m)
        .add("n", n)
        .add("c_totally_nonneg", is_totally_nonneg(C))
        .add("z_totally_positive", is_totally_positive(Z))
        .add("y", matrix_inline(Y.matrix()))
        .add("y_rref", matrix_inline(Y.row_space()));
    if (k == 1 && m == 2) {
        std::string signs;
        for (const auto& b : cyclic_brackets(Y.matrix(), Z)) signs += b > 0 ? '+' : (b < 0 ? '-' : '0');
        rec.add("cyclic_bracket_signs", signs);
    }
    rec.add("image_dim", amplituhedron_image_dimension(C, Z)).add("k_times_m", k * m).add("k_times_n_minus_k", k * (n - k));
    emit(rec);
    return kExitOk;
}

int cmd_amp_moment_map(const std::string& cfile) {
    const RationalMatrix C = load_matrix(cfile);
    const auto mu = moment_map(C);
    emit(Record("moment_map")
             .add("c", cfile)
             .add("k", C.rows())
             .add("n", C.cols())
             .add("mu", join_rationals(mu))
             .add("in_hypersimplex", hypersimplex_contains(mu, C.rows(), C.cols())));
    return kExitOk;
}

int cmd_amp_polygon_form(const std::string& zfile, const std::string& yfile, const std::string& triangulation) {
    const RationalMatrix Z = load_matrix(zfile);
    const RationalMatrix Y = load_matrix(yfile);
    const PolygonTriangulation tris =
        triangulation.empty() ? fan_triangulation(Z.rows()) : parse_polygon_triangulation(triangulation);
    const Rational v = polygon_canonical_form(Z, tris, Y);
    std::string tri_text;
    for (std::size_t i = 0; i < tris.size(); ++i)
        tri_text += (i ? ";" : "") + std::to_string(tris[i][0] + 1) + "," + std::to_string(tris[i][1] + 1) + "," +
                    std::to_string(tris[i][2] + 1);
    emit(Record("polygon_form").add("z", zfile).add("y", yfile).add("triangulation", tri_text).add("value", v.str()));
    return kExitOk;
}

int cmd_amp_random(const Globals& g, int k, int n) {
    if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
    std::mt19937_64 rng(g.seed);
    std::cout << "# random totally nonnegative " << k << "x" << n << " matrix, seed " << g.seed << '\n'
              << random_tnn(k, n, rng).str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qgeom: quantum invariants of 3-manifolds and positive geometry"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--r", g.r, "root of unity order (q = exp(2 pi i / r)); colors 0..r-2")
        ->envname("QGEOM_R")
        ->check(CLI::Range(2, 64));
    app.add_option("--precision", g.precision, "working precision in bits: <=53 double, <=64 long double, else 128")
        ->envname("QGEOM_PRECISION")
        ->check(CLI::Range(1, 4096));
    app.add_option("--threads", g.threads, "worker threads for state sums (0: all cores)")
        ->envname("QGEOM_THREADS")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "seed for random generators")->envname("QGEOM_SEED");
    app.add_flag("--timings", g.timings, "print wall-clock time to stderr");

    std::function<int()> action;

    auto* recoupling = app.add_subcommand("recoupling", "quantum 6j data")->require_subcommand(1);
    std::string format = "tsv";
    auto* table = recoupling->add_subcommand("table", "delta, theta, Tet and F for every admissible tuple");
    table->add_option("--format", format, "tsv or records");
    table->callback([&] { action = [&] { return cmd_recoupling_table(g, format); }; });

    auto* spinnet = app.add_subcommand("spinnet", "planar spin networks")->require_subcommand(1);
    std::string spin_file;
    auto* eval = spinnet->add_subcommand("eval", "evaluate a closed spin network");
    eval->add_option("file", spin_file)->required();
    eval->callback([&] { action = [&] { return cmd_spinnet_eval(g, spin_file); }; });

    std::string tv_file;
    bool report_colorings = false;
    auto* tv = app.add_subcommand("tv", "Turaev-Viro invariant of a closed triangulation");
    tv->add_option("file", tv_file)->required();
    tv->add_flag("--report-colorings", report_colorings);
    tv->callback([&] { action = [&] { return cmd_tv(g, tv_file, report_colorings); }; });

    std::string pachner_file, move, output;
    int at = 0;
    bool pachner_check = false;
    auto* pachner = app.add_subcommand("pachner", "apply a 2-3 (at a triangle) or 1-4 (at a tet) move");
    pachner->add_option("file", pachner_file)->required();
    pachner->add_option("--move", move, "2-3 or 1-4")->required();
    pachner->add_option("--at", at, "triangle index (2-3) or tet index (1-4)")->required();
    pachner->add_option("--output", output, "write the new triangulation here instead of stdout");
    pachner->add_flag("--check", pachner_check, "compare TV before and after");
    pachner->callback([&] { action = [&] { return cmd_pachner(g, pachner_file, move, at, output, pachner_check); }; });

    std::string surface_file;
    bool check_projector = false;
    int expect_rank = -1;
    auto* tvcode = app.add_subcommand("tvcode", "Turaev-Viro operator on surface x [-1,1]");
    tvcode->add_option("--surface", surface_file)->required();
    tvcode->add_flag("--check-projector", check_projector);
    tvcode->add_option("--expect-rank", expect_rank);
    tvcode->callback([&] { action = [&] { return cmd_tvcode(g, surface_file, check_projector, expect_rank); }; });

    std::string surgery;
    auto* rt = app.add_subcommand("rt", "Reshetikhin-Turaev invariant of a surgery presentation");
    rt->add_option("--surgery", surgery, "empty | unknot:p=N | hopf:p=N,q=M")->required();
    rt->callback([&] { action = [&] { return cmd_rt(g, surgery); }; });

    auto* check = app.add_subcommand("check", "identity checks")->require_subcommand(1);
    std::string check_tri, check_surgery;
    double tolerance = 1e-8;
    auto* tvrt = check->add_subcommand("tv-rt", "TV(M) against |RT(M)|^2");
    tvrt->add_option("--triangulation", check_tri)->required();
    tvrt->add_option("--surgery", check_surgery)->required();
    tvrt->add_option("--tolerance", tolerance);
    tvrt->callback([&] { action = [&] { return cmd_check_tv_rt(g, check_tri, check_surgery, tolerance); }; });
    std::string thm_tri, thm_z, thm_y;
    auto* thm2 = check->add_subcommand("thm2", "TV amplitude and polygon canonical form side by side");
    thm2->add_option("--triangulation", thm_tri)->required();
    thm2->add_option("--z", thm_z)->required();
    thm2->add_option("--y", thm_y)->required();
    thm2->callback([&] { action = [&] { return cmd_check_thm2(g, thm_tri, thm_z, thm_y); }; });

    auto* amp = app.add_subcommand("amp", "positive geometry (exact rationals)")->require_subcommand(1);
    std::string amp_file, c_file, z_file, y_file, poly_tri;
    int rk = 1, rn = 3;
    auto* pl = amp->add_subcommand("pluecker", "maximal minors of a k x n matrix");
    pl->add_option("file", amp_file)->required();
    pl->callback([&] { action = [&] { return cmd_amp_pluecker(amp_file); }; });
    auto* pos = amp->add_subcommand("positive", "total positivity of a matrix");
    pos->add_option("file", amp_file)->required();
    pos->callback([&] { action = [&] { return cmd_amp_positive(amp_file); }; });
    auto* map = amp->add_subcommand("map", "Y = C Z");
    map->add_option("--c", c_file)->required();
    map->add_option("--z", z_file)->required();
    map->callback([&] { action = [&] { return cmd_amp_map(c_file, z_file); }; });
    auto* mm = amp->add_subcommand("moment-map", "moment map onto the hypersimplex");
    mm->add_option("--c", c_file)->required();
    mm->callback([&] { action = [&] { return cmd_amp_moment_map(c_file); }; });
    auto* pf = amp->add_subcommand("polygon-form", "canonical form of conv(Z) at Y");
    pf->add_option("--z", z_file)->required();
    pf->add_option("--y", y_file)->required();
    pf->add_option("--triangulation", poly_tri, "1-based triangles, e.g. \"1,2,3;1,3,4\" (default: fan from 1)");
    pf->callback([&] { action = [&] { return cmd_amp_polygon_form(z_file, y_file, poly_tri); }; });
    auto* rnd = amp->add_subcommand("random", "random totally nonnegative matrix (uses --seed)");
    rnd->add_option("--k", rk)->required();
    rnd->add_option("--n", rn)->required();
    rnd->callback([&] { action = [&] { return cmd_amp_random(g, rk, rn); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        const bool unknown = app.get_subcommands().empty() || dynamic_cast<const CLI::ExtrasError*>(&e) != nullptr;
        std::cerr << Record("error")
                         .add("code", std::string(error_name(unknown ? ErrorCode::UnknownCommand : ErrorCode::InvalidArgument)))
                         .add("message", e.what())
                         .str()
                  << '\n';
        return kExitInput;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        code = action();
    } catch (const Error& e) {
        std::cerr << Record("error").add("code", std::string(error_name(e.code()))).add("message", e.detail()).str() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << Record("error").add("code", "InvalidArgument").add("message", e.what()).str() << '\n';
        return kExitInput;
    }
    if (g.timings) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << Record("timing").add("seconds", sci(secs)).str() << '\n';
    }
    return code;
}
