// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "exocalc/cartan.hpp"
#include "exocalc/clifford.hpp"
#include "exocalc/dispersion.hpp"
#include "exocalc/errors.hpp"
#include "exocalc/forms_check.hpp"
#include "exocalc/metric.hpp"
#include "exocalc/oracles/dense_forms.hpp"
#include "exocalc/oracles/spectrum.hpp"
#include "exocalc/pde.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

using namespace exocalc;

namespace {

using CR = ComplexRational;
using CS = EpsSeries<ComplexRational>;
using RS = EpsSeries<Rational>;
using cd = std::complex<double>;

struct Outcome
{
    bool pass = true;
    std::string detail;
    std::vector<std::string> report; // extra lines printed under the verdict

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(double v)
{
    char b[64];
    std::snprintf(b, sizeof b, "%.3g", v);
    return b;
}

double max_abs(const Matrix4<double>& m)
{
    double r = 0;
    for (const auto& row : m)
        for (double v : row)
            r = std::max(r, std::abs(v));
    return r;
}

double max_abs(const Matrix4<cd>& m)
{
    double r = 0;
    for (const auto& row : m)
        for (const auto& v : row)
            r = std::max(r, std::abs(v));
    return r;
}

Vector4<CS> series_point(const Vector4<Rational>& x) { return {CS(CR(x[0])), CS(CR(x[1])), CS(CR(x[2])), CS(CR(x[3]))}; }

Covector4<CS> series_grad(const Covector4<Rational>& g)
{
    const CS e = CS::epsilon(2);
    return {e * CS(CR(g[0])), e * CS(CR(g[1])), e * CS(CR(g[2])), e * CS(CR(g[3]))};
}

Vector4<RS> rs_point(const Vector4<Rational>& x) { return {RS(x[0]), RS(x[1]), RS(x[2]), RS(x[3])}; }

Covector4<RS> rs_grad(const Covector4<Rational>& g)
{
    const RS e = RS::epsilon(2);
    return {e * RS(g[0]), e * RS(g[1]), e * RS(g[2]), e * RS(g[3])};
}

template <class M> bool grades_at_least(const M& resid, int g)
{
    for (const auto& row : resid)
        for (const auto& m : row)
            if (!testsupport::all_grade_at_least(m, g))
                return false;
    return true;
}

std::vector<clifford::GammaRep<CR>> representations()
{
    return {clifford::dirac_representation(), clifford::conjugated_representation(clifford::sample_rational_unitary())};
}

// ---- 1 ----
Outcome trivial_topology()
{
    Outcome o;
    std::mt19937_64 rng(1001);
    const Covector4<Rational> zero{};
    const auto minkowski = minkowski_matrix<Rational>();
    for (int i = 0; i < 200; ++i) {
        const auto x = testsupport::random_vector(rng);
        o.require(metric::metric_full(x, zero).components == minkowski, "eta~ full");
        o.require(metric::metric_first_order(x, zero).components == minkowski, "eta~ first order");
        o.require(metric::metric_inverse_first_order(x, zero).components == minkowski, "eta~ inverse");
    }
    for (const auto& base : representations()) {
        const auto rep = clifford::convert_rep<CS>(base);
        for (int i = 0; i < 20; ++i) {
            const auto gt = clifford::gamma_tilde(series_point(testsupport::random_vector(rng)), series_grad(zero), rep);
            for (std::size_t mu = 0; mu < 4; ++mu)
                o.require(gt[mu] == rep[mu], "gamma~ differs from gamma");
        }
    }
    int dforms = 0;
    for (int i = 0; i < 200; ++i) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const int deg = static_cast<int>(rng() % static_cast<unsigned>(dim));
        const auto basis = rng() % 2 ? forms::Basis::Deformed : forms::Basis::Plain;
        const auto w = forms::random_form(rng, dim, deg, basis);
        const forms::LinearThetaN flat{std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0))};
        const auto plain = forms::deformed_to_plain(w, flat);
        if (forms::exotic_d(w, flat) == forms::plain_d(plain))
            ++dforms;
    }
    o.require(dforms == 200, "d~ != d on " + std::to_string(200 - dforms) + " forms");

    // spectrum: with v = 0 the reduced relation is (m^2 - p^2) Id, zero exactly at p0 = +-m
    const CR m(Rational(3, 2));
    const Covector4<CR> vzero{};
    for (const auto& base : representations())
        for (int s : {1, -1}) {
            const Covector4<CR> p{CR(Rational(s) * Rational(3, 2)), CR(0), CR(0), CR(0)};
            o.require(dispersion::dispersion_matrix<CR>(p, vzero, m, base) == clifford::zero_matrix<CR>(), "spectrum at v=0");
        }
    o.require(dispersion::plane_wave_rates(0.0, 1.5, 0.0, 0.0) == cd(1.5, 0.0), "rest frequency");

    // ODEs: beta = alpha = 0 gives the free oscillator and the y map is the identity
    pde::OdeParams p{{2.0, 0.0}, 1.0, 0.0, 0.0};
    const auto sx = pde::solve_ode_x(p, 1.0, {{1.0, 0.0}, {0.0, 0.0}});
    const auto sy = pde::solve_ode_y(p, 1.0, {{1.0, 0.0}, {0.0, 0.0}});
    double err = 0;
    const double k = std::sqrt(3.0);
    for (std::size_t i = 0; i < sx.x.size(); ++i) {
        err = std::max(err, std::abs(sx.phi[i] - std::sin(k * (1.0 - sx.x[i])) / std::sin(k)));
        o.require(sy.y[i] == sx.x[i], "y(x) != x at beta = 0");
    }
    o.require(err < 1e-8, "free ODE error " + fmt(err));
    o.require(p.c() == cd(-3.0, 0.0), "free characteristic constant");
    o.detail = o.pass ? "eta~, gamma~ exact; d~ = d on 200/200 forms; spectrum +-m; free ODE err " + fmt(err) : o.detail;
    return o;
}

// ---- 2 ----
Outcome symmetry_and_null_identity()
{
    Outcome o;
    std::mt19937_64 rng(2002);
    int sym = 0, ident = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto v = testsupport::random_vector(rng), w = testsupport::random_vector(rng), x = testsupport::random_vector(rng);
        const auto g = testsupport::random_covector(rng);
        if (metric::bilinear_eval(v, w, x, g) == metric::bilinear_eval(w, v, x, g))
            ++sym;
        if (metric::null_deviation(v, x, g) == metric::bilinear_eval(v, v, x, g))
            ++ident;
    }
    o.require(sym == 1000, "symmetry failed on " + std::to_string(1000 - sym));
    o.require(ident == 1000, "null identity failed on " + std::to_string(1000 - ident));
    if (o.pass)
        o.detail = "1000/1000 exact for both";
    return o;
}

// ---- 3 ----
Outcome first_order_structure()
{
    Outcome o;
    std::mt19937_64 rng(3003);
    int symbolic = 0;
    const auto rep = clifford::convert_rep<CS>(clifford::dirac_representation());
    for (int i = 0; i < 50; ++i) {
        const auto xr = testsupport::random_vector(rng);
        const auto gr = testsupport::random_covector(rng);
        const auto xs = rs_point(xr);
        const auto gs = rs_grad(gr);
        const auto prod = matmul(metric::metric_inverse_first_order(xs, gs).components, metric::metric_first_order(xs, gs).components);
        const bool a = testsupport::all_grade_at_least(matsub(prod, identity_matrix4<RS>()), 2);
        const bool b = testsupport::all_grade_at_least(matsub(clifford::tetrad_contraction(clifford::tetrads(xs, gs)), identity_matrix4<RS>()), 2);
        const auto xc = series_point(xr);
        const auto gc = series_grad(gr);
        const auto gt = clifford::gamma_tilde(xc, gc, rep);
        const bool c = grades_at_least(clifford::deformed_clifford_residual(gt, metric::metric_inverse_first_order(xc, gc).components), 2);
        symbolic += a && b && c;
    }
    o.require(symbolic == 50, "symbolic grade < 2 on " + std::to_string(50 - symbolic));

    const auto rd = clifford::convert_rep<cd>(clifford::dirac_representation());
    const Vector4<double> x{0.7, -1.1, 0.4, 0.9};
    const Covector4<double> g0{0.3, -0.5, 0.8, 0.2};
    std::vector<double> eps, ra, rb, rc;
    for (int k = 0; k <= 12; ++k) {
        const double e = std::pow(10.0, -4.0 + 0.25 * k);
        const Covector4<double> g{e * g0[0], e * g0[1], e * g0[2], e * g0[3]};
        eps.push_back(e);
        ra.push_back(max_abs(matsub(matmul(metric::metric_inverse_first_order(x, g).components, metric::metric_first_order(x, g).components),
                                    identity_matrix4<double>())));
        rb.push_back(max_abs(matsub(clifford::tetrad_contraction(clifford::tetrads(x, g)), identity_matrix4<double>())));
        const Vector4<cd> xc{x[0], x[1], x[2], x[3]};
        const Covector4<cd> gc{g[0], g[1], g[2], g[3]};
        double worst = 0;
        for (const auto& row : clifford::deformed_clifford_residual(clifford::gamma_tilde(xc, gc, rd),
                                                                    metric::metric_inverse_first_order(xc, gc).components))
            for (const auto& m : row)
                worst = std::max(worst, max_abs(m));
        rc.push_back(worst);
    }
    const double sa = testsupport::loglog_slope(eps, ra), sb = testsupport::loglog_slope(eps, rb), sc = testsupport::loglog_slope(eps, rc);
    for (double s : {sa, sb, sc})
        o.require(std::abs(s - 2.0) <= 0.05, "slope " + fmt(s));
    o.detail = (o.pass ? "" : o.detail + "; ") + "grade >= 2 on 50/50; slopes " + fmt(sa) + ", " + fmt(sb) + ", " + fmt(sc);
    return o;
}

// ---- 4 ----
Outcome identity_suite()
{
    Outcome o;
    std::map<std::string, std::map<std::string, int>> grades;
    int mismatches = 0, cases = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        for (int n = 2; n <= 4; ++n)
            for (const auto& c : forms::forms_check_cases(seed, n, 3)) {
                const auto res = forms::case_residual(c);
                const auto g = res.grade();
                const auto name = forms::identity_name(c.identity);
                grades[name][forms::grade_label(g)]++;
                ++cases;
                if (oracles::residual_grade(c) != g)
                    ++mismatches;
                switch (c.identity) {
                case forms::Identity::Leibniz:
                    o.require(res.is_zero(), "leibniz nonzero at seed " + std::to_string(seed));
                    break;
                case forms::Identity::DSquared:
                case forms::Identity::DCubed:
                case forms::Identity::FieldStrength:
                    o.require(!g || *g >= 2, name + " grade " + forms::grade_label(g) + " at seed " + std::to_string(seed));
                    break;
                case forms::Identity::HomotopyNoDLambda:
                case forms::Identity::HomotopyDLambda:
                    o.require(!g || *g >= 1, name + " grade-0 residual at seed " + std::to_string(seed));
                    break;
                }
            }
    o.require(mismatches == 0, std::to_string(mismatches) + " disagreements with the dense oracle");
    for (const auto& [name, hist] : grades) {
        std::string line = "  " + name + " residual grades:";
        for (const auto& [label, count] : hist)
            line += " " + label + "x" + std::to_string(count);
        o.report.push_back(line);
    }
    if (o.pass)
        o.detail = std::to_string(cases) + " cases, all contracts met, oracle agrees";
    return o;
}

// ---- 5 ----
Outcome dispersion_criterion()
{
    Outcome o;
    std::mt19937_64 rng(5005);
    int offdiag = 0;
    for (const auto& base : representations())
        for (int i = 0; i < 100; ++i) {
            auto v = testsupport::random_covector(rng);
            if (v[0] == 0)
                v[0] = 1;
            const Covector4<CR> vc{CR(v[0]), CR(v[1]), CR(v[2]), CR(v[3])};
            const CR e(testsupport::random_rational(rng), testsupport::random_rational(rng));
            const auto mat = dispersion::dispersion_matrix<CR>(dispersion::constrained_momentum(vc, e), vc, CR(Rational(5, 4)), base);
            offdiag += dispersion::off_diagonal(mat) == clifford::zero_matrix<CR>();
        }
    o.require(offdiag == 200, "off-diagonal nonzero on " + std::to_string(200 - offdiag));

    int exact_im = 0, total_im = 0;
    for (double td : {1e-4, 1e-3, 0.01, 0.3, 1.0, 1.9})
        for (double m : {1.0, 2.0}) {
            if (4 * m * m <= td * td)
                continue;
            const auto s = dispersion::constrained_spectrum({td, 0, 0, 0}, m);
            ++total_im;
            exact_im += s.plus.imag() == td / 2 && s.minus.imag() == td / 2;
        }
    o.require(exact_im == total_im, "Im E != td/2");

    double worst = 0, worst_re_exact = 0, worst_re_approx = 0;
    int up = 0, down = 0, n = 0;
    for (double m : {0.5, 1.0, 2.0})
        for (double ratio : {1e-4, 1e-3, 5e-3, 1e-2})
            for (double kappa : {0.0, 0.025, 0.05, 0.1}) {
                const double td = ratio * m, gn = kappa * td;
                const auto exact = dispersion::constrained_spectrum({td, gn, 0, 0}, m);
                const auto approx = dispersion::first_order_spectrum(td, gn, m);
                worst = std::max({worst, std::abs(exact.plus.imag() - approx.plus.imag()) / m,
                                  std::abs(exact.minus.imag() - approx.minus.imag()) / m});
                if (kappa > 0) {
                    ++n;
                    const double dre = exact.plus.real() - m, dpa = approx.plus.real() - m;
                    up += dre > 0;
                    down += dpa < 0;
                    worst_re_exact = std::max(worst_re_exact, std::abs(dre) / m);
                    worst_re_approx = std::max(worst_re_approx, std::abs(dpa) / m);
                }
            }
    o.require(worst <= 1e-3, "Im mismatch " + fmt(worst));
    o.report.push_back("  kappa^2 real correction: exact roots shift Re E+ up on " + std::to_string(up) + "/" + std::to_string(n) +
                       " points (max " + fmt(worst_re_exact) + " m); first-order formula shifts it down on " + std::to_string(down) +
                       "/" + std::to_string(n) + " (max " + fmt(worst_re_approx) + " m); signs " + (up == n && down == n ? "opposite" : "mixed"));
    if (o.pass)
        o.detail = "off-diagonal exact on 200/200; Im = td/2 exact on " + std::to_string(total_im) + "; max |dIm|/m " + fmt(worst);
    return o;
}

// ---- 6 ----
Outcome delta_kernel()
{
    Outcome o;
    std::vector<dispersion::BoxRegion> boxes{dispersion::BoxRegion{},
                                             {-0.5, 1.5, {0.25, -1.0, 2.0}, {1.0, 0.5, 2.5}},
                                             {0.0, 3.0, {-2.0, -0.1, 0.0}, {2.0, 0.1, 0.3}}};
    std::mt19937_64 rng(6006);
    double worst = 0;
    for (const auto& b : boxes) {
        o.require(dispersion::delta_sigma({0.0, {0.0, 0.0, 0.0}}, b) == cd(b.volume(), 0.0), "Delta(0) != volume");
        for (int i = 0; i < 100; ++i) {
            auto c = [&] { return cd(testsupport::uniform(rng, -8, 8), testsupport::uniform(rng, -2, 2)); };
            const dispersion::ComplexMomentum p{c(), {c(), c(), c()}};
            const cd q = oracles::quadrature_delta(p, b);
            worst = std::max(worst, std::abs(dispersion::delta_sigma(p, b) - q) / std::abs(q));
        }
    }
    o.require(worst <= 1e-10, "relative error " + fmt(worst));
    if (o.pass)
        o.detail = "300 momenta, max relative error " + fmt(worst) + "; Delta(0) exact";
    return o;
}

// ---- 7 ----
Outcome ode_pipeline()
{
    Outcome o;
    std::mt19937_64 rng(7007);
    double wx = 0, wy = 0;
    for (int i = 0; i < 40; ++i) {
        pde::OdeParams p;
        p.omega = {testsupport::uniform(rng, 0.2, 2.0), testsupport::uniform(rng, -0.1, 0.1)};
        p.m = testsupport::uniform(rng, 0.5, 1.5);
        p.alpha = testsupport::uniform(rng, -0.2, 0.2);
        p.beta = testsupport::uniform(rng, -0.3, 0.3);
        const pde::BoundaryValues bc{{1.0, 0.0}, {testsupport::uniform(rng, -1, 1), testsupport::uniform(rng, -1, 1)}};
        const double L = testsupport::uniform(rng, 1.0, 3.0);
        wx = std::max(wx, pde::solve_ode_x(p, L, bc).relative_error());
        wy = std::max(wy, pde::solve_ode_y(p, L, bc).relative_error());
    }
    o.require(wx <= 1e-8, "x-ODE error " + fmt(wx));
    o.require(wy <= 1e-6, "y-ODE error " + fmt(wy));
    std::vector<double> errs;
    for (double b : {0.04, 0.02, 0.01, 0.005}) {
        pde::OdeParams p{{1.4, 0.0}, 1.0, 0.0, b};
        errs.push_back(pde::solve_ode_y(p, 2.0, {{1.0, 0.0}, {0.5, 0.0}}, 101, pde::YMode::Linearized).relative_error());
    }
    std::string ratios;
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        const double r = errs[i] / errs[i + 1];
        ratios += (ratios.empty() ? "" : ", ") + fmt(r);
        o.require(std::abs(r - 4.0) <= 0.2 * 4.0, "halving ratio " + fmt(r));
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + "x err " + fmt(wx) + ", y err " + fmt(wy) + ", linearized ratios " + ratios;
    return o;
}

// ---- 8 ----
Outcome quasinormal_damping()
{
    Outcome o;
    auto grid = [] {
        pde::SimGrid g;
        g.x_min = -100;
        g.x_max = 100;
        g.nx = 2048;
        g.nt = 4096;
        g.dt = 0.05;
        g.bc = pde::Boundary::Periodic;
        return g;
    };
    const double m = 1.0;
    const double t_end = 4096 * 0.05;
    double worst = 0;
    for (double tdm : {0.005, 0.01, 0.02})
        for (double km : {0.25, 0.5, 1.0}) {
            const double td = tdm * m;
            const auto h = pde::simulate_time_domain(grid(), {m, td, 0.0, false}, {km * m, 0.0, 10.0, 1.0});
            const double rate = pde::fit_decay_rate(h, 0.1 * t_end, t_end);
            const double rel = std::abs(std::abs(rate) - std::abs(td) / 2) / (std::abs(td) / 2);
            worst = std::max(worst, rel);
            o.report.push_back("  td/m=" + fmt(tdm) + " k/m=" + fmt(km) + ": fitted rate " + fmt(rate) + " (relative deviation " + fmt(rel) + ")");
        }
    o.require(worst <= 0.02, "rate deviation " + fmt(worst));

    auto g = grid();
    const auto h = pde::simulate_time_domain(g, {m, 0.0, 0.0, false}, {0.5, 0.0, 10.0, 1.0});
    double drift = 0;
    for (double e : h.energy)
        drift = std::max(drift, std::abs(e - h.energy.front()) / h.energy.front());
    o.require(drift <= 1e-3, "energy drift " + fmt(drift));

    const double tp = 0.02;
    const auto right = pde::simulate_time_domain(grid(), {m, 0.0, tp, false}, {0.5, 0.0, 10.0, 1.0});
    const auto left = pde::simulate_time_domain(grid(), {m, 0.0, tp, false}, {-0.5, 0.0, 10.0, 1.0});
    const double rr = pde::fit_decay_rate(right, 0.1 * t_end, t_end), rl = pde::fit_decay_rate(left, 0.1 * t_end, t_end);
    o.require(rr * rl < 0, "movers share a sign: " + fmt(rr) + ", " + fmt(rl));
    o.report.push_back("  theta'=" + fmt(tp) + ": right-mover rate " + fmt(rr) + ", left-mover rate " + fmt(rl) +
                       (rr < 0 ? " (right movers damped)" : " (right movers grow)"));
    if (o.pass)
        o.detail = "max rate deviation " + fmt(worst) + ", energy drift " + fmt(drift) + ", movers opposite";
    return o;
}

// ---- 9 ----
Outcome cartan_suite()
{
    Outcome o;
    std::mt19937_64 rng(9009);
    double rt = 0, detv = 0;
    for (int i = 0; i < 1000; ++i) {
        const double x = testsupport::uniform(rng, -3, 3), y = testsupport::uniform(rng, -3, 3), z = testsupport::uniform(rng, -3, 3);
        const Vector4<double> v{std::sqrt(x * x + y * y + z * z), x, y, z};
        const auto back = cartan::spinor_to_point(cartan::point_to_spinor(v));
        double e = 0, s = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            e = std::max(e, std::abs(back[k] - v[k]));
            s = std::max(s, std::abs(v[k]));
        }
        rt = std::max(rt, e / s);
        const cartan::SpinorPair sp{{testsupport::uniform(rng, -1, 1), testsupport::uniform(rng, -1, 1)},
                                    {testsupport::uniform(rng, -1, 1), testsupport::uniform(rng, -1, 1)}};
        detv = std::max(detv, std::abs(cartan::det(cartan::outer_matrix(sp).m)));
        const auto turned = cartan::rotate_phase(sp, 2 * std::numbers::pi);
        o.require(turned.zeta == -sp.zeta && turned.chi == -sp.chi, "2 pi rotation is not -s");
        const auto p0 = cartan::spinor_to_point(sp), p1 = cartan::spinor_to_point(turned);
        for (std::size_t k = 0; k < 4; ++k)
            o.require(p0[k] == p1[k], "2 pi rotation moved the point");
    }
    o.require(rt <= 1e-12, "roundtrip " + fmt(rt));
    o.require(detv <= 1e-14, "det V " + fmt(detv));
    double cover = 0;
    for (int i = 0; i < 100; ++i) {
        cartan::Mat2 a{};
        for (auto& row : a)
            for (auto& e : row)
                e = {testsupport::uniform(rng, -2, 2), testsupport::uniform(rng, -2, 2)};
        const cd r = std::sqrt(cartan::det(a));
        cartan::Mat2 neg{};
        for (std::size_t i0 = 0; i0 < 2; ++i0)
            for (std::size_t j = 0; j < 2; ++j) {
                a[i0][j] /= r;
                neg[i0][j] = -a[i0][j];
            }
        cover = std::max(cover, max_abs(matsub(cartan::lorentz_matrix(a), cartan::lorentz_matrix(neg))));
    }
    o.require(cover == 0.0, "Lambda(-l) - Lambda(l) = " + fmt(cover));
    if (o.pass)
        o.detail = "roundtrip " + fmt(rt) + ", det V " + fmt(detv) + ", 2 pi flip exact, Lambda(-l) = Lambda(l) exactly";
    return o;
}

// ---- 10 ----
std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_cli(const std::string& args)
{
    const int rc = std::system((std::string(EXOCALC_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome cli_determinism()
{
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "exocalc_acceptance_cli";
    fs::remove_all(dir);
    const std::vector<std::string> commands{"metric", "lightcone", "spectrum", "simulate", "forms-check", "cartan"};
    int identical = 0, files = 0;
    for (const auto& c : commands) {
        for (const char* run : {"a", "b"}) {
            const int rc = run_cli(c + " --seed 42 --svg --out " + (dir / c / run).string());
            o.require(rc == 0, c + " exited " + std::to_string(rc));
        }
        if (!fs::exists(dir / c / "a"))
            continue;
        for (const auto& f : fs::directory_iterator(dir / c / "a")) {
            ++files;
            identical += slurp(f.path()) == slurp(dir / c / "b" / f.path().filename());
        }
    }
    o.require(identical == files && files > 0, std::to_string(files - identical) + " outputs differ between runs");

    // goldens: the committed bytes, the oracle recomputation and the implementation must all agree
    const int rc = run_cli("generate-fixtures --out " + (dir / "fixtures").string());
    o.require(rc == 0, "generate-fixtures exited " + std::to_string(rc) + " (oracle/implementation mismatch)");
    for (const char* f : {"spectrum_golden.csv", "forms_check_golden.csv"})
        o.require(slurp(dir / "fixtures" / f) == slurp(fs::path(EXOCALC_FIXTURE_DIR) / f), std::string(f) + " differs from the committed fixture");
    o.require(slurp(dir / "spectrum" / "a" / "spectrum.csv") == slurp(fs::path(EXOCALC_FIXTURE_DIR) / "spectrum_golden.csv"),
              "spectrum output differs from its golden file");
    fs::remove_all(dir);
    if (o.pass)
        o.detail = std::to_string(files) + " files byte-identical across runs; goldens match oracle and implementation";
    return o;
}

} // namespace

int main()
{
    struct Criterion
    {
        int id;
        const char* name;
        double budget_s; // 0: no stated budget
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "trivial-topology regression", 10, trivial_topology},
        {2, "bilinear symmetry and null-form identity", 5, symmetry_and_null_identity},
        {3, "first-order structure", 10, first_order_structure},
        {4, "exterior-calculus identity suite", 30, identity_suite},
        {5, "constrained dispersion", 5, dispersion_criterion},
        {6, "finite-region Fourier kernel", 60, delta_kernel},
        {7, "ODE pipeline", 20, ode_pipeline},
        {8, "quasinormal damping", 120, quasinormal_damping},
        {9, "Cartan suite", 5, cartan_suite},
        {10, "CLI determinism and goldens", 0, cli_determinism},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs >= c.budget_s)
            o.require(false, "runtime " + fmt(secs) + " s over the " + fmt(c.budget_s) + " s budget");
        failed += !o.pass;
        std::printf("criterion %2d %-42s %s  [%.2f s] %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
        for (const auto& line : o.report)
            std::printf("%s\n", line.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
