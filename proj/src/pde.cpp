#include "exocalc/pde.hpp"

#include "exocalc/dispersion.hpp"
#include "exocalc/errors.hpp"

#include <boost/numeric/odeint.hpp>
#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace exocalc::pde {

namespace odeint = boost::numeric::odeint;

double change_of_variable(double x, double beta)
{
    const double z = beta * x;
    if (std::abs(z) < 1e-6)
        return x * (1.0 + z / 2.0 + z * z / 6.0);
    return std::expm1(z) / beta;
}

double inverse_change_of_variable(double y, double beta)
{
    const double z = beta * y;
    if (std::abs(z) < 1e-6)
        return y * (1.0 - z / 2.0 + z * z / 3.0);
    if (z <= -1.0)
        throw std::domain_error("inverse_change_of_variable: 1 + beta y must be positive");
    return std::log1p(z) / beta;
}

// ---------------------------------------------------------------- ODEs

double OdeSolution::relative_error() const
{
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        num = std::max(num, std::abs(phi[i] - exact[i]));
        den = std::max(den, std::abs(exact[i]));
    }
    return den > 0.0 ? num / den : num;
}

std::pair<cplx, cplx> characteristic_roots(const OdeParams& p)
{
    const cplx s = std::sqrt(p.beta * p.beta + 4.0 * p.c());
    return {(p.beta + s) / 2.0, (p.beta - s) / 2.0};
}

namespace {

bool roots_coincide(cplx a, cplx b) { return std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)); }

using State = std::array<double, 4>; // Re phi, Im phi, Re phi', Im phi'

// phi'' = f(s) phi' + g(s) phi along the independent variable s.
template <class F, class G> std::vector<cplx> integrate_linear(F f, G g, cplx phi0, cplx dphi0, const std::vector<double>& at)
{
    auto rhs = [&](const State& u, State& du, double s) {
        const cplx ph(u[0], u[1]), dph(u[2], u[3]);
        const cplx dd = f(s) * dph + g(s) * ph;
        du = {u[2], u[3], dd.real(), dd.imag()};
    };
    State u{phi0.real(), phi0.imag(), dphi0.real(), dphi0.imag()};
    std::vector<cplx> out;
    out.reserve(at.size());
    auto obs = [&](const State& v, double) { out.emplace_back(v[0], v[1]); };
    auto stepper = odeint::make_controlled(1e-13, 1e-13, odeint::runge_kutta_dopri5<State>());
    const double h0 = at.size() > 1 ? (at[1] - at[0]) / 10.0 : 1e-3;
    odeint::integrate_times(stepper, rhs, u, at.begin(), at.end(), h0, obs);
    return out;
}

// Combines the two fundamental solutions so that phi(end) = right.
template <class F, class G> std::vector<cplx> shoot(F f, G g, const BoundaryValues& bc, const std::vector<double>& at)
{
    const auto u = integrate_linear(f, g, bc.left, 0.0, at);
    const auto w = integrate_linear(f, g, 0.0, 1.0, at);
    const cplx wl = w.back();
    if (std::abs(wl) < 1e-14 * std::max(1.0, std::abs(u.back())))
        throw DegenerateError("shooting: boundary value problem is singular (eigenvalue hit)");
    const cplx s = (bc.right - u.back()) / wl;
    std::vector<cplx> phi(at.size());
    for (std::size_t i = 0; i < at.size(); ++i)
        phi[i] = u[i] + s * w[i];
    return phi;
}

std::vector<double> uniform_grid(double length, int samples)
{
    if (!(length > 0.0))
        throw std::invalid_argument("ODE domain length must be positive");
    if (samples < 2)
        throw std::invalid_argument("ODE solution needs at least two samples");
    std::vector<double> x(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        x[static_cast<std::size_t>(i)] = length * i / (samples - 1);
    x.back() = length;
    return x;
}

} // namespace

std::vector<cplx> closed_form(const OdeParams& p, double length, const BoundaryValues& bc, const std::vector<double>& x)
{
    const auto [rp, rm] = characteristic_roots(p);
    std::vector<cplx> out(x.size());
    if (roots_coincide(rp, rm)) {
        const cplx r = (rp + rm) / 2.0;
        const cplx c1 = bc.left;
        const cplx c2 = (bc.right * std::exp(-r * length) - bc.left) / length;
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = (c1 + c2 * x[i]) * std::exp(r * x[i]);
        return out;
    }
    const cplx ep = std::exp(rp * length), em = std::exp(rm * length);
    const cplx det = em - ep;
    if (std::abs(det) < 1e-12 * (std::abs(ep) + std::abs(em)))
        throw DegenerateError("closed_form: boundary fit is singular");
    const cplx c1 = (bc.left * em - bc.right) / det;
    const cplx c2 = bc.left - c1;
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = c1 * std::exp(rp * x[i]) + c2 * std::exp(rm * x[i]);
    return out;
}

OdeSolution solve_ode_x(const OdeParams& p, double length, const BoundaryValues& bc, int samples)
{
    OdeSolution sol;
    sol.params = p;
    sol.x = uniform_grid(length, samples);
    std::tie(sol.r_plus, sol.r_minus) = characteristic_roots(p);
    sol.degenerate_roots = roots_coincide(sol.r_plus, sol.r_minus);
    const cplx c = p.c();
    sol.phi = shoot([&](double) { return cplx(p.beta); }, [&](double) { return c; }, bc, sol.x);
    sol.exact = closed_form(p, length, bc, sol.x);
    return sol;
}

OdeSolution solve_ode_y(const OdeParams& p, double length, const BoundaryValues& bc, int samples, YMode mode)
{
    OdeSolution sol;
    sol.params = p;
    sol.x = uniform_grid(length, samples);
    for (double xi : sol.x)
        sol.y.push_back(change_of_variable(xi, p.beta));
    std::tie(sol.r_plus, sol.r_minus) = characteristic_roots(p);
    sol.degenerate_roots = roots_coincide(sol.r_plus, sol.r_minus);
    const cplx c = p.c();
    const double beta = p.beta;
    auto weight = [&](double y) {
        const double xy = inverse_change_of_variable(y, beta);
        return mode == YMode::Exact ? std::exp(-2.0 * beta * xy) : 1.0 - 2.0 * beta * xy;
    };
    // phi_yy = c W(y) phi
    sol.phi = shoot([](double) { return cplx(0.0); }, [&](double y) { return c * weight(y); }, bc, sol.y);
    sol.exact = closed_form(p, length, bc, sol.x);
    return sol;
}

// ---------------------------------------------------------------- time domain

double SimGrid::dx() const
{
    const double span = x_max - x_min;
    return bc == Boundary::Periodic ? span / nx : span / (nx - 1);
}

double discrete_rate(double theta_dot, double dt)
{
    const double a = theta_dot * dt / 2.0;
    return std::log(std::sqrt((1.0 + a) / (1.0 - a))) / dt;
}

namespace {

struct Stencil
{
    Boundary bc;
    int n;

    cplx at(const std::vector<cplx>& f, int i) const
    {
        if (i >= 0 && i < n)
            return f[static_cast<std::size_t>(i)];
        switch (bc) {
        case Boundary::Periodic:
            return f[static_cast<std::size_t>((i + n) % n)];
        case Boundary::Neumann:
            return f[static_cast<std::size_t>(i < 0 ? -i : 2 * (n - 1) - i)];
        case Boundary::Dirichlet:
            return 0.0;
        }
        return 0.0;
    }
    bool fixed(int i) const { return bc == Boundary::Dirichlet && (i == 0 || i == n - 1); }
};

double l2_norm(const std::vector<cplx>& f, double dx)
{
    double s = 0.0;
    for (const auto& v : f)
        s += std::norm(v);
    return std::sqrt(s * dx);
}

// Positive-frequency first step for a periodic grid: each Fourier mode advances by the
// root of the scheme's characteristic equation with arg z in (0, pi).
// FFTW planning is not thread-safe; sweeps run simulations concurrently.
std::mutex fftw_planner_mutex;

void run_fft(std::vector<cplx>& buf, int sign)
{
    auto* data = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(buf.size()), data, data, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    fftw_destroy_plan(plan);
}

std::vector<cplx> periodic_first_step(const std::vector<cplx>& phi0, const SimGrid& g, const SimParams& p)
{
    const int n = g.nx;
    const double dx = g.dx(), dt = g.dt;
    std::vector<cplx> buf(phi0);
    run_fft(buf, FFTW_FORWARD);
    const double a = p.theta_dot * dt / 2.0;
    const double pi = std::acos(-1.0);
    for (int j = 0; j < n; ++j) {
        const int jj = j <= n / 2 ? j : j - n;
        // e^{+i kappa x} is e^{-i k x} with k = -kappa
        const double k = -2.0 * pi * jj / (n * dx);
        const double s = std::sin(k * dx / 2.0);
        const cplx lam = 4.0 * s * s / (dx * dx) + p.m * p.m - cplx(0.0, 1.0) * p.theta_prime * std::sin(k * dx) / dx;
        const cplx qa = 1.0 - a, qb = -(2.0 - lam * dt * dt), qc = 1.0 + a;
        const cplx root = std::sqrt(qb * qb - 4.0 * qa * qc);
        const cplx z1 = (-qb + root) / (2.0 * qa), z2 = (-qb - root) / (2.0 * qa);
        const cplx z = std::arg(z1) >= std::arg(z2) ? z1 : z2;
        buf[static_cast<std::size_t>(j)] *= z / static_cast<double>(n);
    }
    run_fft(buf, FFTW_BACKWARD);
    return buf;
}

} // namespace

SimGrid simulate_time_domain(SimGrid g, const SimParams& p, const WavePacket& w)
{
    if (g.nx < 4 || g.nt < 1 || !(g.dt > 0.0) || !(g.x_max > g.x_min))
        throw std::invalid_argument("simulate_time_domain: invalid grid");
    const double dx = g.dx(), dt = g.dt;
    if (g.check_cfl && dt > kCflLimit * dx) {
        std::ostringstream os;
        os << "CFL violated: dt = " << dt << " > " << kCflLimit << " * dx = " << kCflLimit * dx;
        throw InstabilityError(os.str());
    }
    if (p.include_x_term) {
        const double reach = std::max({std::abs(g.x_min), std::abs(g.x_max), g.nt * dt});
        const double ratio = reach * std::hypot(p.theta_dot, p.theta_prime);
        if (ratio > 0.1) {
            std::ostringstream os;
            os << "x-term enabled outside the linear regime: |x| |v| = " << ratio << " > 0.1";
            g.warnings.push_back(os.str());
        }
    }
    g.snapshots.clear();
    g.times.clear();
    g.log_l2.clear();
    g.energy.clear();

    const int n = g.nx;
    const Stencil st{g.bc, n};
    const cplx I(0.0, 1.0);
    std::vector<cplx> prev(static_cast<std::size_t>(n)), cur, next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double xi = g.x(i) - w.x0;
        prev[static_cast<std::size_t>(i)] =
            st.fixed(i) ? cplx(0.0) : w.amplitude * std::exp(-xi * xi / (2.0 * w.width * w.width)) * std::exp(-I * w.k * g.x(i));
    }

    auto d1 = [&](const std::vector<cplx>& f, int i) { return (st.at(f, i + 1) - st.at(f, i - 1)) / (2.0 * dx); };
    auto d2 = [&](const std::vector<cplx>& f, int i) { return (st.at(f, i + 1) - 2.0 * f[static_cast<std::size_t>(i)] + st.at(f, i - 1)) / (dx * dx); };

    if (g.bc == Boundary::Periodic) {
        cur = periodic_first_step(prev, g, p);
    } else {
        // Second-order Taylor start with the packet's carrier frequency.
        const cplx om = dispersion::plane_wave_rates(w.k, p.m, p.theta_dot, p.theta_prime);
        cur.assign(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            if (st.fixed(i))
                continue;
            const cplx f = prev[static_cast<std::size_t>(i)];
            const cplx u0 = I * om * f;
            const cplx ftt = d2(prev, i) - p.m * p.m * f + p.theta_dot * u0 - p.theta_prime * d1(prev, i);
            cur[static_cast<std::size_t>(i)] = f + dt * u0 + 0.5 * dt * dt * ftt;
        }
    }

    auto record = [&](int step, const std::vector<cplx>& f) {
        const double t = step * dt;
        g.times.push_back(t);
        g.log_l2.push_back(std::log(l2_norm(f, dx)));
        const bool take = g.snapshot_stride > 0 ? (step % g.snapshot_stride == 0 || step == g.nt) : (step == 0 || step == g.nt);
        if (take)
            g.snapshots.push_back({t, f});
    };
    auto energy = [&](const std::vector<cplx>& now, const std::vector<cplx>& after) {
        double e = 0.0;
        for (int i = 0; i < n; ++i) {
            if (st.fixed(i))
                continue;
            const cplx v = (after[static_cast<std::size_t>(i)] - now[static_cast<std::size_t>(i)]) / dt;
            const cplx kin = -d2(now, i) + p.m * p.m * now[static_cast<std::size_t>(i)];
            e += std::norm(v) + (std::conj(after[static_cast<std::size_t>(i)]) * kin).real();
        }
        return 0.5 * e * dx;
    };

    record(0, prev);
    g.energy.push_back(energy(prev, cur));
    record(1, cur);
    for (int step = 1; step < g.nt; ++step) {
        const double t = step * dt;
        const double acoef = p.include_x_term ? 1.0 - 2.0 * p.theta_dot * t : 1.0;
        const cplx lead = acoef / (dt * dt) - p.theta_dot / (2.0 * dt);
        double peak = 0.0;
        for (int i = 0; i < n; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (st.fixed(i)) {
                next[ui] = 0.0;
                continue;
            }
            cplx op = -d2(cur, i) + p.m * p.m * cur[ui] + p.theta_prime * d1(cur, i);
            if (p.include_x_term) {
                const double xi = g.x(i);
                op += 2.0 * p.theta_prime * xi * d2(cur, i);
                op -= 2.0 * (p.theta_dot * xi - p.theta_prime * t) * (d1(cur, i) - d1(prev, i)) / dt;
            }
            const cplx rhs = acoef * (2.0 * cur[ui] - prev[ui]) / (dt * dt) - p.theta_dot * prev[ui] / (2.0 * dt) - op;
            next[ui] = rhs / lead;
            peak = std::max(peak, std::abs(next[ui]));
        }
        if (!(peak <= kBlowupAmplitude)) {
            std::ostringstream os;
            os << "instability: |phi| = " << peak << " exceeds " << kBlowupAmplitude << " at step " << step + 1
               << " (t = " << (step + 1) * dt << ")";
            throw InstabilityError(os.str());
        }
        g.energy.push_back(energy(cur, next));
        std::swap(prev, cur);
        std::swap(cur, next);
        record(step + 1, cur);
    }
    return g;
}

namespace {

double fit_line(const std::vector<double>& t, const std::vector<double>& y)
{
    double st = 0, sy = 0, stt = 0, sty = 0;
    const double n = static_cast<double>(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    const double den = n * stt - st * st;
    if (den == 0.0)
        throw std::invalid_argument("log-slope fit: degenerate time samples");
    return (n * sty - st * sy) / den;
}

} // namespace

double fit_log_slope(const std::vector<double>& t, const std::vector<double>& amplitude)
{
    if (t.size() != amplitude.size() || t.size() < 2)
        throw std::invalid_argument("fit_log_slope: need at least two matching samples");
    std::vector<double> y;
    y.reserve(amplitude.size());
    for (double a : amplitude) {
        if (!(a > 0.0))
            throw std::invalid_argument("fit_log_slope: amplitudes must be positive");
        y.push_back(std::log(a));
    }
    return fit_line(t, y);
}

double fit_decay_rate(const SimGrid& h, double t_a, double t_b)
{
    std::vector<double> t, y;
    for (std::size_t i = 0; i < h.times.size(); ++i)
        if (h.times[i] >= t_a && h.times[i] <= t_b) {
            if (!std::isfinite(h.log_l2[i]))
                throw std::invalid_argument("fit_decay_rate: amplitude is not positive");
            t.push_back(h.times[i]);
            y.push_back(h.log_l2[i]);
        }
    if (t.size() < 2)
        throw std::invalid_argument("fit_decay_rate: window holds fewer than two steps");
    return fit_line(t, y);
}

} // namespace exocalc::pde
