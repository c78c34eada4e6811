#pragma once

// Configuration-space dynamics for theta = alpha t + beta x in 1+1D.
//
// Frequency domain: -phi'' + beta phi' + (m^2 - w^2 + w alpha) phi = 0, solved by
// shooting and in closed form, and again after y = (e^{beta x} - 1)/beta removes
// the first-derivative term.
//
// Time domain: leapfrog for phi_tt - phi_xx + m^2 phi - td phi_t + tp phi_x = 0.
// With the e^{i(wt - kx)} ansatz a pure mode has Im w = -td/2 when tp = 0, so
// for td > 0 the amplitude GROWS like e^{td t/2}; td < 0 damps. With td = 0 and
// tp != 0, right movers (k > 0) and left movers (k < 0) get opposite-sign rates.

#include <complex>
#include <string>
#include <vector>

namespace exocalc::pde {

using cplx = std::complex<double>;

/// y(x) = (e^{beta x} - 1) / beta, y(0) = 0, series for |beta x| < 1e-6.
double change_of_variable(double x, double beta);
/// Inverse map x(y) = ln(1 + beta y) / beta; needs 1 + beta y > 0.
double inverse_change_of_variable(double y, double beta);

struct OdeParams
{
    cplx omega{1.0, 0.0};
    double m = 1.0;
    double alpha = 0.0;
    double beta = 0.0;

    /// m^2 - w^2 + w alpha.
    cplx c() const { return m * m - omega * omega + omega * alpha; }
};

struct BoundaryValues
{
    cplx left{1.0, 0.0};
    cplx right{0.0, 0.0};
};

struct OdeSolution
{
    std::vector<double> x;      // sample points in x, always
    std::vector<double> y;      // matching y(x) when solved in y
    std::vector<cplx> phi;      // numerical solution
    std::vector<cplx> exact;    // closed form fitted to the same boundary data
    OdeParams params;
    cplx r_plus, r_minus;       // characteristic roots
    bool degenerate_roots = false;

    /// max |phi - exact| / max |exact|.
    double relative_error() const;
};

/// Characteristic roots [beta +- sqrt(beta^2 + 4c)] / 2.
std::pair<cplx, cplx> characteristic_roots(const OdeParams& p);

/// Closed form on [0, L]; repeated roots switch to (c1 + c2 x) e^{r x}.
/// Throws DegenerateError when the boundary fit is singular.
std::vector<cplx> closed_form(const OdeParams& p, double length, const BoundaryValues& bc, const std::vector<double>& x);

/// Shooting with adaptive Dormand-Prince steps; `samples` equally spaced points including both ends.
OdeSolution solve_ode_x(const OdeParams& p, double length, const BoundaryValues& bc, int samples = 101);

enum class YMode { Exact, Linearized };

/// phi_yy + (w^2 - w alpha - m^2) W(y) phi = 0 on [0, y(L)], with W = e^{-2 beta x(y)} (Exact)
/// or 1 - 2 beta x(y) (Linearized); results sampled at the same x points as solve_ode_x.
OdeSolution solve_ode_y(const OdeParams& p, double length, const BoundaryValues& bc, int samples = 101,
                        YMode mode = YMode::Exact);

// ---- time domain ----

enum class Boundary { Periodic, Dirichlet, Neumann };

struct Snapshot
{
    double t = 0.0;
    std::vector<cplx> phi;
};

struct SimGrid
{
    double x_min = -100.0, x_max = 100.0;
    int nx = 2048;
    double dt = 0.05;
    int nt = 4096;
    Boundary bc = Boundary::Dirichlet;
    int snapshot_stride = 0; // 0: first and last step only
    bool check_cfl = true;

    // filled by simulate_time_domain
    std::vector<Snapshot> snapshots;
    std::vector<double> times;   // every step
    std::vector<double> log_l2;  // log ||phi(t, .)||_2 at every step
    std::vector<double> energy;  // energy[n]: discrete energy between steps n and n + 1
    std::vector<std::string> warnings;

    double dx() const;
    double x(int i) const { return x_min + i * dx(); }
};

struct SimParams
{
    double m = 1.0;
    double theta_dot = 0.0;
    double theta_prime = 0.0;
    bool include_x_term = false;
};

/// A e^{-(x - x0)^2 / (2 w^2)} e^{-i k x}: carrier k > 0 moves right.
struct WavePacket
{
    double k = 0.5;
    double x0 = 0.0;
    double width = 10.0;
    double amplitude = 1.0;
};

inline constexpr double kCflLimit = 0.9;
inline constexpr double kBlowupAmplitude = 1e12;

/// Throws InstabilityError on a CFL violation (when checked) or blow-up.
SimGrid simulate_time_domain(SimGrid grid, const SimParams& params, const WavePacket& initial);

/// Least-squares slope of log ||phi||_2 over steps with t in [t_a, t_b].
double fit_decay_rate(const SimGrid& history, double t_a, double t_b);

/// Same fit on an arbitrary positive amplitude series.
double fit_log_slope(const std::vector<double>& t, const std::vector<double>& amplitude);

/// ln sqrt((1 + a) / (1 - a)) / dt, a = td dt / 2: growth rate of a pure mode under the scheme.
double discrete_rate(double theta_dot, double dt);

} // namespace exocalc::pde
