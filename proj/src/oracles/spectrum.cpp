#include "exocalc/oracles/spectrum.hpp"

#include "exocalc/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace exocalc::oracles {

using dispersion::cplx;

namespace {

cplx integrate_exp(cplx s, double a, double b)
{
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const cplx i(0.0, 1.0);
    auto re = [&](double u) { return std::exp(i * s * u).real(); };
    auto im = [&](double u) { return std::exp(i * s * u).imag(); };
    const double tol = 1e-13;
    return {GK::integrate(re, a, b, 10, tol), GK::integrate(im, a, b, 10, tol)};
}

} // namespace

cplx quadrature_delta(const dispersion::ComplexMomentum& p, const dispersion::BoxRegion& box)
{
    cplx r = integrate_exp(p.p0, box.t0, box.t1);
    for (std::size_t k = 0; k < 3; ++k)
        r *= integrate_exp(-p.p[k], box.a[k], box.b[k]);
    return r;
}

dispersion::Spectrum newton_spectrum(const Covector4<double>& v, double m)
{
    const double v0 = v[0];
    const double vv = v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
    if (v0 == 0.0 || vv == 0.0)
        throw DegenerateError("newton_spectrum: degenerate constraint");
    const cplx i(0.0, 1.0);
    const double a = -vv / (v0 * v0);
    auto f = [&](cplx e) { return a * e * e + m * m + i * (vv / v0) * e; };
    auto df = [&](cplx e) { return 2.0 * a * e + i * (vv / v0); };
    auto solve = [&](cplx e) {
        for (int it = 0; it < 200; ++it) {
            const cplx step = f(e) / df(e);
            e -= step;
            if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(e)))
                break;
        }
        return e;
    };
    // The roots are symmetric about i v0/2; starting in opposite quadrants around it puts
    // the two starts in different Newton basins whichever axis the roots lie on.
    cplx e1 = solve(cplx(m + 0.5, v0 / 2.0 + 0.25));
    cplx e2 = solve(cplx(-m - 0.5, v0 / 2.0 - 0.25));
    if (e2.real() > e1.real())
        std::swap(e1, e2);
    return {e1, e2};
}

double oracle_delta_diagnostic(const Covector4<double>& v, double m, const dispersion::BoxRegion& box)
{
    const dispersion::Spectrum s = newton_spectrum(v, m);
    dispersion::ComplexMomentum p;
    p.p0 = s.plus;
    for (std::size_t k = 0; k < 3; ++k)
        p.p[k] = -v[k + 1] * s.plus / v[0];
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    return norm * std::abs(quadrature_delta(p, box));
}

} // namespace exocalc::oracles
