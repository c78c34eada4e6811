#include "exocalc/dispersion.hpp"

#include "exocalc/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace exocalc::dispersion {

namespace {

constexpr int kNodes = 20;

struct Rule1D
{
    std::vector<double> x, w;
};

// Gauss-Legendre nodes on [lo, hi].
Rule1D gauss_rule(double lo, double hi)
{
    using G = boost::math::quadrature::gauss<double, kNodes>;
    const auto& abs = G::abscissa();
    const auto& wts = G::weights();
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    Rule1D r;
    for (std::size_t i = 0; i < abs.size(); ++i) {
        if (abs[i] == 0.0) {
            r.x.push_back(mid);
            r.w.push_back(half * wts[i]);
            continue;
        }
        r.x.push_back(mid - half * abs[i]);
        r.w.push_back(half * wts[i]);
        r.x.push_back(mid + half * abs[i]);
        r.w.push_back(half * wts[i]);
    }
    return r;
}

cplx plane_wave(const Covector4<cplx>& q, const std::array<double, 4>& x)
{
    cplx phase = 0.0;
    for (std::size_t mu = 0; mu < 4; ++mu)
        phase += q[mu] * x[mu];
    return std::exp(cplx(0.0, 1.0) * phase);
}

} // namespace

double BoxRegion::volume() const { return (t1 - t0) * (b[0] - a[0]) * (b[1] - a[1]) * (b[2] - a[2]); }

void BoxRegion::validate() const
{
    for (std::size_t mu = 0; mu < 4; ++mu)
        if (!(upper(mu) > lower(mu)) || !std::isfinite(upper(mu)) || !std::isfinite(lower(mu)))
            throw std::invalid_argument("BoxRegion: every interval needs positive finite length");
}

cplx exp_integral(cplx s, double a, double b)
{
    const double len = b - a;
    const cplx i(0.0, 1.0);
    const cplx z = i * s * len;
    if (std::abs(z) < kSeriesThreshold) {
        // L (1 + z/2 + z^2/6 + z^3/24)
        const cplx series = 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z / 24.0));
        return std::exp(i * s * a) * len * series;
    }
    // e^z - 1 without cancellation for small |z|
    const double ex = std::expm1(z.real()), sh = std::sin(z.imag() / 2.0);
    const cplx em1(ex * std::cos(z.imag()) - 2.0 * sh * sh, (1.0 + ex) * std::sin(z.imag()));
    return std::exp(i * s * a) * em1 / (i * s);
}

cplx delta_sigma(const ComplexMomentum& p, const BoxRegion& box)
{
    cplx r = exp_integral(p.p0, box.t0, box.t1);
    for (std::size_t k = 0; k < 3; ++k)
        r *= exp_integral(-p.p[k], box.a[k], box.b[k]);
    return r;
}

double fourier_parts_check(const SmoothFunction& phi, const ComplexMomentum& p, const BoxRegion& box)
{
    box.validate();
    const Covector4<cplx> q = p.covariant();
    const cplx i(0.0, 1.0);
    std::array<Rule1D, 4> rule;
    for (std::size_t mu = 0; mu < 4; ++mu)
        rule[mu] = gauss_rule(box.lower(mu), box.upper(mu));

    // Volume integrals of phi e, d_a phi e and d_m d_a phi e.
    cplx f0 = 0.0;
    std::array<cplx, 4> f1{};
    Matrix4<cplx> f2{};
    std::array<double, 4> x{};
    for (std::size_t i0 = 0; i0 < rule[0].x.size(); ++i0)
        for (std::size_t i1 = 0; i1 < rule[1].x.size(); ++i1)
            for (std::size_t i2 = 0; i2 < rule[2].x.size(); ++i2)
                for (std::size_t i3 = 0; i3 < rule[3].x.size(); ++i3) {
                    x = {rule[0].x[i0], rule[1].x[i1], rule[2].x[i2], rule[3].x[i3]};
                    const double w = rule[0].w[i0] * rule[1].w[i1] * rule[2].w[i2] * rule[3].w[i3];
                    const cplx e = w * plane_wave(q, x);
                    f0 += phi.value(x) * e;
                    const auto g = phi.gradient(x);
                    const auto h = phi.hessian(x);
                    for (std::size_t a = 0; a < 4; ++a) {
                        f1[a] += g[a] * e;
                        for (std::size_t b = 0; b < 4; ++b)
                            f2[a][b] += h[a][b] * e;
                    }
                }

    // Boundary terms <f e>|_{dSigma_mu}: upper face minus lower face.
    std::array<cplx, 4> b0{};
    Matrix4<cplx> b1{}; // b1[mu][a] = <d_a phi e>|_mu
    for (std::size_t mu = 0; mu < 4; ++mu) {
        std::array<std::size_t, 3> other{};
        for (std::size_t k = 0, j = 0; k < 4; ++k)
            if (k != mu)
                other[j++] = k;
        for (int side = 0; side < 2; ++side) {
            const double sign = side ? 1.0 : -1.0;
            x[mu] = side ? box.upper(mu) : box.lower(mu);
            const Rule1D &ra = rule[other[0]], &rb = rule[other[1]], &rc = rule[other[2]];
            for (std::size_t ia = 0; ia < ra.x.size(); ++ia)
                for (std::size_t ib = 0; ib < rb.x.size(); ++ib)
                    for (std::size_t ic = 0; ic < rc.x.size(); ++ic) {
                        x[other[0]] = ra.x[ia];
                        x[other[1]] = rb.x[ib];
                        x[other[2]] = rc.x[ic];
                        const cplx e = sign * ra.w[ia] * rb.w[ib] * rc.w[ic] * plane_wave(q, x);
                        b0[mu] += phi.value(x) * e;
                        const auto g = phi.gradient(x);
                        for (std::size_t a = 0; a < 4; ++a)
                            b1[mu][a] += g[a] * e;
                    }
        }
    }

    double worst = 0.0;
    for (std::size_t a = 0; a < 4; ++a) {
        const cplx rhs = -i * q[a] * f0 + b0[a];
        worst = std::max(worst, std::abs(f1[a] - rhs) / std::max(1.0, std::abs(f1[a])));
    }
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t a = 0; a < 4; ++a) {
            const cplx rhs = -q[m] * q[a] * f0 + b1[m][a] - i * q[m] * b0[a];
            worst = std::max(worst, std::abs(f2[m][a] - rhs) / std::max(1.0, std::abs(f2[m][a])));
        }
    return worst;
}

Matrix4<cplx> dispersion_matrix(const ComplexMomentum& p, const Covector4<double>& v, double m,
                                const clifford::GammaRep<cplx>& rep)
{
    const Covector4<cplx> vc{v[0], v[1], v[2], v[3]};
    return dispersion_matrix<cplx>(p.covariant(), vc, cplx(m), rep);
}

Spectrum constrained_spectrum(const Covector4<double>& v, double m)
{
    const double v0 = v[0];
    const double vv = minkowski_dot(v, v);
    if (v0 == 0.0)
        throw DegenerateError("constrained_spectrum: v0 = 0 makes the constraint degenerate");
    if (vv == 0.0)
        throw DegenerateError("constrained_spectrum: v.v = 0 makes the constraint degenerate");
    // E^2 - i v0 E - m^2 v0^2 / v^2 = 0
    const double disc = 4.0 * m * m * v0 * v0 / vv - v0 * v0;
    const cplx root = std::sqrt(cplx(disc, 0.0));
    const cplx e1 = (cplx(0.0, v0) + root) / 2.0;
    const cplx e2 = (cplx(0.0, v0) - root) / 2.0;
    if (e1.real() >= e2.real())
        return {e1, e2};
    return {e2, e1};
}

Spectrum first_order_spectrum(double theta_dot, double grad_norm, double m)
{
    if (theta_dot == 0.0)
        throw DegenerateError("first_order_spectrum: theta_dot = 0");
    const double kappa = grad_norm / theta_dot;
    const double re = m * (1.0 - 0.5 * kappa * kappa);
    const double im = theta_dot / 2.0;
    return {cplx(re, im), cplx(-re, im)};
}

double delta_diagnostic(const Covector4<double>& v, double m, const BoxRegion& box)
{
    const Spectrum s = constrained_spectrum(v, m);
    const Covector4<cplx> vc{v[0], v[1], v[2], v[3]};
    const Covector4<cplx> p = constrained_momentum<cplx>(vc, s.plus);
    double norm = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
        norm += v[a] * v[a];
    return std::sqrt(norm) * std::abs(delta_sigma(ComplexMomentum::from_covariant(p), box));
}

cplx plane_wave_rates(double k, double m, double theta_dot, double theta_prime)
{
    // w = (-i td +- sqrt(-td^2 + 4 (k^2 + m^2 - i tp k))) / 2
    const cplx disc(4.0 * (k * k + m * m) - theta_dot * theta_dot, -4.0 * theta_prime * k);
    const cplx root = std::sqrt(disc);
    const cplx w1 = (cplx(0.0, -theta_dot) + root) / 2.0;
    const cplx w2 = (cplx(0.0, -theta_dot) - root) / 2.0;
    return w1.real() > 0.0 ? w1 : w2;
}

} // namespace exocalc::dispersion
