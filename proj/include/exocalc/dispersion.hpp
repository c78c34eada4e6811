#pragma once

// Fourier-side relations on a finite box: the kernel Delta(p) = int e^{ipx} d^4x,
// the integration-by-parts identities, the reduced matrix dispersion relation
// and its constrained complex spectrum.
//
// px = p0 t - p.x, so the covariant momentum is (p0, -p1, -p2, -p3).

#include "exocalc/clifford.hpp"
#include "exocalc/four_vector.hpp"

#include <array>
#include <complex>
#include <functional>

namespace exocalc::dispersion {

using cplx = std::complex<double>;

struct BoxRegion
{
    double t0 = 0.0, t1 = 1.0;
    std::array<double, 3> a{0.0, 0.0, 0.0};
    std::array<double, 3> b{1.0, 1.0, 1.0};

    double lower(std::size_t mu) const { return mu == 0 ? t0 : a[mu - 1]; }
    double upper(std::size_t mu) const { return mu == 0 ? t1 : b[mu - 1]; }
    double volume() const;
    /// Throws std::invalid_argument unless every interval has positive length.
    void validate() const;
};

struct ComplexMomentum
{
    cplx p0;
    std::array<cplx, 3> p{};

    Covector4<cplx> covariant() const { return {p0, -p[0], -p[1], -p[2]}; }
    static ComplexMomentum from_covariant(const Covector4<cplx>& q) { return {q[0], {-q[1], -q[2], -q[3]}}; }
};

/// Below this |s (b - a)| a 1D factor is evaluated by its Taylor series.
inline constexpr double kSeriesThreshold = 1e-6;

/// int_a^b e^{i s u} du, with the removable singularity at s = 0 handled by a series.
cplx exp_integral(cplx s, double a, double b);

cplx delta_sigma(const ComplexMomentum& p, const BoxRegion& box);

/// A test function with its first and second partial derivatives in x^mu.
struct SmoothFunction
{
    std::function<cplx(const std::array<double, 4>&)> value;
    std::function<std::array<cplx, 4>(const std::array<double, 4>&)> gradient;
    std::function<Matrix4<cplx>(const std::array<double, 4>&)> hessian;
};

/// Largest residual of the first- and second-derivative integration-by-parts identities,
/// each scaled by max(1, |F[d phi]|); both sides by 20-point tensor Gauss-Legendre quadrature.
double fourier_parts_check(const SmoothFunction& phi, const ComplexMomentum& p, const BoxRegion& box);

/// (-p^2 + m^2 + i v^a p_a) Id + commutator term; the x-dependent term of the symbol is dropped.
template <class S>
Matrix4<S> dispersion_matrix(const Covector4<S>& p, const Covector4<S>& v, const S& m, const clifford::GammaRep<S>& rep)
{
    return clifford::kg_symbol(p, Vector4<S>{}, v, m, rep, false);
}

Matrix4<cplx> dispersion_matrix(const ComplexMomentum& p, const Covector4<double>& v, double m,
                                const clifford::GammaRep<cplx>& rep);

/// p_a = (v_a / v_0) E: the alignment that removes the commutator term.
template <class S> Covector4<S> constrained_momentum(const Covector4<S>& v, const S& energy)
{
    Covector4<S> p;
    for (std::size_t a = 0; a < 4; ++a)
        p[a] = v[a] * energy / v[0];
    return p;
}

template <class S> Matrix4<S> off_diagonal(const Matrix4<S>& m)
{
    Matrix4<S> r = m;
    for (std::size_t i = 0; i < 4; ++i)
        r[i][i] = S(0);
    return r;
}

struct Spectrum
{
    cplx plus;  // larger real part
    cplx minus;
};

/// Roots of E^2 - i v0 E - m^2 v0^2 / v^2 = 0, v^2 = v.v with the flat metric.
/// Throws DegenerateError for v0 = 0 or v^2 = 0.
Spectrum constrained_spectrum(const Covector4<double>& v, double m);

/// First-order estimate E = i td/2 +- m (1 - kappa^2 / 2), kappa = grad_norm / td.
Spectrum first_order_spectrum(double theta_dot, double grad_norm, double m);

/// ||v|| |Delta(p)| at the constrained momentum of the E_plus root; ||v|| is Euclidean.
double delta_diagnostic(const Covector4<double>& v, double m, const BoxRegion& box);

/// Root with Re > 0 of w^2 + i td w - (k^2 + m^2 - i tp k) = 0, the symbol of
/// phi_tt - phi_xx + m^2 phi - td phi_t + tp phi_x under e^{i(wt - kx)}.
cplx plane_wave_rates(double k, double m, double theta_dot, double theta_prime);

} // namespace exocalc::dispersion
