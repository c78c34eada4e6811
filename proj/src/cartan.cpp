#include "exocalc/cartan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace exocalc::cartan {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

Vector4<double> spinor_to_point(const SpinorPair& s)
{
    const double zz = std::norm(s.zeta);
    const double cc = std::norm(s.chi);
    const cplx zc = s.zeta * std::conj(s.chi);
    return {(zz + cc) / kSqrt2, 2.0 * zc.real() / kSqrt2, 2.0 * zc.imag() / kSqrt2, (zz - cc) / kSqrt2};
}

SpinorPair point_to_spinor(const Vector4<double>& v, PhaseConvention convention)
{
    const double t = v[0], x = v[1], y = v[2], z = v[3];
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("point_to_spinor: requires t > 0");
    const double rho2 = x * x + y * y;
    const double interval = t * t - rho2 - z * z;
    if (std::abs(interval) > kNullTolerance * t * t)
        throw std::invalid_argument("point_to_spinor: vector is not null");

    // One of t+z, t-z is at least t; recover the other from (t+z)(t-z) = x^2 + y^2.
    double tpz, tmz;
    if (z >= 0.0) {
        tpz = t + z;
        tmz = rho2 / tpz;
    } else {
        tmz = t - z;
        tpz = rho2 / tmz;
    }
    const double zeta_abs = std::sqrt(tpz / kSqrt2);
    const double chi_abs = std::sqrt(tmz / kSqrt2);

    switch (convention) {
    case PhaseConvention::ZetaReal:
        break;
    }
    // zeta conj(chi) = (x + iy)/sqrt2 with zeta >= 0 fixes arg(chi) = -arg(x + iy).
    const double phase = rho2 > 0.0 ? std::atan2(y, x) : 0.0;
    return {cplx(zeta_abs, 0.0), std::polar(chi_abs, -phase)};
}

HermitianV outer_matrix(const SpinorPair& s)
{
    HermitianV V;
    V.m[0][0] = s.zeta * std::conj(s.zeta);
    V.m[0][1] = s.zeta * std::conj(s.chi);
    V.m[1][0] = s.chi * std::conj(s.zeta);
    V.m[1][1] = s.chi * std::conj(s.chi);
    return V;
}

HermitianV encode_point(const Vector4<double>& v)
{
    HermitianV V;
    V.m[0][0] = (v[0] + v[3]) / kSqrt2;
    V.m[0][1] = cplx(v[1], v[2]) / kSqrt2;
    V.m[1][0] = cplx(v[1], -v[2]) / kSqrt2;
    V.m[1][1] = (v[0] - v[3]) / kSqrt2;
    return V;
}

Vector4<double> decode_point(const HermitianV& V)
{
    const double a = V.m[0][0].real();
    const double d = V.m[1][1].real();
    const cplx b = 0.5 * (V.m[0][1] + std::conj(V.m[1][0]));
    return {(a + d) / kSqrt2, kSqrt2 * b.real(), kSqrt2 * b.imag(), (a - d) / kSqrt2};
}

cplx det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

Mat2 matmul(const Mat2& a, const Mat2& b)
{
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 adjoint(const Mat2& a)
{
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = std::conj(a[j][i]);
    return r;
}

HermitianV sl2c_act(const Mat2& lambda, const HermitianV& V)
{
    if (std::abs(std::abs(det(lambda)) - 1.0) > kDetTolerance)
        throw std::invalid_argument("sl2c_act: |det lambda| must be 1");
    return {matmul(matmul(lambda, V.m), adjoint(lambda))};
}

Matrix4<double> lorentz_matrix(const Mat2& lambda)
{
    Matrix4<double> L{};
    for (std::size_t nu = 0; nu < 4; ++nu) {
        Vector4<double> e{0.0, 0.0, 0.0, 0.0};
        e[nu] = 1.0;
        const Vector4<double> image = decode_point(sl2c_act(lambda, encode_point(e)));
        for (std::size_t mu = 0; mu < 4; ++mu)
            L[mu][nu] = image[mu];
    }
    return L;
}

SpinorPair rotate_phase(const SpinorPair& s, double alpha)
{
    // Quarter turns of the half angle are applied exactly so that alpha = 2 pi gives -s bit for bit.
    const double quarters = (alpha / 2.0) / (std::numbers::pi / 2.0);
    cplx u;
    if (quarters == std::round(quarters) && std::abs(quarters) < 1e15) {
        static constexpr std::array<cplx, 4> units{cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
        const long q = static_cast<long>(std::round(quarters));
        u = units[static_cast<std::size_t>(((q % 4) + 4) % 4)];
    } else {
        u = std::polar(1.0, alpha / 2.0);
    }
    return {u * s.zeta, u * s.chi};
}

} // namespace exocalc::cartan
