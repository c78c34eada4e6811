#pragma once

// Spinor <-> null-point dictionary and the SL(2,C) action on Hermitian 2x2 matrices.

#include "exocalc/four_vector.hpp"

#include <array>
#include <complex>

namespace exocalc::cartan {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;

struct SpinorPair
{
    cplx zeta;
    cplx chi;
};

struct HermitianV
{
    Mat2 m{};
};

enum class PhaseConvention {
    ZetaReal, // zeta real >= 0; chi real >= 0 when zeta = 0
};

/// Relative tolerance on t^2 - |r|^2 accepted as null by point_to_spinor.
inline constexpr double kNullTolerance = 1e-9;
/// Tolerance on | |det lambda| - 1 | accepted by sl2c_act.
inline constexpr double kDetTolerance = 1e-12;

Vector4<double> spinor_to_point(const SpinorPair& s);

/// Future null vectors only; throws std::invalid_argument otherwise.
SpinorPair point_to_spinor(const Vector4<double>& v, PhaseConvention convention = PhaseConvention::ZetaReal);

HermitianV outer_matrix(const SpinorPair& s);

/// (1/sqrt2) [[t+z, x+iy], [x-iy, t-z]]; linear, so any 4-vector is accepted.
HermitianV encode_point(const Vector4<double>& v);
Vector4<double> decode_point(const HermitianV& V);

cplx det(const Mat2& a);
Mat2 matmul(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& a);

/// V -> lambda V lambda^dagger; throws std::invalid_argument unless |det lambda| = 1.
HermitianV sl2c_act(const Mat2& lambda, const HermitianV& V);

/// Lorentz matrix Lambda^mu_nu of lambda, read off from the images of the basis vectors.
Matrix4<double> lorentz_matrix(const Mat2& lambda);

/// (zeta, chi) -> e^{i alpha/2} (zeta, chi).
SpinorPair rotate_phase(const SpinorPair& s, double alpha);

} // namespace exocalc::cartan
