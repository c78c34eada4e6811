#pragma once

// Reference values for the spectrum sweep: roots by Newton iteration on the
// reduced scalar relation and the box kernel by adaptive Gauss-Kronrod quadrature.

#include "exocalc/dispersion.hpp"

namespace exocalc::oracles {

/// int_Sigma e^{ipx} d^4x, each 1D integral by adaptive 61-point Gauss-Kronrod.
dispersion::cplx quadrature_delta(const dispersion::ComplexMomentum& p, const dispersion::BoxRegion& box);

/// Roots of -(v^2/v0^2) E^2 + m^2 + i (v^2/v0) E = 0 by Newton from i v0/2 +- m,
/// ordered by real part descending. Throws DegenerateError for v0 = 0 or v^2 = 0.
dispersion::Spectrum newton_spectrum(const Covector4<double>& v, double m);

/// ||v|| |Delta| at p_a = v_a E_plus / v0, with both pieces from the oracles above.
double oracle_delta_diagnostic(const Covector4<double>& v, double m, const dispersion::BoxRegion& box);

} // namespace exocalc::oracles
