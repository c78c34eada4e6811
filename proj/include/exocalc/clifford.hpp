#pragma once

// Gamma matrices, the tetrad-like maps e^mu_a = delta - x^mu d_a theta, the
// deformed gammas and the plane-wave symbol of the modified Klein-Gordon operator.
//
// The scalar ring S is ComplexRational, EpsSeries<ComplexRational> or
// std::complex<double>; real inputs are lifted into S by the caller.

#include "exocalc/eps_series.hpp"
#include "exocalc/four_vector.hpp"
#include "exocalc/rational.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace exocalc::clifford {

/// Sign of the commutator term in the Fourier-side symbol.
///
/// The symbol is read off with the integration-by-parts kernel, d_a -> -i p_a, i.e.
/// against the plane wave e^{-i p.x}. With that kernel the -v.d term gives +i v.p
/// and 1/2 [g^a, g^b] v_a d_b gives -(i/2)[g^a, g^b] v_a p_b.
inline constexpr int kCommutatorSign = -1;
/// Sign of 2 (v.p)(x.p) under the same kernel (even in p, so it does not depend on it).
inline constexpr int kXTermSign = +1;

template <class S> struct GammaRep
{
    std::array<Matrix4<S>, 4> gamma;
    const Matrix4<S>& operator[](std::size_t mu) const { return gamma[mu]; }
};

template <class S> struct TetradPair
{
    Matrix4<S> e_up;   // e^mu_a   = delta^mu_a - x^mu d_a theta
    Matrix4<S> e_down; // e_mu^a   = delta_mu^a + x^a d_mu theta
};

// ---- conversion from the exact representation ----

template <class S> S scalar_from(const ComplexRational& z);
template <> inline ComplexRational scalar_from<ComplexRational>(const ComplexRational& z) { return z; }
template <> inline std::complex<double> scalar_from<std::complex<double>>(const ComplexRational& z)
{
    return to_complex_double(z);
}
template <> inline EpsSeries<ComplexRational> scalar_from<EpsSeries<ComplexRational>>(const ComplexRational& z)
{
    return EpsSeries<ComplexRational>(z);
}

inline EpsSeries<ComplexRational> to_complex_series(const EpsSeries<Rational>& s)
{
    return map_series<ComplexRational>(s, [](const Rational& r) { return ComplexRational(r); });
}

/// Standard Dirac representation with exact 0, +-1, +-i entries.
GammaRep<ComplexRational> dirac_representation();

/// U gamma U^dagger for a unitary U with rational entries (checked).
GammaRep<ComplexRational> conjugated_representation(const Matrix4<ComplexRational>& unitary);

/// A fixed non-diagonal rational unitary, used to exercise representation independence.
Matrix4<ComplexRational> sample_rational_unitary();

template <class S> GammaRep<S> convert_rep(const GammaRep<ComplexRational>& rep)
{
    GammaRep<S> out;
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                out.gamma[mu][i][j] = scalar_from<S>(rep.gamma[mu][i][j]);
    return out;
}

// ---- small matrix algebra ----

template <class S> Matrix4<S> zero_matrix()
{
    Matrix4<S> m;
    for (auto& row : m)
        row.fill(S(0));
    return m;
}

template <class S> Matrix4<S> mat_add(const Matrix4<S>& a, const Matrix4<S>& b)
{
    Matrix4<S> r = a;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r[i][j] += b[i][j];
    return r;
}

template <class S> Matrix4<S> mat_scale(const S& s, const Matrix4<S>& a)
{
    Matrix4<S> r = a;
    for (auto& row : r)
        for (auto& v : row)
            v = s * v;
    return r;
}

template <class S> Matrix4<S> anticommutator(const Matrix4<S>& a, const Matrix4<S>& b)
{
    return mat_add(matmul(a, b), matmul(b, a));
}

template <class S> Matrix4<S> commutator(const Matrix4<S>& a, const Matrix4<S>& b)
{
    return matsub(matmul(a, b), matmul(b, a));
}

template <class S> Matrix4<S> adjoint(const Matrix4<S>& a);
template <> inline Matrix4<ComplexRational> adjoint(const Matrix4<ComplexRational>& a)
{
    Matrix4<ComplexRational> r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r[i][j] = conj(a[j][i]);
    return r;
}
template <> inline Matrix4<std::complex<double>> adjoint(const Matrix4<std::complex<double>>& a)
{
    Matrix4<std::complex<double>> r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r[i][j] = std::conj(a[j][i]);
    return r;
}

/// {g^mu, g^nu} - 2 eta^{mu nu} Id for all index pairs.
template <class S> std::array<std::array<Matrix4<S>, 4>, 4> clifford_residual(const GammaRep<S>& rep)
{
    std::array<std::array<Matrix4<S>, 4>, 4> out;
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu) {
            Matrix4<S> a = anticommutator(rep[mu], rep[nu]);
            if (mu == nu)
                for (std::size_t i = 0; i < 4; ++i)
                    a[i][i] -= S(2 * metric_sign(mu));
            out[mu][nu] = a;
        }
    return out;
}

// ---- tetrads and deformed gammas ----

template <class S> TetradPair<S> tetrads(const Vector4<S>& x, const Covector4<S>& g)
{
    TetradPair<S> t{identity_matrix4<S>(), identity_matrix4<S>()};
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t a = 0; a < 4; ++a) {
            t.e_up[mu][a] -= x[mu] * g[a];
            t.e_down[mu][a] += x[a] * g[mu];
        }
    return t;
}

/// C[mu][nu] = e^mu_a e_nu^a.
template <class S> Matrix4<S> tetrad_contraction(const TetradPair<S>& t)
{
    Matrix4<S> r = zero_matrix<S>();
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu)
            for (std::size_t a = 0; a < 4; ++a)
                r[mu][nu] += t.e_up[mu][a] * t.e_down[nu][a];
    return r;
}

/// C[a][b] = e^mu_a e_mu^b.
template <class S> Matrix4<S> tetrad_contraction_transposed(const TetradPair<S>& t)
{
    Matrix4<S> r = zero_matrix<S>();
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t mu = 0; mu < 4; ++mu)
                r[a][b] += t.e_up[mu][a] * t.e_down[mu][b];
    return r;
}

/// e^mu_a e^nu_b eta^{ab}.
template <class S> Matrix4<S> metric_from_tetrads(const TetradPair<S>& t)
{
    Matrix4<S> r = zero_matrix<S>();
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu)
            for (std::size_t a = 0; a < 4; ++a)
                r[mu][nu] += S(metric_sign(a)) * t.e_up[mu][a] * t.e_up[nu][a];
    return r;
}

/// g~^mu = e^mu_a g^a.
template <class S> GammaRep<S> gamma_tilde(const Vector4<S>& x, const Covector4<S>& g, const GammaRep<S>& rep)
{
    const TetradPair<S> t = tetrads(x, g);
    GammaRep<S> out;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        out.gamma[mu] = zero_matrix<S>();
        for (std::size_t a = 0; a < 4; ++a)
            out.gamma[mu] = mat_add(out.gamma[mu], mat_scale(t.e_up[mu][a], rep[a]));
    }
    return out;
}

/// g~_mu = e_mu^a g_a, with g_a = eta_{ab} g^b.
template <class S> GammaRep<S> gamma_tilde_lower(const Vector4<S>& x, const Covector4<S>& g, const GammaRep<S>& rep)
{
    const TetradPair<S> t = tetrads(x, g);
    GammaRep<S> out;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        out.gamma[mu] = zero_matrix<S>();
        for (std::size_t a = 0; a < 4; ++a)
            out.gamma[mu] = mat_add(out.gamma[mu], mat_scale(S(metric_sign(a)) * t.e_down[mu][a], rep[a]));
    }
    return out;
}

/// {g~^mu, g~^nu} - 2 h^{mu nu} Id for a supplied symmetric h.
template <class S>
std::array<std::array<Matrix4<S>, 4>, 4> deformed_clifford_residual(const GammaRep<S>& gt, const Matrix4<S>& h)
{
    std::array<std::array<Matrix4<S>, 4>, 4> out;
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu) {
            Matrix4<S> a = anticommutator(gt[mu], gt[nu]);
            for (std::size_t i = 0; i < 4; ++i)
                a[i][i] -= S(2) * h[mu][nu];
            out[mu][nu] = a;
        }
    return out;
}

// ---- plane-wave symbol ----

template <class S> S imaginary_unit() { return S(0, 1); }
template <> inline EpsSeries<ComplexRational> imaginary_unit<EpsSeries<ComplexRational>>()
{
    return EpsSeries<ComplexRational>(ComplexRational::i());
}

/// Commutator part (i/2) sign [g^a, g^b] v_a p_b.
template <class S> Matrix4<S> commutator_symbol(const Covector4<S>& p, const Covector4<S>& v, const GammaRep<S>& rep)
{
    Matrix4<S> acc = zero_matrix<S>();
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            if (a == b)
                continue;
            const S w = v[a] * p[b];
            if (w == S(0))
                continue;
            acc = mat_add(acc, mat_scale(w, commutator(rep[a], rep[b])));
        }
    const S half_i = imaginary_unit<S>() * S(kCommutatorSign) / S(2);
    return mat_scale(half_i, acc);
}

/// Identity coefficient -p^2 + m^2 + i v^a p_a [+ 2 (v.p)(x.p)].
template <class S>
S kg_scalar_symbol(const Covector4<S>& p, const Vector4<S>& x, const Covector4<S>& v, const S& m, bool include_x_term)
{
    const Vector4<S> v_up = raise_index(v);
    const S vp = contract(p, v_up);
    S s = S(-minkowski_dot(p, p)) + m * m + imaginary_unit<S>() * vp;
    if (include_x_term)
        s += S(2 * kXTermSign) * vp * contract(p, x);
    return s;
}

/// M(p, x) with L[e^{-i p.x} psi0] = M psi0 e^{-i p.x}; v = d theta (covariant).
template <class S>
Matrix4<S> kg_symbol(const Covector4<S>& p, const Vector4<S>& x, const Covector4<S>& v, const S& m, const GammaRep<S>& rep,
                     bool include_x_term = true)
{
    const S s = kg_scalar_symbol(p, x, v, m, include_x_term);
    return mat_add(mat_scale(s, identity_matrix4<S>()), commutator_symbol(p, v, rep));
}

// ---- finite-difference application in 1+1D ----

using cplx = std::complex<double>;

/// Samples on a uniform (t, x) grid, row-major in t; `components` values per node.
struct SampledField
{
    double t0 = 0.0, x0 = 0.0, dt = 0.0, dx = 0.0;
    int nt = 0, nx = 0;
    int components = 1;
    std::vector<cplx> values;

    SampledField() = default;
    SampledField(double t0_, double x0_, double dt_, double dx_, int nt_, int nx_, int comps = 1);

    cplx& at(int it, int ix, int c = 0) { return values[index(it, ix, c)]; }
    const cplx& at(int it, int ix, int c = 0) const { return values[index(it, ix, c)]; }
    double t(int it) const { return t0 + it * dt; }
    double x(int ix) const { return x0 + ix * dx; }

  private:
    std::size_t index(int it, int ix, int c) const
    {
        return (static_cast<std::size_t>(it) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(ix)) *
                   static_cast<std::size_t>(components) +
               static_cast<std::size_t>(c);
    }
};

inline constexpr int kGhostLayers = 2;

/// Scalar reduction: (box + m^2) phi - v^a d_a phi [- 2 v^a x^mu d_mu d_a phi], v from the
/// (t, x) components of the covariant gradient. Ghost layers of the output are zero.
SampledField apply_exotic_kg(const SampledField& field, const Covector4<double>& grad, double m, bool include_x_term);

/// Four-component version carrying 1/2 [g^a, g^b] v_a d_b psi as well.
SampledField apply_exotic_kg_spinor(const SampledField& field, const Covector4<double>& grad, double m, bool include_x_term,
                                    const GammaRep<cplx>& rep);

/// (i g~^mu d_mu + m)(i g~^nu d_nu - m) psi by nested central differences; g~ evaluated per node.
SampledField squared_dirac_nested(const SampledField& field, const Covector4<double>& grad, double m, const GammaRep<cplx>& rep);

} // namespace exocalc::clifford
