#include "exocalc/clifford.hpp"

#include <stdexcept>

namespace exocalc::clifford {

namespace {

using CR = ComplexRational;

Matrix4<CR> zero_cr() { return zero_matrix<CR>(); }

void check_grid(const SampledField& f, int components)
{
    if (f.nt < 2 * kGhostLayers + 1 || f.nx < 2 * kGhostLayers + 1)
        throw std::invalid_argument("apply_exotic_kg: grid too small for the ghost layers");
    if (f.components != components)
        throw std::invalid_argument("apply_exotic_kg: unexpected number of field components");
    if (!(f.dt > 0.0) || !(f.dx > 0.0))
        throw std::invalid_argument("apply_exotic_kg: grid spacing must be positive");
}

struct Derivatives
{
    cplx phi, t, x, tt, xx, tx;
};

Derivatives central(const SampledField& f, int it, int ix, int c)
{
    const cplx p = f.at(it, ix, c);
    Derivatives d;
    d.phi = p;
    d.t = (f.at(it + 1, ix, c) - f.at(it - 1, ix, c)) / (2.0 * f.dt);
    d.x = (f.at(it, ix + 1, c) - f.at(it, ix - 1, c)) / (2.0 * f.dx);
    d.tt = (f.at(it + 1, ix, c) - 2.0 * p + f.at(it - 1, ix, c)) / (f.dt * f.dt);
    d.xx = (f.at(it, ix + 1, c) - 2.0 * p + f.at(it, ix - 1, c)) / (f.dx * f.dx);
    d.tx = (f.at(it + 1, ix + 1, c) - f.at(it + 1, ix - 1, c) - f.at(it - 1, ix + 1, c) + f.at(it - 1, ix - 1, c)) /
           (4.0 * f.dt * f.dx);
    return d;
}

cplx scalar_operator(const Derivatives& d, double t, double x, const Covector4<double>& grad, double m, bool include_x_term)
{
    const double v0 = grad[0];
    const double v1 = -grad[1];
    cplx r = d.tt - d.xx + m * m * d.phi - (v0 * d.t + v1 * d.x);
    if (include_x_term) {
        // 2 v^a x^mu d_mu d_a phi restricted to mu, a in {t, x}.
        const cplx xd = v0 * (t * d.tt + x * d.tx) + v1 * (t * d.tx + x * d.xx);
        r -= 2.0 * xd;
    }
    return r;
}

} // namespace

GammaRep<ComplexRational> dirac_representation()
{
    const CR one(1), i = CR::i();
    GammaRep<CR> rep;
    for (auto& g : rep.gamma)
        g = zero_cr();
    rep.gamma[0][0][0] = one;
    rep.gamma[0][1][1] = one;
    rep.gamma[0][2][2] = -one;
    rep.gamma[0][3][3] = -one;

    const std::array<std::array<std::array<CR, 2>, 2>, 3> sigma{{
        {{{CR(0), one}, {one, CR(0)}}},
        {{{CR(0), -i}, {i, CR(0)}}},
        {{{one, CR(0)}, {CR(0), -one}}},
    }};
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                rep.gamma[k + 1][a][b + 2] = sigma[k][a][b];
                rep.gamma[k + 1][a + 2][b] = -sigma[k][a][b];
            }
    return rep;
}

Matrix4<ComplexRational> sample_rational_unitary()
{
    const Rational c(3, 5), s(4, 5);
    using M2 = std::array<std::array<CR, 2>, 2>;
    const M2 rot{{{CR(c), CR(-s)}, {CR(s), CR(c)}}};
    const M2 mix{{{CR(c), CR(Rational(0), s)}, {CR(Rational(0), s), CR(c)}}};
    auto kron = [](const M2& a, const M2& b) {
        Matrix4<CR> u;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k)
                    for (std::size_t l = 0; l < 2; ++l)
                        u[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
        return u;
    };
    // A single Kronecker factor commutes with some gamma; the product does not.
    return matmul(kron(rot, mix), kron(mix, rot));
}

GammaRep<ComplexRational> conjugated_representation(const Matrix4<ComplexRational>& unitary)
{
    const Matrix4<CR> udag = adjoint(unitary);
    if (!(matmul(unitary, udag) == identity_matrix4<CR>()))
        throw std::invalid_argument("conjugated_representation: matrix is not unitary");
    const GammaRep<CR> base = dirac_representation();
    GammaRep<CR> out;
    for (std::size_t mu = 0; mu < 4; ++mu)
        out.gamma[mu] = matmul(matmul(unitary, base[mu]), udag);
    return out;
}

SampledField::SampledField(double t0_, double x0_, double dt_, double dx_, int nt_, int nx_, int comps)
    : t0(t0_), x0(x0_), dt(dt_), dx(dx_), nt(nt_), nx(nx_), components(comps),
      values(static_cast<std::size_t>(nt_) * static_cast<std::size_t>(nx_) * static_cast<std::size_t>(comps), cplx(0.0))
{
}

SampledField apply_exotic_kg(const SampledField& field, const Covector4<double>& grad, double m, bool include_x_term)
{
    check_grid(field, 1);
    SampledField out(field.t0, field.x0, field.dt, field.dx, field.nt, field.nx, 1);
    for (int it = kGhostLayers; it < field.nt - kGhostLayers; ++it)
        for (int ix = kGhostLayers; ix < field.nx - kGhostLayers; ++ix)
            out.at(it, ix) = scalar_operator(central(field, it, ix, 0), field.t(it), field.x(ix), grad, m, include_x_term);
    return out;
}

SampledField apply_exotic_kg_spinor(const SampledField& field, const Covector4<double>& grad, double m, bool include_x_term,
                                    const GammaRep<cplx>& rep)
{
    check_grid(field, 4);
    // 1/2 [g^a, g^b] v_a restricted to b in {t, x}; the field does not depend on y, z.
    std::array<Matrix4<cplx>, 2> comm;
    for (std::size_t b = 0; b < 2; ++b) {
        comm[b] = zero_matrix<cplx>();
        for (std::size_t a = 0; a < 4; ++a)
            if (a != b && grad[a] != 0.0)
                comm[b] = mat_add(comm[b], mat_scale(cplx(0.5 * grad[a]), commutator(rep[a], rep[b])));
    }
    SampledField out(field.t0, field.x0, field.dt, field.dx, field.nt, field.nx, 4);
    for (int it = kGhostLayers; it < field.nt - kGhostLayers; ++it)
        for (int ix = kGhostLayers; ix < field.nx - kGhostLayers; ++ix) {
            std::array<Derivatives, 4> d;
            for (int c = 0; c < 4; ++c)
                d[static_cast<std::size_t>(c)] = central(field, it, ix, c);
            for (std::size_t r = 0; r < 4; ++r) {
                cplx acc = scalar_operator(d[r], field.t(it), field.x(ix), grad, m, include_x_term);
                for (std::size_t c = 0; c < 4; ++c)
                    acc += comm[0][r][c] * d[c].t + comm[1][r][c] * d[c].x;
                out.at(it, ix, static_cast<int>(r)) = acc;
            }
        }
    return out;
}

namespace {

/// out = (i g~^mu d_mu + sign m) in on nodes at least `ghost` away from the border.
void dirac_pass(const SampledField& in, SampledField& out, int ghost, const Covector4<double>& grad, double sign_m,
                const GammaRep<cplx>& rep)
{
    Matrix4<cplx> gdot = zero_matrix<cplx>();
    for (std::size_t a = 0; a < 4; ++a)
        gdot = mat_add(gdot, mat_scale(cplx(grad[a]), rep[a]));
    const cplx i(0.0, 1.0);
    for (int it = ghost; it < in.nt - ghost; ++it)
        for (int ix = ghost; ix < in.nx - ghost; ++ix) {
            const double xs[2] = {in.t(it), in.x(ix)};
            std::array<Matrix4<cplx>, 2> gt;
            for (std::size_t mu = 0; mu < 2; ++mu)
                gt[mu] = mat_add(rep[mu], mat_scale(cplx(-xs[mu]), gdot));
            for (std::size_t r = 0; r < 4; ++r) {
                cplx acc = sign_m * in.at(it, ix, static_cast<int>(r));
                for (std::size_t c = 0; c < 4; ++c) {
                    const int cc = static_cast<int>(c);
                    const cplx dt = (in.at(it + 1, ix, cc) - in.at(it - 1, ix, cc)) / (2.0 * in.dt);
                    const cplx dx = (in.at(it, ix + 1, cc) - in.at(it, ix - 1, cc)) / (2.0 * in.dx);
                    acc += i * (gt[0][r][c] * dt + gt[1][r][c] * dx);
                }
                out.at(it, ix, static_cast<int>(r)) = acc;
            }
        }
}

} // namespace

SampledField squared_dirac_nested(const SampledField& field, const Covector4<double>& grad, double m, const GammaRep<cplx>& rep)
{
    check_grid(field, 4);
    SampledField inner(field.t0, field.x0, field.dt, field.dx, field.nt, field.nx, 4);
    dirac_pass(field, inner, 1, grad, -m, rep);
    SampledField out(field.t0, field.x0, field.dt, field.dx, field.nt, field.nx, 4);
    dirac_pass(inner, out, kGhostLayers, grad, m, rep);
    return out;
}

} // namespace exocalc::clifford
