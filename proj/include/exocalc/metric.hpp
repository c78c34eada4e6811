#pragma once

// The deformed bilinear form on topologically nontrivial flat spacetime.
//
// With d~x^mu = dx^mu + x^mu dtheta the form reads
//
//     eta~ = eta_{mu nu} (dx^mu + x^mu dtheta) (x) (dx^nu + x^nu dtheta)
//
// and, on a basis, eta~_{ab} = eta_{ab} + x_a g_b + x_b g_a + (x.x) g_a g_b with
// g = dtheta. Everything here is templated on the scalar ring so the same code
// runs on doubles, exact rationals and eps-graded series.

#include "exocalc/four_vector.hpp"
#include "exocalc/theta_field.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace exocalc::metric {

enum class Order { Full, FirstOrder };

template <class T> struct ExoticMetric
{
    Vector4<T> point;
    Covector4<T> grad;
    Matrix4<T> components; // lower indices unless `contravariant`
    Order order = Order::Full;
    bool contravariant = false;

    const T& operator()(std::size_t a, std::size_t b) const { return components[a][b]; }
};

template <class T> using ThetaArg = std::type_identity_t<ThetaField<T>>;

template <class T> ExoticMetric<T> metric_full(const Vector4<T>& x, const Covector4<T>& g)
{
    const Covector4<T> xl = lower_index(x);
    const T xx = minkowski_dot(x, x);
    ExoticMetric<T> m{x, g, {}, Order::Full, false};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            m.components[a][b] = T(metric_sign(a) * (a == b ? 1 : 0)) + xl[a] * g[b] + xl[b] * g[a] + xx * g[a] * g[b];
    return m;
}

template <class T> ExoticMetric<T> metric_full(const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return metric_full(x, theta_grad<T>(theta, x));
}

/// Quadratic gradient terms dropped.
template <class T> ExoticMetric<T> metric_first_order(const Vector4<T>& x, const Covector4<T>& g)
{
    const Covector4<T> xl = lower_index(x);
    ExoticMetric<T> m{x, g, {}, Order::FirstOrder, false};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            m.components[a][b] = T(metric_sign(a) * (a == b ? 1 : 0)) + xl[a] * g[b] + xl[b] * g[a];
    return m;
}

template <class T> ExoticMetric<T> metric_first_order(const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return metric_first_order(x, theta_grad<T>(theta, x));
}

/// eta~^{ab} = eta^{ab} - x^a d^b theta - x^b d^a theta; inverse of the first-order form up to O(g^2).
template <class T> ExoticMetric<T> metric_inverse_first_order(const Vector4<T>& x, const Covector4<T>& g)
{
    const Vector4<T> gu = raise_index(g);
    ExoticMetric<T> m{x, g, {}, Order::FirstOrder, true};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            m.components[a][b] = T(metric_sign(a) * (a == b ? 1 : 0)) - x[a] * gu[b] - x[b] * gu[a];
    return m;
}

template <class T> ExoticMetric<T> metric_inverse_first_order(const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return metric_inverse_first_order(x, theta_grad<T>(theta, x));
}

/// eta~(v, w) = v.w + (x.v)(g.w) + (x.w)(g.v) + (x.x)(g.v)(g.w), g.v = g_b v^b.
template <class T> T bilinear_eval(const Vector4<T>& v, const Vector4<T>& w, const Vector4<T>& x, const Covector4<T>& g)
{
    const T gv = contract(g, v);
    const T gw = contract(g, w);
    return T(minkowski_dot(v, w) + minkowski_dot(x, v) * gw + minkowski_dot(x, w) * gv + minkowski_dot(x, x) * gv * gw);
}

template <class T>
T bilinear_eval(const Vector4<T>& v, const Vector4<T>& w, const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return bilinear_eval(v, w, x, theta_grad<T>(theta, x));
}

/// w_nu = v_nu + x_nu (g.v); eta~(v, .) vanishes identically iff w = 0.
template <class T> Covector4<T> degeneracy_witness(const Vector4<T>& v, const Vector4<T>& x, const Covector4<T>& g)
{
    const T gv = contract(g, v);
    const Covector4<T> vl = lower_index(v);
    const Covector4<T> xl = lower_index(x);
    Covector4<T> w;
    for (std::size_t nu = 0; nu < 4; ++nu)
        w[nu] = vl[nu] + xl[nu] * gv;
    return w;
}

template <class T> Covector4<T> degeneracy_witness(const Vector4<T>& v, const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return degeneracy_witness(v, x, theta_grad<T>(theta, x));
}

/// (v^mu + x^mu g.v)(v_mu + x_mu g.v): the quadratic form written as a square.
template <class T> T null_deviation(const Vector4<T>& v, const Vector4<T>& x, const Covector4<T>& g)
{
    const T gv = contract(g, v);
    Vector4<T> shifted;
    for (std::size_t mu = 0; mu < 4; ++mu)
        shifted[mu] = v[mu] + x[mu] * gv;
    return minkowski_dot(shifted, shifted);
}

template <class T> T null_deviation(const Vector4<T>& v, const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return null_deviation(v, x, theta_grad<T>(theta, x));
}

/// Linearized 1+1D interval c^2 dt^2 {1 + 2 t th' - (u/c)^2 (1 - 2 x th_x) - (2u/c^2)(t th_x c^2 + th' x)},
/// u = dx/dt, quadratic theta-derivative terms already dropped.
template <class T> T interval_2d(const T& dt, const T& dx, const T& t, const T& x, const T& theta_dot, const T& theta_prime, const T& c)
{
    const T u = dx / dt;
    const T one(1);
    const T two(2);
    const T bracket = one + two * t * theta_dot - (u * u / (c * c)) * (one - two * x * theta_prime) -
                      (two * u / c) * (t * theta_prime * c * c + theta_dot * x) / c;
    return T(c * c * dt * dt * bracket);
}

template <class T> struct LightconeVelocities
{
    T plus;
    T minus;
};

/// u_{+-} = +-c - th'(x -+ c t) - c th_x (c t -+ x), the zeros of interval_2d to first order.
template <class T> LightconeVelocities<T> lightcone_velocity(const T& t, const T& x, const T& theta_dot, const T& theta_prime, const T& c)
{
    const T ct = c * t;
    T plus = c - theta_dot * (x - ct) - c * theta_prime * (ct - x);
    T minus = T(-c) - theta_dot * (x + ct) - c * theta_prime * (ct + x);
    return {std::move(plus), std::move(minus)};
}

/// alpha_i = phi_i + (phi_k x^k) d_i theta: components of phi in the plain dx basis.
template <class T> Covector4<T> dual_coefficients(const Covector4<T>& phi, const Vector4<T>& x, const Covector4<T>& g)
{
    const T px = contract(phi, x);
    Covector4<T> out;
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = phi[i] + px * g[i];
    return out;
}

template <class T> Covector4<T> dual_coefficients(const Covector4<T>& phi, const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return dual_coefficients(phi, x, theta_grad<T>(theta, x));
}

/// True iff the topology sits on the excluded configuration d_j theta = -phi_j / (phi.x),
/// i.e. the dual coefficients of a nonzero phi all vanish.
template <class T> bool dual_obstruction(const Covector4<T>& phi, const Vector4<T>& x, const Covector4<T>& g)
{
    bool nonzero = false;
    for (std::size_t i = 0; i < 4; ++i)
        if (!(phi[i] == T(0)))
            nonzero = true;
    if (!nonzero)
        throw std::invalid_argument("dual_obstruction: phi must be nonzero");
    const Covector4<T> a = dual_coefficients(phi, x, g);
    for (std::size_t i = 0; i < 4; ++i)
        if (!(a[i] == T(0)))
            return false;
    return true;
}

template <class T> bool dual_obstruction(const Covector4<T>& phi, const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return dual_obstruction(phi, x, theta_grad<T>(theta, x));
}

/// phi(v) = phi^k v_k + (phi^i x_i)(d^j theta v_j); equals the plain pairing when phi.x = 0.
template <class T> T inner_product_dual(const Covector4<T>& phi, const Vector4<T>& v, const Vector4<T>& x, const Covector4<T>& g)
{
    const Vector4<T> phi_up = raise_index(phi);
    const Vector4<T> g_up = raise_index(g);
    const Covector4<T> vl = lower_index(v);
    const Covector4<T> xl = lower_index(x);
    return T(contract(vl, phi_up) + contract(xl, phi_up) * contract(vl, g_up));
}

template <class T> T inner_product_dual(const Covector4<T>& phi, const Vector4<T>& v, const Vector4<T>& x, const ThetaArg<T>& theta)
{
    return inner_product_dual(phi, v, x, theta_grad<T>(theta, x));
}

/// ||x||_max * ||d theta||, the small parameter behind the linearization. Diagnostic only.
inline double validity_ratio(const Vector4<double>& x, const Covector4<double>& g)
{
    double xmax = 0.0;
    double gn = 0.0;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        xmax = std::max(xmax, std::abs(x[mu]));
        gn += g[mu] * g[mu];
    }
    return xmax * std::sqrt(gn);
}

} // namespace exocalc::metric
