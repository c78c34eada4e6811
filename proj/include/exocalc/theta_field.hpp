#pragma once

// The real topological scalar theta(x) and its derivatives.

#include "exocalc/eps_series.hpp"
#include "exocalc/four_vector.hpp"
#include "exocalc/rational.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace exocalc {

/// theta(x) = offset + grad_mu x^mu, with constant covariant gradient and zero hessian.
template <class T> struct LinearTheta
{
    Covector4<T> grad{};
    T offset{};
};

/// Pointwise-evaluated theta; any callable may throw and is reported as a domain error.
template <class T> struct GeneralTheta
{
    std::function<T(const Vector4<T>&)> value;
    std::function<Covector4<T>(const Vector4<T>&)> gradient;
    std::function<Matrix4<T>(const Vector4<T>&)> hessian;
};

template <class T> using ThetaField = std::variant<LinearTheta<T>, GeneralTheta<T>>;

namespace detail {
template <class F> decltype(auto) guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::domain_error(std::string(what) + ": " + e.what());
    }
}
} // namespace detail

template <class T> T theta_eval(const std::type_identity_t<ThetaField<T>>& theta, const Vector4<T>& x)
{
    if (const auto* lin = std::get_if<LinearTheta<T>>(&theta))
        return T(lin->offset + contract(lin->grad, x));
    const auto& gen = std::get<GeneralTheta<T>>(theta);
    if (!gen.value)
        throw std::domain_error("theta_eval: value callable not set");
    return detail::guarded("theta_eval", [&] { return gen.value(x); });
}

template <class T> Covector4<T> theta_grad(const std::type_identity_t<ThetaField<T>>& theta, const Vector4<T>& x)
{
    if (const auto* lin = std::get_if<LinearTheta<T>>(&theta))
        return lin->grad;
    const auto& gen = std::get<GeneralTheta<T>>(theta);
    if (!gen.gradient)
        throw std::domain_error("theta_grad: gradient callable not set");
    return detail::guarded("theta_grad", [&] { return gen.gradient(x); });
}

template <class T> Matrix4<T> theta_hessian(const std::type_identity_t<ThetaField<T>>& theta, const Vector4<T>& x)
{
    if (std::holds_alternative<LinearTheta<T>>(theta)) {
        Matrix4<T> zero{};
        for (auto& row : zero)
            row.fill(T(0));
        return zero;
    }
    const auto& gen = std::get<GeneralTheta<T>>(theta);
    if (!gen.hessian)
        throw std::domain_error("theta_hessian: hessian callable not set");
    return detail::guarded("theta_hessian", [&] { return gen.hessian(x); });
}

/// theta -> eps * theta, so every gradient factor carries one power of eps.
inline LinearTheta<EpsSeries<Rational>> graded(const LinearTheta<Rational>& theta, int order = kDefaultOrder)
{
    const auto eps = EpsSeries<Rational>::epsilon(order);
    LinearTheta<EpsSeries<Rational>> out;
    for (std::size_t mu = 0; mu < 4; ++mu)
        out.grad[mu] = eps * theta.grad[mu];
    out.offset = eps * theta.offset;
    return out;
}

template <class T> Vector4<EpsSeries<T>> as_series(const Vector4<T>& v)
{
    return {EpsSeries<T>(v[0]), EpsSeries<T>(v[1]), EpsSeries<T>(v[2]), EpsSeries<T>(v[3])};
}

template <class T> Covector4<EpsSeries<T>> as_series(const Covector4<T>& v)
{
    return {EpsSeries<T>(v[0]), EpsSeries<T>(v[1]), EpsSeries<T>(v[2]), EpsSeries<T>(v[3])};
}

} // namespace exocalc
