#pragma once

#include "exocalc/eps_series.hpp"
#include "exocalc/four_vector.hpp"
#include "exocalc/rational.hpp"
#include "exocalc/theta_field.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace testsupport {

using exocalc::Covector4;
using exocalc::EpsSeries;
using exocalc::Rational;
using exocalc::Vector4;

inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 7)
{
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return exocalc::make_rational(num(rng), den(rng));
}

inline Vector4<Rational> random_vector(std::mt19937_64& rng)
{
    return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline Covector4<Rational> random_covector(std::mt19937_64& rng)
{
    return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline EpsSeries<Rational> random_series(std::mt19937_64& rng, int order)
{
    std::vector<Rational> c;
    for (int k = 0; k <= order; ++k)
        c.push_back(random_rational(rng));
    return EpsSeries<Rational>(c, order);
}

inline double uniform(std::mt19937_64& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

template <class T> bool all_grade_at_least(const exocalc::Matrix4<EpsSeries<T>>& m, int g)
{
    for (const auto& row : m)
        for (const auto& v : row) {
            auto gr = v.grade();
            if (gr && *gr < g)
                return false;
        }
    return true;
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace testsupport
