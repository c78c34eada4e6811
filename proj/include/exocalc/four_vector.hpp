#pragma once

// Four-vectors with the index position carried in the type.
//
// Signature is (+,-,-,-). Indices are raised and lowered with the flat
// Minkowski metric only; the deformed bilinear form never acts as the
// vector/covector isomorphism.

#include <array>
#include <cstddef>
#include <ostream>

namespace exocalc {

enum class IndexPosition { Upper, Lower };

/// eta_{mu mu} (equal to eta^{mu mu}).
constexpr int metric_sign(std::size_t mu) { return mu == 0 ? 1 : -1; }

template <class T, IndexPosition P> struct FourVector
{
    std::array<T, 4> c{};

    FourVector() = default;
    FourVector(T v0, T v1, T v2, T v3) : c{std::move(v0), std::move(v1), std::move(v2), std::move(v3)} {}
    explicit FourVector(const std::array<T, 4>& a) : c(a) {}

    T& operator[](std::size_t mu) { return c[mu]; }
    const T& operator[](std::size_t mu) const { return c[mu]; }

    FourVector& operator+=(const FourVector& o)
    {
        for (std::size_t mu = 0; mu < 4; ++mu)
            c[mu] += o.c[mu];
        return *this;
    }
    FourVector& operator-=(const FourVector& o)
    {
        for (std::size_t mu = 0; mu < 4; ++mu)
            c[mu] -= o.c[mu];
        return *this;
    }
    friend FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
    friend FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
    friend FourVector operator*(const T& s, FourVector a)
    {
        for (auto& v : a.c)
            v = s * v;
        return a;
    }
    friend bool operator==(const FourVector& a, const FourVector& b) { return a.c == b.c; }

    friend std::ostream& operator<<(std::ostream& os, const FourVector& v)
    {
        return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ')';
    }
};

template <class T> using Vector4 = FourVector<T, IndexPosition::Upper>;
template <class T> using Covector4 = FourVector<T, IndexPosition::Lower>;

template <class T> using Matrix4 = std::array<std::array<T, 4>, 4>;

template <class T> Covector4<T> lower_index(const Vector4<T>& v)
{
    return {v[0], T(-v[1]), T(-v[2]), T(-v[3])};
}

template <class T> Vector4<T> raise_index(const Covector4<T>& w)
{
    return {w[0], T(-w[1]), T(-w[2]), T(-w[3])};
}

/// u^0 v^0 - u^1 v^1 - u^2 v^2 - u^3 v^3.
template <class T> T minkowski_dot(const Vector4<T>& u, const Vector4<T>& v)
{
    T acc = u[0] * v[0];
    for (std::size_t k = 1; k < 4; ++k)
        acc -= u[k] * v[k];
    return acc;
}

template <class T> T minkowski_dot(const Covector4<T>& u, const Covector4<T>& v)
{
    T acc = u[0] * v[0];
    for (std::size_t k = 1; k < 4; ++k)
        acc -= u[k] * v[k];
    return acc;
}

/// Natural pairing w_mu v^mu (no metric involved).
template <class T> T contract(const Covector4<T>& w, const Vector4<T>& v)
{
    T acc = w[0] * v[0];
    for (std::size_t k = 1; k < 4; ++k)
        acc += w[k] * v[k];
    return acc;
}

template <class T> Matrix4<T> identity_matrix4()
{
    Matrix4<T> m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m[i][j] = T(i == j ? 1 : 0);
    return m;
}

/// eta as a matrix; the same array serves for eta_{mu nu} and eta^{mu nu}.
template <class T> Matrix4<T> minkowski_matrix()
{
    Matrix4<T> m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m[i][j] = T(i == j ? metric_sign(i) : 0);
    return m;
}

template <class T> Matrix4<T> matmul(const Matrix4<T>& a, const Matrix4<T>& b)
{
    Matrix4<T> r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            T acc(0);
            for (std::size_t k = 0; k < 4; ++k)
                acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

template <class T> Matrix4<T> matsub(const Matrix4<T>& a, const Matrix4<T>& b)
{
    Matrix4<T> r = a;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r[i][j] -= b[i][j];
    return r;
}

} // namespace exocalc
