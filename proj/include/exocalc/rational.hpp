#pragma once

// Exact scalar rings: GMP rationals and a minimal complex type over them.
//
// std::complex is only specified for floating-point types, so exact complex
// arithmetic (needed for gamma matrices with entries 0, +-1, +-i) goes through
// Complex<T> instead.

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <ostream>
#include <string>

namespace exocalc {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

template <class T> struct Complex
{
    T re{};
    T im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)), im(0) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
    template <std::integral I> Complex(I r) : re(r), im(0) {}

    static Complex i() { return Complex(T(0), T(1)); }

    Complex& operator+=(const Complex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o)
    {
        T r = re * o.re - im * o.im;
        T j = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(j);
        return *this;
    }
    Complex& operator/=(const Complex& o)
    {
        T den = o.re * o.re + o.im * o.im;
        T r = (re * o.re + im * o.im) / den;
        T j = (im * o.re - re * o.im) / den;
        re = std::move(r);
        im = std::move(j);
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return Complex(T(-a.re), T(-a.im)); }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << '(' << z.re << ',' << z.im << ')'; }
};

using ComplexRational = Complex<Rational>;

template <class T> Complex<T> conj(const Complex<T>& z) { return Complex<T>(z.re, T(-z.im)); }

inline std::complex<double> to_complex_double(const ComplexRational& z)
{
    return {z.re.get_d(), z.im.get_d()};
}

} // namespace exocalc
