#pragma once

// Truncated power series in a bookkeeping parameter eps.
//
// Every topological correction enters as eps * theta, so "first order in the
// gradient of theta" becomes the statement "coefficients of eps^0 and eps^1".
// A series carries its truncation order K: coefficients of eps^k with k > K are
// unknown and never stored. Constants promoted from the base ring are exact
// (order kExactOrder); mixing orders keeps the smaller one.

#include <algorithm>
#include <concepts>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exocalc {

inline constexpr int kExactOrder = std::numeric_limits<int>::max();
inline constexpr int kDefaultOrder = 2;

template <class T> class EpsSeries
{
  public:
    using value_type = T;

    EpsSeries() = default;
    EpsSeries(T constant)
    {
        coeffs_.push_back(std::move(constant));
        normalize();
    }
    template <std::integral I> EpsSeries(I constant) : EpsSeries(T(constant)) {}

    EpsSeries(std::vector<T> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order)
    {
        if (order < kDefaultOrder)
            throw std::invalid_argument("EpsSeries: truncation order must be >= 2");
        normalize();
    }

    /// The series eps itself, truncated at `order`.
    static EpsSeries epsilon(int order = kDefaultOrder) { return EpsSeries({T(0), T(1)}, order); }

    int order() const { return order_; }
    bool is_exact() const { return order_ == kExactOrder; }

    /// Highest stored power plus one; all higher coefficients are zero (up to the order).
    int size() const { return static_cast<int>(coeffs_.size()); }

    T coeff(int k) const
    {
        if (k < 0 || k >= size())
            return T(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<T>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Smallest k with a nonzero coefficient, or nullopt for the zero series.
    std::optional<int> grade() const
    {
        for (int k = 0; k < size(); ++k)
            if (!(coeffs_[static_cast<std::size_t>(k)] == T(0)))
                return k;
        return std::nullopt;
    }

    /// Part of the series of grade <= max_grade.
    EpsSeries up_to(int max_grade) const
    {
        EpsSeries r = *this;
        if (max_grade + 1 < r.size())
            r.coeffs_.resize(static_cast<std::size_t>(std::max(0, max_grade + 1)));
        r.normalize();
        return r;
    }

    /// The single term of grade k, as a series.
    EpsSeries part(int k) const
    {
        EpsSeries r;
        r.order_ = order_;
        if (k < size()) {
            r.coeffs_.assign(static_cast<std::size_t>(k + 1), T(0));
            r.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
        }
        r.normalize();
        return r;
    }

    EpsSeries truncated(int order) const
    {
        EpsSeries r = *this;
        r.order_ = std::min(order_, order);
        r.normalize();
        return r;
    }

    template <class U> U evaluate(const U& eps) const
    {
        U acc = U(0);
        for (int k = size() - 1; k >= 0; --k)
            acc = acc * eps + U(coeffs_[static_cast<std::size_t>(k)]);
        return acc;
    }

    EpsSeries& operator+=(const EpsSeries& o)
    {
        order_ = std::min(order_, o.order_);
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        normalize();
        return *this;
    }
    EpsSeries& operator-=(const EpsSeries& o)
    {
        order_ = std::min(order_, o.order_);
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        normalize();
        return *this;
    }
    EpsSeries& operator*=(const EpsSeries& o)
    {
        *this = *this * o;
        return *this;
    }
    EpsSeries& operator*=(const T& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        normalize();
        return *this;
    }
    EpsSeries& operator/=(const T& s)
    {
        for (auto& c : coeffs_)
            c /= s;
        normalize();
        return *this;
    }
    EpsSeries& operator/=(const EpsSeries& o)
    {
        *this = *this * o.reciprocal();
        return *this;
    }

    /// Multiplicative inverse; requires an invertible constant term and a finite order
    /// unless the series is a constant.
    EpsSeries reciprocal() const
    {
        if (is_zero() || coeffs_[0] == T(0))
            throw std::domain_error("EpsSeries::reciprocal: constant term is zero");
        if (size() == 1) {
            EpsSeries r(T(T(1) / coeffs_[0]));
            r.order_ = order_;
            return r;
        }
        if (is_exact())
            throw std::domain_error("EpsSeries::reciprocal: non-constant series needs a finite order");
        std::vector<T> inv(static_cast<std::size_t>(order_ + 1), T(0));
        inv[0] = T(1) / coeffs_[0];
        for (int k = 1; k <= order_; ++k) {
            T acc(0);
            for (int j = 1; j <= k; ++j)
                acc += coeff(j) * inv[static_cast<std::size_t>(k - j)];
            inv[static_cast<std::size_t>(k)] = T(-acc) / coeffs_[0];
        }
        return EpsSeries(std::move(inv), order_);
    }

    friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
    friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
    friend EpsSeries operator/(EpsSeries a, const EpsSeries& b) { return a /= b; }
    friend EpsSeries operator-(const EpsSeries& a)
    {
        EpsSeries r = a;
        for (auto& c : r.coeffs_)
            c = T(-c);
        return r;
    }
    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b)
    {
        EpsSeries r;
        r.order_ = std::min(a.order_, b.order_);
        if (a.is_zero() || b.is_zero())
            return r;
        const long top = std::min<long>(static_cast<long>(a.size()) + b.size() - 2, r.order_);
        r.coeffs_.assign(static_cast<std::size_t>(top + 1), T(0));
        for (int i = 0; i < a.size(); ++i) {
            if (i > top)
                break;
            const T& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ai == T(0))
                continue;
            for (int j = 0; j < b.size() && i + j <= top; ++j)
                r.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
        r.normalize();
        return r;
    }

    /// Exact equality of the stored coefficients (orders are not compared).
    friend bool operator==(const EpsSeries& a, const EpsSeries& b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const EpsSeries& s)
    {
        os << '[';
        for (int k = 0; k < s.size(); ++k)
            os << (k ? ", " : "") << s.coeffs_[static_cast<std::size_t>(k)];
        if (!s.is_exact())
            os << " | K=" << s.order_;
        return os << ']';
    }

  private:
    void normalize()
    {
        if (!is_exact() && size() > order_ + 1)
            coeffs_.resize(static_cast<std::size_t>(order_ + 1));
        while (!coeffs_.empty() && coeffs_.back() == T(0))
            coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
    int order_ = kExactOrder;
};

template <class T> EpsSeries<T> operator*(EpsSeries<T> a, const T& s) { return a *= s; }
template <class T> EpsSeries<T> operator*(const T& s, EpsSeries<T> a) { return a *= s; }

/// Coefficientwise image under f, same truncation order.
template <class U, class T, class F> EpsSeries<U> map_series(const EpsSeries<T>& s, F&& f)
{
    std::vector<U> out;
    out.reserve(s.coefficients().size());
    for (const auto& c : s.coefficients())
        out.push_back(f(c));
    return EpsSeries<U>(std::move(out), s.order());
}

/// Lowest nonzero grade over a collection of series; nullopt if all vanish.
template <class Range> std::optional<int> min_grade(const Range& values)
{
    std::optional<int> best;
    for (const auto& v : values) {
        auto g = v.grade();
        if (g && (!best || *g < *best))
            best = g;
    }
    return best;
}

} // namespace exocalc
