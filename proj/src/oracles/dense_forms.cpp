#include "exocalc/oracles/dense_forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace exocalc::oracles {

using forms::Coeff;
using forms::kFormsOrder;

namespace {

struct Perm
{
    std::vector<int> p;
    int sign;
};

std::vector<Perm> permutations(int k)
{
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)])
                    ++inv;
        out.push_back({p, inv % 2 ? -1 : 1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Rational factorial(int k)
{
    Rational f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

bool distinct(const std::vector<int>& t)
{
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j])
                return false;
    return true;
}

Coeff eps_times(const Rational& r) { return Coeff::epsilon(kFormsOrder) * r; }

Rational grad_at(const forms::LinearThetaN& th, int first, int b)
{
    return b < first ? Rational(0) : th.grad[static_cast<std::size_t>(b - first)];
}

std::vector<int> tail(const std::vector<int>& t, std::size_t from) { return {t.begin() + static_cast<long>(from), t.end()}; }

} // namespace

DenseForm::DenseForm(int dim, int degree, bool has_lambda) : dim_(dim), degree_(degree), lambda_(has_lambda)
{
    std::size_t size = 1;
    for (int i = 0; i < degree; ++i)
        size *= static_cast<std::size_t>(dim);
    c_.assign(size, MultiPoly(dim));
}

std::size_t DenseForm::offset(const std::vector<int>& idx) const
{
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("DenseForm: tuple length differs from the degree");
    std::size_t o = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim_)
            throw std::out_of_range("DenseForm: index out of range");
        o = o * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return o;
}

std::vector<std::vector<int>> DenseForm::tuples() const
{
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(degree_), 0);
    for (std::size_t n = 0; n < c_.size(); ++n) {
        out.push_back(t);
        for (int pos = degree_ - 1; pos >= 0; --pos) {
            auto& v = t[static_cast<std::size_t>(pos)];
            if (++v < dim_)
                break;
            v = 0;
        }
    }
    return out;
}

DenseForm DenseForm::from_sparse(const forms::ExoticForm& w)
{
    DenseForm d(w.dimension(), w.degree(), w.has_lambda());
    const Coeff inv(Rational(1) / factorial(w.degree()));
    const auto perms = permutations(w.degree());
    for (const auto& [idx, p] : w.components())
        for (const auto& pm : perms) {
            std::vector<int> t;
            for (int j : pm.p)
                t.push_back(idx[static_cast<std::size_t>(j)]);
            d.at(t) = (inv * Rational(pm.sign)) * p;
        }
    return d;
}

DenseForm DenseForm::antisymmetrized() const
{
    DenseForm r(dim_, degree_, lambda_);
    const auto perms = permutations(degree_);
    const Coeff inv(Rational(1) / factorial(degree_));
    for (const auto& t : tuples()) {
        if (!distinct(t))
            continue;
        MultiPoly acc(dim_);
        for (const auto& pm : perms) {
            std::vector<int> s;
            for (int j : pm.p)
                s.push_back(t[static_cast<std::size_t>(j)]);
            if (pm.sign > 0)
                acc += at(s);
            else
                acc -= at(s);
        }
        r.at(t) = inv * acc;
    }
    return r;
}

std::optional<int> DenseForm::grade() const
{
    std::optional<int> best;
    for (const auto& p : c_) {
        const auto g = p.grade();
        if (g && (!best || *g < *best))
            best = g;
    }
    return best;
}

DenseForm& DenseForm::operator-=(const DenseForm& o)
{
    if (o.dim_ != dim_ || o.degree_ != degree_)
        throw std::invalid_argument("DenseForm: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

DenseForm& DenseForm::operator+=(const DenseForm& o)
{
    if (o.dim_ != dim_ || o.degree_ != degree_)
        throw std::invalid_argument("DenseForm: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

DenseForm to_plain(const DenseForm& w, const forms::LinearThetaN& th)
{
    const int n = w.dimension(), k = w.degree(), first = w.first_spatial();
    DenseForm t(n, k, w.has_lambda());
    for (const auto& idx : w.tuples()) {
        MultiPoly v = w.at(idx);
        if (k > 0) {
            const Rational gb = grad_at(th, first, idx[0]);
            if (gb != 0)
                for (int a = first; a < n; ++a) {
                    std::vector<int> s = idx;
                    s[0] = a;
                    v += eps_times(gb * k) * (MultiPoly::variable(n, a) * w.at(s));
                }
        }
        t.at(idx) = v;
    }
    return t.antisymmetrized();
}

DenseForm exotic_d(const DenseForm& w, const forms::LinearThetaN& th)
{
    const int n = w.dimension(), first = w.first_spatial();
    DenseForm t(n, w.degree() + 1, w.has_lambda());
    for (const auto& idx : t.tuples()) {
        const std::vector<int> rest = tail(idx, 1);
        const MultiPoly& c = w.at(rest);
        MultiPoly v = c.derivative(idx[0]);
        const Rational g = grad_at(th, first, idx[0]);
        if (g != 0)
            for (int m = first; m < n; ++m)
                v += eps_times(g) * (MultiPoly::variable(n, m) * c.derivative(m));
        t.at(idx) = v;
    }
    return t.antisymmetrized();
}

DenseForm wedge(const DenseForm& a, const DenseForm& b)
{
    const int k = a.degree();
    DenseForm t(a.dimension(), k + b.degree(), a.has_lambda());
    for (const auto& idx : t.tuples()) {
        const std::vector<int> i1(idx.begin(), idx.begin() + k);
        t.at(idx) = a.at(i1) * b.at(tail(idx, static_cast<std::size_t>(k)));
    }
    return t.antisymmetrized();
}

DenseForm second_derivative_formula(const DenseForm& w, const forms::LinearThetaN& th)
{
    const int n = w.dimension(), first = w.first_spatial();
    DenseForm t(n, w.degree() + 2, w.has_lambda());
    for (const auto& idx : t.tuples()) {
        const Rational g = grad_at(th, first, idx[1]);
        if (g != 0)
            t.at(idx) = eps_times(g) * w.at(tail(idx, 2)).derivative(idx[0]);
    }
    return t.antisymmetrized();
}

DenseForm homotopy(const DenseForm& w)
{
    if (!w.has_lambda() || w.degree() < 1)
        throw std::invalid_argument("oracle homotopy: needs a lambda slot and degree >= 1");
    DenseForm r(w.dimension() - 1, w.degree() - 1, false);
    const Coeff k(Rational(w.degree()));
    for (const auto& idx : r.tuples()) {
        std::vector<int> s{0};
        for (int i : idx)
            s.push_back(i + 1);
        r.at(idx) = k * w.at(s).integrate_unit(0).drop_variable(0);
    }
    return r;
}

DenseForm pullback(const DenseForm& w, const Rational& value)
{
    DenseForm r(w.dimension() - 1, w.degree(), false);
    for (const auto& idx : r.tuples()) {
        std::vector<int> s;
        for (int i : idx)
            s.push_back(i + 1);
        r.at(idx) = w.at(s).substitute(0, value).drop_variable(0);
    }
    return r;
}

DenseForm field_strength(const std::vector<MultiPoly>& a, const forms::LinearThetaN& th)
{
    const int n = static_cast<int>(a.size());
    DenseForm t(n, 2, false);
    const Coeff half(Rational(1, 2));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            const auto umu = static_cast<std::size_t>(mu), unu = static_cast<std::size_t>(nu);
            MultiPoly v = half * (a[unu].derivative(mu) - a[umu].derivative(nu));
            MultiPoly s = a[umu];
            MultiPoly dil(n);
            for (int al = 0; al < n; ++al) {
                s += MultiPoly::variable(n, al) * a[static_cast<std::size_t>(al)].derivative(mu);
                dil += MultiPoly::variable(n, al) * a[unu].derivative(al);
            }
            v += eps_times(th.grad[unu]) * s;
            v += eps_times(th.grad[umu]) * dil;
            t.at({mu, nu}) = v;
        }
    return t.antisymmetrized();
}

DenseForm potential_plain(const std::vector<MultiPoly>& a, const forms::LinearThetaN& th)
{
    const int n = static_cast<int>(a.size());
    DenseForm t(n, 1, false);
    for (int mu = 0; mu < n; ++mu) {
        MultiPoly v = a[static_cast<std::size_t>(mu)];
        for (int al = 0; al < n; ++al)
            v += eps_times(th.grad[static_cast<std::size_t>(mu)]) * (MultiPoly::variable(n, al) * a[static_cast<std::size_t>(al)]);
        t.at({mu}) = v;
    }
    return t;
}

namespace {

DenseForm up_to(const DenseForm& w, int g)
{
    DenseForm r = w;
    for (const auto& idx : r.tuples())
        r.at(idx) = r.at(idx).up_to(g);
    return r;
}

DenseForm plain_of(const forms::ExoticForm& w, const forms::LinearThetaN& th)
{
    const DenseForm d = DenseForm::from_sparse(w);
    return w.basis() == forms::Basis::Plain ? d : to_plain(d, th);
}

} // namespace

std::optional<int> residual_grade(const forms::FormsCheckCase& c)
{
    using forms::Identity;
    const auto& th = c.theta;
    switch (c.identity) {
    case Identity::Leibniz: {
        const DenseForm a = plain_of(c.omega, th), b = plain_of(c.eta, th);
        DenseForm r = exotic_d(wedge(a, b), th);
        r -= wedge(exotic_d(a, th), b);
        if (a.degree() % 2 == 0)
            r -= wedge(a, exotic_d(b, th));
        else
            r += wedge(a, exotic_d(b, th));
        return r.grade();
    }
    case Identity::DSquared: {
        const DenseForm p = plain_of(c.omega, th);
        DenseForm r = exotic_d(exotic_d(p, th), th);
        r -= second_derivative_formula(DenseForm::from_sparse(c.omega), th);
        return r.grade();
    }
    case Identity::DCubed:
        return exotic_d(exotic_d(exotic_d(plain_of(c.omega, th), th), th), th).grade();
    case Identity::HomotopyNoDLambda:
    case Identity::HomotopyDLambda: {
        const DenseForm p = plain_of(c.omega, th);
        DenseForm r = homotopy(exotic_d(p, th));
        if (p.degree() >= 1)
            r += exotic_d(homotopy(p), th);
        r -= pullback(p, 1);
        r += pullback(p, 0);
        return r.grade();
    }
    case Identity::FieldStrength: {
        DenseForm r = up_to(oracles::field_strength(c.potential, th), 1);
        r -= up_to(oracles::exotic_d(potential_plain(c.potential, th), th), 1);
        return r.grade();
    }
    }
    throw std::logic_error("oracle: unknown identity");
}

forms::FormsCheckRow evaluate_case(const forms::FormsCheckCase& c) { return forms::make_row(c, residual_grade(c)); }

} // namespace exocalc::oracles
