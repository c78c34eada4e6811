#include "exocalc/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exocalc::forms {

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(int nvars, int order) : nvars_(nvars), order_(order)
{
    if (nvars < 0)
        throw std::invalid_argument("MultiPoly: negative number of variables");
}

MultiPoly MultiPoly::constant(int nvars, const Coeff& c, int order)
{
    MultiPoly p(nvars, order);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i, int order)
{
    if (i < 0 || i >= nvars)
        throw std::out_of_range("MultiPoly::variable: index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    MultiPoly p(nvars, order);
    p.add_term(e, Coeff(Rational(1)));
    return p;
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Coeff& c, int order)
{
    MultiPoly p(static_cast<int>(e.size()), order);
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Coeff& c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("MultiPoly: exponent tuple has the wrong length");
    const Coeff t = c.truncated(order_);
    if (t.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, t);
        return;
    }
    it->second += t;
    if (it->second.is_zero())
        terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("MultiPoly: variable count mismatch");
    order_ = std::min(order_, o.order_);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("MultiPoly: variable count mismatch");
    order_ = std::min(order_, o.order_);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Coeff& c)
{
    MultiPoly r(nvars_, order_);
    for (const auto& [e, v] : terms_)
        r.add_term(e, v * c);
    *this = std::move(r);
    return *this;
}

MultiPoly operator-(const MultiPoly& a)
{
    MultiPoly r(a.nvars_, a.order_);
    for (const auto& [e, c] : a.terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r(a.nvars_, std::min(a.order_, b.order_));
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::derivative(int i) const
{
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        const int p = e[static_cast<std::size_t>(i)];
        if (p == 0)
            continue;
        Exponents d = e;
        d[static_cast<std::size_t>(i)] = p - 1;
        r.add_term(d, c * Rational(p));
    }
    return r;
}

MultiPoly MultiPoly::integrate_unit(int i) const
{
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        const int p = d[static_cast<std::size_t>(i)];
        d[static_cast<std::size_t>(i)] = 0;
        r.add_term(d, c * Rational(1, p + 1));
    }
    return r;
}

MultiPoly MultiPoly::substitute(int i, const Rational& value) const
{
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        const int p = d[static_cast<std::size_t>(i)];
        d[static_cast<std::size_t>(i)] = 0;
        Rational f = 1;
        for (int k = 0; k < p; ++k)
            f *= value;
        r.add_term(d, c * f);
    }
    return r;
}

MultiPoly MultiPoly::drop_variable(int i) const
{
    MultiPoly r(nvars_ - 1, order_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("MultiPoly::drop_variable: variable still occurs");
        Exponents d = e;
        d.erase(d.begin() + i);
        r.add_term(d, c);
    }
    return r;
}

MultiPoly MultiPoly::insert_variable(int i) const
{
    MultiPoly r(nvars_ + 1, order_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d.insert(d.begin() + i, 0);
        r.add_term(d, c);
    }
    return r;
}

MultiPoly MultiPoly::euler(int first) const
{
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        int deg = 0;
        for (int a = first; a < nvars_; ++a)
            deg += e[static_cast<std::size_t>(a)];
        if (deg != 0)
            r.add_term(e, c * Rational(deg));
    }
    return r;
}

std::optional<int> MultiPoly::grade() const
{
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        const auto g = c.grade();
        if (g && (!best || *g < *best))
            best = g;
    }
    return best;
}

MultiPoly MultiPoly::part(int k) const
{
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c.part(k));
    return r;
}

MultiPoly MultiPoly::up_to(int k) const
{
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c.up_to(k));
    return r;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p)
{
    if (p.terms_.empty())
        return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
        os << (first ? "" : " + ") << c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                os << "*x" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        first = false;
    }
    return os;
}

// ---------------------------------------------------------------- ExoticForm

int sort_sign(IndexTuple& idx)
{
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

ExoticForm::ExoticForm(int dim, int degree, Basis basis, bool has_lambda, int order)
    : dim_(dim), degree_(degree), basis_(basis), lambda_(has_lambda), order_(order)
{
    if (dim < 0 || degree < 0)
        throw std::invalid_argument("ExoticForm: negative dimension or degree");
    if (has_lambda && dim < 1)
        throw std::invalid_argument("ExoticForm: the lambda slot needs dimension >= 1");
}

void ExoticForm::check_tuple(const IndexTuple& idx) const
{
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("ExoticForm: index tuple length differs from the degree");
    for (int i : idx)
        if (i < 0 || i >= dim_)
            throw std::out_of_range("ExoticForm: index out of range");
}

void ExoticForm::add(IndexTuple idx, const MultiPoly& p)
{
    check_tuple(idx);
    if (p.nvars() != dim_)
        throw std::invalid_argument("ExoticForm: coefficient has the wrong number of variables");
    const int s = sort_sign(idx);
    if (s == 0 || p.is_zero())
        return;
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
        comps_.emplace(idx, s > 0 ? p : -p);
        return;
    }
    if (s > 0)
        it->second += p;
    else
        it->second -= p;
    if (it->second.is_zero())
        comps_.erase(it);
}

void ExoticForm::set(IndexTuple idx, const MultiPoly& p)
{
    check_tuple(idx);
    IndexTuple sorted = idx;
    if (sort_sign(sorted) == 0) {
        if (!p.is_zero())
            throw std::invalid_argument("ExoticForm::set: repeated index with nonzero coefficient");
        return;
    }
    comps_.erase(sorted);
    add(std::move(idx), p);
}

MultiPoly ExoticForm::get(IndexTuple idx) const
{
    check_tuple(idx);
    const int s = sort_sign(idx);
    if (s == 0)
        return zero_poly();
    auto it = comps_.find(idx);
    if (it == comps_.end())
        return zero_poly();
    return s > 0 ? it->second : -it->second;
}

std::optional<int> ExoticForm::grade() const
{
    std::optional<int> best;
    for (const auto& [idx, p] : comps_) {
        const auto g = p.grade();
        if (g && (!best || *g < *best))
            best = g;
    }
    return best;
}

ExoticForm ExoticForm::part(int k) const
{
    ExoticForm r(dim_, degree_, basis_, lambda_, order_);
    for (const auto& [idx, p] : comps_)
        r.add(idx, p.part(k));
    return r;
}

ExoticForm ExoticForm::up_to(int k) const
{
    ExoticForm r(dim_, degree_, basis_, lambda_, order_);
    for (const auto& [idx, p] : comps_)
        r.add(idx, p.up_to(k));
    return r;
}

ExoticForm ExoticForm::with_basis(Basis b) const
{
    ExoticForm r = *this;
    r.basis_ = b;
    return r;
}

namespace {
void check_compatible(const ExoticForm& a, const ExoticForm& b, const char* what)
{
    if (a.dimension() != b.dimension() || a.has_lambda() != b.has_lambda())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    if (a.basis() != b.basis())
        throw std::invalid_argument(std::string(what) + ": basis mismatch");
}
} // namespace

ExoticForm& ExoticForm::operator+=(const ExoticForm& o)
{
    check_compatible(*this, o, "ExoticForm::operator+=");
    if (o.degree_ != degree_)
        throw std::invalid_argument("ExoticForm::operator+=: degree mismatch");
    order_ = std::min(order_, o.order_);
    for (const auto& [idx, p] : o.comps_)
        add(idx, p);
    return *this;
}

ExoticForm& ExoticForm::operator-=(const ExoticForm& o)
{
    check_compatible(*this, o, "ExoticForm::operator-=");
    if (o.degree_ != degree_)
        throw std::invalid_argument("ExoticForm::operator-=: degree mismatch");
    order_ = std::min(order_, o.order_);
    for (const auto& [idx, p] : o.comps_)
        add(idx, -p);
    return *this;
}

ExoticForm operator*(const Coeff& c, const ExoticForm& a)
{
    ExoticForm r(a.dim_, a.degree_, a.basis_, a.lambda_, a.order_);
    for (const auto& [idx, p] : a.comps_)
        r.add(idx, c * p);
    return r;
}

std::ostream& operator<<(std::ostream& os, const ExoticForm& f)
{
    if (f.comps_.empty())
        return os << "0";
    bool first = true;
    for (const auto& [idx, p] : f.comps_) {
        os << (first ? "" : " + ") << '(' << p << ')';
        for (int i : idx)
            os << " d" << (f.basis_ == Basis::Deformed ? "~" : "") << "x" << i;
        first = false;
    }
    return os;
}

// ---------------------------------------------------------------- operations

namespace {

ExoticForm scale(const MultiPoly& p, const ExoticForm& w)
{
    ExoticForm r(w.dimension(), w.degree(), w.basis(), w.has_lambda(), w.order());
    for (const auto& [idx, c] : w.components())
        r.add(idx, p * c);
    return r;
}

ExoticForm unit_form(const ExoticForm& like, const IndexTuple& idx, const MultiPoly& p)
{
    ExoticForm r(like.dimension(), static_cast<int>(idx.size()), Basis::Plain, like.has_lambda(), like.order());
    r.add(idx, p);
    return r;
}

void check_theta(const ExoticForm& w, const LinearThetaN& theta)
{
    if (static_cast<int>(theta.grad.size()) != w.spatial_dimension())
        throw std::invalid_argument("theta gradient size differs from the spatial dimension");
}

ExoticForm as_plain(const ExoticForm& w, const LinearThetaN& theta)
{
    return w.basis() == Basis::Plain ? w : deformed_to_plain(w, theta);
}

} // namespace

ExoticForm wedge(const ExoticForm& a, const ExoticForm& b)
{
    check_compatible(a, b, "wedge");
    ExoticForm r(a.dimension(), a.degree() + b.degree(), a.basis(), a.has_lambda(), std::min(a.order(), b.order()));
    for (const auto& [ia, pa] : a.components())
        for (const auto& [ib, pb] : b.components()) {
            IndexTuple idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add(idx, pa * pb);
        }
    return r;
}

ExoticForm plain_d(const ExoticForm& w)
{
    if (w.basis() != Basis::Plain)
        throw std::invalid_argument("plain_d: expects a plain-basis form");
    ExoticForm r(w.dimension(), w.degree() + 1, Basis::Plain, w.has_lambda(), w.order());
    for (const auto& [idx, p] : w.components())
        for (int n = 0; n < w.dimension(); ++n) {
            IndexTuple t{n};
            t.insert(t.end(), idx.begin(), idx.end());
            r.add(t, p.derivative(n));
        }
    return r;
}

ExoticForm tau_form(const ExoticForm& like, const LinearThetaN& theta)
{
    check_theta(like, theta);
    const Coeff eps = Coeff::epsilon(like.order());
    ExoticForm r(like.dimension(), 1, Basis::Plain, like.has_lambda(), like.order());
    for (int i = 0; i < like.spatial_dimension(); ++i)
        r.add({i + like.first_spatial()},
              MultiPoly::constant(like.dimension(), eps * theta.grad[static_cast<std::size_t>(i)], like.order()));
    return r;
}

ExoticForm deformed_differential(const ExoticForm& like, int i, const LinearThetaN& theta)
{
    ExoticForm r = unit_form(like, {i}, MultiPoly::constant(like.dimension(), Coeff(Rational(1)), like.order()));
    if (i < like.first_spatial())
        return r;
    return r + scale(MultiPoly::variable(like.dimension(), i, like.order()), tau_form(like, theta));
}

ExoticForm deformed_to_plain(const ExoticForm& w, const LinearThetaN& theta)
{
    check_theta(w, theta);
    if (w.basis() == Basis::Plain)
        return w;
    ExoticForm r(w.dimension(), w.degree(), Basis::Plain, w.has_lambda(), w.order());
    const MultiPoly one = MultiPoly::constant(w.dimension(), Coeff(Rational(1)), w.order());
    for (const auto& [idx, c] : w.components()) {
        ExoticForm prod = unit_form(w, {}, one);
        for (int i : idx)
            prod = wedge(prod, deformed_differential(w, i, theta));
        r += scale(c, prod);
    }
    return r;
}

ExoticForm exotic_d(const ExoticForm& w, const LinearThetaN& theta)
{
    const ExoticForm p = as_plain(w, theta);
    ExoticForm r(p.dimension(), p.degree() + 1, Basis::Plain, p.has_lambda(), p.order());
    std::vector<ExoticForm> dtilde;
    for (int n = 0; n < p.dimension(); ++n)
        dtilde.push_back(deformed_differential(p, n, theta));
    for (const auto& [idx, c] : p.components()) {
        const ExoticForm basis_k = unit_form(p, idx, MultiPoly::constant(p.dimension(), Coeff(Rational(1)), p.order()));
        for (int n = 0; n < p.dimension(); ++n) {
            const MultiPoly dc = c.derivative(n);
            if (dc.is_zero())
                continue;
            r += scale(dc, wedge(dtilde[static_cast<std::size_t>(n)], basis_k));
        }
    }
    return r;
}

DSquaredCheck d_squared_check(const ExoticForm& w, const LinearThetaN& theta)
{
    check_theta(w, theta);
    const Coeff eps = Coeff::epsilon(w.order());
    ExoticForm rhs(w.dimension(), w.degree() + 2, Basis::Plain, w.has_lambda(), w.order());
    for (const auto& [idx, c] : w.components())
        for (int m = 0; m < w.dimension(); ++m) {
            const MultiPoly dc = c.derivative(m);
            if (dc.is_zero())
                continue;
            for (int s = 0; s < w.spatial_dimension(); ++s) {
                const int n = s + w.first_spatial();
                IndexTuple t{m, n};
                t.insert(t.end(), idx.begin(), idx.end());
                rhs.add(t, (eps * theta.grad[static_cast<std::size_t>(s)]) * dc);
            }
        }
    const ExoticForm dd = exotic_d(exotic_d(w, theta), theta);
    return {dd - rhs, rhs};
}

ExoticForm d_cubed(const ExoticForm& w, const LinearThetaN& theta)
{
    return exotic_d(exotic_d(exotic_d(w, theta), theta), theta);
}

ExoticForm leibniz_check(const ExoticForm& w, const ExoticForm& e, const LinearThetaN& theta)
{
    const ExoticForm a = as_plain(w, theta), b = as_plain(e, theta);
    const ExoticForm lhs = exotic_d(wedge(a, b), theta);
    ExoticForm rhs = wedge(exotic_d(a, theta), b);
    const ExoticForm second = wedge(a, exotic_d(b, theta));
    if (a.degree() % 2 == 0)
        rhs += second;
    else
        rhs -= second;
    return lhs - rhs;
}

ExoticForm homotopy_H(const ExoticForm& w)
{
    if (!w.has_lambda())
        throw std::invalid_argument("homotopy_H: form must live on R x R^n (lambda at index 0)");
    if (w.degree() < 1)
        throw std::invalid_argument("homotopy_H: degree must be >= 1");
    if (w.basis() != Basis::Plain)
        throw std::invalid_argument("homotopy_H: expects plain-basis coefficients");
    ExoticForm r(w.dimension() - 1, w.degree() - 1, Basis::Plain, false, w.order());
    for (const auto& [idx, c] : w.components()) {
        if (idx.front() != 0)
            continue;
        IndexTuple t;
        for (std::size_t k = 1; k < idx.size(); ++k)
            t.push_back(idx[k] - 1);
        r.add(t, c.integrate_unit(0).drop_variable(0));
    }
    return r;
}

ExoticForm pullback_lambda(const ExoticForm& w, const Rational& value)
{
    if (!w.has_lambda())
        throw std::invalid_argument("pullback_lambda: form has no lambda coordinate");
    ExoticForm r(w.dimension() - 1, w.degree(), w.basis(), false, w.order());
    for (const auto& [idx, c] : w.components()) {
        if (!idx.empty() && idx.front() == 0)
            continue;
        IndexTuple t;
        for (int i : idx)
            t.push_back(i - 1);
        r.add(t, c.substitute(0, value).drop_variable(0));
    }
    return r;
}

ExoticForm homotopy_lemma_check(const ExoticForm& w, const LinearThetaN& theta)
{
    const ExoticForm p = as_plain(w, theta);
    ExoticForm lhs = homotopy_H(exotic_d(p, theta));
    if (p.degree() >= 1)
        lhs += exotic_d(homotopy_H(p), theta);
    const ExoticForm boundary = pullback_lambda(p, Rational(1)) - pullback_lambda(p, Rational(0));
    return lhs - boundary;
}

ExoticForm one_form(const std::vector<MultiPoly>& a, Basis basis)
{
    const int n = static_cast<int>(a.size());
    const int order = n ? a.front().order() : kFormsOrder;
    ExoticForm r(n, 1, basis, false, order);
    for (int i = 0; i < n; ++i)
        r.add({i}, a[static_cast<std::size_t>(i)]);
    return r;
}

ExoticForm field_strength(const std::vector<MultiPoly>& a, const LinearThetaN& theta)
{
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(theta.grad.size()) != n)
        throw std::invalid_argument("field_strength: theta gradient size differs from the dimension");
    const int order = n ? a.front().order() : kFormsOrder;
    const Coeff eps = Coeff::epsilon(order);
    ExoticForm f(n, 2, Basis::Plain, false, order);
    const Coeff half(Rational(1, 2));
    for (int mu = 0; mu < n; ++mu) {
        const auto umu = static_cast<std::size_t>(mu);
        // A_mu + x^a d_mu A_a
        MultiPoly s = a[umu];
        for (int al = 0; al < n; ++al)
            s += MultiPoly::variable(n, al, order) * a[static_cast<std::size_t>(al)].derivative(mu);
        for (int nu = 0; nu < n; ++nu) {
            if (mu == nu)
                continue;
            const auto unu = static_cast<std::size_t>(nu);
            MultiPoly c = half * (a[unu].derivative(mu) - a[umu].derivative(nu));
            c += (eps * theta.grad[unu]) * s;
            c += (eps * theta.grad[umu]) * a[unu].euler();
            f.add({mu, nu}, c);
        }
    }
    return f;
}

ExoticForm field_strength_from_potential(const std::vector<MultiPoly>& a, const LinearThetaN& theta)
{
    return exotic_d(one_form(a, Basis::Deformed), theta);
}

// ---------------------------------------------------------------- random instances

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den)
{
    const long num = static_cast<long>(draw(rng, static_cast<std::uint64_t>(2 * max_num + 1))) - max_num;
    const long den = 1 + static_cast<long>(draw(rng, static_cast<std::uint64_t>(max_den)));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

MultiPoly random_poly(std::mt19937_64& rng, int nvars, const RandomFormSpec& spec)
{
    MultiPoly p(nvars);
    const int terms = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(spec.max_terms)));
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars), 0);
        const int deg = static_cast<int>(draw(rng, static_cast<std::uint64_t>(spec.max_poly_degree + 1)));
        for (int k = 0; k < deg && nvars > 0; ++k)
            ++e[static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(nvars)))];
        Rational c = random_rational(rng, spec.max_numerator, spec.max_denominator);
        if (c == 0)
            c = 1;
        p.add_term(e, Coeff(c));
    }
    return p;
}

namespace {
void combinations(int n, int k, int start, IndexTuple& cur, std::vector<IndexTuple>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}
} // namespace

ExoticForm random_form(std::mt19937_64& rng, int dim, int degree, Basis basis, bool has_lambda, const RandomFormSpec& spec)
{
    ExoticForm w(dim, degree, basis, has_lambda);
    std::vector<IndexTuple> tuples;
    IndexTuple cur;
    combinations(dim, degree, 0, cur, tuples);
    for (const auto& t : tuples)
        if (draw(rng, 3) != 0)
            w.add(t, random_poly(rng, dim, spec));
    return w;
}

LinearThetaN random_theta(std::mt19937_64& rng, int n, const RandomFormSpec& spec)
{
    LinearThetaN th;
    for (int i = 0; i < n; ++i)
        th.grad.push_back(random_rational(rng, spec.max_numerator, spec.max_denominator));
    return th;
}

std::string grade_label(const std::optional<int>& g) { return g ? std::to_string(*g) : "inf"; }

} // namespace exocalc::forms
