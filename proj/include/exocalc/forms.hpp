#pragma once

// Exact exterior calculus on R~^n with the deformed differentials d~x^i = dx^i + x^i d theta.
//
// Coefficients are polynomials in the coordinates with eps-graded rational
// coefficients; theta is linear and always enters as eps * theta, so "first
// order" statements are statements about grades 0 and 1.
//
// When a form lives on R x R~^n the extra coordinate lambda has index 0; theta
// does not depend on it, d lambda is not deformed and the dilatation x^a d_a
// runs over the remaining (spatial) coordinates only.

#include "exocalc/eps_series.hpp"
#include "exocalc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace exocalc::forms {

inline constexpr int kFormsOrder = 3;

using Coeff = EpsSeries<Rational>;
using Exponents = std::vector<int>;
using IndexTuple = std::vector<int>;

class MultiPoly
{
  public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars, int order = kFormsOrder);

    static MultiPoly constant(int nvars, const Coeff& c, int order = kFormsOrder);
    static MultiPoly variable(int nvars, int i, int order = kFormsOrder);
    static MultiPoly monomial(const Exponents& e, const Coeff& c, int order = kFormsOrder);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::map<Exponents, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Coeff& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Coeff& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Coeff& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly derivative(int i) const;
    /// Integral over x_i in [0, 1]; the result no longer depends on x_i.
    MultiPoly integrate_unit(int i) const;
    MultiPoly substitute(int i, const Rational& value) const;
    /// Removes variable i (which must not occur) or inserts a new variable at position i.
    MultiPoly drop_variable(int i) const;
    MultiPoly insert_variable(int i) const;

    /// Euler operator sum_{a >= first} x^a d_a.
    MultiPoly euler(int first = 0) const;

    std::optional<int> grade() const;
    MultiPoly part(int k) const;
    MultiPoly up_to(int k) const;

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

  private:
    int nvars_ = 0;
    int order_ = kFormsOrder;
    std::map<Exponents, Coeff> terms_;
};

enum class Basis { Plain, Deformed };

/// Sign of the permutation sorting `idx`, or 0 when an index repeats.
int sort_sign(IndexTuple& idx);

class ExoticForm
{
  public:
    ExoticForm() = default;
    ExoticForm(int dim, int degree, Basis basis = Basis::Plain, bool has_lambda = false, int order = kFormsOrder);

    int dimension() const { return dim_; }
    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    bool has_lambda() const { return lambda_; }
    int order() const { return order_; }
    /// Number of coordinates theta depends on (dimension minus the lambda slot).
    int spatial_dimension() const { return lambda_ ? dim_ - 1 : dim_; }
    int first_spatial() const { return lambda_ ? 1 : 0; }

    const std::map<IndexTuple, MultiPoly>& components() const { return comps_; }

    /// Adds p to the component of dx^{idx}; unsorted tuples pick up the permutation sign.
    void add(IndexTuple idx, const MultiPoly& p);
    void set(IndexTuple idx, const MultiPoly& p);
    MultiPoly get(IndexTuple idx) const;

    bool is_zero() const { return comps_.empty(); }
    std::optional<int> grade() const;
    ExoticForm part(int k) const;
    ExoticForm up_to(int k) const;
    ExoticForm with_basis(Basis b) const;

    MultiPoly zero_poly() const { return MultiPoly(dim_, order_); }

    ExoticForm& operator+=(const ExoticForm& o);
    ExoticForm& operator-=(const ExoticForm& o);
    friend ExoticForm operator+(ExoticForm a, const ExoticForm& b) { return a += b; }
    friend ExoticForm operator-(ExoticForm a, const ExoticForm& b) { return a -= b; }
    friend ExoticForm operator*(const Coeff& c, const ExoticForm& a);
    friend bool operator==(const ExoticForm& a, const ExoticForm& b)
    {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.lambda_ == b.lambda_ && a.comps_ == b.comps_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExoticForm& f);

  private:
    void check_tuple(const IndexTuple& idx) const;

    int dim_ = 0;
    int degree_ = 0;
    Basis basis_ = Basis::Plain;
    bool lambda_ = false;
    int order_ = kFormsOrder;
    std::map<IndexTuple, MultiPoly> comps_;
};

/// theta = sum_i grad_i x^i over the spatial coordinates; entered as eps * theta.
struct LinearThetaN
{
    std::vector<Rational> grad;
};

// ---- basic operations ----

ExoticForm wedge(const ExoticForm& a, const ExoticForm& b);

/// Ordinary exterior derivative of a plain form (lambda included when present).
ExoticForm plain_d(const ExoticForm& w);

/// tau = eps d theta as a plain 1-form on the space of w.
ExoticForm tau_form(const ExoticForm& like, const LinearThetaN& theta);

/// d~x^i = dx^i + x^i tau (d~lambda = d lambda).
ExoticForm deformed_differential(const ExoticForm& like, int i, const LinearThetaN& theta);

/// Expands omega_I d~x^{i1} ^ ... ^ d~x^{ik} multilinearly into the plain basis.
ExoticForm deformed_to_plain(const ExoticForm& w, const LinearThetaN& theta);

/// d~ omega = d_n(w_I) d~x^n ^ dx^I on the plain coefficients (Deformed input is converted first).
ExoticForm exotic_d(const ExoticForm& w, const LinearThetaN& theta);

struct DSquaredCheck
{
    ExoticForm residual;
    ExoticForm formula_rhs;
};

/// d~^2 omega minus d_n theta d_m omega_I dx^m ^ dx^n ^ dx^I (components as given).
DSquaredCheck d_squared_check(const ExoticForm& w, const LinearThetaN& theta);

ExoticForm d_cubed(const ExoticForm& w, const LinearThetaN& theta);

/// d~(w ^ e) - d~w ^ e - (-1)^k w ^ d~e.
ExoticForm leibniz_check(const ExoticForm& w, const ExoticForm& e, const LinearThetaN& theta);

/// Homotopy operator on forms over R x R~^n (lambda at index 0): the result lives on R~^n.
ExoticForm homotopy_H(const ExoticForm& w);

/// i_value^* w: lambda set to value, d lambda components dropped.
ExoticForm pullback_lambda(const ExoticForm& w, const Rational& value);

/// H d~ w + d~ H w - (i_1^* w - i_0^* w); theta has one gradient entry per spatial coordinate.
ExoticForm homotopy_lemma_check(const ExoticForm& w, const LinearThetaN& theta);

/// One-form A_mu dx^mu from its components.
ExoticForm one_form(const std::vector<MultiPoly>& a, Basis basis = Basis::Plain);

/// Closed-form deformed field strength for the potential with components A (deformed basis).
ExoticForm field_strength(const std::vector<MultiPoly>& a, const LinearThetaN& theta);

/// d~ of the plain form of A = A_mu d~x^mu.
ExoticForm field_strength_from_potential(const std::vector<MultiPoly>& a, const LinearThetaN& theta);

// ---- random instances (deterministic for a given engine state) ----

struct RandomFormSpec
{
    int max_poly_degree = 2;
    int max_terms = 3;
    long max_numerator = 5;
    long max_denominator = 3;
};

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);
Rational random_rational(std::mt19937_64& rng, long max_num, long max_den);
MultiPoly random_poly(std::mt19937_64& rng, int nvars, const RandomFormSpec& spec = {});
ExoticForm random_form(std::mt19937_64& rng, int dim, int degree, Basis basis = Basis::Plain, bool has_lambda = false,
                       const RandomFormSpec& spec = {});
LinearThetaN random_theta(std::mt19937_64& rng, int n, const RandomFormSpec& spec = {});

/// "inf" for the zero form, otherwise the lowest nonzero grade.
std::string grade_label(const std::optional<int>& g);

} // namespace exocalc::forms
