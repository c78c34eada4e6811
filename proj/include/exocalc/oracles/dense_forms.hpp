#pragma once

// Reference exterior calculus on dense, fully antisymmetric component arrays.
//
// A k-form is stored as omega_{i1..ik} for every tuple, with
// omega = sum over all tuples omega_I dx^I, so a sorted sparse coefficient c
// becomes c / k! spread over its permutations. Products and derivatives are
// built as plain tensors and antisymmetrized; nothing here goes through the
// sparse implementation's operators.

#include "exocalc/forms.hpp"
#include "exocalc/forms_check.hpp"

#include <optional>
#include <vector>

namespace exocalc::oracles {

using forms::MultiPoly;

class DenseForm
{
  public:
    DenseForm(int dim, int degree, bool has_lambda);

    static DenseForm from_sparse(const forms::ExoticForm& w);

    int dimension() const { return dim_; }
    int degree() const { return degree_; }
    bool has_lambda() const { return lambda_; }
    int first_spatial() const { return lambda_ ? 1 : 0; }

    const MultiPoly& at(const std::vector<int>& idx) const { return c_[offset(idx)]; }
    MultiPoly& at(const std::vector<int>& idx) { return c_[offset(idx)]; }

    /// All index tuples in lexicographic order.
    std::vector<std::vector<int>> tuples() const;

    DenseForm antisymmetrized() const;
    std::optional<int> grade() const;

    DenseForm& operator-=(const DenseForm& o);
    DenseForm& operator+=(const DenseForm& o);

  private:
    std::size_t offset(const std::vector<int>& idx) const;

    int dim_, degree_;
    bool lambda_;
    std::vector<MultiPoly> c_;
};

/// Plain components of a form given on the deformed basis.
DenseForm to_plain(const DenseForm& w, const forms::LinearThetaN& theta);
/// d~ on plain components: (d_n w_I + x^m d_n theta d_m w_I) dx^n ^ dx^I.
DenseForm exotic_d(const DenseForm& w, const forms::LinearThetaN& theta);
DenseForm wedge(const DenseForm& a, const DenseForm& b);
/// d_n theta d_m w_I dx^m ^ dx^n ^ dx^I.
DenseForm second_derivative_formula(const DenseForm& w, const forms::LinearThetaN& theta);
DenseForm homotopy(const DenseForm& w);
DenseForm pullback(const DenseForm& w, const Rational& value);
DenseForm field_strength(const std::vector<MultiPoly>& a, const forms::LinearThetaN& theta);
DenseForm potential_plain(const std::vector<MultiPoly>& a, const forms::LinearThetaN& theta);

std::optional<int> residual_grade(const forms::FormsCheckCase& c);
forms::FormsCheckRow evaluate_case(const forms::FormsCheckCase& c);

} // namespace exocalc::oracles
