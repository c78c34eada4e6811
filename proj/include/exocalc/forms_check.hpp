#pragma once

// Batch verification of the exotic-calculus identities on random instances.
//
// A seed fixes every random draw, so the same (seed, dimension, max degree) always
// yields the same cases; the implementation and the dense oracle evaluate the
// very same inputs.

#include "exocalc/forms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace exocalc::forms {

enum class Identity { Leibniz, DSquared, DCubed, HomotopyNoDLambda, HomotopyDLambda, FieldStrength };

std::string identity_name(Identity id);
const std::vector<Identity>& all_identities();

/// Contract per identity: Leibniz exact zero; homotopy zero at grade 0; the rest grade >= 2.
bool identity_passes(Identity id, const std::optional<int>& residual_grade);

struct FormsCheckCase
{
    Identity identity;
    std::uint64_t seed = 0;
    int dimension = 0; // total, including lambda for the homotopy cases
    int degree = 0;
    ExoticForm omega;
    ExoticForm eta;                 // Leibniz only
    LinearThetaN theta;             // spatial gradient
    std::vector<MultiPoly> potential; // field strength only
};

struct FormsCheckRow
{
    std::string identity;
    std::uint64_t seed = 0;
    int dimension = 0;
    int degree = 0;
    std::string residual_grade;
    bool pass = false;

    friend bool operator==(const FormsCheckRow&, const FormsCheckRow&) = default;
};

/// One case per identity; dimension in [2, 6], max_degree >= 0.
std::vector<FormsCheckCase> forms_check_cases(std::uint64_t seed, int dimension, int max_degree);

/// Residual of the case's identity computed with this library.
ExoticForm case_residual(const FormsCheckCase& c);

FormsCheckRow evaluate_case(const FormsCheckCase& c);

FormsCheckRow make_row(const FormsCheckCase& c, const std::optional<int>& residual_grade);

} // namespace exocalc::forms
