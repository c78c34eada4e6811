#include "exocalc/forms_check.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace exocalc::forms {

std::string identity_name(Identity id)
{
    switch (id) {
    case Identity::Leibniz:
        return "leibniz";
    case Identity::DSquared:
        return "d_squared";
    case Identity::DCubed:
        return "d_cubed";
    case Identity::HomotopyNoDLambda:
        return "homotopy_no_dlambda";
    case Identity::HomotopyDLambda:
        return "homotopy_dlambda";
    case Identity::FieldStrength:
        return "field_strength";
    }
    return "unknown";
}

const std::vector<Identity>& all_identities()
{
    static const std::vector<Identity> ids{Identity::Leibniz,           Identity::DSquared,        Identity::DCubed,
                                           Identity::HomotopyNoDLambda, Identity::HomotopyDLambda, Identity::FieldStrength};
    return ids;
}

bool identity_passes(Identity id, const std::optional<int>& g)
{
    switch (id) {
    case Identity::Leibniz:
        return !g;
    case Identity::HomotopyNoDLambda:
    case Identity::HomotopyDLambda:
        return !g || *g >= 1;
    default:
        return !g || *g >= 2;
    }
}

namespace {

int draw_in(std::mt19937_64& rng, int lo, int hi)
{
    if (hi < lo)
        return lo;
    return lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

ExoticForm filter_lambda(const ExoticForm& w, bool keep_dlambda)
{
    ExoticForm r(w.dimension(), w.degree(), w.basis(), w.has_lambda(), w.order());
    for (const auto& [idx, p] : w.components()) {
        const bool has = !idx.empty() && idx.front() == 0;
        if (has == keep_dlambda)
            r.add(idx, p);
    }
    return r;
}

} // namespace

std::vector<FormsCheckCase> forms_check_cases(std::uint64_t seed, int n, int max_degree)
{
    if (n < 2 || n > 6)
        throw std::invalid_argument("forms-check: dimension must lie in [2, 6]");
    if (max_degree < 0)
        throw std::invalid_argument("forms-check: max degree must be >= 0");
    std::mt19937_64 rng(seed);
    std::vector<FormsCheckCase> out;
    for (Identity id : all_identities()) {
        FormsCheckCase c;
        c.identity = id;
        c.seed = seed;
        c.dimension = n;
        switch (id) {
        case Identity::Leibniz: {
            c.degree = draw_in(rng, 0, std::min(max_degree, n - 1));
            const int l = draw_in(rng, 0, std::min(max_degree, n - 1 - c.degree));
            c.theta = random_theta(rng, n);
            c.omega = random_form(rng, n, c.degree);
            c.eta = random_form(rng, n, l);
            break;
        }
        case Identity::DSquared:
        case Identity::DCubed: {
            c.degree = draw_in(rng, 0, std::min(max_degree, n));
            c.theta = random_theta(rng, n);
            const Basis b = draw(rng, 2) ? Basis::Deformed : Basis::Plain;
            c.omega = random_form(rng, n, c.degree, b);
            break;
        }
        case Identity::HomotopyNoDLambda:
            c.degree = draw_in(rng, 0, std::min(max_degree, n - 1));
            c.theta = random_theta(rng, n - 1);
            c.omega = filter_lambda(random_form(rng, n, c.degree, Basis::Plain, true), false);
            break;
        case Identity::HomotopyDLambda:
            c.degree = draw_in(rng, 1, std::min(max_degree, n));
            c.theta = random_theta(rng, n - 1);
            c.omega = filter_lambda(random_form(rng, n, c.degree, Basis::Plain, true), true);
            break;
        case Identity::FieldStrength:
            c.degree = 1;
            c.theta = random_theta(rng, n);
            for (int mu = 0; mu < n; ++mu)
                c.potential.push_back(random_poly(rng, n));
            break;
        }
        out.push_back(std::move(c));
    }
    return out;
}

ExoticForm case_residual(const FormsCheckCase& c)
{
    switch (c.identity) {
    case Identity::Leibniz:
        return leibniz_check(c.omega, c.eta, c.theta);
    case Identity::DSquared:
        return d_squared_check(c.omega, c.theta).residual;
    case Identity::DCubed:
        return d_cubed(c.omega, c.theta);
    case Identity::HomotopyNoDLambda:
    case Identity::HomotopyDLambda:
        return homotopy_lemma_check(c.omega, c.theta);
    case Identity::FieldStrength:
        return field_strength(c.potential, c.theta).up_to(1) - field_strength_from_potential(c.potential, c.theta).up_to(1);
    }
    throw std::logic_error("case_residual: unknown identity");
}

FormsCheckRow make_row(const FormsCheckCase& c, const std::optional<int>& g)
{
    return {identity_name(c.identity), c.seed, c.dimension, c.degree, grade_label(g), identity_passes(c.identity, g)};
}

FormsCheckRow evaluate_case(const FormsCheckCase& c) { return make_row(c, case_residual(c).grade()); }

} // namespace exocalc::forms
