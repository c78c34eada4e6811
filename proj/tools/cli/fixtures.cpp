// Golden fixtures, computed only from the reference implementations in exocalc_oracles.

#include "cli/commands.hpp"
#include "cli/output.hpp"

#include "exocalc/errors.hpp"
#include "exocalc/forms_check.hpp"
#include "exocalc/oracles/dense_forms.hpp"
#include "exocalc/oracles/spectrum.hpp"

namespace exocalc::cli {

namespace {

Config section(const Config& c, const std::string& sub, const std::string& key)
{
    Config s(default_config(sub));
    s.merge(c.at(key));
    return s;
}

dispersion::BoxRegion oracle_box(const Config& c)
{
    dispersion::BoxRegion b;
    const auto t = c.vector("box.t", 2);
    b.t0 = t[0];
    b.t1 = t[1];
    const char* names[] = {"box.x", "box.y", "box.z"};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto r = c.vector(names[k], 2);
        b.a[k] = r[0];
        b.b[k] = r[1];
    }
    return b;
}

std::string oracle_spectrum_csv(const Config& c)
{
    const auto box = oracle_box(c);
    CsvTable t(kSpectrumHeader);
    for (double td : c.sweep("theta_dot"))
        for (double g : c.sweep("grad_norm"))
            for (double m : c.sweep("m")) {
                const Covector4<double> v{td, g, 0.0, 0.0};
                const auto s = oracles::newton_spectrum(v, m);
                // first-order estimate written out directly
                if (td == 0.0)
                    throw DegenerateError("oracle: theta_dot = 0");
                const double kappa = g / td;
                const double re_approx = m - 0.5 * m * kappa * kappa, im_approx = 0.5 * td;
                const double dd = oracles::oracle_delta_diagnostic(v, m, box);
                t.row({format_number(td), format_number(g), format_number(m), format_number(s.plus.real()),
                       format_number(s.plus.imag()), format_number(s.minus.real()), format_number(s.minus.imag()),
                       format_number(re_approx), format_number(im_approx), format_number(dd)});
            }
    return t.str();
}

std::string oracle_forms_csv(const Config& c)
{
    const std::uint64_t seed = c.seed();
    const auto count = c.integer("seeds");
    const auto n = static_cast<int>(c.integer("dimension")), maxd = static_cast<int>(c.integer("max_degree"));
    CsvTable t(kFormsCheckHeader);
    for (std::int64_t i = 0; i < count; ++i)
        for (const auto& cs : forms::forms_check_cases(seed + static_cast<std::uint64_t>(i), n, maxd)) {
            const auto r = oracles::evaluate_case(cs);
            t.row({r.identity, std::to_string(r.seed), std::to_string(r.dimension), std::to_string(r.degree), r.residual_grade,
                   r.pass ? "true" : "false"});
        }
    return t.str();
}

} // namespace

Artifacts generate_fixtures(const Config& c)
{
    Config spec = section(c, "spectrum", "spectrum");
    Config forms = section(c, "forms-check", "forms_check");
    forms.apply_set("seed=" + std::to_string(c.seed()));

    const Artifacts oracle{{"spectrum_golden.csv", oracle_spectrum_csv(spec)}, {"forms_check_golden.csv", oracle_forms_csv(forms)}};
    const std::string impl[] = {spectrum_csv(spec, true), forms_check_csv(forms)};
    std::string report;
    for (std::size_t i = 0; i < oracle.size(); ++i)
        report += csv_diff(oracle[i].filename, oracle[i].content, impl[i]);
    if (!report.empty())
        throw FixtureMismatch("oracle and implementation disagree\n" + report);
    return oracle;
}

} // namespace exocalc::cli
