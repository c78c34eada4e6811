#include "cli/commands.hpp"

#include "cli/output.hpp"
#include "cli/parallel.hpp"

#include "exocalc/cartan.hpp"
#include "exocalc/dispersion.hpp"
#include "exocalc/errors.hpp"
#include "exocalc/forms_check.hpp"
#include "exocalc/metric.hpp"
#include "exocalc/pde.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace exocalc::cli {

namespace {

std::string num(double v) { return format_number(v); }

Vector4<double> as_vector4(const std::vector<double>& v) { return {v[0], v[1], v[2], v[3]}; }
Covector4<double> as_covector4(const std::vector<double>& v) { return {v[0], v[1], v[2], v[3]}; }

json box_defaults() { return {{"t", {0.0, 1.0}}, {"x", {0.0, 1.0}}, {"y", {0.0, 1.0}}, {"z", {0.0, 1.0}}}; }

dispersion::BoxRegion read_box(const Config& c)
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
    try {
        b.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return b;
}

pde::Boundary read_boundary(const std::string& s)
{
    if (s == "periodic")
        return pde::Boundary::Periodic;
    if (s == "dirichlet")
        return pde::Boundary::Dirichlet;
    if (s == "neumann")
        return pde::Boundary::Neumann;
    throw ConfigError("grid.bc must be periodic, dirichlet or neumann");
}

int checked_int(const Config& c, const std::string& key, std::int64_t lo, std::int64_t hi)
{
    const auto v = c.integer(key);
    if (v < lo || v > hi)
        throw ConfigError("'" + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

struct SpectrumPoint
{
    double theta_dot, grad_norm, m;
    Covector4<double> v() const { return {theta_dot, grad_norm, 0.0, 0.0}; }
};

std::vector<SpectrumPoint> spectrum_points(const Config& c, bool allow_empty)
{
    const auto td = c.sweep("theta_dot"), gn = c.sweep("grad_norm"), ms = c.sweep("m");
    if (!allow_empty && (td.empty() || gn.empty() || ms.empty()))
        throw ConfigError("spectrum sweep ranges must be non-empty");
    std::vector<SpectrumPoint> pts;
    for (double a : td)
        for (double g : gn)
            for (double m : ms) {
                if (m <= 0)
                    throw ConfigError("m must be positive");
                pts.push_back({a, g, m});
            }
    return pts;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

} // namespace

const std::vector<std::string>& subcommand_names()
{
    static const std::vector<std::string> names{"metric", "lightcone", "spectrum", "simulate", "forms-check", "cartan", "generate-fixtures"};
    return names;
}

json default_config(const std::string& name)
{
    if (name == "metric")
        return {{"seed", 42},
                {"theta_grad", {0.0, 0.0, 0.0, 0.0}},
                {"order", "full"},
                {"probe", {1.0, 0.0, 0.0, 0.0}},
                {"points", {{0.0, 0.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {1.0, 1.0, 1.0, 1.0}}}};
    if (name == "lightcone")
        return {{"seed", 42}, {"theta_dot", 0.0}, {"theta_prime", 0.0}, {"c", 1.0}, {"points", {{1.0, 0.0}, {0.0, 1.0}}}};
    if (name == "spectrum")
        return {{"seed", 42},
                {"theta_dot", {{"min", 0.002}, {"max", 0.01}, {"count", 5}}},
                {"grad_norm", {{"min", 0.0}, {"max", 0.0008}, {"count", 5}}},
                {"m", {1.0}},
                {"box", box_defaults()}};
    if (name == "simulate")
        return {{"seed", 42},
                {"m", 1.0},
                {"theta_dot", 0.0},
                {"theta_prime", 0.0},
                {"include_x_term", false},
                {"grid",
                 {{"x_min", -100.0},
                  {"x_max", 100.0},
                  {"nx", 2048},
                  {"dt", 0.05},
                  {"nt", 4096},
                  {"bc", "dirichlet"},
                  {"snapshot_stride", 0},
                  {"check_cfl", true}}},
                {"packet", {{"k", 0.5}, {"x0", 0.0}, {"width", 10.0}, {"amplitude", 1.0}}},
                {"fit", {{"t_a", nullptr}, {"t_b", nullptr}}}};
    if (name == "forms-check")
        return {{"seed", 42}, {"seeds", 100}, {"dimension", 4}, {"max_degree", 3}};
    if (name == "cartan")
        return {{"seed", 42}, {"samples", 1000}};
    if (name == "generate-fixtures") {
        json spectrum = default_config("spectrum");
        spectrum.erase("seed");
        return {{"seed", 42}, {"spectrum", spectrum}, {"forms_check", {{"seeds", 20}, {"dimension", 4}, {"max_degree", 3}}}};
    }
    throw ConfigError("unknown subcommand '" + name + "'");
}

Artifacts cmd_metric(const Config& c)
{
    const auto g = as_covector4(c.vector("theta_grad", 4));
    const auto probe = as_vector4(c.vector("probe", 4));
    const std::string order = c.string("order");
    if (order != "full" && order != "first_order")
        throw ConfigError("order must be full or first_order");
    CsvTable t({"point", "t", "x", "y", "z", "g00", "g01", "g02", "g03", "g11", "g12", "g13", "g22", "g23", "g33",
                "witness_norm", "validity_ratio"});
    const auto pts = c.points("points", 4);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto x = as_vector4(pts[i]);
        const auto eta = order == "full" ? metric::metric_full(x, g) : metric::metric_first_order(x, g);
        std::vector<std::string> row{std::to_string(i), num(x[0]), num(x[1]), num(x[2]), num(x[3])};
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a; b < 4; ++b)
                row.push_back(num(eta.components[a][b]));
        const auto w = metric::degeneracy_witness(probe, x, g);
        double wn = 0;
        for (std::size_t a = 0; a < 4; ++a)
            wn += w[a] * w[a];
        row.push_back(num(std::sqrt(wn)));
        row.push_back(num(metric::validity_ratio(x, g)));
        t.row(row);
    }
    return {{"metric.csv", t.str()}};
}

Artifacts cmd_lightcone(const Config& c)
{
    const double td = c.number("theta_dot"), tp = c.number("theta_prime"), cc = c.number("c");
    if (cc <= 0)
        throw ConfigError("c must be positive");
    CsvTable t({"t", "x", "theta_dot", "theta_prime", "c", "u_plus", "u_minus", "interval_plus", "interval_minus"});
    for (const auto& p : c.points("points", 2)) {
        const auto u = metric::lightcone_velocity(p[0], p[1], td, tp, cc);
        const double ip = metric::interval_2d(1.0, u.plus, p[0], p[1], td, tp, cc);
        const double im = metric::interval_2d(1.0, u.minus, p[0], p[1], td, tp, cc);
        t.row({num(p[0]), num(p[1]), num(td), num(tp), num(cc), num(u.plus), num(u.minus), num(ip), num(im)});
    }
    return {{"lightcone.csv", t.str()}};
}

std::string spectrum_csv(const Config& c, bool allow_empty)
{
    const auto box = read_box(c);
    const auto pts = spectrum_points(c, allow_empty);
    const auto rows = parallel_map<std::vector<std::string>>(pts.size(), [&](std::size_t i) {
        const auto& p = pts[i];
        const auto s = dispersion::constrained_spectrum(p.v(), p.m);
        const auto approx = dispersion::first_order_spectrum(p.theta_dot, p.grad_norm, p.m);
        const double dd = dispersion::delta_diagnostic(p.v(), p.m, box);
        return std::vector<std::string>{num(p.theta_dot),      num(p.grad_norm),     num(p.m),
                                        num(s.plus.real()),    num(s.plus.imag()),   num(s.minus.real()),
                                        num(s.minus.imag()),   num(approx.plus.real()), num(approx.plus.imag()),
                                        num(dd)};
    });
    CsvTable t(kSpectrumHeader);
    for (const auto& r : rows)
        t.row(r);
    return t.str();
}

Artifacts cmd_spectrum(const Config& c, bool svg)
{
    Artifacts out{{"spectrum.csv", spectrum_csv(c, false)}};
    if (svg) {
        const auto td = c.sweep("theta_dot"), gn = c.sweep("grad_norm");
        const double m = c.sweep("m").front();
        std::vector<Series> series;
        for (double g : gn) {
            Series s{"|grad|=" + num(g), {}, {}};
            for (double a : td) {
                s.x.push_back(a);
                try {
                    s.y.push_back(dispersion::constrained_spectrum({a, g, 0.0, 0.0}, m).plus.imag());
                } catch (const DegenerateError&) {
                    s.y.push_back(std::nan(""));
                }
            }
            series.push_back(std::move(s));
        }
        out.push_back({"spectrum.svg", line_chart_svg("Im E+ vs theta_dot (m=" + num(m) + ")", "theta_dot", "Im E+", series)});
    }
    return out;
}

Artifacts cmd_simulate(const Config& c, bool svg, std::vector<std::string>& warnings)
{
    pde::SimGrid g;
    g.x_min = c.number("grid.x_min");
    g.x_max = c.number("grid.x_max");
    if (!(g.x_max > g.x_min))
        throw ConfigError("grid.x_max must exceed grid.x_min");
    g.nx = checked_int(c, "grid.nx", 3, 1 << 24);
    g.dt = c.number("grid.dt");
    if (g.dt <= 0)
        throw ConfigError("grid.dt must be positive");
    g.nt = checked_int(c, "grid.nt", 1, 1 << 26);
    g.bc = read_boundary(c.string("grid.bc"));
    g.snapshot_stride = checked_int(c, "grid.snapshot_stride", 0, 1 << 26);
    g.check_cfl = c.boolean("grid.check_cfl");

    pde::SimParams p{c.number("m"), c.number("theta_dot"), c.number("theta_prime"), c.boolean("include_x_term")};
    pde::WavePacket w{c.number("packet.k"), c.number("packet.x0"), c.number("packet.width"), c.number("packet.amplitude")};
    if (w.width <= 0 || w.amplitude == 0)
        throw ConfigError("packet.width must be positive and packet.amplitude nonzero");

    const auto h = pde::simulate_time_domain(g, p, w);
    for (const auto& s : h.warnings)
        warnings.push_back(s);

    const double t_end = h.times.back();
    const double ta = c.is_null("fit.t_a") ? 0.1 * t_end : c.number("fit.t_a");
    const double tb = c.is_null("fit.t_b") ? t_end : c.number("fit.t_b");
    if (!(tb > ta) || ta < 0 || tb > t_end)
        throw ConfigError("fit window must satisfy 0 <= t_a < t_b <= final time");
    const double rate = pde::fit_decay_rate(h, ta, tb);

    CsvTable snaps({"t", "x", "re_phi", "im_phi"});
    for (const auto& s : h.snapshots)
        for (std::size_t i = 0; i < s.phi.size(); ++i)
            snaps.row({num(s.t), num(h.x(static_cast<int>(i))), num(s.phi[i].real()), num(s.phi[i].imag())});
    CsvTable summary({"t", "log_l2_amplitude", "fitted_rate"});
    const std::string r = num(rate);
    for (std::size_t n = 0; n < h.times.size(); ++n)
        summary.row({num(h.times[n]), num(h.log_l2[n]), r});

    Artifacts out{{"simulate_snapshots.csv", snaps.str()}, {"simulate_summary.csv", summary.str()}};
    if (svg)
        out.push_back({"simulate.svg", line_chart_svg("log ||phi||_2, fitted rate " + r, "t", "log ||phi||_2",
                                                      {{"run", h.times, h.log_l2}})});
    return out;
}

std::string forms_check_csv(const Config& c)
{
    const std::uint64_t seed = c.seed();
    const int count = checked_int(c, "seeds", 0, 1000000);
    const int n = checked_int(c, "dimension", 2, 6);
    const int maxd = checked_int(c, "max_degree", 0, 6);
    const auto per_seed = parallel_map<std::vector<forms::FormsCheckRow>>(static_cast<std::size_t>(count), [&](std::size_t i) {
        std::vector<forms::FormsCheckRow> rows;
        for (const auto& cs : forms::forms_check_cases(seed + i, n, maxd))
            rows.push_back(forms::evaluate_case(cs));
        return rows;
    });
    CsvTable t(kFormsCheckHeader);
    for (const auto& rows : per_seed)
        for (const auto& r : rows)
            t.row({r.identity, std::to_string(r.seed), std::to_string(r.dimension), std::to_string(r.degree), r.residual_grade,
                   csv_bool(r.pass)});
    return t.str();
}

Artifacts cmd_forms_check(const Config& c) { return {{"forms_check.csv", forms_check_csv(c)}}; }

Artifacts cmd_cartan(const Config& c)
{
    const int n = checked_int(c, "samples", 0, 100000000);
    std::mt19937_64 rng(c.seed());
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    using cartan::cplx;
    CsvTable t({"sample", "roundtrip_error", "nullity_residual", "det_residual"});
    for (int i = 0; i < n; ++i) {
        // future null vector -> spinor -> point
        const double x = 3 * u(rng), y = 3 * u(rng), z = 3 * u(rng);
        const Vector4<double> v{std::sqrt(x * x + y * y + z * z), x, y, z};
        const auto back = cartan::spinor_to_point(cartan::point_to_spinor(v));
        double err = 0, scale = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            err = std::max(err, std::abs(back[k] - v[k]));
            scale = std::max(scale, std::abs(v[k]));
        }
        // spinor -> point lands on the cone
        const cartan::SpinorPair s{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const auto p = cartan::spinor_to_point(s);
        const double null_res = std::abs(p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3]) / std::max(p[0] * p[0], 1e-300);
        // det V is preserved by unimodular conjugation
        cartan::Mat2 lam{};
        for (auto& row : lam)
            for (auto& e : row)
                e = {u(rng), u(rng)};
        const cplx d = cartan::det(lam);
        const cplx root = std::sqrt(d);
        for (auto& row : lam)
            for (auto& e : row)
                e /= root;
        const auto V = cartan::encode_point({2 * u(rng), u(rng), u(rng), u(rng)});
        const auto W = cartan::sl2c_act(lam, V);
        const auto& m = W.m;
        const double det_scale = std::max(1.0, std::abs(m[0][0]) * std::abs(m[1][1]) + std::abs(m[0][1]) * std::abs(m[1][0]));
        const double det_res = std::abs(cartan::det(W.m) - cartan::det(V.m)) / det_scale;
        t.row({std::to_string(i), num(err / scale), num(null_res), num(det_res)});
    }
    return {{"cartan.csv", t.str()}};
}

Artifacts run_subcommand(const std::string& name, const Config& c, bool svg, std::vector<std::string>& warnings)
{
    if (name == "metric")
        return cmd_metric(c);
    if (name == "lightcone")
        return cmd_lightcone(c);
    if (name == "spectrum")
        return cmd_spectrum(c, svg);
    if (name == "simulate")
        return cmd_simulate(c, svg, warnings);
    if (name == "forms-check")
        return cmd_forms_check(c);
    if (name == "cartan")
        return cmd_cartan(c);
    if (name == "generate-fixtures")
        return generate_fixtures(c);
    throw ConfigError("unknown subcommand '" + name + "'");
}

std::string csv_diff(const std::string& name, const std::string& expected, const std::string& actual)
{
    auto lines = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        for (std::string l; std::getline(ss, l);)
            out.push_back(l);
        return out;
    };
    const auto a = lines(expected), b = lines(actual);
    std::ostringstream o;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        const std::string* x = i < a.size() ? &a[i] : nullptr;
        const std::string* y = i < b.size() ? &b[i] : nullptr;
        if (x && y && *x == *y)
            continue;
        o << name << ":" << i + 1 << "\n";
        o << "  oracle:         " << (x ? *x : "<missing>") << "\n";
        o << "  implementation: " << (y ? *y : "<missing>") << "\n";
    }
    return o.str();
}

} // namespace exocalc::cli
