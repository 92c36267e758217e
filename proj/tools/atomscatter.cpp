// Command-line front end: monochromatic channel tables, pulse spectra and
// envelopes, (Omega, eta) sweeps, and solid-angle quadrature. Output is
// deterministic CSV (or a JSON mirror) suitable for external plotting.

#include <charconv>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atomscatter/elastic.hpp"
#include "atomscatter/geometry.hpp"
#include "atomscatter/numerics.hpp"
#include "atomscatter/pulse.hpp"

namespace as = atomscatter;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitToleranceError = 3;
constexpr double kAbsorbedFractionBudget = 1e-3;

struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// shortest round-trip decimal
std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt(std::size_t v) { return std::to_string(v); }

struct CommonOpts {
    double omega = 1.0;
    double eta = 1.0;
    double gamma = 1.0;
    double a0 = 1.0;
    double phi0 = 0.0;
    double saturation = 0.0;
    std::size_t grid_n = std::size_t{1} << 16;
    double grid_span = 200.0;
    std::string out = "-";
    std::string format = "csv";

    as::AtomParams atom() const { return {.gamma = gamma}; }
    as::CouplingParams coupling() const { return {.omega = omega, .eta = eta}; }
    as::DriveParams drive(double s) const {
        return {.power = a0 * a0, .phi0 = phi0, .saturation = s};
    }
    as::PulseParams pulse() const { return {.a0 = a0, .atom = atom()}; }
    as::DetuningGrid grid() const {
        // grid_span is given in units of gamma
        return {.n = grid_n, .delta_max = grid_span * gamma};
    }

    std::vector<std::pair<std::string, std::string>> echo() const {
        return {{"a0", fmt(a0)},
                {"eta", fmt(eta)},
                {"format", format},
                {"gamma", fmt(gamma)},
                {"grid-n", fmt(grid_n)},
                {"grid-span", fmt(grid_span)},
                {"omega", fmt(omega)},
                {"phi0", fmt(phi0)},
                {"saturation", fmt(saturation)}};
    }
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->set_config("--config", "", "flat key=value config file; command line wins");
    sub->add_option("--omega", o.omega, "solid-angle fraction Omega");
    sub->add_option("--eta", o.eta, "spatial mode overlap eta");
    sub->add_option("--gamma", o.gamma, "spontaneous emission rate Gamma");
    sub->add_option("--a0", o.a0, "field amplitude (sqrt of incident power)");
    sub->add_option("--phi0", o.phi0, "global incident phase (rad)");
    sub->add_option("--saturation", o.saturation, "saturation parameter s");
    sub->add_option("--grid-n", o.grid_n, "detuning samples (even)");
    sub->add_option("--grid-span", o.grid_span, "detuning half-span in units of Gamma");
    sub->add_option("--out", o.out, "output path, '-' for stdout");
    sub->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const std::string& path, const std::string& body) {
    if (path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::invalid_argument("out: cannot open '" + path + "' for writing");
    f << body;
}

std::string csv_header(const std::string& mode,
                       const std::vector<std::pair<std::string, std::string>>& echo) {
    std::string h = "# atomscatter " + mode + "\n";
    for (const auto& [k, v] : echo)
        h += "# " + k + "=" + v + "\n";
    return h;
}

json json_config(const std::string& mode,
                 const std::vector<std::pair<std::string, std::string>>& echo) {
    json cfg;
    cfg["mode"] = mode;
    for (const auto& [k, v] : echo)
        cfg[k] = v;
    return cfg;
}

int run_mono(const CommonOpts& o) {
    const as::DetuningGrid grid = o.grid();
    grid.validate();
    const as::AtomParams atom = o.atom();
    const as::CouplingParams coupling = o.coupling();
    const as::DriveParams elastic_drive = o.drive(0.0);

    std::vector<json> rows;
    std::string csv = csv_header("mono", o.echo());
    csv += "delta,p_sc,phase_nogouy,phase_gouy,p_coh,p_incoh,p_back,energy_residual\n";
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double d = grid.delta(k);
        const double p_sc =
            as::scattered_power(o.a0 * o.a0, coupling, d, atom, o.saturation);
        const double ph0 = as::scattered_phase(d, atom, false);
        const double ph1 = as::scattered_phase(d, atom, true);
        const as::ChannelPowers p = as::channel_powers(elastic_drive, coupling, d, atom);
        const double residual = p.total() - o.a0 * o.a0;
        if (o.format == "csv") {
            csv += fmt(d) + "," + fmt(p_sc) + "," + fmt(ph0) + "," + fmt(ph1) + "," +
                   fmt(p.coherent) + "," + fmt(p.incoherent) + "," + fmt(p.backward) + "," +
                   fmt(residual) + "\n";
        } else {
            rows.push_back({{"delta", d},
                            {"p_sc", p_sc},
                            {"phase_nogouy", ph0},
                            {"phase_gouy", ph1},
                            {"p_coh", p.coherent},
                            {"p_incoh", p.incoherent},
                            {"p_back", p.backward},
                            {"energy_residual", residual}});
        }
    }
    if (o.format == "csv") {
        emit(o.out, csv);
    } else {
        json doc;
        doc["config"] = json_config("mono", o.echo());
        doc["rows"] = rows;
        emit(o.out, doc.dump(2) + "\n");
    }
    return 0;
}

int run_pulse(const CommonOpts& o) {
    const as::DetuningGrid grid = o.grid();
    grid.validate();
    const as::PulseParams pulse = o.pulse();
    const as::CouplingParams coupling = o.coupling();

    const as::ChannelSpectra spectra = as::scatter_pulse(pulse, coupling, grid, o.phi0);
    const as::ExpDecomposition dec = as::decompose_coherent(pulse, coupling, o.phi0);
    const double absorbed = as::absorbed_fraction(coupling);
    const double absorbed_num = as::absorbed_fraction_parseval(pulse, coupling, grid);
    const double diff = std::abs(absorbed - absorbed_num);

    const as::TransformPlan plan{.grid = grid};
    const as::TimeSignal t_coh = as::inverse_transform(spectra.coherent, plan);
    const as::TimeSignal t_incoh = as::inverse_transform(spectra.incoherent, plan);
    const as::TimeSignal t_back = as::inverse_transform(spectra.backward, plan);

    if (o.format == "csv") {
        std::string csv = csv_header("pulse", o.echo());
        csv += "# section: spectrum\n";
        csv += "delta,s_coh_re,s_coh_im,s_incoh_re,s_incoh_im,s_back_re,s_back_im\n";
        for (std::size_t k = 0; k < grid.n; ++k) {
            csv += fmt(grid.delta(k)) + "," + fmt(spectra.coherent[k].real()) + "," +
                   fmt(spectra.coherent[k].imag()) + "," + fmt(spectra.incoherent[k].real()) +
                   "," + fmt(spectra.incoherent[k].imag()) + "," +
                   fmt(spectra.backward[k].real()) + "," + fmt(spectra.backward[k].imag()) +
                   "\n";
        }
        csv += "# section: time\n";
        csv += "t,coh_re,coh_im,incoh_re,incoh_im,back_re,back_im,"
               "num_coh_re,num_coh_im,num_incoh_re,num_incoh_im,num_back_re,num_back_im\n";
        for (std::size_t j = 0; j < grid.n; ++j) {
            const double t = t_coh.times[j];
            const as::Complex ac =
                as::analytic_time_domain(as::Channel::Coherent, pulse, coupling, t, o.phi0);
            const as::Complex ai =
                as::analytic_time_domain(as::Channel::Incoherent, pulse, coupling, t, o.phi0);
            const as::Complex ab =
                as::analytic_time_domain(as::Channel::Backward, pulse, coupling, t, o.phi0);
            csv += fmt(t) + "," + fmt(ac.real()) + "," + fmt(ac.imag()) + "," +
                   fmt(ai.real()) + "," + fmt(ai.imag()) + "," + fmt(ab.real()) + "," +
                   fmt(ab.imag()) + "," + fmt(t_coh.values[j].real()) + "," +
                   fmt(t_coh.values[j].imag()) + "," + fmt(t_incoh.values[j].real()) + "," +
                   fmt(t_incoh.values[j].imag()) + "," + fmt(t_back.values[j].real()) + "," +
                   fmt(t_back.values[j].imag()) + "\n";
        }
        csv += "# section: summary\n";
        csv += "key,value\n";
        csv += "rising_coeff_re," + fmt(dec.rising_coeff.real()) + "\n";
        csv += "rising_coeff_im," + fmt(dec.rising_coeff.imag()) + "\n";
        csv += "decaying_coeff_re," + fmt(dec.decaying_coeff.real()) + "\n";
        csv += "decaying_coeff_im," + fmt(dec.decaying_coeff.imag()) + "\n";
        csv += "absorbed_fraction_analytic," + fmt(absorbed) + "\n";
        csv += "absorbed_fraction_parseval," + fmt(absorbed_num) + "\n";
        csv += "absorbed_fraction_difference," + fmt(diff) + "\n";
        emit(o.out, csv);
    } else {
        json doc;
        doc["config"] = json_config("pulse", o.echo());
        json spec_rows = json::array();
        for (std::size_t k = 0; k < grid.n; ++k)
            spec_rows.push_back({{"delta", grid.delta(k)},
                                 {"s_coh_re", spectra.coherent[k].real()},
                                 {"s_coh_im", spectra.coherent[k].imag()},
                                 {"s_incoh_re", spectra.incoherent[k].real()},
                                 {"s_incoh_im", spectra.incoherent[k].imag()},
                                 {"s_back_re", spectra.backward[k].real()},
                                 {"s_back_im", spectra.backward[k].imag()}});
        doc["spectrum"] = std::move(spec_rows);
        json time_rows = json::array();
        for (std::size_t j = 0; j < grid.n; ++j) {
            const double t = t_coh.times[j];
            const as::Complex ac =
                as::analytic_time_domain(as::Channel::Coherent, pulse, coupling, t, o.phi0);
            const as::Complex ai =
                as::analytic_time_domain(as::Channel::Incoherent, pulse, coupling, t, o.phi0);
            const as::Complex ab =
                as::analytic_time_domain(as::Channel::Backward, pulse, coupling, t, o.phi0);
            time_rows.push_back({{"t", t},
                                 {"coh_re", ac.real()},
                                 {"coh_im", ac.imag()},
                                 {"incoh_re", ai.real()},
                                 {"incoh_im", ai.imag()},
                                 {"back_re", ab.real()},
                                 {"back_im", ab.imag()},
                                 {"num_coh_re", t_coh.values[j].real()},
                                 {"num_coh_im", t_coh.values[j].imag()},
                                 {"num_incoh_re", t_incoh.values[j].real()},
                                 {"num_incoh_im", t_incoh.values[j].imag()},
                                 {"num_back_re", t_back.values[j].real()},
                                 {"num_back_im", t_back.values[j].imag()}});
        }
        doc["time"] = std::move(time_rows);
        doc["summary"] = {{"rising_coeff_re", dec.rising_coeff.real()},
                          {"rising_coeff_im", dec.rising_coeff.imag()},
                          {"decaying_coeff_re", dec.decaying_coeff.real()},
                          {"decaying_coeff_im", dec.decaying_coeff.imag()},
                          {"absorbed_fraction_analytic", absorbed},
                          {"absorbed_fraction_parseval", absorbed_num},
                          {"absorbed_fraction_difference", diff}};
        emit(o.out, doc.dump(2) + "\n");
    }

    if (diff > kAbsorbedFractionBudget)
        throw ToleranceError("absorbed fraction: analytic vs Parseval differ by " + fmt(diff) +
                             " (budget " + fmt(kAbsorbedFractionBudget) + ")");
    return 0;
}

struct SweepRange {
    double start = 0.0;
    double stop = 1.0;
    std::size_t count = 1;

    double at(std::size_t i) const {
        if (count == 1)
            return start;
        return start + (stop - start) * static_cast<double>(i) /
                           static_cast<double>(count - 1);
    }
};

int run_sweep(const CommonOpts& o, const SweepRange& om_range, const SweepRange& eta_range) {
    if (om_range.count < 1 || eta_range.count < 1)
        throw std::invalid_argument("sweep count: must be >= 1");
    const as::PulseParams pulse = o.pulse();
    const as::AtomParams atom = o.atom();
    const as::DriveParams drive = o.drive(0.0);

    struct Row {
        double omega, eta, absorbed;
        as::ExpDecomposition dec;
        as::ChannelPowers powers;
    };
    const std::size_t total = om_range.count * eta_range.count;
    std::vector<Row> rows(total);

    // rows are indexed lexicographically by (omega, eta); evaluation order
    // does not affect the output
#pragma omp parallel for schedule(static) collapse(2)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(om_range.count); ++i) {
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(eta_range.count); ++j) {
            const as::CouplingParams c{.omega = om_range.at(static_cast<std::size_t>(i)),
                                       .eta = eta_range.at(static_cast<std::size_t>(j))};
            Row& r = rows[static_cast<std::size_t>(i) * eta_range.count +
                          static_cast<std::size_t>(j)];
            r.omega = c.omega;
            r.eta = c.eta;
            r.absorbed = as::absorbed_fraction(c);
            r.dec = as::decompose_coherent(pulse, c, o.phi0);
            r.powers = as::channel_powers(drive, c, 0.0, atom);
        }
    }

    if (o.format == "csv") {
        std::string csv = csv_header("sweep", o.echo());
        csv += "omega,eta,absorbed_fraction,rising_coeff_re,rising_coeff_im,"
               "decaying_coeff_re,decaying_coeff_im,p_coh,p_incoh,p_back\n";
        for (const Row& r : rows) {
            csv += fmt(r.omega) + "," + fmt(r.eta) + "," + fmt(r.absorbed) + "," +
                   fmt(r.dec.rising_coeff.real()) + "," + fmt(r.dec.rising_coeff.imag()) + "," +
                   fmt(r.dec.decaying_coeff.real()) + "," + fmt(r.dec.decaying_coeff.imag()) +
                   "," + fmt(r.powers.coherent) + "," + fmt(r.powers.incoherent) + "," +
                   fmt(r.powers.backward) + "\n";
        }
        emit(o.out, csv);
    } else {
        json doc;
        doc["config"] = json_config("sweep", o.echo());
        json jrows = json::array();
        for (const Row& r : rows)
            jrows.push_back({{"omega", r.omega},
                             {"eta", r.eta},
                             {"absorbed_fraction", r.absorbed},
                             {"rising_coeff_re", r.dec.rising_coeff.real()},
                             {"rising_coeff_im", r.dec.rising_coeff.imag()},
                             {"decaying_coeff_re", r.dec.decaying_coeff.real()},
                             {"decaying_coeff_im", r.dec.decaying_coeff.imag()},
                             {"p_coh", r.powers.coherent},
                             {"p_incoh", r.powers.incoherent},
                             {"p_back", r.powers.backward}});
        doc["rows"] = std::move(jrows);
        emit(o.out, doc.dump(2) + "\n");
    }
    return 0;
}

int run_solid_angle(const CommonOpts& o, const std::string& pattern_name,
                    const as::AngularAperture& aperture, const as::QuadratureSpec& quad) {
    const as::DipolePattern pattern = pattern_name == "circular" ? as::DipolePattern::Circular
                                                                 : as::DipolePattern::Linear;
    const as::SolidAngleEstimate est = as::weighted_solid_angle(pattern, aperture, quad);

    if (o.format == "csv") {
        std::string csv = csv_header("solid-angle", o.echo());
        csv += "# pattern=" + pattern_name + "\n";
        csv += "# theta_min=" + fmt(aperture.theta_min) + "\n";
        csv += "# theta_max=" + fmt(aperture.theta_max) + "\n";
        csv += "# phi_min=" + fmt(aperture.phi_min) + "\n";
        csv += "# phi_max=" + fmt(aperture.phi_max) + "\n";
        csv += "omega,error_estimate\n";
        csv += fmt(est.value) + "," + fmt(est.error_estimate) + "\n";
        emit(o.out, csv);
    } else {
        json doc;
        doc["config"] = json_config("solid-angle", o.echo());
        doc["config"]["pattern"] = pattern_name;
        doc["config"]["theta_min"] = aperture.theta_min;
        doc["config"]["theta_max"] = aperture.theta_max;
        doc["config"]["phi_min"] = aperture.phi_min;
        doc["config"]["phi_max"] = aperture.phi_max;
        doc["omega"] = est.value;
        doc["error_estimate"] = est.error_estimate;
        emit(o.out, doc.dump(2) + "\n");
    }

    if (!est.converged(quad.tolerance))
        throw ToleranceError("solid-angle quadrature did not converge: estimate " +
                             fmt(est.error_estimate) + " exceeds tolerance " +
                             fmt(quad.tolerance));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elastic scattering of light by a single two-level atom"};
    app.require_subcommand(1);

    CommonOpts mono_o, pulse_o, sweep_o, sa_o;
    auto* mono = app.add_subcommand("mono", "monochromatic channel table over the detuning grid");
    add_common(mono, mono_o);
    auto* pul = app.add_subcommand("pulse", "rising-exponential pulse response");
    add_common(pul, pulse_o);

    auto* sweep = app.add_subcommand("sweep", "Cartesian (omega, eta) parameter sweep");
    add_common(sweep, sweep_o);
    SweepRange om_range, eta_range;
    auto* oms = sweep->add_option("--omega-start", om_range.start, "sweep start for omega");
    auto* omt = sweep->add_option("--omega-stop", om_range.stop, "sweep stop for omega");
    sweep->add_option("--omega-count", om_range.count, "sweep points for omega");
    auto* ets = sweep->add_option("--eta-start", eta_range.start, "sweep start for eta");
    auto* ett = sweep->add_option("--eta-stop", eta_range.stop, "sweep stop for eta");
    sweep->add_option("--eta-count", eta_range.count, "sweep points for eta");

    auto* sa = app.add_subcommand("solid-angle", "dipole-weighted solid-angle fraction");
    add_common(sa, sa_o);
    std::string pattern_name = "linear";
    as::AngularAperture aperture;
    as::QuadratureSpec quad;
    sa->add_option("--pattern", pattern_name, "dipole pattern")
        ->check(CLI::IsMember({"linear", "circular"}));
    sa->add_option("--theta-min", aperture.theta_min, "polar angle lower bound (rad)");
    sa->add_option("--theta-max", aperture.theta_max, "polar angle upper bound (rad)");
    sa->add_option("--phi-min", aperture.phi_min, "azimuth lower bound (rad)");
    sa->add_option("--phi-max", aperture.phi_max, "azimuth upper bound (rad)");
    sa->add_option("--quad-order", quad.order, "Gauss-Legendre order per axis");
    sa->add_option("--quad-tol", quad.tolerance, "quadrature convergence tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (*mono)
            return run_mono(mono_o);
        if (*pul)
            return run_pulse(pulse_o);
        if (*sweep) {
            // unswept variables default to single points at --omega / --eta
            if (!*oms && !*omt && om_range.count == 1)
                om_range.start = om_range.stop = sweep_o.omega;
            if (!*ets && !*ett && eta_range.count == 1)
                eta_range.start = eta_range.stop = sweep_o.eta;
            return run_sweep(sweep_o, om_range, eta_range);
        }
        if (*sa)
            return run_solid_angle(sa_o, pattern_name, aperture, quad);
    } catch (const ToleranceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitToleranceError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
