#include "boxmode/cli.hpp"

#include "boxmode/landau.hpp"
#include "boxmode/momentum_continuous.hpp"
#include "boxmode/momentum_discrete.hpp"
#include "boxmode/release.hpp"
#include "boxmode/well.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace boxmode::cli {

using std::numbers::pi;

bool CommandOutput::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string format_report(const RunConfig& config, const CommandOutput& output)
{
    std::ostringstream out;
    out << "boxmode run report\n";
    out << "command: " << config.group << " " << config.command << "\n\n";
    out << "# configuration\n" << serialize(config) << "\n";
    if (!output.notes.empty()) {
        out << "# notes\n";
        for (const auto& note : output.notes)
            out << note << "\n";
        out << "\n";
    }
    out << "# checks\n";
    for (const auto& c : output.checks) {
        out << "CHECK " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (residual=" << format_number(c.residual, 6)
            << ", tolerance=" << format_number(c.tolerance, 6) << ")\n";
    }
    out << "\nresult: " << (output.all_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

namespace {

class InvalidArgs : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Params {
public:
    explicit Params(const std::map<std::string, std::string>& values) : values_(values) {}

    std::optional<std::string> raw(const std::string& name) const
    {
        const auto it = values_.find(name);
        if (it == values_.end() || it->second.empty())
            return std::nullopt;
        return it->second;
    }

    int integer(const std::string& name, int fallback) const
    {
        const auto v = raw(name);
        if (!v)
            return fallback;
        try {
            std::size_t used = 0;
            const int out = std::stoi(*v, &used);
            if (used == v->size())
                return out;
        } catch (const std::exception&) {
        }
        throw InvalidArgs("--" + name + " expects an integer, got '" + *v + "'");
    }

    std::optional<double> number(const std::string& name) const
    {
        const auto v = raw(name);
        if (!v)
            return std::nullopt;
        try {
            std::size_t used = 0;
            const double out = std::stod(*v, &used);
            if (used == v->size() && std::isfinite(out))
                return out;
        } catch (const std::exception&) {
        }
        throw InvalidArgs("--" + name + " expects a number, got '" + *v + "'");
    }

    double number(const std::string& name, double fallback) const { return number(name).value_or(fallback); }

    std::string word(const std::string& name, const std::string& fallback, std::initializer_list<const char*> allowed) const
    {
        const auto v = raw(name).value_or(fallback);
        for (const char* a : allowed) {
            if (v == a)
                return v;
        }
        throw InvalidArgs("--" + name + " does not accept '" + v + "'");
    }

private:
    const std::map<std::string, std::string>& values_;
};

Check bounded(std::string name, double residual, double tolerance)
{
    return {std::move(name), residual <= tolerance, residual, tolerance};
}

WellSpec well_spec(const RunConfig& cfg)
{
    WellSpec s{cfg.units.a, cfg.units.mass, cfg.units.hbar};
    s.validate();
    return s;
}

landau::LandauSpec landau_spec(const RunConfig& cfg, const Params& p)
{
    landau::LandauSpec s;
    s.B = p.number("B", 1.0);
    s.charge = -cfg.units.e;
    s.mass = cfg.units.mass;
    s.c = cfg.units.c;
    s.hbar = cfg.units.hbar;
    s.Lx = p.number("Lx", 10.0);
    s.Ly = p.number("Ly", 10.0);
    s.validate();
    return s;
}

int stride_for(const Params& p, std::size_t count, std::size_t target)
{
    const int fallback = static_cast<int>(std::max<std::size_t>(1, count / target));
    const int stride = p.integer("stride", fallback);
    if (stride < 1)
        throw InvalidArgs("--stride must be >= 1");
    return stride;
}

// ---------------------------------------------------------------- well

CommandOutput well_energies(const RunConfig& cfg, const Params& p)
{
    const auto spec = well_spec(cfg);
    const int n_max = p.integer("n-max", 10);
    if (n_max < 1)
        throw InvalidArgs("--n-max must be >= 1");

    CommandOutput out;
    out.table.columns = {"n", "energy"};
    const double e1 = energy(spec, EigenstateIndex(1));
    double ratio_dev = 0.0, norm_dev = 0.0;
    bool increasing = true;
    double prev = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const EigenstateIndex idx(n);
        const double e = energy(spec, idx);
        out.table.add_row({std::int64_t{n}, e});
        ratio_dev = std::max(ratio_dev, std::abs(e / e1 - double(n) * n) / (double(n) * n));
        norm_dev = std::max(norm_dev, norm_check(spec, idx));
        increasing = increasing && e > prev;
        prev = e;
    }
    double ortho = 0.0;
    for (int n = 1; n <= std::min(n_max, 10); ++n) {
        for (int m = n + 1; m <= std::min(n_max, 10); ++m)
            ortho = std::max(ortho, std::abs(overlap(spec, EigenstateIndex(n), EigenstateIndex(m))));
    }
    out.checks.push_back(bounded("energy_ratio_is_n_squared", ratio_dev, 1e-14));
    out.checks.push_back({"energy_strictly_increasing", increasing, increasing ? 0.0 : 1.0, 0.0});
    out.checks.push_back(bounded("norm_check", norm_dev, 1e-12));
    out.checks.push_back(bounded("orthogonality", ortho, 1e-12));
    return out;
}

CommandOutput well_eigenfunction(const RunConfig& cfg, const Params& p)
{
    const auto spec = well_spec(cfg);
    const EigenstateIndex n(p.integer("n", 1));
    const int samples = p.integer("samples", 401);
    if (samples < 3 || samples % 2 == 0)
        throw InvalidArgs("--samples must be odd and >= 3");
    const double extent = p.number("extent", 1.25 * spec.a);
    if (!(extent > 0.0))
        throw InvalidArgs("--extent must be positive");

    CommandOutput out;
    out.table.columns = {"x", "psi"};
    std::vector<double> psi(samples);
    double outside = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = extent * (2 * i - (samples - 1)) / (samples - 1);
        psi[i] = eigenfunction(spec, n, x);
        if (std::abs(x) >= spec.a)
            outside = std::max(outside, std::abs(psi[i]));
        out.table.add_row({x, psi[i]});
    }
    const double sign = n.even_parity() ? 1.0 : -1.0;
    double parity = 0.0;
    for (int i = 0; i < samples; ++i)
        parity = std::max(parity, std::abs(psi[samples - 1 - i] - sign * psi[i]));

    out.checks.push_back(bounded("norm_check", norm_check(spec, n), 1e-12));
    out.checks.push_back(bounded("parity", parity, 1e-14));
    out.checks.push_back(bounded("vanishes_outside_well", outside, 0.0));
    return out;
}

// ---------------------------------------------------------------- momentum

Check total_probability_check(double total)
{
    return {"continuous_total_probability", total >= 0.999 && total <= 1.0 + 1e-9, 1.0 - total, 1e-3};
}

CommandOutput momentum_continuous(const RunConfig& cfg, const Params& p)
{
    const auto spec = well_spec(cfg);
    const EigenstateIndex n(p.integer("n", 1));
    const auto fallback = MomentumGrid::for_state(spec, n);
    const MomentumGrid grid(p.number("p-max", fallback.p_max()), p.integer("count", fallback.count()));
    const auto s = spectrum(spec, n, grid);

    CommandOutput out;
    out.table.columns = {"p", "amplitude_re", "amplitude_im", "probability_density"};
    double modulus = 0.0, symmetry = 0.0, analytic = 0.0;
    const double peak = *std::max_element(s.density.begin(), s.density.end());
    for (int i = 0; i < grid.count(); ++i) {
        const double pi_ = grid.sample(i);
        out.table.add_row({pi_, s.amplitude[i].real(), s.amplitude[i].imag(), s.density[i]});
        modulus = std::max(modulus, std::abs(s.density[i] - std::norm(s.amplitude[i])));
        symmetry = std::max(symmetry, std::abs(s.density[i] - s.density[grid.count() - 1 - i]));
        if (n.value() == 1) {
            const double ref = analytic_density_ground(spec, pi_);
            analytic = std::max(analytic, std::abs(s.density[i] - ref) / std::max(ref, 1e-6 * peak));
        }
    }
    const auto u = uncertainty_product(spec, n);
    const double dp_grid = momentum_spread_on_grid(s);

    out.checks.push_back(bounded("density_is_amplitude_modulus_squared", modulus / peak, 1e-14));
    out.checks.push_back(bounded("density_symmetric", symmetry, 0.0));
    out.checks.push_back(total_probability_check(s.total_probability()));
    if (n.value() == 1)
        out.checks.push_back(bounded("matches_analytic_ground_density", analytic, 1e-10));
    out.checks.push_back({"uncertainty_product_at_least_hbar_over_2", u.product >= 0.5 * spec.hbar, u.product,
                          0.5 * spec.hbar});
    out.checks.push_back(bounded("grid_delta_p_cross_check", std::abs(dp_grid - u.delta_p) / u.delta_p, 0.05));
    out.notes.push_back("delta_x = " + format_number(u.delta_x, 12) + ", delta_p = " + format_number(u.delta_p, 12) +
                        ", product = " + format_number(u.product, 12));
    return out;
}

// Largest off-spike weight and spike deviation from 1/2 when psi_n is expanded in its matched extension.
std::pair<double, double> two_spike_errors(const WellSpec& spec, EigenstateIndex n, int k_max)
{
    const auto analytic = eigenstate_spectrum(spec, n);
    const auto expanded = expand(
        spec, [&](double x) { return std::complex<double>(eigenfunction(spec, n, x), 0.0); }, matched_phase(n),
        std::max(k_max, analytic.k_max));
    double off = 0.0, spike = 0.0;
    for (const auto& e : expanded.entries) {
        const bool is_spike = std::any_of(analytic.entries.begin(), analytic.entries.end(),
                                          [&](const DiscreteEntry& a) { return a.k == e.k; });
        if (is_spike)
            spike = std::max(spike, std::abs(e.weight - 0.5));
        else
            off = std::max(off, e.weight);
    }
    return {off, spike};
}

CommandOutput momentum_discrete(const RunConfig& cfg, const Params& p)
{
    const auto spec = well_spec(cfg);
    const EigenstateIndex n(p.integer("n", 1));
    const int k_max = p.integer("k-max", 64);
    if (k_max < 0)
        throw InvalidArgs("--k-max must be >= 0");
    const auto theta = p.number("theta");
    const ExtensionPhase phase = theta ? ExtensionPhase(*theta) : matched_phase(n);
    const bool matched = phase.theta() == matched_phase(n).theta();

    const auto s = expand(
        spec, [&](double x) { return std::complex<double>(eigenfunction(spec, n, x), 0.0); }, phase, k_max);

    CommandOutput out;
    out.table.columns = {"k", "momentum", "weight"};
    double negative = 0.0;
    for (const auto& e : s.entries) {
        out.table.add_row({std::int64_t{e.k}, e.momentum, e.weight});
        negative = std::max(negative, -e.weight);
    }
    out.checks.push_back(bounded("weights_nonnegative", negative, 0.0));
    out.checks.push_back(bounded("total_weight_at_most_one", s.total_weight() - 1.0, 1e-12));
    out.checks.push_back(bounded("parseval_defect", s.parseval_defect(), matched ? 1e-8 : 1e-4));

    // p' -> -p' maps k to -k (theta = 0) or to -k-1 (theta = pi)
    const double t = phase.theta();
    if (t == 0.0 || t == pi) {
        const int shift = t == 0.0 ? 0 : -1;
        double asym = 0.0;
        for (const auto& e : s.entries) {
            const int mirror = -e.k + shift;
            if (std::abs(mirror) <= k_max)
                asym = std::max(asym, std::abs(e.weight - s.entries[mirror + k_max].weight));
        }
        out.checks.push_back(bounded("weights_symmetric_in_momentum", asym, 1e-12));
    }
    if (matched) {
        const auto [off, spike] = two_spike_errors(spec, n, k_max);
        out.checks.push_back(bounded("off_spike_weight", off, 1e-12));
        out.checks.push_back(bounded("spike_weight_one_half", spike, 1e-12));
    } else {
        out.notes.push_back("extension phase does not match the parity of psi_n; weight spreads over many k");
    }
    return out;
}

CommandOutput momentum_compare(const RunConfig& cfg, const Params& p)
{
    const auto spec = well_spec(cfg);
    const EigenstateIndex n(p.integer("n", 1));
    const auto fallback = MomentumGrid::for_state(spec, n);
    const MomentumGrid grid(p.number("p-max", fallback.p_max()), p.integer("count", fallback.count()));
    const double window = p.number("window", pi * spec.hbar / (2.0 * spec.a));
    if (!(window > 0.0))
        throw InvalidArgs("--window must be positive");

    const auto s = spectrum(spec, n, grid);
    CommandOutput out;
    out.table.columns = {"p", "continuous_density"};
    for (int i = 0; i < grid.count(); ++i)
        out.table.add_row({grid.sample(i), s.density[i]});

    auto spikes = eigenstate_spectrum(spec, n);
    Table spike_table;
    spike_table.columns = {"momentum", "weight"};
    std::sort(spikes.entries.begin(), spikes.entries.end(),
              [](const DiscreteEntry& a, const DiscreteEntry& b) { return a.momentum > b.momentum; });
    for (const auto& e : spikes.entries)
        spike_table.add_row({e.momentum, e.weight});
    out.sidecars.emplace_back("spikes", std::move(spike_table));

    const auto [off, spike] = two_spike_errors(spec, n, 64);
    const auto report = convergence_report(spec, n, window);
    out.checks.push_back(bounded("off_spike_weight", off, 1e-12));
    out.checks.push_back(bounded("spike_weight_one_half", spike, 1e-12));
    out.checks.push_back(total_probability_check(s.total_probability()));
    out.checks.push_back(bounded("window_mass_at_most_one", report.mass_in_window - 1.0, 1e-9));
    out.notes.push_back("continuous mass within the spike windows = " + format_number(report.mass_in_window, 12) +
                        ", defect = " + format_number(report.defect, 12));
    return out;
}

// ---------------------------------------------------------------- release

ReleaseBox box_for(const WellSpec& spec, EigenstateIndex n, double t, const Params& p)
{
    const double dx = p.number("dx", 0.0);
    if (dx < 0.0)
        throw InvalidArgs("--dx must be positive");
    return auto_box(spec, n, t, dx);
}

CommandOutput release_evolve(const RunConfig& cfg, const Params& p)
{
    const auto spec = well_spec(cfg);
    const EigenstateIndex n(p.integer("n", 1));
    const double t = p.number("t", 10.0);
    if (!(t >= 0.0))
        throw InvalidArgs("--t must be non-negative");
    const auto box = box_for(spec, n, t, p);
    const auto snap = evolve_free(spec, n, t, box);
    const auto start = evolve_free(spec, n, 0.0, box);
    const int stride = stride_for(p, snap.size(), 4096);

    CommandOutput out;
    out.table.columns = {"x", "psi_re", "psi_im", "density"};
    for (std::size_t i = 0; i < snap.size(); i += stride)
        out.table.add_row({snap.x(i), snap.psi[i].real(), snap.psi[i].imag(), snap.density[i]});

    const double k_now = kinetic_energy(snap, spec);
    const double k_start = kinetic_energy(start, spec);
    const double level = energy(spec, n);
    out.checks.push_back(bounded("total_probability", std::abs(snap.total_probability() - 1.0), 1e-6));
    out.checks.push_back(bounded("edge_density", snap.edge_density(), kEdgeDensityLimit));
    out.checks.push_back(bounded("kinetic_energy_conserved", std::abs(k_now - k_start) / k_start, 1e-6));
    // sampling the wall kinks costs O(dx) in <p^2>
    out.checks.push_back(bounded("kinetic_energy_matches_level", std::abs(k_now - level) / level,
                                 0.5 * n.value() * box.spacing() / spec.a));
    if (t == 0.0) {
        double dev = 0.0;
        for (std::size_t i = 0; i < snap.size(); ++i)
            dev = std::max(dev, std::abs(snap.psi[i] - eigenfunction(spec, n, snap.x(i))));
        out.checks.push_back(bounded("identity_at_t0", dev, 1e-10));
    } else {
        out.checks.push_back({"spread_grows", snap.spread() > start.spread(), snap.spread(), start.spread()});
    }
    out.notes.push_back("box length = " + format_number(box.length, 6) + ", samples = " + std::to_string(box.samples) +
                        ", spacing = " + format_number(box.spacing(), 6));
    return out;
}

CommandOutput release_farfield(const RunConfig& cfg, const Params& p)
{
    const auto spec = well_spec(cfg);
    const EigenstateIndex n(p.integer("n", 1));
    const double t = p.number("t", 200.0);
    if (!(t > 0.0))
        throw InvalidArgs("--t must be positive for the far-field map");
    const double window = p.number("p-window", 3.0 * pi * n.value() * spec.hbar / spec.a);
    if (!(window > 0.0))
        throw InvalidArgs("--p-window must be positive");

    const auto box = box_for(spec, n, t, p);
    const auto snap = evolve_free(spec, n, t, box);
    const auto far = farfield_map(snap, spec);

    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < far.p.size(); ++i) {
        if (std::abs(far.p[i]) <= window)
            inside.push_back(i);
    }
    std::vector<double> reference(inside.size());
    for_each_index(Exec::parallel, inside.size(), [&](std::size_t k) {
        const double pk = far.p[inside[k]];
        reference[k] = n.value() == 1 ? analytic_density_ground(spec, pk) : std::norm(amplitude_transform(spec, n, pk));
    });

    double distance = 0.0, asym = 0.0;
    const std::size_t count = far.p.size();
    for (std::size_t k = 0; k < inside.size(); ++k) {
        const std::size_t i = inside[k];
        distance = std::max(distance, std::abs(far.density[i] - reference[k]));
        if (i > 0)
            asym = std::max(asym, std::abs(far.density[i] - far.density[count - i]));
    }

    CommandOutput out;
    out.table.columns = {"p", "rescaled_density", "continuous_density"};
    const int stride = stride_for(p, inside.size(), 2000);
    for (std::size_t k = 0; k < inside.size(); k += stride)
        out.table.add_row({far.p[inside[k]], far.density[inside[k]], reference[k]});

    const double peak = *std::max_element(reference.begin(), reference.end());
    out.checks.push_back(bounded("farfield_sup_distance", distance, 0.01));
    out.checks.push_back(bounded("total_probability", std::abs(snap.total_probability() - 1.0), 1e-6));
    out.checks.push_back(bounded("edge_density", snap.edge_density(), kEdgeDensityLimit));
    out.checks.push_back(bounded("rescaled_density_symmetric", asym / peak, 1e-10));
    return out;
}

// ---------------------------------------------------------------- landau

CommandOutput landau_state(const RunConfig& cfg, const Params& p)
{
    using namespace landau;
    const auto spec = landau_spec(cfg, p);
    const auto gauge_name = p.word("gauge", "landau", {"landau", "symmetric", "vortex"});
    const int n = p.integer("n", 0);
    const int L = p.integer("L", 0);
    if (n < 0 || L < 0)
        throw InvalidArgs("--n and --L must be >= 0");

    CommandOutput out;
    GridField2D field;
    GaugeField gauge{Gauge::symmetric, spec.B};
    double level = spec.level_energy(n);
    if (gauge_name == "landau") {
        auto state = landau_gauge_state(spec, n, p.number("px", 0.0));
        if (!state.inside_sample)
            out.notes.push_back("warning: guiding center y_p = " + format_number(state.guiding_center, 6) +
                                " lies outside [0, Ly]");
        field = std::move(state.field);
        gauge.gauge = Gauge::landau;
    } else if (gauge_name == "symmetric") {
        field = symmetric_gauge_state(spec, n, L);
    } else {
        const cplx center{p.number("zr", 0.0), p.number("zi", 0.0)};
        field = vortex_state(spec, center);
        level = spec.level_energy(0);
        double modulus = 0.0;
        const auto& g = field.grid;
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i)
                modulus = std::max(modulus,
                                   std::abs(std::abs(vortex_phase_factor(complex_coordinate(spec, g.x(i), g.y(j)), center)) - 1.0));
        }
        out.checks.push_back(bounded("vortex_phase_unit_modulus", modulus, 1e-14));
    }

    const auto& g = field.grid;
    const int stride = stride_for(p, 1, 1);
    out.table.columns = {"x", "y", "psi_re", "psi_im", "density"};
    for (int j = 0; j < g.ny; j += stride) {
        for (int i = 0; i < g.nx; i += stride) {
            const auto v = field.at(i, j);
            out.table.add_row({g.x(i), g.y(j), v.real(), v.imag(), std::norm(v)});
        }
    }
    out.checks.push_back(bounded("normalization", std::abs(field.norm_squared() - 1.0), 1e-10));
    out.checks.push_back(bounded("hamiltonian_residual", hamiltonian_residual(spec, gauge, field, level), 1e-3));
    return out;
}

CommandOutput landau_degeneracy(const RunConfig& cfg, const Params& p)
{
    using namespace landau;
    const auto spec = landau_spec(cfg, p);
    const auto d = degeneracy(spec);
    const long centers = guiding_center_count(spec);
    const long rings = ring_count(spec);

    CommandOutput out;
    out.table.columns = {"flux", "flux_quantum", "flux_ratio", "count", "guiding_centers", "rings"};
    out.table.add_row({spec.flux(), spec.flux_quantum(), d.ratio, std::int64_t{d.count}, std::int64_t{centers},
                       std::int64_t{rings}});
    out.checks.push_back(bounded("guiding_centers_agree", std::abs(double(centers - d.count)), 1.0));
    out.checks.push_back(bounded("rings_agree", std::abs(double(rings - d.count)), 1.0));
    return out;
}

CommandOutput landau_hall(const RunConfig& cfg, const Params& p)
{
    using namespace landau;
    const auto spec = landau_spec(cfg, p);
    const double V = p.number("V", 1.0);
    const auto h = hall_current(spec, V);
    const double e2_over_h = spec.e() * spec.e() / (2.0 * pi * spec.hbar);
    const double expected_electron = -spec.e() * spec.c * V / spec.flux();

    // same drift momentum read off a sampled Hall-shifted ridge
    const auto ridge = landau_ridge(spec, 0, 0.0, hall_guiding_center(spec, 0.0, V));
    const double measured = kinematic_momentum_x(spec, GaugeField{Gauge::landau, spec.B}, ridge.field);
    const double drift_scale = spec.mass * spec.c * std::max(std::abs(V), 1.0) / (spec.B * spec.Ly);

    CommandOutput out;
    out.table.columns = {"voltage", "flux_ratio", "drift_momentum", "per_electron_current", "per_level_current",
                         "conductance", "e2_over_h"};
    out.table.add_row({V, h.flux_ratio, h.drift_momentum, h.per_electron, h.per_level, h.conductance, e2_over_h});
    out.checks.push_back(bounded("conductance_equals_e2_over_h", std::abs(h.conductance - e2_over_h) / e2_over_h, 1e-12));
    out.checks.push_back(bounded("per_electron_equals_minus_ecV_over_flux",
                                 std::abs(h.per_electron - expected_electron) /
                                     std::max(std::abs(expected_electron), 1e-300),
                                 1e-12));
    out.checks.push_back(bounded("sampled_drift_momentum", std::abs(measured - h.drift_momentum) / drift_scale, 1e-6));
    return out;
}

CommandOutput landau_checks(const RunConfig& cfg, const Params& p)
{
    using namespace landau;
    const auto spec = landau_spec(cfg, p);
    const double l = spec.magnetic_length();
    const GaugeField landau_gauge{Gauge::landau, spec.B};
    const GaugeField symmetric_gauge{Gauge::symmetric, spec.B};

    CommandOutput out;
    // curl of A by central differences (exact for linear potentials)
    double curl = 0.0;
    for (const auto& gf : {landau_gauge, symmetric_gauge}) {
        const double h = 0.5 * l;
        for (double x : {-1.0 * l, 0.0, 2.0 * l}) {
            for (double y : {-1.5 * l, 0.5 * l, 3.0 * l}) {
                const double c = (gf.ay(x + h, y) - gf.ay(x - h, y)) / (2 * h) - (gf.ax(x, y + h) - gf.ax(x, y - h)) / (2 * h);
                curl = std::max(curl, std::abs(c - spec.B) / spec.B);
            }
        }
    }
    out.checks.push_back(bounded("curl_A_equals_B", curl, 1e-12));

    const auto test_grid = Grid2D::centered(0.0, 0.0, 8.0 * l, l / 8.0);
    const auto packet = gaussian_packet(test_grid, 0.0, 0.0, l);
    const double c_landau = commutator_check(spec, landau_gauge, packet);
    const double c_symmetric = commutator_check(spec, symmetric_gauge, packet);
    const double c_zero = commutator_check(spec, GaugeField{Gauge::symmetric, 0.0}, packet);
    out.checks.push_back(bounded("commutator_landau_gauge", c_landau, 1e-3));
    out.checks.push_back(bounded("commutator_symmetric_gauge", c_symmetric, 1e-3));
    out.checks.push_back(bounded("commutator_zero_field", c_zero, 1e-10));
    const double ratio = std::max(c_landau, c_symmetric) / std::min(c_landau, c_symmetric);
    out.checks.push_back(bounded("commutator_gauge_ratio", ratio, 10.0));

    for (int n : {0, 1}) {
        for (int j : {0, 1, 2}) {
            const double px = 2.0 * pi * spec.hbar * j / spec.Lx;
            const auto s = landau_gauge_state(spec, n, px);
            out.checks.push_back(bounded("landau_residual_n" + std::to_string(n) + "_j" + std::to_string(j),
                                         hamiltonian_residual(spec, landau_gauge, s.field, spec.level_energy(n)), 1e-3));
        }
    }
    std::vector<double> radii;
    for (int L = 0; L <= 5; ++L) {
        const auto s = symmetric_gauge_state(spec, 0, L);
        out.checks.push_back(bounded("symmetric_residual_L" + std::to_string(L),
                                     hamiltonian_residual(spec, symmetric_gauge, s, spec.level_energy(0)), 1e-3));
        radii.push_back(measured_ring_radius(s));
    }
    const double area = 2.0 * pi * l * l;
    double ring_dev = 0.0;
    for (std::size_t L = 0; L + 1 < radii.size(); ++L) {
        const double a = pi * (radii[L + 1] * radii[L + 1] - radii[L] * radii[L]);
        ring_dev = std::max(ring_dev, std::abs(a - area) / area);
    }
    out.checks.push_back(bounded("equal_area_rings", ring_dev, 0.05));

    const auto d = degeneracy(spec);
    out.checks.push_back(bounded("degeneracy_guiding_centers", std::abs(double(guiding_center_count(spec) - d.count)), 1.0));
    out.checks.push_back(bounded("degeneracy_rings", std::abs(double(ring_count(spec) - d.count)), 1.0));

    out.table.columns = {"check", "residual", "tolerance", "status"};
    for (const auto& c : out.checks)
        out.table.add_row({c.name, c.residual, c.tolerance, std::string(c.pass ? "PASS" : "FAIL")});
    return out;
}

// ---------------------------------------------------------------- dispatch

using Handler = std::function<CommandOutput(const RunConfig&, const Params&)>;

struct CommandDef {
    std::string group;
    std::string name;
    std::string help;
    std::vector<std::pair<std::string, std::string>> params;
    Handler handler;
};

const std::vector<CommandDef>& commands()
{
    static const std::vector<CommandDef> table = {
        {"well", "energies", "energy levels E_n for n = 1..n-max", {{"n-max", "largest quantum number (10)"}},
         well_energies},
        {"well", "eigenfunction", "sampled eigenfunction psi_n(x)",
         {{"n", "quantum number (1)"}, {"samples", "odd sample count (401)"}, {"extent", "half-range of x (1.25 a)"}},
         well_eigenfunction},
        {"momentum", "continuous", "full-line momentum amplitude and density",
         {{"n", "quantum number (1)"}, {"p-max", "momentum cutoff (10 n pi hbar/a)"}, {"count", "odd sample count (4001)"}},
         momentum_continuous},
        {"momentum", "discrete", "plane-wave expansion on the interval",
         {{"n", "quantum number (1)"}, {"theta", "extension phase (matched to parity)"}, {"k-max", "truncation (64)"}},
         momentum_discrete},
        {"momentum", "compare", "continuous density next to the discrete spikes",
         {{"n", "quantum number (1)"},
          {"p-max", "momentum cutoff (10 n pi hbar/a)"},
          {"count", "odd sample count (4001)"},
          {"window", "half-width of the spike windows (pi hbar/2a)"}},
         momentum_compare},
        {"release", "evolve", "free evolution after the walls are removed",
         {{"n", "quantum number (1)"}, {"t", "time (10)"}, {"dx", "grid spacing (auto)"}, {"stride", "output stride (auto)"}},
         release_evolve},
        {"release", "farfield", "rescaled far-field density against P_n(p)",
         {{"n", "quantum number (1)"},
          {"t", "time (200)"},
          {"dx", "grid spacing (auto)"},
          {"p-window", "momentum range compared (3 n pi hbar/a)"},
          {"stride", "output stride (auto)"}},
         release_farfield},
        {"landau", "state", "sampled Landau-level wavefunction",
         {{"gauge", "landau | symmetric | vortex (landau)"},
          {"n", "level index (0)"},
          {"px", "canonical momentum, Landau gauge (0)"},
          {"L", "angular index, symmetric gauge (0)"},
          {"zr", "vortex center, real part (0)"},
          {"zi", "vortex center, imaginary part (0)"},
          {"B", "magnetic field (1)"},
          {"Lx", "sample width (10)"},
          {"Ly", "sample height (10)"},
          {"stride", "output stride (1)"}},
         landau_state},
        {"landau", "degeneracy", "flux ratio and the two state counts",
         {{"B", "magnetic field (1)"}, {"Lx", "sample width (10)"}, {"Ly", "sample height (10)"}}, landau_degeneracy},
        {"landau", "hall", "Hall current per electron and per filled level",
         {{"B", "magnetic field (1)"}, {"Lx", "sample width (10)"}, {"Ly", "sample height (10)"}, {"V", "Hall voltage (1)"}},
         landau_hall},
        {"landau", "checks", "commutator, eigen-residual, ring and degeneracy checks",
         {{"B", "magnetic field (1)"}, {"Lx", "sample width (10)"}, {"Ly", "sample height (10)"}}, landau_checks},
    };
    return table;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Square-well momentum spectra, free release and Landau levels", "boxmode"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir, units_preset;
    std::map<std::string, std::string> unit_flags;
    int digits = 0;
    app.add_option("--config", config_path, "config file (sections [run] [units] [output] [params])");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--digits", digits, "digits after the decimal point in CSV output")->check(CLI::Range(1, 17));
    app.add_option("--units", units_preset, "natural | custom")->check(CLI::IsMember({"natural", "custom"}));
    for (const char* name : {"hbar", "mass", "a", "e", "c"})
        app.add_option(std::string("--") + name, unit_flags[name], std::string("value of ") + name + " (custom units)");

    std::map<std::string, CLI::App*> groups;
    std::vector<std::pair<const CommandDef*, CLI::App*>> leaves;
    std::map<const CommandDef*, std::map<std::string, std::string>> values;
    for (const auto& def : commands()) {
        auto*& group = groups[def.group];
        if (!group) {
            group = app.add_subcommand(def.group, def.group + " commands");
            group->require_subcommand(1);
            group->fallthrough();
        }
        auto* leaf = group->add_subcommand(def.name, def.help);
        leaf->fallthrough();
        auto& slot = values[&def];
        for (const auto& [flag, help] : def.params)
            leaf->add_option("--" + flag, slot[flag], help);
        leaves.emplace_back(&def, leaf);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const CommandDef* selected = nullptr;
    for (const auto& [def, leaf] : leaves) {
        if (leaf->parsed())
            selected = def;
    }
    if (!selected) {
        err << "no command selected\n";
        return 2;
    }

    RunConfig cfg;
    CommandOutput result;
    try {
        if (!config_path.empty())
            cfg = load_config(config_path);
        cfg.group = selected->group;
        cfg.command = selected->name;
        if (!out_dir.empty())
            cfg.out_dir = out_dir;
        if (digits != 0)
            cfg.digits = digits;
        if (!units_preset.empty())
            cfg.units.preset = units_preset;
        auto set_unit = [&](const char* name, double& target) {
            const auto& v = unit_flags[name];
            if (v.empty())
                return;
            std::size_t used = 0;
            target = std::stod(v, &used);
            if (used != v.size())
                throw InvalidArgs(std::string("--") + name + " expects a number");
        };
        set_unit("hbar", cfg.units.hbar);
        set_unit("mass", cfg.units.mass);
        set_unit("a", cfg.units.a);
        set_unit("e", cfg.units.e);
        set_unit("c", cfg.units.c);

        for (const auto& [key, value] : cfg.params) {
            const bool known = std::any_of(selected->params.begin(), selected->params.end(),
                                           [&](const auto& kv) { return kv.first == key; });
            if (!known)
                throw InvalidArgs("config parameter '" + key + "' is not accepted by " + selected->group + " " +
                                  selected->name);
        }
        for (const auto& [key, value] : values[selected]) {
            if (!value.empty())
                cfg.params[key] = value;
        }
        cfg.validate();
        result = selected->handler(cfg, Params(cfg.params));
    } catch (const ConfigError& e) {
        err << "boxmode: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "boxmode: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "boxmode: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "boxmode: " << e.what() << "\n";
        return 1;
    }

    try {
        const std::filesystem::path dir(cfg.out_dir);
        std::filesystem::create_directories(dir);
        const std::string stem = cfg.group + "_" + cfg.command;
        write_csv(result.table, dir / (stem + ".csv"), cfg.digits);
        for (const auto& [suffix, table] : result.sidecars)
            write_csv(table, dir / (stem + "_" + suffix + ".csv"), cfg.digits);
        const auto report = format_report(cfg, result);
        std::ofstream file(dir / (stem + "_report.txt"), std::ios::binary | std::ios::trunc);
        if (!file)
            throw std::runtime_error("cannot write report in " + dir.string());
        file << report;
    } catch (const std::exception& e) {
        err << "boxmode: " << e.what() << "\n";
        return 1;
    }

    for (const auto& note : result.notes) {
        if (note.rfind("warning:", 0) == 0)
            err << note << "\n";
    }
    for (const auto& c : result.checks) {
        if (!c.pass)
            err << "CHECK " << c.name << " failed (residual=" << format_number(c.residual, 6) << ")\n";
    }
    out << "wrote " << cfg.group << "_" << cfg.command << ".csv to " << cfg.out_dir << "\n";
    return result.all_pass() ? 0 : 1;
}

} // namespace boxmode::cli
