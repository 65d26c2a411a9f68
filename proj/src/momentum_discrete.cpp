#include "boxmode/momentum_discrete.hpp"

#include "boxmode/momentum_continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace boxmode {

using std::numbers::pi;

ExtensionPhase::ExtensionPhase(double theta)
{
    if (!std::isfinite(theta))
        throw std::invalid_argument("extension phase must be finite");
    theta_ = std::fmod(theta, 2.0 * pi);
    if (theta_ < 0.0)
        theta_ += 2.0 * pi;
}

double allowed_momentum(const WellSpec& spec, ExtensionPhase phase, int k)
{
    return (k + phase.theta() / (2.0 * pi)) * pi * spec.hbar / spec.a;
}

std::vector<double> allowed_momenta(const WellSpec& spec, ExtensionPhase phase, int k_min, int k_max)
{
    std::vector<double> out;
    for (int k = k_min; k <= k_max; ++k)
        out.push_back(allowed_momentum(spec, phase, k));
    return out;
}

double DiscreteMomentumSpectrum::total_weight() const
{
    double sum = 0.0;
    for (const auto& e : entries)
        sum += e.weight;
    return sum;
}

DiscreteMomentumSpectrum expand(const WellSpec& spec, const StateFunction& state, ExtensionPhase phase,
                                int k_max, Exec exec, QuadratureSettings quad)
{
    if (k_max < 0)
        throw std::invalid_argument("k_max must be non-negative");

    const double kappa = std::abs(allowed_momentum(spec, phase, k_max + 1)) / spec.hbar;
    const int panels = panels_for_wavenumber(kappa, 2.0 * spec.a, quad.nodes);
    const auto rule = composite_rule(-spec.a, spec.a, quad.nodes, panels);

    std::vector<std::complex<double>> values(rule.x.size());
    double norm = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        values[i] = state(rule.x[i]);
        norm += rule.w[i] * std::norm(values[i]);
    }
    if (std::abs(norm - 1.0) > 1e-6)
        throw std::invalid_argument("state is not normalized on (-a, a): norm = " + std::to_string(norm));

    const double basis_norm = 1.0 / std::sqrt(2.0 * spec.a);
    DiscreteMomentumSpectrum out{phase, k_max, std::vector<DiscreteEntry>(2 * k_max + 1)};
    for_each_index(exec, out.entries.size(), [&](std::size_t idx) {
        const int k = static_cast<int>(idx) - k_max;
        const double p = allowed_momentum(spec, phase, k);
        std::complex<double> c{0.0, 0.0};
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double arg = p * rule.x[i] / spec.hbar;
            c += rule.w[i] * std::complex<double>(std::cos(arg), -std::sin(arg)) * values[i];
        }
        c *= basis_norm;
        out.entries[idx] = {k, p, std::norm(c), c};
    });
    return out;
}

ExtensionPhase matched_phase(EigenstateIndex n)
{
    return ExtensionPhase(n.even_parity() ? pi : 0.0);
}

DiscreteMomentumSpectrum eigenstate_spectrum(const WellSpec& spec, EigenstateIndex n)
{
    const auto phase = matched_phase(n);
    const int m = n.value();
    // p'_k = +-n pi hbar / (2a) solved for k in the matched extension.
    const int k_plus = n.even_parity() ? (m - 1) / 2 : m / 2;
    const int k_minus = n.even_parity() ? -(m + 1) / 2 : -m / 2;
    const double c = std::sqrt(0.5);

    DiscreteMomentumSpectrum out{phase, std::max(k_plus, -k_minus), {}};
    // cos = (e^{+} + e^{-})/2, sin = (e^{+} - e^{-})/(2i); with the (2a)^{-1/2}
    // basis normalization each coefficient has modulus 1/sqrt(2).
    if (n.even_parity()) {
        out.entries.push_back({k_minus, allowed_momentum(spec, phase, k_minus), 0.5, {c, 0.0}});
        out.entries.push_back({k_plus, allowed_momentum(spec, phase, k_plus), 0.5, {c, 0.0}});
    } else {
        out.entries.push_back({k_minus, allowed_momentum(spec, phase, k_minus), 0.5, {0.0, c}});
        out.entries.push_back({k_plus, allowed_momentum(spec, phase, k_plus), 0.5, {0.0, -c}});
    }
    return out;
}

ConvergenceReport convergence_report(const WellSpec& spec, EigenstateIndex n, double window_half_width,
                                     QuadratureSettings quad)
{
    if (!(window_half_width > 0.0))
        throw std::invalid_argument("window half-width must be positive");

    const double center = n.value() * pi * spec.hbar / (2.0 * spec.a);
    const double w = window_half_width;

    // Union of [c - w, c + w] and its mirror image.
    std::vector<std::pair<double, double>> intervals;
    if (center - w <= 0.0)
        intervals.emplace_back(-(center + w), center + w);
    else {
        intervals.emplace_back(-(center + w), -(center - w));
        intervals.emplace_back(center - w, center + w);
    }

    // P_n oscillates with period pi hbar / a in p; quarter-period panels.
    const double panel_width = 0.25 * pi * spec.hbar / spec.a;
    double mass = 0.0;
    for (const auto& [lo, hi] : intervals) {
        const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel_width)));
        mass += integrate([&](double p) { return std::norm(amplitude_transform(spec, n, p, quad)); },
                          lo, hi, 32, panels);
    }
    return {mass, 1.0, 1.0 - mass};
}

} // namespace boxmode
