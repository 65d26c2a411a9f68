#include "boxmode/momentum_continuous.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boxmode {

using std::numbers::pi;

MomentumGrid::MomentumGrid(double p_max, int count) : p_max_(p_max), count_(count)
{
    if (!(p_max > 0.0))
        throw std::invalid_argument("momentum grid needs p_max > 0");
    if (count < 3 || count % 2 == 0)
        throw std::invalid_argument("momentum grid needs an odd sample count >= 3");
}

MomentumGrid MomentumGrid::for_state(const WellSpec& spec, EigenstateIndex n)
{
    return MomentumGrid(20.0 * n.value() * pi * spec.hbar / (2.0 * spec.a), 4001);
}

double MomentumGrid::sample(int i) const
{
    const int offset = 2 * i - (count_ - 1);
    return p_max_ * offset / (count_ - 1);
}

std::vector<double> MomentumGrid::samples() const
{
    std::vector<double> out(count_);
    for (int i = 0; i < count_; ++i)
        out[i] = sample(i);
    return out;
}

double ContinuousMomentumSpectrum::total_probability() const
{
    return trapezoid(density, grid.step());
}

namespace {

// Quadrature nodes and psi_n values for the Fourier integral at momentum p.
struct WellSamples {
    CompositeRule rule;
    std::vector<double> psi;
};

WellSamples well_samples(const WellSpec& spec, EigenstateIndex n, double p, QuadratureSettings quad)
{
    const double kappa = std::abs(p) / spec.hbar + wavenumber(spec, n);
    const int panels = panels_for_wavenumber(kappa, 2.0 * spec.a, quad.nodes);
    WellSamples out{composite_rule(-spec.a, spec.a, quad.nodes, panels), {}};
    out.psi.reserve(out.rule.x.size());
    for (double x : out.rule.x)
        out.psi.push_back(eigenfunction(spec, n, x));
    return out;
}

std::complex<double> transform(const WellSpec& spec, const WellSamples& s, double p)
{
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < s.rule.x.size(); ++i) {
        const double arg = p * s.rule.x[i] / spec.hbar;
        const double f = s.rule.w[i] * s.psi[i];
        re += f * std::cos(arg);
        im -= f * std::sin(arg);
    }
    const double norm = 1.0 / std::sqrt(2.0 * pi * spec.hbar);
    return {norm * re, norm * im};
}

} // namespace

std::complex<double> amplitude_transform(const WellSpec& spec, EigenstateIndex n, double p,
                                         QuadratureSettings quad)
{
    return transform(spec, well_samples(spec, n, p, quad), p);
}

double analytic_density_ground(const WellSpec& spec, double p)
{
    // With s = |p| a / hbar and d = s - pi/2 the density is
    //   (pi a / 2 hbar) * sinc(d)^2 / (pi + d)^2,
    // which has no pole; only sinc needs care near d = 0.
    const double s = std::abs(p) * spec.a / spec.hbar;
    const double d = s - 0.5 * pi;
    const double prefactor = pi * spec.a / (2.0 * spec.hbar);
    const double switch_width = 1e-4;

    if (std::abs(d) < switch_width) {
        const double d2 = d * d;
        const double sinc = 1.0 - d2 / 6.0 + d2 * d2 / 120.0;
        return prefactor * sinc * sinc / ((pi + d) * (pi + d));
    }

    const double c = std::cos(s);
    const double p0 = 0.5 * pi;
    const double diff = s * s - p0 * p0;
    return prefactor * c * c / (diff * diff);
}

ContinuousMomentumSpectrum spectrum(const WellSpec& spec, EigenstateIndex n, const MomentumGrid& grid,
                                    Exec exec, QuadratureSettings quad)
{
    ContinuousMomentumSpectrum out{grid, std::vector<std::complex<double>>(grid.count()),
                                   std::vector<double>(grid.count())};
    for_each_index(exec, static_cast<std::size_t>(grid.count()), [&](std::size_t i) {
        const double p = grid.sample(static_cast<int>(i));
        const auto amp = amplitude_transform(spec, n, p, quad);
        out.amplitude[i] = amp;
        out.density[i] = amp.real() * amp.real() + amp.imag() * amp.imag();
    });
    return out;
}

Uncertainty uncertainty_product(const WellSpec& spec, EigenstateIndex n, QuadratureSettings quad)
{
    const int panels = panels_for_wavenumber(2.0 * wavenumber(spec, n), 2.0 * spec.a, quad.nodes);
    auto moment = [&](int power) {
        return integrate(
            [&](double x) {
                const double psi = eigenfunction(spec, n, x);
                return std::pow(x, power) * psi * psi;
            },
            -spec.a, spec.a, quad.nodes, panels);
    };
    const double mean = moment(1);
    const double dx = std::sqrt(moment(2) - mean * mean);
    const double dp = std::sqrt(2.0 * spec.m * energy(spec, n));
    return {dx, dp, dx * dp};
}

double momentum_spread_on_grid(const ContinuousMomentumSpectrum& s)
{
    const auto p = s.grid.samples();
    std::vector<double> first(p.size());
    std::vector<double> second(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        first[i] = p[i] * s.density[i];
        second[i] = p[i] * p[i] * s.density[i];
    }
    const double norm = s.total_probability();
    const double mean = trapezoid(first, s.grid.step()) / norm;
    return std::sqrt(trapezoid(second, s.grid.step()) / norm - mean * mean);
}

} // namespace boxmode
