#include "boxmode/release.hpp"

#include "boxmode/momentum_continuous.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

namespace boxmode {

using std::numbers::pi;

namespace {

// FFTW's planner is not re-entrant; plans are created and run from one thread.
class FftPlan {
public:
    FftPlan(std::vector<std::complex<double>>& data, int sign)
    {
        auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
        plan_ = fftw_plan_dft_1d(static_cast<int>(data.size()), ptr, ptr, sign, FFTW_ESTIMATE);
        if (!plan_)
            throw std::runtime_error("fftw_plan_dft_1d failed");
    }
    ~FftPlan() { fftw_destroy_plan(plan_); }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    void run() { fftw_execute(plan_); }

private:
    fftw_plan plan_;
};

// Momentum of FFT bin j on a box of length L.
double bin_momentum(std::size_t j, std::size_t n, double length, double hbar)
{
    const auto signed_j = j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
    return 2.0 * pi * hbar * signed_j / length;
}

} // namespace

double momentum_quantile(const WellSpec& spec, EigenstateIndex n, double fraction)
{
    const auto grid = MomentumGrid::for_state(spec, n);
    const auto s = spectrum(spec, n, grid);
    const int mid = grid.count() / 2;
    // mass in [-p_i, p_i] accumulated outward from p = 0
    double mass = 0.0;
    for (int i = mid; i + 1 < grid.count(); ++i) {
        mass += grid.step() * (s.density[i] + s.density[i + 1]);
        if (mass >= fraction)
            return grid.sample(i + 1);
    }
    return grid.p_max();
}

ReleaseBox auto_box(const WellSpec& spec, EigenstateIndex n, double t, double spacing)
{
    spec.validate();
    if (!(t >= 0.0))
        throw std::invalid_argument("release time must be non-negative");

    if (spacing <= 0.0) {
        const auto per_half_width = std::bit_ceil(static_cast<unsigned>(32 * n.value()));
        spacing = spec.a / per_half_width;
    }

    // Momentum that carries 99.99% of the probability, six times over.
    const double p_eff = momentum_quantile(spec, n, 0.9999);
    double length = std::max(4.0 * spec.a, 2.0 * spec.a + 6.0 * p_eff * t / spec.m);

    // The p^-4 tail of P_n must also stay below the edge limit:
    // (m / t) * n^2 pi hbar^3 / (2 a^3 p^4) <= kEdgeDensityLimit / 4.
    if (t > 0.0) {
        const double k = n.value();
        const double tail = k * k * pi * std::pow(spec.hbar, 3) / (2.0 * std::pow(spec.a, 3));
        const double p_edge = std::pow(spec.m * tail / (t * 0.25 * kEdgeDensityLimit), 0.25);
        // Both reaches must end before the edge bands (outer 1/64 on each side).
        const double inner = 1.0 - 1.0 / 32.0;
        length = std::max(length, 2.0 * (spec.a + p_edge * t / spec.m) / inner);
        // The fastest grid momentum, pi hbar / spacing, must not reach the bands either.
        length = std::max(length, 2.0 * (spec.a + pi * spec.hbar * t / (spec.m * spacing)) / inner);
    }

    const auto samples = std::bit_ceil(static_cast<std::size_t>(std::ceil(length / spacing)));
    return {static_cast<double>(samples) * spacing, samples};
}

double EvolutionSnapshot::total_probability() const
{
    double sum = 0.0;
    for (double d : density)
        sum += d;
    return sum * dx;
}

double EvolutionSnapshot::spread() const
{
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < density.size(); ++i) {
        const double xi = x(i);
        m0 += density[i];
        m1 += xi * density[i];
        m2 += xi * xi * density[i];
    }
    const double mean = m1 / m0;
    return std::sqrt(m2 / m0 - mean * mean);
}

double EvolutionSnapshot::edge_density() const
{
    const std::size_t band = std::max<std::size_t>(1, density.size() / 64);
    double worst = 0.0;
    for (std::size_t i = 0; i < band; ++i) {
        worst = std::max(worst, density[i]);
        worst = std::max(worst, density[density.size() - 1 - i]);
    }
    return worst;
}

EvolutionSnapshot evolve_free(const WellSpec& spec, EigenstateIndex n, double t, const ReleaseBox& box,
                              Exec exec)
{
    spec.validate();
    if (!std::has_single_bit(box.samples) || box.samples < 2)
        throw std::invalid_argument("release box sample count must be a power of two");
    if (!(box.length > 2.0 * spec.a))
        throw std::invalid_argument("release box must be wider than the well");
    if (!(t >= 0.0))
        throw std::invalid_argument("release time must be non-negative");

    const std::size_t count = box.samples;
    EvolutionSnapshot snap{t, -0.5 * box.length, box.spacing(), std::vector<std::complex<double>>(count),
                           std::vector<double>(count)};

    for_each_index(exec, count, [&](std::size_t i) { snap.psi[i] = eigenfunction(spec, n, snap.x(i)); });

    if (t > 0.0) {
        FftPlan forward(snap.psi, FFTW_FORWARD);
        FftPlan backward(snap.psi, FFTW_BACKWARD);
        // planning with FFTW_ESTIMATE leaves the data untouched
        forward.run();
        const double scale = 1.0 / static_cast<double>(count);
        for_each_index(exec, count, [&](std::size_t j) {
            const double p = bin_momentum(j, count, box.length, spec.hbar);
            const double phase = -p * p * t / (2.0 * spec.m * spec.hbar);
            snap.psi[j] *= scale * std::complex<double>(std::cos(phase), std::sin(phase));
        });
        backward.run();
    }

    for_each_index(exec, count, [&](std::size_t i) { snap.density[i] = std::norm(snap.psi[i]); });

    const double edge = snap.edge_density();
    if (edge > kEdgeDensityLimit)
        throw AliasingError("edge density " + std::to_string(edge * 1e10) + "e-10" + " exceeds limit; enlarge the release box");
    return snap;
}

double kinetic_energy(const EvolutionSnapshot& snap, const WellSpec& spec)
{
    auto work = snap.psi;
    FftPlan forward(work, FFTW_FORWARD);
    forward.run();
    const double length = snap.dx * static_cast<double>(work.size());
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < work.size(); ++j) {
        const double p = bin_momentum(j, work.size(), length, spec.hbar);
        const double w = std::norm(work[j]);
        num += p * p * w;
        den += w;
    }
    return num / den / (2.0 * spec.m);
}

FarField farfield_map(const EvolutionSnapshot& snap, const WellSpec& spec)
{
    if (!(snap.t > 0.0))
        throw std::domain_error("far-field map needs t > 0");
    FarField out{std::vector<double>(snap.size()), std::vector<double>(snap.size())};
    const double scale = snap.t / spec.m;
    for (std::size_t i = 0; i < snap.size(); ++i) {
        out.p[i] = snap.x(i) / scale;
        out.density[i] = scale * snap.density[i];
    }
    return out;
}

double farfield_distance(const FarField& far, const std::function<double(double)>& reference, double p_window)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < far.p.size(); ++i) {
        if (std::abs(far.p[i]) <= p_window)
            worst = std::max(worst, std::abs(far.density[i] - reference(far.p[i])));
    }
    return worst;
}

} // namespace boxmode
