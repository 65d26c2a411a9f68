#pragma once

#include "boxmode/exec.hpp"
#include "boxmode/quadrature.hpp"
#include "boxmode/well.hpp"

#include <complex>
#include <vector>

namespace boxmode {

/// Uniform momentum samples on [-p_max, p_max]. The count is odd so that
/// p = 0 is a sample, and sample(i) == -sample(count - 1 - i) exactly.
class MomentumGrid {
public:
    MomentumGrid(double p_max, int count);

    /// Default grid for state n: p_max = 20 * n*pi*hbar/(2a), 4001 samples.
    static MomentumGrid for_state(const WellSpec& spec, EigenstateIndex n);

    double p_max() const { return p_max_; }
    int count() const { return count_; }
    double step() const { return 2.0 * p_max_ / (count_ - 1); }
    double sample(int i) const;
    std::vector<double> samples() const;

private:
    double p_max_;
    int count_;
};

struct ContinuousMomentumSpectrum {
    MomentumGrid grid;
    std::vector<std::complex<double>> amplitude;
    std::vector<double> density;

    /// Trapezoid integral of the density over the grid.
    double total_probability() const;
};

/// (2 pi hbar)^(-1/2) * integral over (-a, a) of psi_n(x) exp(-i p x / hbar) dx.
std::complex<double> amplitude_transform(const WellSpec& spec, EigenstateIndex n, double p,
                                         QuadratureSettings quad = {});

/// Closed-form ground-state momentum density, finite at p = +-pi hbar/(2a).
double analytic_density_ground(const WellSpec& spec, double p);

ContinuousMomentumSpectrum spectrum(const WellSpec& spec, EigenstateIndex n, const MomentumGrid& grid,
                                    Exec exec = Exec::parallel, QuadratureSettings quad = {});

struct Uncertainty {
    double delta_x;
    double delta_p;
    double product;
};

/// Delta x from position-space quadrature, Delta p = sqrt(2 m E_n).
Uncertainty uncertainty_product(const WellSpec& spec, EigenstateIndex n, QuadratureSettings quad = {});

/// sqrt(<p^2> - <p>^2) by trapezoid over a sampled spectrum. Converges
/// slowly (p^-2 tails of p^2 P(p)); only a cross-check.
double momentum_spread_on_grid(const ContinuousMomentumSpectrum& s);

} // namespace boxmode
