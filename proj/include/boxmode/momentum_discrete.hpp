#pragma once

#include "boxmode/exec.hpp"
#include "boxmode/quadrature.hpp"
#include "boxmode/well.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace boxmode {

/// Self-adjoint extension of -i hbar d/dx on (-a, a): psi(a) = exp(i theta) psi(-a).
/// theta = pi gives the odd multiples of pi hbar/(2a), theta = 0 the even ones.
class ExtensionPhase {
public:
    /// theta is reduced into [0, 2 pi).
    explicit ExtensionPhase(double theta);

    double theta() const { return theta_; }

private:
    double theta_;
};

/// p'_k = (k + theta/(2 pi)) * pi hbar / a.
double allowed_momentum(const WellSpec& spec, ExtensionPhase phase, int k);
std::vector<double> allowed_momenta(const WellSpec& spec, ExtensionPhase phase, int k_min, int k_max);

struct DiscreteEntry {
    int k;
    double momentum;
    double weight;
    std::complex<double> coefficient;
};

struct DiscreteMomentumSpectrum {
    ExtensionPhase phase;
    int k_max;
    std::vector<DiscreteEntry> entries; // ordered by k

    double total_weight() const;
    /// 1 - sum of weights: the completeness lost to truncation at k_max.
    double parseval_defect() const { return 1.0 - total_weight(); }
};

using StateFunction = std::function<std::complex<double>(double)>;

/// Coefficients c_k = <(2a)^(-1/2) exp(i p'_k x / hbar) | state> for |k| <= k_max.
/// Throws std::invalid_argument if the state's norm on (-a, a) differs from 1 by more than 1e-6.
DiscreteMomentumSpectrum expand(const WellSpec& spec, const StateFunction& state, ExtensionPhase phase,
                                int k_max = 64, Exec exec = Exec::parallel, QuadratureSettings quad = {});

/// The extension that matches the parity of psi_n: pi for odd n, 0 for even n.
ExtensionPhase matched_phase(EigenstateIndex n);

/// Analytic two-spike spectrum of psi_n in its matched extension:
/// momenta +-n pi hbar/(2a), weight 1/2 each.
DiscreteMomentumSpectrum eigenstate_spectrum(const WellSpec& spec, EigenstateIndex n);

struct ConvergenceReport {
    double mass_in_window;
    double spike_weight;
    double defect;
};

/// Continuous probability mass of P_n within window_half_width of either
/// spike +-n pi hbar/(2a), compared with the unit discrete weight.
ConvergenceReport convergence_report(const WellSpec& spec, EigenstateIndex n, double window_half_width,
                                     QuadratureSettings quad = {});

} // namespace boxmode
