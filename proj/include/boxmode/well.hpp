#pragma once

#include "boxmode/quadrature.hpp"

namespace boxmode {

/// Infinite square well on (-a, a). Natural units a = m = hbar = 1 by default.
struct WellSpec {
    double a = 1.0;
    double m = 1.0;
    double hbar = 1.0;

    /// Throws std::invalid_argument unless a, m, hbar are all positive.
    void validate() const;
};

/// Quantum number n >= 1. Odd n are cosine (even parity) states, even n are
/// sine (odd parity) states.
class EigenstateIndex {
public:
    explicit EigenstateIndex(int n);

    int value() const { return n_; }
    bool even_parity() const { return n_ % 2 == 1; }

private:
    int n_;
};

double energy(const WellSpec& spec, EigenstateIndex n);

/// Wavenumber n*pi/(2a) of the standing wave inside the well.
double wavenumber(const WellSpec& spec, EigenstateIndex n);

/// Real eigenfunction; exactly zero for |x| >= a.
double eigenfunction(const WellSpec& spec, EigenstateIndex n, double x);

/// |integral of psi_n^2 over (-a, a) - 1|.
double norm_check(const WellSpec& spec, EigenstateIndex n, QuadratureSettings quad = {});

/// <psi_n|psi_m> by quadrature.
double overlap(const WellSpec& spec, EigenstateIndex n, EigenstateIndex m, QuadratureSettings quad = {});

} // namespace boxmode
