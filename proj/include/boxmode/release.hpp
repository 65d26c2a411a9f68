#pragma once

#include "boxmode/exec.hpp"
#include "boxmode/well.hpp"

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace boxmode {

/// Raised when the evolved density reaches the box edges, i.e. the periodic
/// box is too small and the wavefunction would wrap around.
class AliasingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest density tolerated in the edge bands of the box.
inline constexpr double kEdgeDensityLimit = 1e-10;

/// Periodic box [-L/2, L/2) with a power-of-two sample count.
struct ReleaseBox {
    double length;
    std::size_t samples;

    double spacing() const { return length / static_cast<double>(samples); }
};

/// Box that keeps the state away from the edges until time t. The spacing
/// is a / 2^s (so the walls fall on samples); by default 32 n samples per
/// half-width, rounded up to a power of two.
ReleaseBox auto_box(const WellSpec& spec, EigenstateIndex n, double t, double spacing = 0.0);

struct EvolutionSnapshot {
    double t;
    double x_min;
    double dx;
    std::vector<std::complex<double>> psi;
    std::vector<double> density;

    double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx; }
    std::size_t size() const { return psi.size(); }

    /// sum density * dx.
    double total_probability() const;
    double spread() const;
    /// Largest density within the outer 1/64 of the box on either side.
    double edge_density() const;
};

/// psi_n released at t = 0 and propagated freely: FFT, multiply by
/// exp(-i p^2 t / (2 m hbar)), inverse FFT. Throws AliasingError when the
/// edge density exceeds kEdgeDensityLimit.
EvolutionSnapshot evolve_free(const WellSpec& spec, EigenstateIndex n, double t, const ReleaseBox& box,
                              Exec exec = Exec::parallel);

/// <p^2>/(2m) of a snapshot, evaluated spectrally on the box momenta.
double kinetic_energy(const EvolutionSnapshot& snap, const WellSpec& spec);

struct FarField {
    std::vector<double> p;
    std::vector<double> density;
};

/// (p = m x / t, (t / m) |psi(x, t)|^2). Rejects t = 0 with std::domain_error.
FarField farfield_map(const EvolutionSnapshot& snap, const WellSpec& spec);

/// max |far.density - reference(p)| over |p| <= p_window.
double farfield_distance(const FarField& far, const std::function<double(double)>& reference, double p_window);

/// Smallest P with continuous mass in [-P, P] >= fraction (default momentum grid).
double momentum_quantile(const WellSpec& spec, EigenstateIndex n, double fraction);

} // namespace boxmode
