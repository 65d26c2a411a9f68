#pragma once

#include "boxmode/exec.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace boxmode::landau {

using cplx = std::complex<double>;

/// Charged particle in a uniform field B along z, Gaussian units.
/// Natural preset: hbar = m = e = c = 1 with an electron charge q = -1.
struct LandauSpec {
    double B = 1.0;
    double charge = -1.0;
    double mass = 1.0;
    double c = 1.0;
    double hbar = 1.0;
    double Lx = 10.0;
    double Ly = 10.0;

    void validate() const;

    double e() const;                // |q|
    double omega_c() const;          // e B / (m c)
    double magnetic_length() const;  // sqrt(hbar / (m omega_c)) = sqrt(hbar c / (e B))
    double flux() const;             // B Lx Ly
    double flux_quantum() const;     // h c / e
    double level_energy(int n) const; // (n + 1/2) hbar omega_c
    /// Orientation of the complex coordinate: +1 for positive charge, -1 for negative.
    double chirality() const;
};

enum class Gauge { landau, symmetric };

/// Vector potential of a uniform field B. Landau: A = (-B y, 0).
/// Symmetric: A = (-B y / 2, B x / 2). Both are divergence free.
struct GaugeField {
    Gauge gauge;
    double B;

    double ax(double x, double y) const;
    double ay(double x, double y) const;
    double divergence() const { return 0.0; }
};

class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rectangular node grid, row-major with x fastest.
struct Grid2D {
    double x_min;
    double y_min;
    double dx;
    double dy;
    int nx;
    int ny;

    /// Nodes covering [x_lo, x_hi] x [y_lo, y_hi] with spacing <= max_spacing.
    static Grid2D covering(double x_lo, double x_hi, double y_lo, double y_hi, double max_spacing);
    /// Square grid centered on (xc, yc) with spacing exactly `spacing` and an odd node count.
    static Grid2D centered(double xc, double yc, double half_width, double spacing);

    double x(int i) const { return x_min + i * dx; }
    double y(int j) const { return y_min + j * dy; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
};

struct GridField2D {
    Grid2D grid;
    std::vector<cplx> values;

    const cplx& at(int i, int j) const { return values[grid.index(i, j)]; }
    /// sum |psi|^2 dx dy
    double norm_squared() const;
    void normalize();
};

/// <a|b> = sum conj(a) b dx dy; both fields must share a grid.
cplx overlap(const GridField2D& a, const GridField2D& b);

/// Physicists' Hermite polynomial H_n by the three-term recurrence.
double hermite(int n, double x);

/// Polynomial sum c_ij z^i conj(z)^j standing in front of exp(-z conj(z)).
/// Lets the ladder operators of the symmetric gauge act in closed form.
class ZPolynomial {
public:
    static ZPolynomial one();

    /// (conj(z) - d/dz) acting on P exp(-z conj(z)): raises the level index n.
    ZPolynomial raise_level() const;
    /// (z - d/dconj(z)) acting on P exp(-z conj(z)): raises the angular index L.
    ZPolynomial raise_angular() const;

    cplx evaluate(cplx z) const;
    double coefficient(int i, int j) const;
    int degree_z() const { return static_cast<int>(coeff_.size()) - 1; }
    int degree_zbar() const { return coeff_.empty() ? -1 : static_cast<int>(coeff_[0].size()) - 1; }

private:
    std::vector<std::vector<double>> coeff_; // coeff_[i][j] for z^i zbar^j
};

/// Complex coordinate (x + i s y) / (2 l) with s = chirality().
cplx complex_coordinate(const LandauSpec& spec, double x, double y);

struct LandauGaugeState {
    GridField2D field;
    double guiding_center;
    /// false when the guiding center lies outside [0, Ly]; the state is then
    /// not supported in the sample.
    bool inside_sample;
};

/// Default grid: x over [0, Lx], y over the sample widened to keep the
/// ridge at least 6 l + sqrt(2n+1) l from the edges; spacing l/8.
Grid2D landau_gauge_grid(const LandauSpec& spec, int n, double y_center);

/// Guiding center y_p = c p_x / (e B) for an electron (generally -c p_x / (q B)).
double guiding_center(const LandauSpec& spec, double p_x);

/// exp(i p_x x / hbar) exp(-(y - y_p)^2 / 2 l^2) H_n((y - y_p) / l), normalized.
LandauGaugeState landau_gauge_state(const LandauSpec& spec, int n, double p_x,
                                    std::optional<Grid2D> grid = std::nullopt, Exec exec = Exec::parallel);

/// Same ridge with an explicit center (used for the Hall-shifted states).
LandauGaugeState landau_ridge(const LandauSpec& spec, int n, double p_x, double y_center,
                              std::optional<Grid2D> grid = std::nullopt, Exec exec = Exec::parallel);

/// Square grid centered at the origin, spacing l/8, wide enough for (n, L).
Grid2D symmetric_gauge_grid(const LandauSpec& spec, int n, int L);

/// (z - d/dz*)^L (z* - d/dz)^n exp(-z* z) expanded symbolically, sampled and normalized.
GridField2D symmetric_gauge_state(const LandauSpec& spec, int n, int L,
                                  std::optional<Grid2D> grid = std::nullopt, Exec exec = Exec::parallel);

/// exp(z z_i* - z* z_i): a pure phase.
cplx vortex_phase_factor(cplx z, cplx center);

/// exp(z z_i* - z* z_i) exp(-|z - z_i|^2), normalized. `center` is in units of the complex coordinate.
GridField2D vortex_state(const LandauSpec& spec, cplx center, std::optional<Grid2D> grid = std::nullopt,
                         Exec exec = Exec::parallel);

/// Isotropic Gaussian exp(-((x-x0)^2 + (y-y0)^2) / (4 width^2)) on the grid, normalized.
GridField2D gaussian_packet(const Grid2D& grid, double x0, double y0, double width);

/// H psi with H = (p - q A / c)^2 / (2 m), 4th-order central differences.
/// Nodes within two of the edge are left at zero.
GridField2D apply_hamiltonian(const LandauSpec& spec, const GaugeField& gauge, const GridField2D& state,
                              Exec exec = Exec::parallel);

/// ||H psi - E psi|| / ||psi|| over interior nodes. Throws ResolutionError
/// when the spacing exceeds l/8.
double hamiltonian_residual(const LandauSpec& spec, const GaugeField& gauge, const GridField2D& state,
                            double E, Exec exec = Exec::parallel);

/// ||[pi_x, pi_y] psi - i hbar (q/c) B psi|| / ||psi|| with B taken from the gauge field.
double commutator_check(const LandauSpec& spec, const GaugeField& gauge, const GridField2D& state,
                        Exec exec = Exec::parallel);

/// Re <psi| pi_x |psi> / <psi|psi> over interior nodes.
double kinematic_momentum_x(const LandauSpec& spec, const GaugeField& gauge, const GridField2D& state);

struct Degeneracy {
    double ratio; // Phi / phi_0
    long count;   // floor(ratio)
};

Degeneracy degeneracy(const LandauSpec& spec);

/// Number of p_x = 2 pi hbar j / Lx whose guiding center lies in [0, Ly].
long guiding_center_count(const LandauSpec& spec);

/// Radius of maximum density of the lowest-level state with angular index L.
double ring_radius(const LandauSpec& spec, int L);

/// Number of lowest-level rings whose radius fits in a disk of area Lx Ly.
long ring_count(const LandauSpec& spec);

/// Density maxima r_L measured on a sampled symmetric-gauge state along the
/// positive x axis, with parabolic refinement.
double measured_ring_radius(const GridField2D& state);

struct HallCurrent {
    double flux_ratio;
    double drift_momentum; // <pi_x> of a Hall-shifted state
    double per_electron;   // q c V / Phi
    double per_level;      // flux_ratio * per_electron = q c V / phi_0
    double conductance;    // |per_level / V| = e^2 / h
};

/// Guiding center with the Hall voltage V across y: (c / e B)(p_x - m c V / (B Ly)) for an electron.
double hall_guiding_center(const LandauSpec& spec, double p_x, double V);

HallCurrent hall_current(const LandauSpec& spec, double V);

} // namespace boxmode::landau
