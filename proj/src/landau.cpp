#include "boxmode/landau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace boxmode::landau {

using std::numbers::pi;

void LandauSpec::validate() const
{
    if (!(B > 0.0))
        throw std::invalid_argument("magnetic field must be positive");
    if (!(mass > 0.0) || !(c > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("mass, c and hbar must be positive");
    if (!(Lx > 0.0) || !(Ly > 0.0))
        throw std::invalid_argument("sample widths must be positive");
    if (charge == 0.0 || !std::isfinite(charge))
        throw std::invalid_argument("charge must be nonzero");
}

double LandauSpec::e() const { return std::abs(charge); }
double LandauSpec::omega_c() const { return e() * B / (mass * c); }
double LandauSpec::magnetic_length() const { return std::sqrt(hbar * c / (e() * B)); }
double LandauSpec::flux() const { return B * Lx * Ly; }
double LandauSpec::flux_quantum() const { return 2.0 * pi * hbar * c / e(); }
double LandauSpec::level_energy(int n) const { return (n + 0.5) * hbar * omega_c(); }
double LandauSpec::chirality() const { return charge > 0.0 ? 1.0 : -1.0; }

double GaugeField::ax(double, double y) const
{
    return gauge == Gauge::landau ? -B * y : -0.5 * B * y;
}

double GaugeField::ay(double x, double) const
{
    return gauge == Gauge::landau ? 0.0 : 0.5 * B * x;
}

Grid2D Grid2D::covering(double x_lo, double x_hi, double y_lo, double y_hi, double max_spacing)
{
    if (!(x_hi > x_lo) || !(y_hi > y_lo) || !(max_spacing > 0.0))
        throw std::invalid_argument("degenerate grid extent");
    const int nx = static_cast<int>(std::ceil((x_hi - x_lo) / max_spacing)) + 1;
    const int ny = static_cast<int>(std::ceil((y_hi - y_lo) / max_spacing)) + 1;
    return {x_lo, y_lo, (x_hi - x_lo) / (nx - 1), (y_hi - y_lo) / (ny - 1), nx, ny};
}

Grid2D Grid2D::centered(double xc, double yc, double half_width, double spacing)
{
    if (!(half_width > 0.0) || !(spacing > 0.0))
        throw std::invalid_argument("degenerate grid extent");
    const int half_nodes = static_cast<int>(std::ceil(half_width / spacing));
    const int n = 2 * half_nodes + 1;
    return {xc - half_nodes * spacing, yc - half_nodes * spacing, spacing, spacing, n, n};
}

double GridField2D::norm_squared() const
{
    double sum = 0.0;
    for (const auto& v : values)
        sum += std::norm(v);
    return sum * grid.dx * grid.dy;
}

void GridField2D::normalize()
{
    const double norm = std::sqrt(norm_squared());
    if (!(norm > 0.0))
        throw std::runtime_error("cannot normalize a field that vanishes on the grid");
    for (auto& v : values)
        v /= norm;
}

cplx overlap(const GridField2D& a, const GridField2D& b)
{
    if (a.grid.nx != b.grid.nx || a.grid.ny != b.grid.ny)
        throw std::invalid_argument("overlap needs fields on the same grid");
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.values.size(); ++i)
        sum += std::conj(a.values[i]) * b.values[i];
    return sum * a.grid.dx * a.grid.dy;
}

double hermite(int n, double x)
{
    if (n < 0)
        throw std::domain_error("Hermite degree must be >= 0");
    double prev = 1.0;
    if (n == 0)
        return prev;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ZPolynomial ZPolynomial::one()
{
    ZPolynomial p;
    p.coeff_ = {{1.0}};
    return p;
}

ZPolynomial ZPolynomial::raise_level() const
{
    // (zbar - d/dz)(P e^{-z zbar}) = (2 zbar P - dP/dz) e^{-z zbar}
    const int di = degree_z();
    const int dj = degree_zbar();
    ZPolynomial out;
    out.coeff_.assign(di + 1, std::vector<double>(dj + 2, 0.0));
    for (int i = 0; i <= di; ++i) {
        for (int j = 0; j <= dj; ++j) {
            const double c = coeff_[i][j];
            out.coeff_[i][j + 1] += 2.0 * c;
            if (i > 0)
                out.coeff_[i - 1][j] -= i * c;
        }
    }
    return out;
}

ZPolynomial ZPolynomial::raise_angular() const
{
    // (z - d/dzbar)(P e^{-z zbar}) = (2 z P - dP/dzbar) e^{-z zbar}
    const int di = degree_z();
    const int dj = degree_zbar();
    ZPolynomial out;
    out.coeff_.assign(di + 2, std::vector<double>(dj + 1, 0.0));
    for (int i = 0; i <= di; ++i) {
        for (int j = 0; j <= dj; ++j) {
            const double c = coeff_[i][j];
            out.coeff_[i + 1][j] += 2.0 * c;
            if (j > 0)
                out.coeff_[i][j - 1] -= j * c;
        }
    }
    return out;
}

cplx ZPolynomial::evaluate(cplx z) const
{
    const cplx zbar = std::conj(z);
    cplx sum{0.0, 0.0};
    cplx zi{1.0, 0.0};
    for (int i = 0; i <= degree_z(); ++i) {
        cplx zj{1.0, 0.0};
        for (int j = 0; j <= degree_zbar(); ++j) {
            if (coeff_[i][j] != 0.0)
                sum += coeff_[i][j] * zi * zj;
            zj *= zbar;
        }
        zi *= z;
    }
    return sum;
}

double ZPolynomial::coefficient(int i, int j) const
{
    if (i < 0 || j < 0 || i > degree_z() || j > degree_zbar())
        return 0.0;
    return coeff_[i][j];
}

cplx complex_coordinate(const LandauSpec& spec, double x, double y)
{
    const double scale = 1.0 / (2.0 * spec.magnetic_length());
    return {x * scale, spec.chirality() * y * scale};
}

namespace {

template <typename F>
GridField2D sample(const Grid2D& grid, Exec exec, F&& f)
{
    GridField2D out{grid, std::vector<cplx>(grid.size())};
    for_each_index(exec, static_cast<std::size_t>(grid.ny), [&](std::size_t row) {
        const int j = static_cast<int>(row);
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i)
            out.values[grid.index(i, j)] = f(grid.x(i), y);
    });
    out.normalize();
    return out;
}

void check_index(int value, const char* name)
{
    if (value < 0)
        throw std::domain_error(std::string(name) + " must be >= 0");
}

} // namespace

double guiding_center(const LandauSpec& spec, double p_x)
{
    return -spec.c * p_x / (spec.charge * spec.B);
}

Grid2D landau_gauge_grid(const LandauSpec& spec, int n, double y_center)
{
    const double l = spec.magnetic_length();
    const double margin = (6.0 + std::sqrt(2.0 * n + 1.0)) * l;
    return Grid2D::covering(0.0, spec.Lx, std::min(0.0, y_center - margin), std::max(spec.Ly, y_center + margin),
                            l / 8.0);
}

LandauGaugeState landau_ridge(const LandauSpec& spec, int n, double p_x, double y_center,
                              std::optional<Grid2D> grid, Exec exec)
{
    spec.validate();
    check_index(n, "Landau level index");
    const double l = spec.magnetic_length();
    const auto g = grid.value_or(landau_gauge_grid(spec, n, y_center));
    auto field = sample(g, exec, [&](double x, double y) {
        const double u = (y - y_center) / l;
        const double phase = p_x * x / spec.hbar;
        return std::exp(-0.5 * u * u) * hermite(n, u) * cplx(std::cos(phase), std::sin(phase));
    });
    const bool inside = y_center >= 0.0 && y_center <= spec.Ly;
    return {std::move(field), y_center, inside};
}

LandauGaugeState landau_gauge_state(const LandauSpec& spec, int n, double p_x, std::optional<Grid2D> grid,
                                    Exec exec)
{
    spec.validate();
    return landau_ridge(spec, n, p_x, guiding_center(spec, p_x), grid, exec);
}

Grid2D symmetric_gauge_grid(const LandauSpec& spec, int n, int L)
{
    const double l = spec.magnetic_length();
    const double half = (std::sqrt(2.0 * (n + L + 1)) + 7.0) * l;
    return Grid2D::centered(0.0, 0.0, half, l / 8.0);
}

GridField2D symmetric_gauge_state(const LandauSpec& spec, int n, int L, std::optional<Grid2D> grid, Exec exec)
{
    spec.validate();
    check_index(n, "Landau level index");
    check_index(L, "angular index");

    auto poly = ZPolynomial::one();
    for (int k = 0; k < n; ++k)
        poly = poly.raise_level();
    for (int k = 0; k < L; ++k)
        poly = poly.raise_angular();

    const auto g = grid.value_or(symmetric_gauge_grid(spec, n, L));
    return sample(g, exec, [&](double x, double y) {
        const cplx z = complex_coordinate(spec, x, y);
        return poly.evaluate(z) * std::exp(-std::norm(z));
    });
}

cplx vortex_phase_factor(cplx z, cplx center)
{
    // z conj(c) - conj(z) c is purely imaginary
    const cplx exponent = z * std::conj(center) - std::conj(z) * center;
    return std::exp(cplx(0.0, exponent.imag()));
}

GridField2D vortex_state(const LandauSpec& spec, cplx center, std::optional<Grid2D> grid, Exec exec)
{
    spec.validate();
    const double l = spec.magnetic_length();
    const auto g = grid.value_or([&] {
        const double xc = 2.0 * l * center.real();
        const double yc = 2.0 * l * spec.chirality() * center.imag();
        return Grid2D::centered(0.0, 0.0, std::max(std::abs(xc), std::abs(yc)) + 8.0 * l, l / 8.0);
    }());
    return sample(g, exec, [&](double x, double y) {
        const cplx z = complex_coordinate(spec, x, y);
        return vortex_phase_factor(z, center) * std::exp(-std::norm(z - center));
    });
}

GridField2D gaussian_packet(const Grid2D& grid, double x0, double y0, double width)
{
    return sample(grid, Exec::serial, [&](double x, double y) {
        const double r2 = (x - x0) * (x - x0) + (y - y0) * (y - y0);
        return cplx(std::exp(-r2 / (4.0 * width * width)), 0.0);
    });
}

namespace {

// 4th-order central stencils on node (i, j); caller keeps 2 nodes from the edges.
struct Stencil {
    const std::vector<cplx>& v;
    const Grid2D& g;

    cplx dx(int i, int j) const
    {
        return (v[g.index(i - 2, j)] - 8.0 * v[g.index(i - 1, j)] + 8.0 * v[g.index(i + 1, j)] -
                v[g.index(i + 2, j)]) /
               (12.0 * g.dx);
    }
    cplx dy(int i, int j) const
    {
        return (v[g.index(i, j - 2)] - 8.0 * v[g.index(i, j - 1)] + 8.0 * v[g.index(i, j + 1)] -
                v[g.index(i, j + 2)]) /
               (12.0 * g.dy);
    }
    cplx dxx(int i, int j) const
    {
        return (-v[g.index(i - 2, j)] + 16.0 * v[g.index(i - 1, j)] - 30.0 * v[g.index(i, j)] +
                16.0 * v[g.index(i + 1, j)] - v[g.index(i + 2, j)]) /
               (12.0 * g.dx * g.dx);
    }
    cplx dyy(int i, int j) const
    {
        return (-v[g.index(i, j - 2)] + 16.0 * v[g.index(i, j - 1)] - 30.0 * v[g.index(i, j)] +
                16.0 * v[g.index(i, j + 1)] - v[g.index(i, j + 2)]) /
               (12.0 * g.dy * g.dy);
    }
};

void check_resolution(const LandauSpec& spec, const Grid2D& g, int margin)
{
    const double limit = spec.magnetic_length() / 8.0 * (1.0 + 1e-9);
    if (g.dx > limit || g.dy > limit)
        throw ResolutionError("grid spacing exceeds l/8");
    if (g.nx <= 2 * margin || g.ny <= 2 * margin)
        throw ResolutionError("grid too small for the finite-difference stencil");
}

// pi_x psi = -i hbar d/dx psi - (q/c) A_x psi on nodes at least `margin` from the edges.
enum class Axis { x, y };

std::vector<cplx> apply_kinematic(const LandauSpec& spec, const GaugeField& gauge, const Grid2D& g,
                                  const std::vector<cplx>& v, Axis axis, int margin, Exec exec)
{
    std::vector<cplx> out(v.size(), cplx{0.0, 0.0});
    const Stencil s{v, g};
    const cplx minus_i_hbar{0.0, -spec.hbar};
    const double qc = spec.charge / spec.c;
    for_each_index(exec, static_cast<std::size_t>(g.ny - 2 * margin), [&](std::size_t row) {
        const int j = static_cast<int>(row) + margin;
        const double y = g.y(j);
        for (int i = margin; i < g.nx - margin; ++i) {
            const double x = g.x(i);
            const auto k = g.index(i, j);
            out[k] = axis == Axis::x ? minus_i_hbar * s.dx(i, j) - qc * gauge.ax(x, y) * v[k]
                                     : minus_i_hbar * s.dy(i, j) - qc * gauge.ay(x, y) * v[k];
        }
    });
    return out;
}

} // namespace

GridField2D apply_hamiltonian(const LandauSpec& spec, const GaugeField& gauge, const GridField2D& state, Exec exec)
{
    const auto& g = state.grid;
    if (g.nx < 5 || g.ny < 5)
        throw ResolutionError("grid too small for the finite-difference stencil");

    GridField2D out{g, std::vector<cplx>(g.size(), cplx{0.0, 0.0})};
    const Stencil s{state.values, g};
    const double qc = spec.charge / spec.c;
    const double h2 = spec.hbar * spec.hbar;
    const cplx i_hbar_qc{0.0, spec.hbar * qc};
    const double inv_2m = 1.0 / (2.0 * spec.mass);

    // (p - qA/c)^2 = -hbar^2 lap + (i hbar q/c)(div A + 2 A.grad) + (q/c)^2 A^2
    for_each_index(exec, static_cast<std::size_t>(g.ny - 4), [&](std::size_t row) {
        const int j = static_cast<int>(row) + 2;
        const double y = g.y(j);
        for (int i = 2; i < g.nx - 2; ++i) {
            const double x = g.x(i);
            const double ax = gauge.ax(x, y);
            const double ay = gauge.ay(x, y);
            const auto k = g.index(i, j);
            const cplx psi = state.values[k];
            const cplx lap = s.dxx(i, j) + s.dyy(i, j);
            const cplx drift = gauge.divergence() * psi + 2.0 * (ax * s.dx(i, j) + ay * s.dy(i, j));
            out.values[k] = inv_2m * (-h2 * lap + i_hbar_qc * drift + qc * qc * (ax * ax + ay * ay) * psi);
        }
    });
    return out;
}

double hamiltonian_residual(const LandauSpec& spec, const GaugeField& gauge, const GridField2D& state, double E,
                            Exec exec)
{
    spec.validate();
    check_resolution(spec, state.grid, 2);
    const auto h_psi = apply_hamiltonian(spec, gauge, state, exec);
    const auto& g = state.grid;
    double num = 0.0, den = 0.0;
    for (int j = 2; j < g.ny - 2; ++j) {
        for (int i = 2; i < g.nx - 2; ++i) {
            const auto k = g.index(i, j);
            num += std::norm(h_psi.values[k] - E * state.values[k]);
            den += std::norm(state.values[k]);
        }
    }
    return std::sqrt(num / den);
}

double commutator_check(const LandauSpec& spec, const GaugeField& gauge, const GridField2D& state, Exec exec)
{
    spec.validate();
    const auto& g = state.grid;
    check_resolution(spec, g, 4);

    const auto px = apply_kinematic(spec, gauge, g, state.values, Axis::x, 2, exec);
    const auto py = apply_kinematic(spec, gauge, g, state.values, Axis::y, 2, exec);
    const auto pxpy = apply_kinematic(spec, gauge, g, py, Axis::x, 4, exec);
    const auto pypx = apply_kinematic(spec, gauge, g, px, Axis::y, 4, exec);

    const cplx expected{0.0, spec.hbar * spec.charge / spec.c * gauge.B};
    double num = 0.0, den = 0.0;
    for (int j = 4; j < g.ny - 4; ++j) {
        for (int i = 4; i < g.nx - 4; ++i) {
            const auto k = g.index(i, j);
            num += std::norm(pxpy[k] - pypx[k] - expected * state.values[k]);
            den += std::norm(state.values[k]);
        }
    }
    return std::sqrt(num / den);
}

double kinematic_momentum_x(const LandauSpec& spec, const GaugeField& gauge, const GridField2D& state)
{
    spec.validate();
    const auto& g = state.grid;
    check_resolution(spec, g, 2);
    const auto px = apply_kinematic(spec, gauge, g, state.values, Axis::x, 2, Exec::serial);
    cplx num{0.0, 0.0};
    double den = 0.0;
    for (int j = 2; j < g.ny - 2; ++j) {
        for (int i = 2; i < g.nx - 2; ++i) {
            const auto k = g.index(i, j);
            num += std::conj(state.values[k]) * px[k];
            den += std::norm(state.values[k]);
        }
    }
    return num.real() / den;
}

Degeneracy degeneracy(const LandauSpec& spec)
{
    spec.validate();
    const double ratio = spec.flux() / spec.flux_quantum();
    // absorb the last-ulp error of ratios that are integers analytically
    const auto count = static_cast<long>(std::floor(ratio * (1.0 + 1e-12)));
    return {ratio, count};
}

long guiding_center_count(const LandauSpec& spec)
{
    spec.validate();
    const double dp = 2.0 * pi * spec.hbar / spec.Lx;
    const double dy = std::abs(guiding_center(spec, dp));
    const long bound = static_cast<long>(std::ceil(spec.Ly / dy)) + 2;
    const double tol = 1e-12 * spec.Ly;
    long count = 0;
    for (long j = -bound; j <= bound; ++j) {
        const double y = guiding_center(spec, dp * static_cast<double>(j));
        if (y >= -tol && y <= spec.Ly + tol)
            ++count;
    }
    return count;
}

double ring_radius(const LandauSpec& spec, int L)
{
    spec.validate();
    check_index(L, "angular index");
    if (L == 0)
        return 0.0;
    // lowest level: |psi|^2 ~ |z|^{2L} exp(-2|z|^2); maximize its logarithm in r
    const double l = spec.magnetic_length();
    auto log_density = [&](double r) {
        const double z = r / (2.0 * l);
        return 2.0 * L * std::log(z) - 2.0 * z * z;
    };
    double lo = 1e-9 * l;
    double hi = (std::sqrt(2.0 * L) + 10.0) * l;
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - golden * (hi - lo);
    double b = lo + golden * (hi - lo);
    double fa = log_density(a);
    double fb = log_density(b);
    while (hi - lo > 1e-13 * (1.0 + hi)) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + golden * (hi - lo);
            fb = log_density(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - golden * (hi - lo);
            fa = log_density(a);
        }
    }
    return 0.5 * (lo + hi);
}

long ring_count(const LandauSpec& spec)
{
    spec.validate();
    const double area = spec.Lx * spec.Ly;
    long count = 0;
    for (int L = 0;; ++L) {
        const double r = ring_radius(spec, L);
        if (pi * r * r > area * (1.0 + 1e-12))
            break;
        ++count;
    }
    return count;
}

double measured_ring_radius(const GridField2D& state)
{
    const auto& g = state.grid;
    // row through y = 0 (closest node)
    const int j = static_cast<int>(std::lround(-g.y_min / g.dy));
    if (j < 0 || j >= g.ny)
        throw std::invalid_argument("grid does not contain the x axis");
    const int i0 = static_cast<int>(std::lround(-g.x_min / g.dx));
    int best = i0;
    for (int i = i0; i < g.nx; ++i) {
        if (std::norm(state.at(i, j)) > std::norm(state.at(best, j)))
            best = i;
    }
    if (best == i0 || best + 1 >= g.nx)
        return g.x(best);
    const double fm = std::norm(state.at(best - 1, j));
    const double f0 = std::norm(state.at(best, j));
    const double fp = std::norm(state.at(best + 1, j));
    const double denom = fm - 2.0 * f0 + fp;
    const double shift = denom != 0.0 ? 0.5 * (fm - fp) / denom : 0.0;
    return g.x(best) + shift * g.dx;
}

double hall_guiding_center(const LandauSpec& spec, double p_x, double V)
{
    // shift p_x by the drift momentum m c E / B with E = V / Ly
    const double drift = spec.mass * spec.c * V / (spec.B * spec.Ly);
    return guiding_center(spec, p_x - drift);
}

HallCurrent hall_current(const LandauSpec& spec, double V)
{
    spec.validate();
    if (!std::isfinite(V))
        throw std::invalid_argument("Hall voltage must be finite");

    const double ratio = spec.flux() / spec.flux_quantum();
    // <pi_x> = p_x + (q B / c) y_p' with y_p' the Hall-shifted center; p_x = 0 suffices
    const double drift = spec.charge * spec.B / spec.c * hall_guiding_center(spec, 0.0, V);
    const double per_electron = spec.charge / spec.mass * drift / spec.Lx;
    const double per_level = ratio * per_electron;
    const double unit = spec.e() * spec.c / spec.flux_quantum(); // current per unit voltage per level
    const double conductance = V != 0.0 ? std::abs(per_level / V) : unit;
    return {ratio, drift, per_electron, per_level, conductance};
}

} // namespace boxmode::landau
