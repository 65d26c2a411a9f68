#include "boxmode/well.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace boxmode {

using std::numbers::pi;

void WellSpec::validate() const
{
    if (!(a > 0.0) || !(m > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("well parameters a, m, hbar must be positive");
}

EigenstateIndex::EigenstateIndex(int n) : n_(n)
{
    if (n < 1)
        throw std::domain_error("quantum number must be >= 1, got " + std::to_string(n));
}

double energy(const WellSpec& spec, EigenstateIndex n)
{
    const double k = n.value();
    return k * k * pi * pi * spec.hbar * spec.hbar / (8.0 * spec.m * spec.a * spec.a);
}

double wavenumber(const WellSpec& spec, EigenstateIndex n)
{
    return n.value() * pi / (2.0 * spec.a);
}

double eigenfunction(const WellSpec& spec, EigenstateIndex n, double x)
{
    if (std::abs(x) >= spec.a)
        return 0.0;
    const double amp = std::sqrt(1.0 / spec.a);
    const double arg = wavenumber(spec, n) * x;
    return n.even_parity() ? amp * std::cos(arg) : amp * std::sin(arg);
}

namespace {

int checked_nodes(QuadratureSettings quad)
{
    if (quad.nodes < 16)
        throw std::invalid_argument("well quadrature needs at least 16 nodes");
    return quad.nodes;
}

} // namespace

double overlap(const WellSpec& spec, EigenstateIndex n, EigenstateIndex m, QuadratureSettings quad)
{
    const int nodes = checked_nodes(quad);
    const double kappa = wavenumber(spec, n) + wavenumber(spec, m);
    const int panels = panels_for_wavenumber(kappa, 2.0 * spec.a, nodes);
    return integrate([&](double x) { return eigenfunction(spec, n, x) * eigenfunction(spec, m, x); },
                     -spec.a, spec.a, nodes, panels);
}

double norm_check(const WellSpec& spec, EigenstateIndex n, QuadratureSettings quad)
{
    return std::abs(overlap(spec, n, n, quad) - 1.0);
}

} // namespace boxmode
