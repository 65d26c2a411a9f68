#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace boxmode {

struct QuadratureSettings {
    int nodes = 256;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendre {
public:
    explicit GaussLegendre(int nodes);

    int size() const { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const { return nodes_; }
    std::span<const double> weights() const { return weights_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Shared, lazily built rule for a given node count. Thread safe.
const GaussLegendre& gauss_legendre(int nodes);

/// Nodes and weights of a composite rule: `panels` equal sub-intervals of
/// [lo, hi], each carrying an n-point Gauss-Legendre rule.
struct CompositeRule {
    std::vector<double> x;
    std::vector<double> w;
};

CompositeRule composite_rule(double lo, double hi, int nodes, int panels);

/// Panel count that keeps the phase of a wavenumber-`kappa` oscillation
/// across one panel below nodes/2 radians.
int panels_for_wavenumber(double kappa, double length, int nodes);

template <typename F>
double integrate(F&& f, double lo, double hi, int nodes, int panels = 1)
{
    const auto rule = composite_rule(lo, hi, nodes, panels);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i)
        sum += rule.w[i] * f(rule.x[i]);
    return sum;
}

/// Trapezoid rule on uniformly spaced samples.
double trapezoid(std::span<const double> values, double step);

} // namespace boxmode
