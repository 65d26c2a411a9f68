#include "boxmode/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace boxmode {

GaussLegendre::GaussLegendre(int nodes)
{
    if (nodes < 1)
        throw std::invalid_argument("Gauss-Legendre rule needs at least one node");

    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(nodes)),
        &gsl_integration_glfixed_table_free);
    if (!table)
        throw std::runtime_error("gsl_integration_glfixed_table_alloc failed");

    nodes_.resize(nodes);
    weights_.resize(nodes);
    for (int i = 0; i < nodes; ++i)
        gsl_integration_glfixed_point(-1.0, 1.0, i, &nodes_[i], &weights_[i], table.get());
}

const GaussLegendre& gauss_legendre(int nodes)
{
    static std::mutex lock;
    static std::map<int, std::unique_ptr<GaussLegendre>> cache;

    std::lock_guard guard(lock);
    auto& slot = cache[nodes];
    if (!slot)
        slot = std::make_unique<GaussLegendre>(nodes);
    return *slot;
}

CompositeRule composite_rule(double lo, double hi, int nodes, int panels)
{
    if (panels < 1)
        throw std::invalid_argument("composite rule needs at least one panel");

    const auto& rule = gauss_legendre(nodes);
    CompositeRule out;
    out.x.reserve(static_cast<std::size_t>(nodes) * panels);
    out.w.reserve(static_cast<std::size_t>(nodes) * panels);

    const double width = (hi - lo) / panels;
    for (int k = 0; k < panels; ++k) {
        const double left = lo + k * width;
        const double half = 0.5 * width;
        const double mid = left + half;
        for (int i = 0; i < rule.size(); ++i) {
            out.x.push_back(mid + half * rule.nodes()[i]);
            out.w.push_back(half * rule.weights()[i]);
        }
    }
    return out;
}

int panels_for_wavenumber(double kappa, double length, int nodes)
{
    const double phase = std::abs(kappa) * length;
    return std::max(1, static_cast<int>(std::ceil(phase / (0.5 * nodes))));
}

double trapezoid(std::span<const double> values, double step)
{
    if (values.size() < 2)
        return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        sum += values[i];
    return sum * step;
}

} // namespace boxmode
