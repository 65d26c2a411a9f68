#include "boxmode/momentum_continuous.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace boxmode;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using std::numbers::pi;

namespace {
const WellSpec natural{1.0, 1.0, 1.0};

// closed-form amplitude for a = hbar = 1, kept independent of the library kernels
std::complex<double> closed_form(int n, double p)
{
    const double k = n * pi / 2.0;
    auto sinc = [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; };
    const double norm = 1.0 / std::sqrt(2.0 * pi);
    if (n % 2 == 1)
        return norm * (sinc(k - p) + sinc(k + p));
    return std::complex<double>(0.0, -norm * (sinc(k - p) - sinc(k + p)));
}
} // namespace

TEST_CASE("grid is symmetric and contains zero", "[momentum]")
{
    const MomentumGrid g(7.5, 101);
    CHECK(g.sample(50) == 0.0);
    CHECK(g.sample(0) == -7.5);
    CHECK(g.sample(100) == 7.5);
    for (int i = 0; i < g.count(); ++i)
        CHECK(g.sample(i) == -g.sample(g.count() - 1 - i));
    CHECK_THROWS_AS(MomentumGrid(1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(MomentumGrid(-1.0, 101), std::invalid_argument);

    const auto d = MomentumGrid::for_state(natural, EigenstateIndex(3));
    CHECK_THAT(d.p_max(), WithinRel(30.0 * pi, 1e-15));
    CHECK(d.count() == 4001);
}

TEST_CASE("reference amplitude values", "[momentum]")
{
    CHECK_THAT(amplitude_transform(natural, EigenstateIndex(1), 0.0).real(), WithinAbs(0.5079490874739278, 1e-14));
    CHECK_THAT(analytic_density_ground(natural, 0.0), WithinAbs(0.2580122754655959, 1e-15));
    CHECK_THAT(analytic_density_ground(natural, pi / 2), WithinAbs(0.15915494309189535, 1e-15));
    CHECK_THAT(analytic_density_ground(natural, -pi / 2), WithinAbs(0.15915494309189535, 1e-15));
}

TEST_CASE("quadrature amplitude matches the closed-form integral", "[momentum][property]")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> momentum(-60.0, 60.0);
    for (int n = 1; n <= 10; ++n) {
        for (int k = 0; k < 200; ++k) {
            const double p = momentum(rng);
            const auto got = amplitude_transform(natural, EigenstateIndex(n), p);
            CHECK(std::abs(got - closed_form(n, p)) < 1e-12);
        }
    }
}

TEST_CASE("hermitian symmetry and parity of the amplitude", "[momentum][property]")
{
    // real psi_n gives phi(-p) = conj(phi(p)); parity makes phi real (odd n) or imaginary (even n)
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> momentum(0.0, 40.0);
    for (int n = 1; n <= 10; ++n) {
        const double sign = n % 2 == 1 ? 1.0 : -1.0;
        for (int k = 0; k < 100; ++k) {
            const double p = momentum(rng);
            const auto plus = amplitude_transform(natural, EigenstateIndex(n), p);
            const auto minus = amplitude_transform(natural, EigenstateIndex(n), -p);
            CHECK(std::abs(minus - std::conj(plus)) < 1e-12);
            CHECK(std::abs(minus - sign * plus) < 1e-12);
            CHECK(std::abs(n % 2 == 1 ? plus.imag() : plus.real()) < 1e-12);
        }
    }
}

TEST_CASE("ground density is continuous across the removable singularity", "[momentum][property]")
{
    const double limit = 1.0 / (2.0 * pi);
    for (double side : {-1.0, 1.0}) {
        for (double eps : {1e-6, -1e-6, 1e-5, -1e-5, 5e-5, -5e-5, 9.9e-5, -9.9e-5, 1.01e-4, -1.01e-4}) {
            const double p = side * (pi / 2.0 + eps);
            const double got = analytic_density_ground(natural, p);
            CHECK_THAT(got, WithinRel(std::norm(closed_form(1, p)), 1e-9));
            // d ln P / dp = -2/pi at the singular point; the next term is O(eps^2)
            if (std::abs(eps) <= 1e-5)
                CHECK(std::abs((got - limit) / limit + 2.0 / pi * eps) < 1e-9);
        }
    }
}

TEST_CASE("analytic ground density scales with the well", "[momentum]")
{
    const WellSpec s{2.0, 1.0, 0.5};
    // P(p) for width a, hbar equals (a/hbar) P_natural(p a/hbar)
    for (double p : {0.0, 0.3, 0.785398163397448, 2.0, 9.0})
        CHECK_THAT(analytic_density_ground(s, p), WithinRel(4.0 * analytic_density_ground(natural, 4.0 * p), 1e-12));
}

TEST_CASE("Plancherel improves with the cutoff", "[momentum][property]")
{
    for (int n = 1; n <= 10; ++n) {
        const EigenstateIndex idx(n);
        const double unit = n * pi / 2.0;
        double prev_deficit = 1.0;
        for (double factor : {10.0, 20.0, 40.0}) {
            const int count = 2 * static_cast<int>(factor * 100) + 1;
            const auto s = spectrum(natural, idx, MomentumGrid(factor * unit, count));
            const double deficit = std::abs(1.0 - s.total_probability());
            CHECK(deficit < prev_deficit);
            prev_deficit = deficit;
        }
        CHECK(prev_deficit < 1e-3);
    }
}

TEST_CASE("ground mass within |p| < 40 matches the oracle", "[momentum]")
{
    const auto s = spectrum(natural, EigenstateIndex(1), MomentumGrid(40.0, 40001));
    CHECK_THAT(s.total_probability(), WithinAbs(0.9999915003865, 1e-9));
}

TEST_CASE("uncertainty product", "[momentum][property]")
{
    const auto u = uncertainty_product(natural, EigenstateIndex(1));
    CHECK_THAT(u.delta_x, WithinAbs(0.36151205519132801, 1e-12));
    CHECK_THAT(u.product, WithinAbs(0.56786180838661198, 1e-12));
    for (int n = 1; n <= 50; ++n)
        CHECK(uncertainty_product(natural, EigenstateIndex(n)).product > 0.5);

    const WellSpec s{1.7, 2.0, 0.3};
    CHECK_THAT(uncertainty_product(s, EigenstateIndex(1)).product, WithinRel(0.56786180838661198 * 0.3, 1e-10));
}

TEST_CASE("grid spread is a loose cross-check of the energy identity", "[momentum]")
{
    for (int n : {1, 2, 5}) {
        const auto s = spectrum(natural, EigenstateIndex(n), MomentumGrid::for_state(natural, EigenstateIndex(n)));
        const double exact = uncertainty_product(natural, EigenstateIndex(n)).delta_p;
        CHECK(std::abs(momentum_spread_on_grid(s) - exact) / exact < 0.05);
    }
}
