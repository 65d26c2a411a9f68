#include "boxmode/momentum_continuous.hpp"
#include "boxmode/momentum_discrete.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

using namespace boxmode;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using std::numbers::pi;
using cplx = std::complex<double>;

namespace {
const WellSpec natural{1.0, 1.0, 1.0};

StateFunction eigen(const WellSpec& spec, int n)
{
    return [spec, n](double x) { return cplx(eigenfunction(spec, EigenstateIndex(n), x), 0.0); };
}

// frozen from the mpmath oracle: continuous mass in the two spike windows of half-width pi/2
const std::pair<int, double> kWindowDefects[] = {
    {1, 0.029905947229965463}, {2, 0.18605600408374257}, {4, 0.21667157525299204},
    {8, 0.22392195800564492},  {16, 0.22571079291275784}, {32, 0.22615653801845758},
};
} // namespace

TEST_CASE("extension phase reduction", "[discrete]")
{
    CHECK(ExtensionPhase(0.0).theta() == 0.0);
    CHECK_THAT(ExtensionPhase(-pi).theta(), WithinAbs(pi, 1e-15));
    CHECK_THAT(ExtensionPhase(5.0 * pi).theta(), WithinAbs(pi, 1e-14));
    CHECK(ExtensionPhase(2.0 * pi).theta() == 0.0);
    CHECK_THROWS_AS(ExtensionPhase(std::nan("")), std::invalid_argument);
}

TEST_CASE("allowed momenta", "[discrete]")
{
    const auto odd = allowed_momenta(natural, ExtensionPhase(pi), -1, 1);
    CHECK_THAT(odd[0], WithinAbs(-pi / 2, 1e-15));
    CHECK_THAT(odd[1], WithinAbs(pi / 2, 1e-15));
    CHECK_THAT(odd[2], WithinAbs(3 * pi / 2, 1e-15));
    const auto even = allowed_momenta(natural, ExtensionPhase(0.0), -1, 1);
    CHECK(even[1] == 0.0);
    CHECK_THAT(even[2], WithinAbs(pi, 1e-15));
    const WellSpec wide{2.0, 1.0, 3.0};
    CHECK_THAT(allowed_momentum(wide, ExtensionPhase(pi / 2), 1), WithinRel(1.25 * pi * 1.5, 1e-15));
}

TEST_CASE("basis is orthonormal for any fixed phase", "[discrete][property]")
{
    for (double theta : {0.0, pi, 0.7, 4.1}) {
        const ExtensionPhase phase(theta);
        for (int j = -8; j <= 8; ++j) {
            for (int k = -8; k <= 8; ++k) {
                const double pj = allowed_momentum(natural, phase, j);
                const double pk = allowed_momentum(natural, phase, k);
                const double re = integrate([&](double x) { return std::cos((pk - pj) * x) / 2.0; }, -1.0, 1.0, 64);
                const double im = integrate([&](double x) { return std::sin((pk - pj) * x) / 2.0; }, -1.0, 1.0, 64);
                CHECK(std::abs(cplx(re, im) - cplx(j == k ? 1.0 : 0.0, 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("basis satisfies the twisted boundary condition", "[discrete][property]")
{
    for (double theta : {0.0, pi, 1.3}) {
        const ExtensionPhase phase(theta);
        for (int k = -5; k <= 5; ++k) {
            const double p = allowed_momentum(natural, phase, k);
            const cplx right = std::exp(cplx(0.0, p));
            const cplx left = std::exp(cplx(0.0, -p));
            CHECK(std::abs(right - std::exp(cplx(0.0, phase.theta())) * left) < 1e-12);
        }
    }
}

TEST_CASE("two spikes of weight one half for every eigenstate", "[discrete][property]")
{
    for (int n = 1; n <= 10; ++n) {
        const auto analytic = eigenstate_spectrum(natural, EigenstateIndex(n));
        REQUIRE(analytic.entries.size() == 2);
        CHECK_THAT(analytic.entries[0].momentum, WithinAbs(-n * pi / 2, 1e-13));
        CHECK_THAT(analytic.entries[1].momentum, WithinAbs(n * pi / 2, 1e-13));

        const auto s = expand(natural, eigen(natural, n), matched_phase(EigenstateIndex(n)));
        CHECK(s.parseval_defect() < 1e-8);
        for (const auto& e : s.entries) {
            const auto spike = std::find_if(analytic.entries.begin(), analytic.entries.end(),
                                            [&](const DiscreteEntry& a) { return a.k == e.k; });
            if (spike == analytic.entries.end()) {
                CHECK(e.weight < 1e-12);
            } else {
                CHECK_THAT(e.weight, WithinAbs(0.5, 1e-12));
                CHECK(std::abs(e.coefficient - spike->coefficient) < 1e-12);
            }
        }
    }
}

TEST_CASE("weights are symmetric in momentum", "[discrete][property]")
{
    for (int n = 1; n <= 10; ++n) {
        for (double theta : {0.0, pi}) {
            const auto s = expand(natural, eigen(natural, n), ExtensionPhase(theta), 32);
            for (const auto& e : s.entries) {
                const int mirror = theta == 0.0 ? -e.k : -e.k - 1;
                if (std::abs(mirror) <= 32) {
                    CHECK_THAT(s.entries[mirror + 32].momentum, WithinAbs(-e.momentum, 1e-12));
                    CHECK_THAT(s.entries[mirror + 32].weight, WithinAbs(e.weight, 1e-12));
                }
            }
        }
    }
}

TEST_CASE("mismatched extension spreads the weight", "[discrete][property]")
{
    const auto s = expand(natural, eigen(natural, 1), ExtensionPhase(0.0), 64);
    int significant = 0;
    for (const auto& e : s.entries)
        significant += e.weight > 1e-4;
    CHECK(significant > 4);
    CHECK(s.parseval_defect() > 0.0);
    CHECK(s.parseval_defect() < 1e-3);
    const auto wider = expand(natural, eigen(natural, 1), ExtensionPhase(0.0), 256);
    CHECK(wider.parseval_defect() < s.parseval_defect());
}

TEST_CASE("Parseval for random smooth states", "[discrete][property]")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<cplx, 5> c;
        for (auto& v : c)
            v = {coef(rng), coef(rng)};
        auto raw = [c](double x) {
            cplx poly{0.0, 0.0};
            for (auto it = c.rbegin(); it != c.rend(); ++it)
                poly = poly * x + *it;
            const double envelope = (1.0 - x * x) * (1.0 - x * x);
            return poly * envelope;
        };
        const double norm = integrate([&](double x) { return std::norm(raw(x)); }, -1.0, 1.0, 64);
        const double scale = 1.0 / std::sqrt(norm);
        const auto s = expand(natural, [&](double x) { return scale * raw(x); }, ExtensionPhase(angle(rng)));
        CHECK(s.parseval_defect() < 1e-6);
        CHECK(s.parseval_defect() > -1e-12);
    }
}

TEST_CASE("expand rejects unnormalized states", "[discrete]")
{
    CHECK_THROWS_AS(expand(natural, [](double) { return cplx(1.0, 0.0); }, ExtensionPhase(0.0)), std::invalid_argument);
    CHECK_THROWS_AS(expand(natural, eigen(natural, 1), ExtensionPhase(pi), -1), std::invalid_argument);
}

TEST_CASE("window defects match the frozen oracle", "[discrete][regression]")
{
    for (const auto& [n, defect] : kWindowDefects) {
        const auto r = convergence_report(natural, EigenstateIndex(n), pi / 2);
        CHECK_THAT(r.defect, WithinAbs(defect, 1e-12));
        CHECK(r.spike_weight == 1.0);
        CHECK_THAT(r.mass_in_window + r.defect, WithinAbs(1.0, 1e-15));
    }
}

TEST_CASE("wide windows recover the full mass", "[discrete]")
{
    const auto r = convergence_report(natural, EigenstateIndex(3), 60.0);
    CHECK(r.defect > 0.0);
    CHECK(r.defect < 2e-3);
    CHECK_THROWS_AS(convergence_report(natural, EigenstateIndex(1), 0.0), std::invalid_argument);
}
