#include "boxmode/momentum_continuous.hpp"
#include "boxmode/release.hpp"

#include <catch_amalgamated.hpp>

#include <bit>
#include <cmath>
#include <numbers>

using namespace boxmode;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using std::numbers::pi;

namespace {
const WellSpec natural{1.0, 1.0, 1.0};

double ground_distance(double t)
{
    const EigenstateIndex one(1);
    const auto snap = evolve_free(natural, one, t, auto_box(natural, one, t));
    const auto far = farfield_map(snap, natural);
    return farfield_distance(far, [](double p) { return analytic_density_ground(natural, p); }, 3.0 * pi);
}
} // namespace

TEST_CASE("auto box geometry", "[release]")
{
    for (int n : {1, 2, 3, 5}) {
        for (double t : {0.0, 1.0, 25.0, 200.0}) {
            const auto box = auto_box(natural, EigenstateIndex(n), t);
            CHECK(std::has_single_bit(box.samples));
            CHECK(box.length >= 4.0 * natural.a);
            // walls fall on samples: a is an integer number of spacings
            const double walls = natural.a / box.spacing();
            CHECK(walls == std::round(walls));
            CHECK(box.spacing() <= natural.a / (32.0 * n));
        }
    }
    CHECK(auto_box(natural, EigenstateIndex(1), 0.0, 1.0 / 64).spacing() == 1.0 / 64);
    CHECK(auto_box(natural, EigenstateIndex(1), 100.0).length > auto_box(natural, EigenstateIndex(1), 10.0).length);
}

TEST_CASE("t = 0 reproduces the eigenfunction", "[release]")
{
    for (int n : {1, 2, 3}) {
        const EigenstateIndex idx(n);
        const auto snap = evolve_free(natural, idx, 0.0, auto_box(natural, idx, 0.0));
        double dev = 0.0;
        for (std::size_t i = 0; i < snap.size(); ++i)
            dev = std::max(dev, std::abs(snap.psi[i] - eigenfunction(natural, idx, snap.x(i))));
        CHECK(dev < 1e-10);
        CHECK_THAT(snap.total_probability(), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("unitarity across times", "[release][property]")
{
    for (int n : {1, 2}) {
        const EigenstateIndex idx(n);
        for (double t : {0.5, 5.0, 20.0, 60.0}) {
            const auto snap = evolve_free(natural, idx, t, auto_box(natural, idx, t));
            CHECK_THAT(snap.total_probability(), WithinAbs(1.0, 1e-6));
            CHECK(snap.edge_density() < kEdgeDensityLimit);
        }
    }
}

TEST_CASE("kinetic energy is conserved and matches the level", "[release][property]")
{
    for (int n : {1, 2, 3}) {
        const EigenstateIndex idx(n);
        const auto box = auto_box(natural, idx, 40.0);
        const double start = kinetic_energy(evolve_free(natural, idx, 0.0, box), natural);
        for (double t : {1.0, 10.0, 40.0}) {
            const double k = kinetic_energy(evolve_free(natural, idx, t, box), natural);
            CHECK(std::abs(k - start) / start < 1e-6);
        }
        // the sampled wall kinks bias <p^2> by O(dx)
        const double level = energy(natural, idx);
        CHECK(start > level);
        CHECK((start - level) / level < 0.5 * n * box.spacing() / natural.a);
    }
}

TEST_CASE("kinetic energy converges at first order in the spacing", "[release][property]")
{
    const EigenstateIndex one(1);
    const double level = energy(natural, one);
    double prev = 0.0;
    for (double dx : {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128}) {
        const auto box = auto_box(natural, one, 0.0, dx);
        const double err = kinetic_energy(evolve_free(natural, one, 0.0, box), natural) - level;
        if (prev > 0.0)
            CHECK_THAT(prev / err, WithinRel(2.0, 0.1));
        prev = err;
    }
}

TEST_CASE("spread follows the ballistic law", "[release]")
{
    const EigenstateIndex one(1);
    const auto snap = evolve_free(natural, one, 50.0, auto_box(natural, one, 50.0));
    // exact propagator value for t = 50
    CHECK_THAT(snap.spread(), WithinRel(78.5406, 0.01));
}

TEST_CASE("aliasing is detected", "[release]")
{
    const EigenstateIndex one(1);
    CHECK_THROWS_AS(evolve_free(natural, one, 50.0, ReleaseBox{16.0, 512}), AliasingError);
    CHECK_NOTHROW(evolve_free(natural, one, 0.0, ReleaseBox{16.0, 512}));
}

TEST_CASE("far-field map", "[release]")
{
    const EigenstateIndex one(1);
    const auto box = auto_box(natural, one, 10.0);
    CHECK_THROWS_AS(farfield_map(evolve_free(natural, one, 0.0, box), natural), std::domain_error);

    const auto snap = evolve_free(natural, one, 10.0, box);
    const auto far = farfield_map(snap, natural);
    REQUIRE(far.p.size() == snap.size());
    // rescaling preserves the normalization
    double mass = 0.0;
    for (double d : far.density)
        mass += d;
    mass *= far.p[1] - far.p[0];
    CHECK_THAT(mass, WithinAbs(1.0, 1e-6));
    CHECK_THAT(far.p[1] - far.p[0], WithinRel(snap.dx / 10.0, 1e-9));
}

TEST_CASE("far field approaches the momentum density", "[release][property]")
{
    const double d50 = ground_distance(50.0);
    const double d100 = ground_distance(100.0);
    const double d200 = ground_distance(200.0);
    CHECK(d100 < d50);
    CHECK(d200 < d100);
    // exact propagator error is 7e-8 at t = 200; the rest is grid resolution
    CHECK(d200 < 2e-4);
}

TEST_CASE("momentum quantile", "[release]")
{
    const EigenstateIndex one(1);
    const double half = momentum_quantile(natural, one, 0.5);
    const double most = momentum_quantile(natural, one, 0.99);
    CHECK(half > 0.0);
    CHECK(half < pi / 2);
    CHECK(most > half);
}
