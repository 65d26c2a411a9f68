#include "boxmode/config.hpp"
#include "boxmode/table.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

using namespace boxmode;

TEST_CASE("CSV formatting", "[table]")
{
    Table t;
    t.columns = {"n", "value", "label"};
    t.add_row({std::int64_t{3}, 0.125, std::string("x")});
    t.add_row({std::int64_t{-1}, -2.5e-7, std::string("y")});
    CHECK(format_csv(t, 4) == "n,value,label\n3,1.2500e-01,x\n-1,-2.5000e-07,y\n");
    CHECK_THROWS_AS(t.add_row({0.0}), std::invalid_argument);
    CHECK(format_number(1.0, 2) == "1.00e+00");
}

TEST_CASE("CSV write errors name the path", "[table]")
{
    Table t;
    t.columns = {"a"};
    try {
        write_csv(t, "/nonexistent-dir/x.csv", 3);
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent-dir/x.csv") != std::string::npos);
    }
}

TEST_CASE("config round trip", "[config][property]")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(1e-3, 1e3);
    for (int k = 0; k < 50; ++k) {
        RunConfig cfg;
        cfg.group = "release";
        cfg.command = "farfield";
        cfg.units = {"custom", u(rng), u(rng), u(rng), u(rng), u(rng)};
        cfg.out_dir = "out/run " + std::to_string(k);
        cfg.digits = 1 + k % 17;
        cfg.params = {{"t", std::to_string(u(rng))}, {"n", "3"}};
        CHECK(parse_config(serialize(cfg)) == cfg);
    }
}

TEST_CASE("config grammar", "[config]")
{
    const auto cfg = parse_config("# comment\n"
                                  "; another\n"
                                  "[run]\n"
                                  "group = momentum\n"
                                  "command=discrete\n"
                                  "\n"
                                  "[units]\n"
                                  "preset = custom\n"
                                  "  hbar = 0.5  \n"
                                  "[output]\n"
                                  "digits = 8\n"
                                  "[params]\n"
                                  "theta = 1.25\n");
    CHECK(cfg.group == "momentum");
    CHECK(cfg.command == "discrete");
    CHECK(cfg.units.hbar == 0.5);
    CHECK(cfg.units.mass == 1.0);
    CHECK(cfg.digits == 8);
    CHECK(cfg.params.at("theta") == "1.25");
}

TEST_CASE("config errors", "[config]")
{
    CHECK_THROWS_AS(parse_config("[nope]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[units]\nplanck = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[units]\nhbar = fast\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("hbar = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[output\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[output]\ndigits = 4.5\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/boxmode.cfg"), ConfigError);

    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.units.hbar = 2.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.units.preset = "custom";
    CHECK_NOTHROW(cfg.validate());
    cfg.units.mass = -1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.units.mass = 1.0;
    cfg.digits = 18;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.digits = 5;
    cfg.units.preset = "imperial";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("config files load", "[config]")
{
    const auto path = std::filesystem::temp_directory_path() / "boxmode_test_config.cfg";
    {
        std::ofstream f(path);
        f << "[run]\ngroup = well\ncommand = energies\n[params]\nn-max = 4\n";
    }
    const auto cfg = load_config(path);
    CHECK(cfg.params.at("n-max") == "4");
    std::filesystem::remove(path);
}
