#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boxmode {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Physical constants shared by all subcommands. "natural" fixes every
/// value to 1; "custom" takes them from the config file or flags.
struct Units {
    std::string preset = "natural";
    double hbar = 1.0;
    double mass = 1.0;
    double a = 1.0; // well half-width
    double e = 1.0; // elementary charge; the Landau particle carries q = -e
    double c = 1.0;

    bool operator==(const Units&) const = default;
};

struct RunConfig {
    std::string group;
    std::string command;
    Units units;
    std::string out_dir = ".";
    int digits = 12;
    std::map<std::string, std::string> params;

    /// Throws ConfigError on nonpositive constants, bad preset or digit count.
    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

/// Sectioned key = value text:
///
///     # comment
///     [run]     group, command
///     [units]   preset, hbar, mass, a, e, c
///     [output]  dir, digits
///     [params]  any subcommand flag name without the leading dashes
///
/// Doubles are written with 17 significant digits so that
/// parse_config(serialize(cfg)) == cfg.
std::string serialize(const RunConfig& config);
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

} // namespace boxmode
