#include "boxmode/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace boxmode {

namespace {

std::string format_exact(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& value, int line)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": " + key + " expects a number, got '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value, int line)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": " + key + " expects an integer, got '" + value + "'");
    }
}

} // namespace

void RunConfig::validate() const
{
    if (units.preset != "natural" && units.preset != "custom")
        throw ConfigError("units preset must be 'natural' or 'custom'");
    if (units.preset == "natural" && !(units == Units{}))
        throw ConfigError("natural units fix hbar, mass, a, e and c to 1; use --units custom");
    for (double v : {units.hbar, units.mass, units.a, units.e, units.c}) {
        if (!(v > 0.0))
            throw ConfigError("physical constants must be positive");
    }
    if (digits < 1 || digits > 17)
        throw ConfigError("digits must lie in [1, 17]");
    if (out_dir.empty())
        throw ConfigError("output directory must not be empty");
}

std::string serialize(const RunConfig& config)
{
    std::ostringstream out;
    out << "[run]\n";
    out << "group = " << config.group << "\n";
    out << "command = " << config.command << "\n";
    out << "\n[units]\n";
    out << "preset = " << config.units.preset << "\n";
    out << "hbar = " << format_exact(config.units.hbar) << "\n";
    out << "mass = " << format_exact(config.units.mass) << "\n";
    out << "a = " << format_exact(config.units.a) << "\n";
    out << "e = " << format_exact(config.units.e) << "\n";
    out << "c = " << format_exact(config.units.c) << "\n";
    out << "\n[output]\n";
    out << "dir = " << config.out_dir << "\n";
    out << "digits = " << config.digits << "\n";
    out << "\n[params]\n";
    for (const auto& [key, value] : config.params)
        out << key << " = " << value << "\n";
    return out.str();
}

RunConfig parse_config(std::string_view text)
{
    RunConfig cfg;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (section != "run" && section != "units" && section != "output" && section != "params")
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(std::string_view(line).substr(0, eq));
        const auto value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");

        if (section == "run") {
            if (key == "group")
                cfg.group = value;
            else if (key == "command")
                cfg.command = value;
            else
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "' in [run]");
        } else if (section == "units") {
            if (key == "preset")
                cfg.units.preset = value;
            else if (key == "hbar")
                cfg.units.hbar = parse_double(key, value, line_no);
            else if (key == "mass")
                cfg.units.mass = parse_double(key, value, line_no);
            else if (key == "a")
                cfg.units.a = parse_double(key, value, line_no);
            else if (key == "e")
                cfg.units.e = parse_double(key, value, line_no);
            else if (key == "c")
                cfg.units.c = parse_double(key, value, line_no);
            else
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "' in [units]");
        } else if (section == "output") {
            if (key == "dir")
                cfg.out_dir = value;
            else if (key == "digits")
                cfg.digits = parse_int(key, value, line_no);
            else
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "' in [output]");
        } else if (section == "params") {
            cfg.params[key] = value;
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": key outside of any section");
        }
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream file(path);
    if (!file)
        throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_config(buf.str());
}

} // namespace boxmode
