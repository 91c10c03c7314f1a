// Copyright 2026 The casent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: configuration parsing, CSV and JSON emission.

#pragma once

#include "casent/analysis.hpp"
#include "casent/figures.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace casent {

inline constexpr std::string_view version = "1.0.0";

/// hbar c / k_B in micrometre kelvin (CODATA 2018 exact constants).
inline constexpr double hbar_c_over_kB_um_K = 1.054571817e-34 * 299792458.0 / 1.380649e-23 * 1e6;

/// Nominal absolute accuracy of a closed-form reduced function.
inline constexpr double evaluation_error = 1e-13;

// ---------------------------------------------------------------------------
// Scalar and token parsing

inline double parse_number(std::string_view text, std::string_view what)
{
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
        throw UsageError(std::string(what) + ": malformed number '" + std::string(text) + "'");
    return v;
}

inline int parse_count(std::string_view text, std::string_view what)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError(std::string(what) + ": malformed integer '" + std::string(text) + "'");
    return v;
}

inline std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

/// Shortest decimal text that reads back to the same double.
inline std::string round_trip(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

/// Fixed 12-significant-digit CSV field.
inline std::string csv_number(double v)
{
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// start:stop:count:log|lin
inline Sweep parse_sweep(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw UsageError("sweep: expected start:stop:count:log|lin");
    Sweep s;
    s.start = parse_number(parts[0], "sweep");
    s.stop = parse_number(parts[1], "sweep");
    s.count = parse_count(parts[2], "sweep");
    if (parts[3] == "log")
        s.log = true;
    else if (parts[3] == "lin")
        s.log = false;
    else
        throw UsageError("sweep: spacing must be log or lin");
    if (s.count < 2) throw UsageError("sweep: count must be at least 2");
    if (!(s.start < s.stop)) throw UsageError("sweep: start must be below stop");
    if (s.log && s.start <= 0.0) throw UsageError("sweep: log sweeps need a positive start");
    return s;
}

inline std::string format_sweep(const Sweep& s)
{
    return round_trip(s.start) + ":" + round_trip(s.stop) + ":" + std::to_string(s.count) + (s.log ? ":log" : ":lin");
}

inline Interval parse_interval(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw UsageError("interval: expected lo:hi");
    return {parse_number(parts[0], "interval"), parse_number(parts[1], "interval")};
}

inline std::string format_interval(const Interval& iv) { return round_trip(iv.lo) + ":" + round_trip(iv.hi); }

/// key=value list over alpha_z, gamma_alpha, beta_z, gamma_beta, or one of
/// the shorthands pc-sphere:a=<radius> and drude:alpha_z=<v>[,gamma_alpha=<g>].
inline Particle parse_particle(std::string_view text)
{
    if (text.starts_with("pc-sphere:")) {
        const auto body = text.substr(10);
        if (!body.starts_with("a=")) throw UsageError("particle: pc-sphere expects a=<radius>");
        return Particle::pc_sphere(parse_number(body.substr(2), "particle"));
    }
    bool drude = false;
    if (text.starts_with("drude:")) {
        drude = true;
        text = text.substr(6);
    }
    Particle p;
    bool have_alpha = false;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("particle: expected key=value, got '" + item + "'");
        const auto key = item.substr(0, eq);
        const double v = parse_number(std::string_view(item).substr(eq + 1), "particle");
        if (key == "alpha_z") {
            p.alpha_z = v;
            have_alpha = true;
        } else if (key == "gamma_alpha")
            p.gamma_alpha = v;
        else if (key == "beta_z" && !drude)
            p.beta_z = v;
        else if (key == "gamma_beta" && !drude)
            p.gamma_beta = v;
        else
            throw UsageError("particle: unknown key '" + key + "'");
    }
    if (!have_alpha) throw UsageError("particle: alpha_z is required");
    p.validate();
    return p;
}

inline std::string format_particle(const Particle& p)
{
    return "alpha_z=" + round_trip(p.alpha_z) + ",gamma_alpha=" + round_trip(p.gamma_alpha) +
           ",beta_z=" + round_trip(p.beta_z) + ",gamma_beta=" + round_trip(p.gamma_beta);
}

// ---------------------------------------------------------------------------
// Resolved configuration

/// Fully resolved invocation in natural units.
struct RunConfig
{
    std::string command;
    std::string figure;     // figure id
    std::string config;     // curve or threshold configuration tag
    std::string channel;    // empty: command default
    std::string vary;       // threshold
    std::string asymptote;  // validate
    std::optional<double> gamma_alpha, y, x, Z, T, a, lambda0, alpha, beta, tol;
    std::optional<Particle> particle, p1, p2;
    std::optional<Sweep> sweep;
    std::optional<Interval> interval, window;
    bool product_anisotropy = false;
    std::string format;  // csv | json, empty: command default
    std::string out;     // empty: standard output

    /// Flags that determine the result, in a fixed order. Output path and
    /// format are excluded so the record is independent of where it lands.
    [[nodiscard]] std::vector<std::pair<std::string, std::string>> resolved_flags() const
    {
        std::vector<std::pair<std::string, std::string>> f;
        auto str = [&](const char* name, const std::string& v) {
            if (!v.empty()) f.emplace_back(name, v);
        };
        auto num = [&](const char* name, const std::optional<double>& v) {
            if (v) f.emplace_back(name, round_trip(*v));
        };
        auto part = [&](const char* name, const std::optional<Particle>& v) {
            if (v) f.emplace_back(name, format_particle(*v));
        };
        str("config", config);
        str("channel", channel);
        str("vary", vary);
        str("asymptote", asymptote);
        num("gamma-alpha", gamma_alpha);
        part("particle", particle);
        part("p1", p1);
        part("p2", p2);
        num("y", y);
        num("x", x);
        num("Z", Z);
        num("T", T);
        num("a", a);
        num("lambda0", lambda0);
        num("alpha", alpha);
        num("beta", beta);
        num("tol", tol);
        if (sweep) f.emplace_back("sweep", format_sweep(*sweep));
        if (interval) f.emplace_back("interval", format_interval(*interval));
        if (window) f.emplace_back("window", format_interval(*window));
        if (product_anisotropy) f.emplace_back("product-anisotropy", "");
        return f;
    }

    /// Command line that reproduces this configuration.
    [[nodiscard]] std::vector<std::string> canonical_args() const
    {
        std::vector<std::string> args{command};
        if (!figure.empty()) args.push_back(figure);
        for (const auto& [k, v] : resolved_flags()) {
            args.push_back("--" + k);
            if (!v.empty()) args.push_back(v);
        }
        return args;
    }
};

namespace cli_detail {

struct FlagInfo
{
    const char* name;
    const char* help;
};

inline const std::map<std::string, std::vector<FlagInfo>>& command_flags()
{
    static const std::map<std::string, std::vector<FlagInfo>> table{
        {"atom-plate",
         {{"gamma-alpha", "transverse/axial electric anisotropy (reduced mode)"},
          {"y", "dimensionless 4 pi Z T"},
          {"particle", "particle spec; selects the dimensional mode with --Z and --T"},
          {"Z", "separation"},
          {"T", "temperature"}}},
        {"two-body",
         {{"p1", "first particle (default alpha_z=1)"},
          {"p2", "second particle (default alpha_z=1)"},
          {"y", "dimensionless 4 pi Z T"},
          {"Z", "separation"},
          {"T", "temperature"}}},
        {"self-plate", {{"x", "lambda0 / (4 pi T)"}, {"lambda0", "plasma coupling"}, {"T", "temperature"}}},
        {"self-particle",
         {{"particle", "particle spec"}, {"alpha", "electric polarizability"}, {"beta", "magnetic polarizability"},
          {"T", "temperature"}}},
        {"balance", {{"a", "sphere radius"}, {"Z", "separation"}, {"T", "temperature"}}},
        {"zero",
         {{"config", "atom-plate|ee|em|pair|self-plate"}, {"gamma-alpha", "anisotropy"}, {"p1", "first particle"},
          {"p2", "second particle"}, {"interval", "search interval lo:hi"}, {"tol", "root tolerance"}}},
        {"min",
         {{"config", "atom-plate|ee|em|pair|self-plate"}, {"gamma-alpha", "anisotropy"}, {"p1", "first particle"},
          {"p2", "second particle"}, {"interval", "search interval lo:hi"}, {"tol", "location tolerance"}}},
        {"cv",
         {{"config", "atom-plate|ee|em|pair|self-plate"}, {"gamma-alpha", "anisotropy"}, {"p1", "first particle"},
          {"p2", "second particle"}, {"y", "evaluation point"}, {"x", "evaluation point (self-plate)"}}},
        {"threshold",
         {{"config", "ee|plate|tm-plate|pc-pc|pc-d"}, {"vary", "gamma-alpha|gamma-beta"}, {"tol", "threshold tolerance"}}},
        {"validate",
         {{"asymptote", "atom-plate-cubic|tm-cubic|te-cubic|ee-cubic|em-quintic"}, {"gamma-alpha", "anisotropy"},
          {"window", "fit window lo:hi"}}},
        {"figure", {}},
    };
    return table;
}

inline void set_number(std::optional<double>& field, const std::map<std::string, std::string>& raw, const char* key)
{
    if (const auto it = raw.find(key); it != raw.end()) field = parse_number(it->second, std::string("--") + key);
}

inline void set_particle(std::optional<Particle>& field, const std::map<std::string, std::string>& raw,
                         const char* key)
{
    if (const auto it = raw.find(key); it != raw.end()) field = parse_particle(it->second);
}

}  // namespace cli_detail

/// Parses a command line (without the program name) into a RunConfig.
/// Grammar violations raise UsageError, invariant violations DomainError.
inline RunConfig parse_run_config(const std::vector<std::string>& args)
{
    CLI::App app{"casent: finite-temperature Casimir-Polder entropies", "casent"};
    app.set_help_flag();
    app.require_subcommand(1, 1);
    std::map<std::string, std::map<std::string, std::string>> raw;
    std::map<std::string, std::string> common_out, common_format, common_channel, common_sweep, common_units;
    std::string figure_id;
    bool product = false;
    for (const auto& [name, flags] : cli_detail::command_flags()) {
        auto* sub = app.add_subcommand(name);
        sub->set_help_flag();
        auto& r = raw[name];
        for (const auto& f : flags) sub->add_option(std::string("--") + f.name, r[f.name], f.help);
        sub->add_option("--out", r["out"], "output path");
        sub->add_option("--format", r["format"], "csv|json");
        sub->add_option("--channel", r["channel"], "channel selector");
        sub->add_option("--sweep", r["sweep"], "start:stop:count:log|lin");
        sub->add_option("--units", r["units"], "natural|microns-kelvin");
        if (name == "figure") {
            sub->add_option("id", figure_id, "figure id")->required();
            sub->add_flag("--product-anisotropy", product, "read fig6 labels as gamma_1 gamma_2");
        }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    RunConfig cfg;
    const auto* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    std::map<std::string, std::string> given;
    for (const auto& [k, v] : raw[cfg.command])
        if (sub->count("--" + k) > 0) given[k] = v;

    using namespace cli_detail;
    auto text = [&](const char* key) {
        const auto it = given.find(key);
        return it == given.end() ? std::string() : it->second;
    };
    cfg.config = text("config");
    cfg.channel = text("channel");
    cfg.vary = text("vary");
    cfg.asymptote = text("asymptote");
    cfg.out = text("out");
    cfg.format = text("format");
    if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json")
        throw UsageError("--format: expected csv or json");
    set_number(cfg.gamma_alpha, given, "gamma-alpha");
    set_number(cfg.y, given, "y");
    set_number(cfg.x, given, "x");
    set_number(cfg.Z, given, "Z");
    set_number(cfg.T, given, "T");
    set_number(cfg.a, given, "a");
    set_number(cfg.lambda0, given, "lambda0");
    set_number(cfg.alpha, given, "alpha");
    set_number(cfg.beta, given, "beta");
    set_number(cfg.tol, given, "tol");
    set_particle(cfg.particle, given, "particle");
    set_particle(cfg.p1, given, "p1");
    set_particle(cfg.p2, given, "p2");
    if (given.contains("sweep")) cfg.sweep = parse_sweep(given["sweep"]);
    if (given.contains("interval")) cfg.interval = parse_interval(given["interval"]);
    if (given.contains("window")) cfg.window = parse_interval(given["window"]);
    if (cfg.command == "figure") {
        cfg.figure = figure_id;
        cfg.product_anisotropy = product;
    } else if (product) {
        throw UsageError("--product-anisotropy applies to figure only");
    }

    // Input-only unit conversion: lengths in micrometres, temperatures in
    // kelvin, couplings in inverse micrometres.
    const auto units = text("units");
    if (units == "microns-kelvin") {
        if (cfg.T) *cfg.T /= hbar_c_over_kB_um_K;
    } else if (!units.empty() && units != "natural") {
        throw UsageError("--units: expected natural or microns-kelvin");
    }
    if (cfg.gamma_alpha) detail::require(*cfg.gamma_alpha >= 0.0, "--gamma-alpha must be nonnegative");
    if (cfg.tol) detail::require(*cfg.tol > 0.0, "--tol must be positive");
    return cfg;
}

/// Recovers the configuration recorded in a CSV preamble.
inline RunConfig run_config_from_csv(std::string_view csv)
{
    std::istringstream in{std::string(csv)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.starts_with("#")) break;
        if (line.starts_with("# args: ")) {
            std::istringstream tokens(line.substr(8));
            std::vector<std::string> args;
            for (std::string t; tokens >> t;) args.push_back(t);
            return parse_run_config(args);
        }
    }
    throw UsageError("csv: no '# args:' preamble line");
}

// ---------------------------------------------------------------------------
// Evaluation helpers

namespace cli_detail {

/// Runs body(i) for i in [0, n) on a small pool; rethrows the failure with
/// the lowest index so error reports do not depend on scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    std::vector<std::exception_ptr> failures(n);
    auto guarded = [&](std::size_t i) {
        try {
            body(i);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) guarded(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < n;) guarded(i);
            });
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
}

struct Column
{
    std::string name;
    std::function<double(double)> value;
};

struct Table
{
    std::string abscissa;
    std::vector<double> points;
    std::vector<Column> columns;
    std::vector<std::pair<std::string, std::string>> metadata;
};

inline std::string preamble(const RunConfig& cfg)
{
    std::string s = "# casent " + std::string(version) + "\n# args:";
    for (const auto& a : cfg.canonical_args()) s += " " + a;
    return s + "\n";
}

inline std::string render_csv(const RunConfig& cfg, const Table& t)
{
    const std::size_t n = t.points.size();
    const std::size_t m = t.columns.size();
    std::vector<double> cells(n * m);
    parallel_for(n * m, [&](std::size_t k) { cells[k] = t.columns[k % m].value(t.points[k / m]); });
    std::string s = preamble(cfg);
    for (const auto& [k, v] : t.metadata) s += "# " + k + ": " + v + "\n";
    s += t.abscissa;
    for (const auto& c : t.columns) s += "," + c.name;
    s += "\n";
    for (std::size_t i = 0; i < n; ++i) {
        s += csv_number(t.points[i]);
        for (std::size_t j = 0; j < m; ++j) s += "," + csv_number(cells[i * m + j]);
        s += "\n";
    }
    return s;
}

inline nlohmann::ordered_json config_echo(const RunConfig& cfg)
{
    nlohmann::ordered_json c;
    c["command"] = cfg.command;
    if (!cfg.figure.empty()) c["figure"] = cfg.figure;
    for (const auto& [k, v] : cfg.resolved_flags()) c[k] = v.empty() ? "true" : v;
    return c;
}

inline std::string render_json(const RunConfig& cfg, nlohmann::ordered_json body)
{
    body["config"] = config_echo(cfg);
    body["version"] = std::string(version);
    return body.dump(2) + "\n";
}

inline std::vector<std::string> channel_list(const std::string& channel, const std::string& fallback)
{
    return split(channel.empty() ? fallback : channel, ',');
}

inline Particle default_particle() { return Particle::drude(1.0); }

/// Curve selected by --config and its parameters, for zero/min/cv.
inline CurveSpec curve_from_config(const RunConfig& cfg)
{
    const double g = cfg.gamma_alpha.value_or(1.0);
    const auto& tag = cfg.config;
    if (tag == "atom-plate") {
        const auto ch = cfg.channel.empty() ? "total" : cfg.channel;
        PlateSplitChannel c;
        if (ch == "total")
            c = PlateSplitChannel::total;
        else if (ch == "te")
            c = PlateSplitChannel::te;
        else if (ch == "tm")
            c = PlateSplitChannel::tm;
        else if (ch == "s_tilde")
            c = PlateSplitChannel::s_tilde;
        else
            throw UsageError("--channel: atom-plate curves take total|te|tm|s_tilde");
        return AtomPlateCurve{g, c};
    }
    if (tag == "ee") return EeCurve{g};
    if (tag == "em") return EmCurve{};
    if (tag == "pair") {
        const auto ch = cfg.channel.empty() ? "total" : cfg.channel;
        PairChannel c;
        if (ch == "total")
            c = PairChannel::total;
        else if (ch == "ee")
            c = PairChannel::ee;
        else if (ch == "mm")
            c = PairChannel::mm;
        else if (ch == "em")
            c = PairChannel::em;
        else
            throw UsageError("--channel: pair curves take total|ee|mm|em");
        return PairCurve{cfg.p1.value_or(default_particle()), cfg.p2.value_or(default_particle()), c};
    }
    if (tag == "self-plate")
        return SelfPlateCurve{plate_channel_from_string(cfg.channel.empty() ? "total" : cfg.channel)};
    if (tag.empty()) throw UsageError("--config is required");
    throw UsageError("--config: unknown curve '" + tag + "'");
}

inline bool wants_json(const RunConfig& cfg, bool default_json)
{
    return cfg.format.empty() ? default_json : cfg.format == "json";
}

inline void reject_csv(const RunConfig& cfg)
{
    if (cfg.format == "csv") throw UsageError("--format csv needs a --sweep");
}

// ---------------------------------------------------------------------------
// Commands

inline std::string atom_plate_command(const RunConfig& cfg)
{
    if (cfg.particle) {
        if (cfg.sweep) throw UsageError("atom-plate: the dimensional mode takes scalar --Z and --T, not --sweep");
        if (!cfg.Z || !cfg.T) throw UsageError("atom-plate: --particle needs --Z and --T");
        reject_csv(cfg);
        const ThermalGeometry geom{*cfg.Z, *cfg.T};
        nlohmann::ordered_json j;
        const auto ch = cfg.channel.empty() ? "total" : cfg.channel;
        const double v = entropy_atom_plate(*cfg.particle, geom, atom_plate_channel_from_string(ch));
        j["value"] = v;
        j["error_estimate"] = evaluation_error * std::abs(v);
        j["y"] = geom.y();
        return render_json(cfg, j);
    }
    const double g = cfg.gamma_alpha.value_or(1.0);
    auto column = [g](const std::string& ch) -> Column {
        if (ch == "total") return {"s", [g](double y) { return reduced_s(g, y); }};
        if (ch == "te") return {"s_TE", [g](double y) { return te_tm_split(g, y).te; }};
        if (ch == "tm") return {"s_TM", [g](double y) { return te_tm_split(g, y).tm; }};
        if (ch == "s_tilde") return {"s_tilde", [g](double y) { return reduced_s_tilde(g, y); }};
        if (ch == "f") return {"f", [g](double y) { return reduced_f(g, y); }};
        throw UsageError("--channel: atom-plate takes total|te|tm|s_tilde|f");
    };
    if (cfg.sweep) {
        if (wants_json(cfg, false)) throw UsageError("--format json needs a scalar point");
        Table t{"y", cfg.sweep->values(), {}, {{"y", "4 pi Z T"}, {"gamma_alpha", round_trip(g)},
                                               {"normalization", "S = (3 alpha_z / 2 Z^3) s"}}};
        for (const auto& ch : channel_list(cfg.channel, "total")) t.columns.push_back(column(ch));
        return render_csv(cfg, t);
    }
    reject_csv(cfg);
    double y = 0.0;
    if (cfg.y)
        y = *cfg.y;
    else if (cfg.Z && cfg.T)
        y = ThermalGeometry{*cfg.Z, *cfg.T}.y();
    else
        throw UsageError("atom-plate: give --y, --sweep, or --Z with --T");
    nlohmann::ordered_json j;
    const auto channels = channel_list(cfg.channel, "total");
    if (channels.size() != 1) throw UsageError("atom-plate: a scalar point takes one channel");
    const double v = column(channels.front()).value(y);
    j["value"] = v;
    j["error_estimate"] = evaluation_error;
    j["y"] = y;
    return render_json(cfg, j);
}

inline std::string two_body_command(const RunConfig& cfg)
{
    const auto p1 = cfg.p1.value_or(default_particle());
    const auto p2 = cfg.p2.value_or(default_particle());
    auto column = [&](const std::string& ch) -> Column {
        if (ch == "ee") return {"s_EE", [p1, p2](double y) { return reduced_pair_entropy(p1, p2, y).ee; }};
        if (ch == "mm") return {"s_MM", [p1, p2](double y) { return reduced_pair_entropy(p1, p2, y).mm; }};
        if (ch == "em") return {"s_EM", [p1, p2](double y) { return reduced_pair_entropy(p1, p2, y).em; }};
        if (ch == "total") return {"s_total", [p1, p2](double y) { return reduced_pair_entropy(p1, p2, y).total; }};
        throw UsageError("--channel: two-body takes ee|mm|em|total");
    };
    if (cfg.sweep) {
        if (wants_json(cfg, false)) throw UsageError("--format json needs a scalar point");
        Table t{"y", cfg.sweep->values(), {},
                {{"y", "4 pi Z T"}, {"p1", format_particle(p1)}, {"p2", format_particle(p2)},
                 {"normalization", "S = [(alpha_z^1)^2 / Z^6] s"}}};
        for (const auto& ch : channel_list(cfg.channel, "ee,mm,em,total")) t.columns.push_back(column(ch));
        return render_csv(cfg, t);
    }
    reject_csv(cfg);
    nlohmann::ordered_json j;
    if (cfg.Z && cfg.T) {
        const auto r = entropy_two_body({p1, p2, {*cfg.Z, *cfg.T}});
        j["value"] = r.S_total;
        j["error_estimate"] = evaluation_error * std::abs(r.S_total);
        j["S_EE"] = r.S_EE;
        j["S_MM"] = r.S_MM;
        j["S_EM"] = r.S_EM;
        j["S_total"] = r.S_total;
        j["y"] = ThermalGeometry{*cfg.Z, *cfg.T}.y();
        return render_json(cfg, j);
    }
    if (!cfg.y) throw UsageError("two-body: give --y, --sweep, or --Z with --T");
    const auto r = reduced_pair_entropy(p1, p2, *cfg.y);
    j["value"] = r.total;
    j["error_estimate"] = evaluation_error;
    j["s_EE"] = r.ee;
    j["s_MM"] = r.mm;
    j["s_EM"] = r.em;
    j["s_total"] = r.total;
    return render_json(cfg, j);
}

inline std::string self_plate_command(const RunConfig& cfg)
{
    if (cfg.sweep) {
        if (wants_json(cfg, false)) throw UsageError("--format json needs a scalar point");
        Table t{"x", cfg.sweep->values(), {},
                {{"x", "lambda0 / (4 pi T)"}, {"normalization", "S/A = (lambda0^2 / 16 pi) s"}}};
        using R = AsymptoticRegime;
        auto add = [&](const std::string& ch) {
            const auto c = plate_channel_from_string(ch);
            const std::string suffix = c == PlateChannel::te ? "TE" : c == PlateChannel::tm ? "TM" : "total";
            t.columns.push_back({"s_" + suffix, [c](double x) { return plate_self_entropy(x, c).value; }});
        };
        auto add_asym = [&](PlateChannel c, R r, const char* name) {
            t.columns.push_back({name, [c, r](double x) { return plate_self_entropy_asymptotic(x, c, r); }});
        };
        if (cfg.channel.empty()) {
            for (const char* ch : {"te", "tm", "total"}) add(ch);
            add_asym(PlateChannel::te, R::low_temperature, "asym_low_TE");
            add_asym(PlateChannel::tm, R::low_temperature, "asym_low_TM");
            add_asym(PlateChannel::te, R::high_temperature, "asym_high_TE");
            add_asym(PlateChannel::tm, R::high_temperature, "asym_high_TM");
        } else {
            for (const auto& ch : channel_list(cfg.channel, "")) add(ch);
        }
        return render_csv(cfg, t);
    }
    reject_csv(cfg);
    const auto channel = plate_channel_from_string(cfg.channel.empty() ? "total" : cfg.channel);
    nlohmann::ordered_json j;
    if (cfg.lambda0 && cfg.T) {
        const PlasmaPlate plate{*cfg.lambda0, *cfg.T};
        const auto r = plate_self_entropy(plate.x(), channel);
        const double scale = plate.lambda0 * plate.lambda0 / (16.0 * std::numbers::pi);
        j["value"] = scale * r.value;
        j["error_estimate"] = scale * r.error_estimate;
        j["x"] = plate.x();
        j["s"] = r.value;
        return render_json(cfg, j);
    }
    if (!cfg.x) throw UsageError("self-plate: give --x, --sweep, or --lambda0 with --T");
    const auto r = plate_self_entropy(*cfg.x, channel);
    j["value"] = r.value;
    j["error_estimate"] = r.error_estimate;
    j["direct_modes"] = r.regulator.direct_modes;
    j["tail_orders"] = r.regulator.tail_orders;
    return render_json(cfg, j);
}

inline std::string self_particle_command(const RunConfig& cfg)
{
    reject_csv(cfg);
    if (!cfg.T) throw UsageError("self-particle: --T is required");
    double alpha = 0.0, beta = 0.0;
    if (cfg.particle) {
        if (cfg.alpha || cfg.beta) throw UsageError("self-particle: give --particle or --alpha/--beta, not both");
        alpha = cfg.particle->alpha_z;
        beta = cfg.particle->beta_z;
    } else {
        if (!cfg.alpha) throw UsageError("self-particle: give --particle or --alpha");
        alpha = *cfg.alpha;
        beta = cfg.beta.value_or(0.0);
    }
    nlohmann::ordered_json j;
    const double v = nanoparticle_self_entropy(alpha, beta, *cfg.T);
    j["value"] = v;
    j["error_estimate"] = evaluation_error * std::abs(v);
    return render_json(cfg, j);
}

inline std::string balance_command(const RunConfig& cfg, std::ostream& err)
{
    reject_csv(cfg);
    if (!cfg.a || !cfg.Z || !cfg.T) throw UsageError("balance: --a, --Z and --T are required");
    const auto b = total_entropy_balance(*cfg.a, *cfg.Z, *cfg.T);
    if (b.sphere_size_warning) err << "casent: warning=sphere-size reason=\"a/Z above 0.1\"\n";
    nlohmann::ordered_json j;
    j["value"] = b.S_total;
    j["error_estimate"] = evaluation_error * (std::abs(b.S_self) + std::abs(b.S_interaction));
    j["S_self"] = b.S_self;
    j["S_interaction"] = b.S_interaction;
    j["S_total"] = b.S_total;
    j["sphere_size_warning"] = b.sphere_size_warning;
    return render_json(cfg, j);
}

inline Interval default_interval(const RunConfig& cfg, const Interval& fallback)
{
    if (cfg.interval) return *cfg.interval;
    if (cfg.config == "self-plate") return {plate_x_min, plate_x_max};
    return fallback;
}

inline std::string zero_command(const RunConfig& cfg)
{
    reject_csv(cfg);
    const auto curve = curve_from_config(cfg);
    const double tol = cfg.tol.value_or(1e-6);
    const auto roots = find_zero_crossings(curve, default_interval(cfg, {0.1, 50.0}), tol);
    nlohmann::ordered_json j;
    j["value"] = static_cast<int>(roots.size());
    j["error_estimate"] = tol;
    j["roots"] = roots;
    return render_json(cfg, j);
}

inline std::string min_command(const RunConfig& cfg)
{
    reject_csv(cfg);
    const auto curve = curve_from_config(cfg);
    const double tol = cfg.tol.value_or(1e-8);
    const auto m = min_entropy(curve, default_interval(cfg, {0.0, 10.0}), tol);
    nlohmann::ordered_json j;
    j["value"] = m.value;
    j["error_estimate"] = tol;
    j["y_min"] = m.y;
    j["s_min"] = m.value;
    return render_json(cfg, j);
}

inline std::string cv_command(const RunConfig& cfg)
{
    reject_csv(cfg);
    const auto curve = curve_from_config(cfg);
    const auto point = cfg.y ? cfg.y : cfg.x;
    if (!point) throw UsageError("cv: --y (or --x for self-plate) is required");
    const auto c = specific_heat(curve, *point);
    nlohmann::ordered_json j;
    j["value"] = c.value;
    j["error_estimate"] = c.error_estimate;
    return render_json(cfg, j);
}

inline std::string threshold_command(const RunConfig& cfg)
{
    reject_csv(cfg);
    if (cfg.config.empty()) throw UsageError("threshold: --config is required");
    const auto problem = make_threshold_problem(threshold_config_from_string(cfg.config),
                                                vary_parameter_from_string(cfg.vary.empty() ? "gamma-alpha" : cfg.vary));
    const double tol = cfg.tol.value_or(1e-3);
    const auto r = anisotropy_threshold(problem, tol);
    nlohmann::ordered_json j;
    j["value"] = r.gamma_star;
    j["error_estimate"] = tol;
    j["gamma_star"] = r.gamma_star;
    j["description"] = problem.description;
    return render_json(cfg, j);
}

inline std::string validate_command(const RunConfig& cfg)
{
    reject_csv(cfg);
    if (cfg.asymptote.empty()) throw UsageError("validate: --asymptote is required");
    const auto spec = asymptote_spec(asymptote_tag_from_string(cfg.asymptote), cfg.gamma_alpha.value_or(1.0));
    const auto fit = validate_asymptote(spec, cfg.window.value_or(spec.default_window));
    nlohmann::ordered_json j;
    j["value"] = fit.relative_deviation;
    j["error_estimate"] = 0.0;
    j["fitted"] = fit.fitted;
    j["reference"] = fit.reference;
    j["relative_deviation"] = fit.relative_deviation;
    return render_json(cfg, j);
}

inline std::string figure_command(const RunConfig& cfg)
{
    if (cfg.format == "json") throw UsageError("figure: output is CSV");
    const auto recipe = figure_recipe(cfg.figure, cfg.product_anisotropy);
    Table t{recipe.abscissa, recipe.sweep.values(), {},
            {{"figure", recipe.id},
             {"description", recipe.description},
             {recipe.abscissa, recipe.abscissa_meaning},
             {"normalization", recipe.normalization}}};
    for (const auto& c : recipe.curves)
        t.columns.push_back({c.label, [c](double v) { return c.value_scale * evaluate(c.curve, c.argument_scale * v); }});
    return render_csv(cfg, t);
}

}  // namespace cli_detail

/// Produces the document for a resolved configuration. Warnings go to err.
inline std::string execute(const RunConfig& cfg, std::ostream& err)
{
    using namespace cli_detail;
    const auto& c = cfg.command;
    if (c == "atom-plate") return atom_plate_command(cfg);
    if (c == "two-body") return two_body_command(cfg);
    if (c == "self-plate") return self_plate_command(cfg);
    if (c == "self-particle") return self_particle_command(cfg);
    if (c == "balance") return balance_command(cfg, err);
    if (c == "zero") return zero_command(cfg);
    if (c == "min") return min_command(cfg);
    if (c == "cv") return cv_command(cfg);
    if (c == "threshold") return threshold_command(cfg);
    if (c == "validate") return validate_command(cfg);
    if (c == "figure") return figure_command(cfg);
    throw UsageError("unknown command '" + c + "'");
}

/// CSV curve document for a sweep or figure configuration.
inline std::string emit_curve(const RunConfig& cfg)
{
    std::ostringstream sink;
    auto doc = execute(cfg, sink);
    if (!doc.starts_with("# casent")) throw UsageError("configuration does not describe a curve");
    return doc;
}

inline std::string usage_text()
{
    return "usage: casent <atom-plate|two-body|self-plate|self-particle|balance|zero|min|threshold|cv|figure|validate> "
           "[flags]\n"
           "common flags: --out <path> --format csv|json --channel <name> --sweep start:stop:count:log|lin "
           "--units natural|microns-kelvin\n";
}

/// Entry point: 0 success, 2 usage, 3 domain, 4 convergence.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    auto fail = [&](const char* kind, const std::string& why, int code) {
        err << "casent: error=" << kind << " reason=" << nlohmann::json(why).dump() << "\n";
        return code;
    };
    if (args.empty() || args.front() == "--help" || args.front() == "-h") {
        (args.empty() ? err : out) << usage_text();
        return args.empty() ? 2 : 0;
    }
    if (args.front() == "--version") {
        out << "casent " << version << "\n";
        return 0;
    }
    try {
        const auto cfg = parse_run_config(args);
        const auto doc = execute(cfg, err);
        if (cfg.out.empty()) {
            out << doc;
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) throw IoError("cannot open output path '" + cfg.out + "'");
            file << doc;
            if (!file.flush()) throw IoError("cannot write output path '" + cfg.out + "'");
        }
        return 0;
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 2);
    } catch (const IoError& e) {
        return fail("io", e.what(), 2);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), 3);
    } catch (const ConvergenceError& e) {
        return fail("convergence", e.what(), 4);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
}

}  // namespace casent
