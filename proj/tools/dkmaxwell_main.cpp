// Command-line front end for the dkmaxwell library.
//
//   dkmaxwell spectrum --j 10 --n 10            frequency table
//   dkmaxwell mode --kind electric --j 2 --n 1  radial profile + field sample
//   dkmaxwell verify --suite full               self-check report
//
// Output is CSV (default) or JSON; --out writes to a file instead of stdout.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dkmaxwell/dkmaxwell.hpp"

namespace dk = dkmaxwell;
using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
}

struct SpectrumArgs {
    int j_max = 10;
    int n_max = 10;
    double rho = 1.0;
    double c = 1.0;
    std::string format = "csv";
    std::string out;
};

int run_spectrum(const SpectrumArgs& a) {
    const auto table = dk::modes::spectrum(a.j_max, a.n_max, a.rho, a.c);
    if (a.format == "csv") {
        std::string text = "j,n,omega_index,omega\n";
        for (const auto& e : table) {
            text += std::to_string(e.j) + ',' + std::to_string(e.n) + ',' +
                    std::to_string(e.omega_index) + ',' + fmt17(e.omega) + '\n';
        }
        write_output(a.out, text);
    } else {
        json doc;
        doc["schema_version"] = 1;
        doc["config"] = {{"command", "spectrum"}, {"j_max", a.j_max}, {"n_max", a.n_max},
                         {"rho", a.rho},          {"c", a.c}};
        json rows = json::array();
        for (const auto& e : table)
            rows.push_back({{"j", e.j},
                            {"n", e.n},
                            {"omega_index", e.omega_index},
                            {"omega", e.omega}});
        doc["rows"] = rows;
        write_output(a.out, doc.dump(2) + "\n");
    }
    return 0;
}

struct ModeArgs {
    std::string kind = "magnetic";
    int j = 1;
    int n = 0;
    int m = 0;
    double rho = 1.0;
    double c = 1.0;
    int grid_points = 128;
    double chi_margin = 0.02;
    double theta = dk::radial::kPi / 2.0;
    double phi = 0.0;
    std::string format = "csv";
    std::string out;
};

int run_mode(const ModeArgs& a) {
    const dk::modes::WaveKind kind = a.kind == "magnetic" ? dk::modes::WaveKind::kMagnetic
                                                          : dk::modes::WaveKind::kElectric;
    dk::modes::RadialSolution sol({kind, a.j, a.n, a.m, a.rho, a.c});
    sol.normalize(a.grid_points, a.chi_margin);
    const auto grid = dk::modes::chi_grid(a.grid_points, a.chi_margin);

    if (a.format == "csv") {
        std::string text = "chi";
        for (int k = 1; k <= 10; ++k)
            text += ",f" + std::to_string(k) + "_re,f" + std::to_string(k) + "_im";
        for (int k = 1; k <= 10; ++k)
            text += ",field" + std::to_string(k) + "_re,field" + std::to_string(k) + "_im";
        text += '\n';
        for (double chi : grid) {
            const dk::Vec10 f = sol.amplitudes(chi);
            const dk::Vec10 phi =
                dk::modes::field_sample(sol, {0.0, chi, a.theta, a.phi});
            text += fmt17(chi);
            for (const auto& v : f) {
                text += ',';
                text += fmt17(v.real());
                text += ',';
                text += fmt17(v.imag());
            }
            for (const auto& v : phi) {
                text += ',';
                text += fmt17(v.real());
                text += ',';
                text += fmt17(v.imag());
            }
            text += '\n';
        }
        write_output(a.out, text);
    } else {
        json doc;
        doc["schema_version"] = 1;
        doc["config"] = {{"command", "mode"},  {"kind", a.kind},
                         {"j", a.j},           {"n", a.n},
                         {"m", a.m},           {"rho", a.rho},
                         {"c", a.c},           {"grid_points", a.grid_points},
                         {"chi_margin", a.chi_margin}, {"theta", a.theta},
                         {"phi", a.phi},       {"omega_index", sol.spec().omega_index()},
                         {"omega", sol.spec().omega_physical()}};
        json rows = json::array();
        for (double chi : grid) {
            const dk::Vec10 f = sol.amplitudes(chi);
            const dk::Vec10 phi =
                dk::modes::field_sample(sol, {0.0, chi, a.theta, a.phi});
            json amps = json::array(), field = json::array();
            for (const auto& v : f) amps.push_back({v.real(), v.imag()});
            for (const auto& v : phi) field.push_back({v.real(), v.imag()});
            rows.push_back({{"chi", chi}, {"amplitudes", amps}, {"field", field}});
        }
        doc["rows"] = rows;
        write_output(a.out, doc.dump(2) + "\n");
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "full";
    double detune = 0.0;
    std::vector<std::string> tolerances;
    std::string format = "csv";
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    std::map<std::string, double> overrides;
    for (const auto& spec : a.tolerances) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("tolerance must be NAME=VALUE, got: " + spec);
        overrides[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
    }
    dk::verify::Suite suite = dk::verify::suite_by_name(a.suite, a.detune);
    dk::verify::apply_overrides(suite, overrides);
    const bool ok = dk::verify::all_pass(suite);

    if (a.format == "csv") {
        std::string text = "name,value,bound,comparison,pass\n";
        for (const auto& c : suite) {
            text += c.name + ',' + fmt17(c.value) + ',' + fmt17(c.bound) + ',' +
                    (c.lower_bound ? "lower" : "upper") + ',' + (c.pass ? "1" : "0") + '\n';
        }
        write_output(a.out, text);
    } else {
        json doc;
        doc["schema_version"] = 1;
        json tols = json::object();
        for (const auto& [k, v] : overrides) tols[k] = v;
        doc["config"] = {{"command", "verify"},
                         {"suite", a.suite},
                         {"detune", a.detune},
                         {"tolerance_overrides", tols}};
        json report = json::array();
        for (const auto& c : suite)
            report.push_back({{"name", c.name},
                              {"value", c.value},
                              {"bound", c.bound},
                              {"comparison", c.lower_bound ? "lower" : "upper"},
                              {"pass", c.pass}});
        doc["report"] = report;
        doc["all_pass"] = ok;
        write_output(a.out, doc.dump(2) + "\n");
    }
    return ok ? 0 : 1;
}

void add_output_options(CLI::App* cmd, std::string& format, std::string& out) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maxwell standing waves on the 3-sphere in the matrix tetrad formalism"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file");

    SpectrumArgs sa;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Tabulate eigenfrequencies");
    spectrum->add_option("--j", sa.j_max, "Largest angular momentum j")->capture_default_str();
    spectrum->add_option("--n", sa.n_max, "Largest radial overtone n")->capture_default_str();
    spectrum->add_option("--rho", sa.rho, "Sphere radius")->capture_default_str();
    spectrum->add_option("--c-light", sa.c, "Wave speed")->capture_default_str();
    add_output_options(spectrum, sa.format, sa.out);

    ModeArgs ma;
    CLI::App* mode = app.add_subcommand("mode", "Tabulate one mode's radial profile and field");
    mode->add_option("--kind", ma.kind, "Mode parity family")
        ->check(CLI::IsMember({"magnetic", "electric"}))
        ->capture_default_str();
    mode->add_option("--j", ma.j, "Angular momentum j >= 1")->capture_default_str();
    mode->add_option("--n", ma.n, "Radial overtone n >= 0")->capture_default_str();
    mode->add_option("--m", ma.m, "Azimuthal projection, |m| <= j")->capture_default_str();
    mode->add_option("--rho", ma.rho, "Sphere radius")->capture_default_str();
    mode->add_option("--c-light", ma.c, "Wave speed")->capture_default_str();
    mode->add_option("--grid-points", ma.grid_points, "Number of chi grid points")
        ->capture_default_str();
    mode->add_option("--chi-margin", ma.chi_margin, "Distance from the poles chi = 0, pi")
        ->capture_default_str();
    mode->add_option("--theta", ma.theta, "Polar angle of the field sample")
        ->capture_default_str();
    mode->add_option("--phi", ma.phi, "Azimuth of the field sample")->capture_default_str();
    add_output_options(mode, ma.format, ma.out);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "Run self-check suites");
    verify->add_option("--suite", va.suite, "Which suite to run")
        ->check(CLI::IsMember(
            {"algebra", "geometry", "angular", "radial", "gauge", "equation", "full"}))
        ->capture_default_str();
    verify->add_option("--detune", va.detune,
                       "Shift the operator frequency in the equation checks")
        ->capture_default_str();
    verify->add_option("--tolerance", va.tolerances,
                       "Override a check bound as NAME=VALUE (repeatable)");
    add_output_options(verify, va.format, va.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*spectrum) return run_spectrum(sa);
        if (*mode) return run_mode(ma);
        return run_verify(va);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
