// eikonal <subcommand> <config.json> [options]
//
// Exit status: 0 success, 1 bad input or configuration, 2 numerical failure
// (including a comparison that misses its tolerance).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "eikonal/amplitude.hpp"
#include "eikonal/classical.hpp"
#include "eikonal/config.hpp"
#include "eikonal/csv.hpp"
#include "eikonal/errors.hpp"
#include "eikonal/oracle.hpp"
#include "eikonal/scan.hpp"

namespace {

using eikonal::Complex;
using nlohmann::ordered_json;

struct Options {
    std::string config_path;
    std::string p_text;
    std::string grid_text;
    std::string out_dir;
    std::string mode = "classical";
    std::string form = "corrected";
    std::string method = "closed_vs_oracle";
    double tol = 1e-10;
    std::size_t focal_index = 0;
    double window = 0.5;
    std::size_t resolution = 21;
    bool json = false;
};

ordered_json to_json(Complex z) {
    return ordered_json::array({z.real(), z.imag()});
}

eikonal::PGrid parse_grid(const std::string& text) {
    const std::vector<std::string> f = eikonal::split_csv_line(text);
    if (f.size() != 3 && f.size() != 4) {
        throw eikonal::InputError("--grid expects re0,re1,n[,im]");
    }
    const double n = eikonal::parse_double(f[2]);
    if (!(n >= 1.0) || n != std::floor(n)) {
        throw eikonal::InputError("--grid point count must be a positive integer");
    }
    const double im = f.size() == 4 ? eikonal::parse_double(f[3]) : 0.0;
    return eikonal::real_axis_grid(eikonal::parse_double(f[0]), eikonal::parse_double(f[1]),
                                   std::size_t(n), im);
}

eikonal::AmplitudeForm parse_form(const std::string& text) {
    for (auto f : {eikonal::AmplitudeForm::corrected, eikonal::AmplitudeForm::printed}) {
        if (text == eikonal::to_string(f)) {
            return f;
        }
    }
    throw eikonal::InputError("unknown form '" + text + "'");
}

eikonal::ComparisonMethod parse_method(const std::string& text) {
    using M = eikonal::ComparisonMethod;
    for (M m : {M::closed_vs_oracle, M::printed_vs_oracle, M::identical_vs_generic,
                M::paper_sigma_vs_classical}) {
        if (text == eikonal::to_string(m)) {
            return m;
        }
    }
    throw eikonal::InputError("unknown comparison method '" + text + "'");
}

// Momenta from exactly one of --p and --grid.
std::vector<Complex> momenta(const Options& o, bool& single) {
    if (o.p_text.empty() == o.grid_text.empty()) {
        throw eikonal::InputError("give exactly one of --p and --grid");
    }
    single = !o.p_text.empty();
    if (single) {
        return {eikonal::parse_complex(o.p_text)};
    }
    return parse_grid(o.grid_text).points;
}

void write_text(const Options& o, const std::string& name, const std::string& text) {
    if (o.out_dir.empty()) {
        std::cout << text;
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(o.out_dir, ec);
    const std::string path = (std::filesystem::path(o.out_dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) {
        throw eikonal::IoError("failed writing '" + path + "'");
    }
    std::cout << path << "\n";
}

int run_validate(const eikonal::ScatteringConfig& config, const Options&) {
    std::cout << eikonal::serialize_config(config) << "\n";
    return 0;
}

int run_focal(const eikonal::ScatteringConfig& config, const Options& o) {
    const std::vector<eikonal::FocalPoint> points = eikonal::focal_points(config);
    if (o.json) {
        ordered_json list = ordered_json::array();
        for (const auto& f : points) {
            ordered_json item;
            item["at_infinity"] = f.at_infinity;
            item["b_f"] = f.at_infinity ? ordered_json(nullptr) : to_json(f.b_f);
            item["p_f"] = to_json(f.p_f);
            item["degenerate"] = f.degenerate;
            item["residual"] = f.residual;
            list.push_back(item);
        }
        std::cout << list.dump() << "\n";
        return 0;
    }
    std::cout << "re_b, im_b, re_p, im_p, at_infinity, degenerate\n";
    for (const auto& f : points) {
        std::cout << eikonal::join_csv_line(
                         {eikonal::format_double(f.at_infinity ? INFINITY : f.b_f.real()),
                          eikonal::format_double(f.at_infinity ? INFINITY : f.b_f.imag()),
                          eikonal::format_double(f.p_f.real()), eikonal::format_double(f.p_f.imag()),
                          f.at_infinity ? "1" : "0", f.degenerate ? "1" : "0"})
                  << "\n";
    }
    return 0;
}

// sigma, amplitude and oracle share the point-or-grid layout.
struct PointValue {
    Complex value;
    double est_err = 0.0;
    std::string note;
};

int run_pointwise(const Options& o, bool real_valued, bool with_err,
                  const std::function<PointValue(Complex)>& eval) {
    bool single = false;
    const std::vector<Complex> points = momenta(o, single);
    if (single) {
        const PointValue v = eval(points.front());
        if (o.json) {
            ordered_json out;
            out["p"] = to_json(points.front());
            if (real_valued) {
                out["sigma"] = v.value.real();
            } else {
                out["f"] = to_json(v.value);
            }
            if (with_err) {
                out["est_err"] = v.est_err;
            }
            if (!v.note.empty()) {
                out["note"] = v.note;
            }
            std::cout << out.dump() << "\n";
        } else if (real_valued) {
            std::cout << eikonal::format_double(v.value.real()) << "\n";
        } else {
            std::cout << eikonal::format_complex(v.value) << "\n";
        }
        return 0;
    }
    std::ostringstream csv;
    csv << (real_valued ? "re_p, im_p, sigma" : "re_p, im_p, re_f, im_f")
        << (with_err ? ", est_err" : "") << "\n";
    for (Complex p : points) {
        const PointValue v = eval(p);
        std::vector<std::string> row{eikonal::format_double(p.real()),
                                     eikonal::format_double(p.imag()),
                                     eikonal::format_double(v.value.real())};
        if (!real_valued) {
            row.push_back(eikonal::format_double(v.value.imag()));
        }
        if (with_err) {
            row.push_back(eikonal::format_double(v.est_err));
        }
        csv << eikonal::join_csv_line(row) << "\n";
    }
    std::cout << csv.str();
    return 0;
}

int run_compare(const eikonal::ScatteringConfig& config, const Options& o) {
    if (o.grid_text.empty()) {
        throw eikonal::InputError("compare needs --grid");
    }
    const eikonal::ComparisonReport report = eikonal::compare_amplitudes(
        config, parse_grid(o.grid_text).points, parse_method(o.method), o.tol);
    write_text(o, eikonal::config_digest(config) + "_compare_" + o.method + ".csv",
               eikonal::comparison_csv(report));
    std::cerr << eikonal::to_string(report.method) << ": mean ratio "
              << eikonal::format_complex(report.mean_ratio) << ", abs spread "
              << eikonal::format_double(report.abs_spread) << ", arg spread "
              << eikonal::format_double(report.arg_spread)
              << (report.passed ? ", passed" : ", FAILED") << "\n";
    return report.passed ? 0 : 2;
}

eikonal::ScanOptions scan_options(const Options& o) {
    eikonal::ScanOptions opts;
    opts.form = parse_form(o.form);
    opts.oracle_tol = o.tol;
    return opts;
}

int run_scan(const eikonal::ScatteringConfig& config, const Options& o) {
    if (o.grid_text.empty()) {
        throw eikonal::InputError("scan needs --grid");
    }
    const eikonal::ScanTable table = eikonal::scan_cross_section(
        config, parse_grid(o.grid_text), eikonal::parse_scan_mode(o.mode), scan_options(o));
    write_text(o, eikonal::scan_file_name(table), eikonal::scan_csv(table));
    return 0;
}

int run_zoom(const eikonal::ScatteringConfig& config, const Options& o) {
    const eikonal::ScanMode mode = eikonal::parse_scan_mode(o.mode);
    const eikonal::ScanOptions opts = scan_options(o);
    const eikonal::ScanTable table =
        eikonal::focal_zoom(config, o.focal_index, o.window, o.resolution, mode, opts);
    write_text(o, eikonal::scan_file_name(table), eikonal::scan_csv(table));

    // A focal momentum off the real axis is not reachable by physical
    // momenta; the real-axis slice under it shows what survives.
    const Complex pf = eikonal::focal_points(config)[o.focal_index].p_f;
    if (!o.out_dir.empty() && pf.imag() != 0.0) {
        const eikonal::ScanTable slice = eikonal::scan_cross_section(
            config,
            eikonal::real_axis_grid(pf.real() - 0.5 * o.window, pf.real() + 0.5 * o.window,
                                    o.resolution),
            mode, opts);
        write_text(o, eikonal::scan_file_name(slice), eikonal::scan_csv(slice));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eikonal and classical small-angle scattering off planar dyon configurations"};
    app.require_subcommand(1);
    Options o;

    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("config", o.config_path, "JSON configuration")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_flag("--json", o.json, "JSON output for single values");
        return sub;
    };
    auto add_points = [&](CLI::App* sub) {
        sub->add_option("--p", o.p_text, "momentum re,im");
        sub->add_option("--grid", o.grid_text, "real-axis grid re0,re1,n[,im]");
    };

    CLI::App* validate = add("validate", "print the normalized configuration");
    CLI::App* focal = add("focal", "list focal points");
    CLI::App* sigma = add("sigma", "classical cross-section");
    add_points(sigma);
    CLI::App* amplitude = add("amplitude", "closed-form eikonal amplitude");
    add_points(amplitude);
    amplitude->add_option("--form", o.form, "corrected or printed");
    CLI::App* oracle = add("oracle", "contour-quadrature amplitude");
    add_points(oracle);
    oracle->add_option("--tol", o.tol, "target absolute error");
    CLI::App* compare = add("compare", "closed form against oracle on a grid");
    compare->add_option("--grid", o.grid_text, "real-axis grid re0,re1,n[,im]");
    compare->add_option("--method", o.method,
                        "closed_vs_oracle, printed_vs_oracle, identical_vs_generic or "
                        "paper_sigma_vs_classical");
    compare->add_option("--tol", o.tol, "oracle tolerance");
    compare->add_option("--out", o.out_dir, "output directory");
    CLI::App* scan = add("scan", "cross-section scan over a real-axis grid");
    scan->add_option("--grid", o.grid_text, "real-axis grid re0,re1,n[,im]");
    CLI::App* zoom = add("zoom", "square window around a focal momentum");
    zoom->add_option("--focal", o.focal_index, "index into the focal list");
    zoom->add_option("--window", o.window, "side length of the window");
    zoom->add_option("--resolution", o.resolution, "points per side");
    for (CLI::App* sub : {scan, zoom}) {
        sub->add_option("--mode", o.mode, "classical, eikonal_closed or eikonal_oracle");
        sub->add_option("--form", o.form, "closed form for eikonal_closed");
        sub->add_option("--tol", o.tol, "oracle tolerance");
        sub->add_option("--out", o.out_dir, "output directory");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const eikonal::ScatteringConfig config = eikonal::load_config(o.config_path);
        if (validate->parsed()) {
            return run_validate(config, o);
        }
        if (focal->parsed()) {
            return run_focal(config, o);
        }
        if (sigma->parsed()) {
            return run_pointwise(o, true, false, [&](Complex p) {
                return PointValue{eikonal::classical_cross_section(config, p).sigma, 0.0, {}};
            });
        }
        if (amplitude->parsed()) {
            const eikonal::AmplitudeForm form = parse_form(o.form);
            return run_pointwise(o, false, false, [&](Complex p) {
                const eikonal::AmplitudeSample s = eikonal::amplitude_closed(config, p, form);
                return PointValue{s.f, 0.0, s.convention_note};
            });
        }
        if (oracle->parsed()) {
            return run_pointwise(o, false, true, [&](Complex p) {
                const eikonal::OracleResult r = eikonal::amplitude_oracle(config, p, o.tol);
                return PointValue{r.f, r.est_err, r.shortfall ? "shortfall" : ""};
            });
        }
        if (compare->parsed()) {
            return run_compare(config, o);
        }
        if (scan->parsed()) {
            return run_scan(config, o);
        }
        return run_zoom(config, o);
    } catch (const eikonal::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const eikonal::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const eikonal::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
