#include "eikonal/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "eikonal/classical.hpp"
#include "eikonal/config.hpp"
#include "eikonal/csv.hpp"
#include "eikonal/errors.hpp"
#include "eikonal/oracle.hpp"
#include "eikonal/parallel.hpp"

namespace eikonal {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string fnv_hex(std::string_view text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << hash;
    return os.str().substr(0, 12);
}

void add_flag(ScanRow& row, const char* flag) {
    if (!row.has(flag)) {
        row.flags.emplace_back(flag);
        std::sort(row.flags.begin(), row.flags.end());
    }
}

std::vector<Complex> finite_focal_momenta(const ScatteringConfig& config) {
    std::vector<Complex> out;
    for (const FocalPoint& f : focal_points(config)) {
        if (!f.at_infinity && f.p_f != 0.0) {
            out.push_back(f.p_f);
        }
    }
    return out;
}

ScanRow evaluate(const ScatteringConfig& config, Complex p, ScanMode mode,
                 const ScanOptions& options) {
    ScanRow row;
    row.p = p;
    const double p2 = std::norm(p);
    switch (mode) {
        case ScanMode::classical: {
            const ClassicalSigma s = classical_cross_section(config, p);
            row.value = s.sigma;
            row.abs2 = s.sigma;
            row.p_abs2_weighted = p2 * s.sigma;
            if (s.focal) {
                add_flag(row, flag_focal);
            }
            break;
        }
        case ScanMode::eikonal_closed: {
            row.value = amplitude_closed(config, p, options.form).f;
            row.abs2 = std::norm(row.value);
            row.p_abs2_weighted = p2 * row.abs2;
            break;
        }
        case ScanMode::eikonal_oracle: {
            const OracleResult o = amplitude_oracle(config, p, options.oracle_tol);
            row.value = o.f;
            row.abs2 = std::norm(o.f);
            row.p_abs2_weighted = p2 * row.abs2;
            if (o.shortfall) {
                add_flag(row, flag_shortfall);
            }
            break;
        }
    }
    return row;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        return nan;
    }
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    double m = values[mid];
    if (values.size() % 2 == 0) {
        m = 0.5 * (m + *std::max_element(values.begin(), values.begin() + mid));
    }
    return m;
}

double column(const ScanRow& row, bool weighted) {
    return weighted ? row.p_abs2_weighted : row.abs2;
}

bool usable(const ScanRow& row, bool weighted) {
    return !row.has(flag_error) && std::isfinite(column(row, weighted));
}

}  // namespace

const char* to_string(ScanMode m) {
    switch (m) {
        case ScanMode::classical: return "classical";
        case ScanMode::eikonal_closed: return "eikonal_closed";
        case ScanMode::eikonal_oracle: return "eikonal_oracle";
    }
    return "?";
}

ScanMode parse_scan_mode(std::string_view text) {
    for (ScanMode m : {ScanMode::classical, ScanMode::eikonal_closed, ScanMode::eikonal_oracle}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    throw InputError("unknown scan mode '" + std::string(text) + "'");
}

std::string PGrid::hash() const {
    std::string text;
    for (Complex p : points) {
        text += format_complex(p);
        text += ';';
    }
    return fnv_hex(text);
}

PGrid real_axis_grid(double re0, double re1, std::size_t n, double im) {
    if (n == 0) {
        throw InputError("grid needs at least one point");
    }
    PGrid grid;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = n == 1 ? 0.0 : double(k) / double(n - 1);
        grid.points.emplace_back(re0 + (re1 - re0) * t, im);
    }
    return grid;
}

PGrid square_grid(Complex centre, double window, std::size_t resolution) {
    if (!(window > 0.0) || resolution == 0) {
        throw InputError("zoom window needs window > 0 and resolution >= 1");
    }
    PGrid grid;
    const double h = resolution == 1 ? 0.0 : window / double(resolution - 1);
    const double start = resolution == 1 ? 0.0 : -0.5 * window;
    for (std::size_t i = 0; i < resolution; ++i) {
        for (std::size_t r = 0; r < resolution; ++r) {
            grid.points.push_back(centre + Complex(start + h * double(r), start + h * double(i)));
        }
    }
    return grid;
}

bool ScanRow::has(std::string_view flag) const {
    return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

double semiclassical_parameter(const ScatteringConfig& config) {
    double half_size = 0.0;
    for (std::size_t a = 0; a < config.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            half_size = std::max(half_size, 0.5 * std::abs(config[a].position - config[b].position));
        }
    }
    double best = 0.0;
    for (Complex pf : finite_focal_momenta(config)) {
        best = std::max(best, std::abs(pf) * half_size);
    }
    return best;
}

ScanTable scan_cross_section(const ScatteringConfig& config, const PGrid& grid, ScanMode mode,
                             const ScanOptions& options) {
    if (grid.points.empty()) {
        throw InputError("scan grid is empty");
    }
    ScanTable table;
    table.config_digest = config_digest(config);
    table.mode = mode;
    table.grid_hash = grid.hash();
    table.rows.resize(grid.points.size());

    const std::vector<Complex> focal = finite_focal_momenta(config);
    const bool semiclassical = semiclassical_parameter(config) >= options.semiclassical_threshold;

    parallel_for(grid.points.size(), [&](std::size_t k) {
        const Complex p = grid.points[k];
        ScanRow row;
        try {
            row = evaluate(config, p, mode, options);
        } catch (const Error&) {
            row = ScanRow{};
            row.p = p;
            row.value = Complex(nan, nan);
            row.abs2 = row.p_abs2_weighted = nan;
            add_flag(row, flag_error);
        }
        for (Complex pf : focal) {
            if (std::abs(p - pf) <= 0.05 * std::abs(pf)) {
                add_flag(row, flag_near_focal);
            }
        }
        if (!semiclassical) {
            add_flag(row, flag_non_semiclassical);
        }
        table.rows[k] = std::move(row);
    });
    return table;
}

ScanTable focal_zoom(const ScatteringConfig& config, std::size_t focal_index, double window,
                     std::size_t resolution, ScanMode mode, const ScanOptions& options) {
    const std::vector<FocalPoint> focal = focal_points(config);
    if (focal_index >= focal.size()) {
        throw IndexError("focal index " + std::to_string(focal_index) + " out of range (" +
                         std::to_string(focal.size()) + " focal points)");
    }
    return scan_cross_section(config, square_grid(focal[focal_index].p_f, window, resolution),
                              mode, options);
}

std::string scan_file_name(const ScanTable& table) {
    return table.config_digest + "_" + to_string(table.mode) + "_" + table.grid_hash + ".csv";
}

std::string scan_csv(const ScanTable& table) {
    std::string out = "re_p, im_p, value_re, value_im, abs2, p_abs2_weighted, flags\n";
    for (const ScanRow& row : table.rows) {
        std::string flags;
        for (std::size_t k = 0; k < row.flags.size(); ++k) {
            flags += (k > 0 ? ";" : "") + row.flags[k];
        }
        out += join_csv_line({format_double(row.p.real()), format_double(row.p.imag()),
                              format_double(row.value.real()), format_double(row.value.imag()),
                              format_double(row.abs2), format_double(row.p_abs2_weighted),
                              flags});
        out += "\n";
    }
    return out;
}

void emit_csv(const ScanTable& table, std::ostream& out) {
    out << scan_csv(table);
}

void emit_csv(const ScanTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    emit_csv(table, out);
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

std::vector<ScanRow> parse_scan_csv(std::string_view text) {
    std::vector<ScanRow> rows;
    std::size_t start = 0;
    bool header = true;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 7) {
            throw SchemaError("scan CSV line needs 7 fields");
        }
        if (header) {
            if (fields[0] != "re_p" || fields[6] != "flags") {
                throw SchemaError("scan CSV header not recognised");
            }
            header = false;
            continue;
        }
        ScanRow row;
        row.p = {parse_double(fields[0]), parse_double(fields[1])};
        row.value = {parse_double(fields[2]), parse_double(fields[3])};
        row.abs2 = parse_double(fields[4]);
        row.p_abs2_weighted = parse_double(fields[5]);
        std::string_view flags = fields[6];
        while (!flags.empty()) {
            const std::size_t semi = flags.find(';');
            row.flags.emplace_back(flags.substr(0, semi));
            flags = semi == std::string_view::npos ? std::string_view{} : flags.substr(semi + 1);
        }
        rows.push_back(std::move(row));
    }
    if (header) {
        throw SchemaError("scan CSV is empty");
    }
    return rows;
}

ScanTable load_scan_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ScanTable table;
    table.rows = parse_scan_csv(buffer.str());

    std::string name = path.substr(path.find_last_of('/') + 1);
    if (name.size() > 4 && name.substr(name.size() - 4) == ".csv") {
        name.resize(name.size() - 4);
        const std::size_t first = name.find('_');
        const std::size_t last = name.rfind('_');
        if (first != std::string::npos && last > first) {
            table.config_digest = name.substr(0, first);
            table.mode = parse_scan_mode(name.substr(first + 1, last - first - 1));
            table.grid_hash = name.substr(last + 1);
        }
    }
    return table;
}

Peak find_peak(const ScanTable& table, bool weighted) {
    Peak peak;
    bool found = false;
    std::vector<double> values;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const ScanRow& row = table.rows[k];
        if (!usable(row, weighted)) {
            continue;
        }
        const double v = column(row, weighted);
        values.push_back(v);
        if (!found || v > peak.height) {
            peak.index = k;
            peak.p = row.p;
            peak.height = v;
            found = true;
        }
    }
    if (!found) {
        throw NumericalError("no usable rows in scan table");
    }
    peak.sharpness = peak.height / median(values);
    return peak;
}

std::vector<Peak> local_maxima(const ScanTable& table, bool weighted) {
    std::vector<double> values;
    for (const ScanRow& row : table.rows) {
        if (usable(row, weighted)) {
            values.push_back(column(row, weighted));
        }
    }
    const double med = median(values);
    std::vector<Peak> out;
    for (std::size_t k = 1; k + 1 < table.rows.size(); ++k) {
        const ScanRow& a = table.rows[k - 1];
        const ScanRow& b = table.rows[k];
        const ScanRow& c = table.rows[k + 1];
        if (!usable(a, weighted) || !usable(b, weighted) || !usable(c, weighted)) {
            continue;
        }
        const double v = column(b, weighted);
        if (v > column(a, weighted) && v >= column(c, weighted)) {
            out.push_back({k, b.p, v, v / med});
        }
    }
    return out;
}

}  // namespace eikonal
