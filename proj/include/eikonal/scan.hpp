#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eikonal/amplitude.hpp"
#include "eikonal/types.hpp"

namespace eikonal {

enum class ScanMode { classical, eikonal_closed, eikonal_oracle };

const char* to_string(ScanMode m);
ScanMode parse_scan_mode(std::string_view text);

/// An ordered list of momenta plus a stable hash of it.
struct PGrid {
    std::vector<Complex> points;
    std::string hash() const;
};

/// n points from re0 to re1 inclusive at fixed imaginary part.
PGrid real_axis_grid(double re0, double re1, std::size_t n, double im = 0.0);

/// resolution x resolution square of side `window` centred on `centre`,
/// row-major with the imaginary part in the outer loop.
PGrid square_grid(Complex centre, double window, std::size_t resolution);

// Row flags.
inline constexpr const char* flag_focal = "focal";                 // classical divergence sentinel
inline constexpr const char* flag_near_focal = "near_focal";       // within 5% of a focal momentum
inline constexpr const char* flag_shortfall = "shortfall";         // oracle missed its tolerance
inline constexpr const char* flag_non_semiclassical = "non_semiclassical";
inline constexpr const char* flag_error = "error";                 // evaluation threw; values NaN

struct ScanRow {
    Complex p;
    Complex value;         // sigma (classical, imaginary part 0) or f
    double abs2 = 0.0;     // sigma, or |f|^2
    double p_abs2_weighted = 0.0;  // |p|^2 sigma, or |p f|^2
    std::vector<std::string> flags;  // sorted, unique

    bool has(std::string_view flag) const;
    bool operator==(const ScanRow&) const = default;
};

struct ScanTable {
    std::string config_digest;
    ScanMode mode = ScanMode::classical;
    std::string grid_hash;
    std::vector<ScanRow> rows;

    bool operator==(const ScanTable&) const = default;
};

struct ScanOptions {
    AmplitudeForm form = AmplitudeForm::corrected;  // eikonal_closed only
    double oracle_tol = 1e-10;                      // eikonal_oracle only
    double semiclassical_threshold = 3.0;           // on |p_f| * R
};

/// Evaluates every grid point; failures become row flags.
ScanTable scan_cross_section(const ScatteringConfig& config, const PGrid& grid, ScanMode mode,
                             const ScanOptions& options = {});

/// Square window around focal point `focal_index` of focal_points(config).
/// Throws IndexError for a bad index, InputError for window <= 0 or
/// resolution == 0.
ScanTable focal_zoom(const ScatteringConfig& config, std::size_t focal_index, double window,
                     std::size_t resolution, ScanMode mode, const ScanOptions& options = {});

/// |p_f| R for the nearest finite focal point (R = half the largest charge
/// separation); the semiclassical regime needs this well above 1.
double semiclassical_parameter(const ScatteringConfig& config);

/// `<configdigest>_<mode>_<gridhash>.csv`
std::string scan_file_name(const ScanTable& table);

/// Header `re_p, im_p, value_re, value_im, abs2, p_abs2_weighted, flags`,
/// flags joined with ';'.
std::string scan_csv(const ScanTable& table);
void emit_csv(const ScanTable& table, std::ostream& out);
/// Writes to `path`; throws IoError.
void emit_csv(const ScanTable& table, const std::string& path);

/// Rows of a CSV produced by scan_csv. Throws SchemaError.
std::vector<ScanRow> parse_scan_csv(std::string_view text);

/// Reads a file written by emit_csv, recovering digest, mode and grid hash
/// from a conforming file name.
ScanTable load_scan_csv(const std::string& path);

struct Peak {
    std::size_t index = 0;
    Complex p;
    double height = 0.0;
    double sharpness = 0.0;  // height / median over the table
};

/// Global maximum of p_abs2_weighted (or abs2) over rows without errors.
Peak find_peak(const ScanTable& table, bool weighted = true);

/// Interior local maxima of the chosen column, in grid order.
std::vector<Peak> local_maxima(const ScanTable& table, bool weighted = true);

}  // namespace eikonal
