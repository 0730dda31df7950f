#include <cmath>
#include <limits>

#include "eikonal/classical.hpp"
#include "eikonal/config.hpp"
#include "eikonal/csv.hpp"
#include "eikonal/errors.hpp"
#include "eikonal/oracle.hpp"
#include "eikonal/parallel.hpp"

namespace eikonal {

const char* to_string(ComparisonMethod m) {
    switch (m) {
        case ComparisonMethod::closed_vs_oracle: return "closed_vs_oracle";
        case ComparisonMethod::printed_vs_oracle: return "printed_vs_oracle";
        case ComparisonMethod::identical_vs_generic: return "identical_vs_generic";
        case ComparisonMethod::paper_sigma_vs_classical: return "paper_sigma_vs_classical";
    }
    return "?";
}

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

void require_two_monopoles(const ScatteringConfig& config) {
    if (config.size() != 2 || config[0].electric != 0.0 || config[1].electric != 0.0) {
        throw InputError("comparison needs exactly two pure monopoles");
    }
}

ComparisonRow evaluate_row(const ScatteringConfig& config, Complex p, ComparisonMethod method,
                           double tol) {
    ComparisonRow row;
    row.p = p;
    switch (method) {
        case ComparisonMethod::closed_vs_oracle:
        case ComparisonMethod::printed_vs_oracle: {
            const AmplitudeForm form = method == ComparisonMethod::closed_vs_oracle
                                           ? AmplitudeForm::corrected
                                           : AmplitudeForm::printed;
            row.f_closed = amplitude_closed(config, p, form).f;
            const OracleResult o = amplitude_oracle(config, p, tol);
            row.f_oracle = o.f;
            row.est_err = o.est_err;
            break;
        }
        case ComparisonMethod::identical_vs_generic: {
            require_two_monopoles(config);
            const ChargeSpec& a = config[0];
            const ChargeSpec& b = config[1];
            if (a.dirac_n != b.dirac_n) {
                throw InputError("identical-monopole comparison needs n1 == n2");
            }
            row.f_closed = amplitude_two_identical_monopoles(a.dirac_n, a.position, b.position,
                                                             config.p0(), p,
                                                             AmplitudeForm::printed)
                               .f;
            row.f_oracle = amplitude_two_monopoles(a.dirac_n, b.dirac_n, a.position, b.position,
                                                   config.p0(), p, AmplitudeForm::printed)
                               .f;
            break;
        }
        case ComparisonMethod::paper_sigma_vs_classical: {
            if (config.size() != 2) {
                throw InputError("cross-section comparison needs two charges");
            }
            const ChargeSpec& a = config[0];
            const ChargeSpec& b = config[1];
            const double r = a.position.real();
            if (a.position != Complex(r, 0.0) || b.position != Complex(-r, 0.0) || r <= 0.0) {
                throw InputError("cross-section comparison needs b1 = R, b2 = -R with R > 0");
            }
            const Complex q1 = complex_charge(a, config.p0()).value;
            const Complex q2 = complex_charge(b, config.p0()).value;
            double paper;
            if (q1 + q2 == 0.0 && a.electric == 0.0) {
                paper = cross_section_monopole_antimonopole_closed(a.dirac_n, r, config.p0(), p)
                            .sigma;
            } else {
                paper = cross_section_two_dyons_closed(q1, q2, r, config.p0(), p).sigma;
            }
            row.f_closed = paper;
            row.f_oracle = classical_cross_section(config, p).sigma;
            break;
        }
    }
    const Complex ratio = row.f_closed / row.f_oracle;
    row.abs_ratio = std::abs(ratio);
    row.arg_ratio = std::arg(ratio);
    return row;
}

}  // namespace

ComparisonReport compare_amplitudes(const ScatteringConfig& config,
                                    const std::vector<Complex>& p_grid, ComparisonMethod method,
                                    double tol) {
    ComparisonReport report;
    report.method = method;
    if (method == ComparisonMethod::identical_vs_generic) {
        report.abs_tolerance = 1e-9;
        report.arg_tolerance = 1e-9;
    }
    report.rows.resize(p_grid.size());
    parallel_for(p_grid.size(), [&](std::size_t k) {
        try {
            report.rows[k] = evaluate_row(config, p_grid[k], method, tol);
        } catch (const Error& e) {
            ComparisonRow row;
            row.p = p_grid[k];
            row.f_closed = row.f_oracle = Complex(nan, nan);
            row.abs_ratio = row.arg_ratio = row.est_err = nan;
            row.error = e.what();
            report.rows[k] = row;
        }
    });

    // Arguments are unwrapped against the first good row before averaging.
    Complex sum = 0.0;
    double abs_sum = 0.0;
    double arg_sum = 0.0;
    double reference = 0.0;
    std::size_t good = 0;
    bool failed = false;
    std::vector<double> unwrapped(report.rows.size(), nan);
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        const ComparisonRow& row = report.rows[k];
        if (!row.error.empty() || !std::isfinite(row.abs_ratio)) {
            failed = true;
            continue;
        }
        double a = row.arg_ratio;
        if (good == 0) {
            reference = a;
        }
        a = reference + std::remainder(a - reference, 2.0 * pi);
        unwrapped[k] = a;
        sum += row.f_closed / row.f_oracle;
        abs_sum += row.abs_ratio;
        arg_sum += a;
        ++good;
    }
    if (good == 0) {
        report.mean_ratio = Complex(nan, nan);
        report.abs_spread = report.arg_spread = nan;
        return report;
    }
    report.mean_ratio = sum / double(good);
    const double abs_mean = abs_sum / double(good);
    const double arg_mean = arg_sum / double(good);
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        if (std::isnan(unwrapped[k])) {
            continue;
        }
        report.abs_spread =
            std::max(report.abs_spread, std::abs(report.rows[k].abs_ratio / abs_mean - 1.0));
        report.arg_spread = std::max(report.arg_spread, std::abs(unwrapped[k] - arg_mean));
    }
    report.passed = !failed && report.abs_spread < report.abs_tolerance &&
                    report.arg_spread < report.arg_tolerance;
    return report;
}

std::string comparison_csv(const ComparisonReport& report) {
    std::string out =
        "re_p, im_p, re_f_closed, im_f_closed, re_f_oracle, im_f_oracle, abs_ratio, arg_ratio, "
        "est_err\n";
    for (const ComparisonRow& row : report.rows) {
        out += join_csv_line({format_double(row.p.real()), format_double(row.p.imag()),
                              format_double(row.f_closed.real()),
                              format_double(row.f_closed.imag()),
                              format_double(row.f_oracle.real()),
                              format_double(row.f_oracle.imag()), format_double(row.abs_ratio),
                              format_double(row.arg_ratio), format_double(row.est_err)});
        out += "\n";
    }
    return out;
}

}  // namespace eikonal
