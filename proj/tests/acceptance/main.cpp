// acceptance [--criterion N]... prints one PASS/FAIL line per criterion and
// exits non-zero if any selected criterion fails.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <vector>

#include "acceptance.hpp"

namespace {

using Check = acceptance::Outcome (*)();

const Check checks[] = {
    acceptance::special_function_identities, acceptance::dyon_modulus_law,
    acceptance::reduction_identity,          acceptance::oracle_equivalence,
    acceptance::focal_points,                acceptance::jacobian_cross_check,
    acceptance::symmetry_suite,              acceptance::peak_reproduction,
    acceptance::dipole_limit,                acceptance::residue_check,
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "criterion number (repeatable); default all")
        ->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);
    if (selected.empty()) {
        for (int k = 1; k <= 10; ++k) {
            selected.push_back(k);
        }
    }

    bool all = true;
    for (int k : selected) {
        acceptance::Outcome out;
        try {
            out = checks[k - 1]();
        } catch (const std::exception& e) {
            out.pass = false;
            out.summary = std::string("threw: ") + e.what();
        }
        std::cout << "criterion " << k << ": " << (out.pass ? "PASS" : "FAIL") << "  "
                  << out.summary << "\n";
        const std::string details = out.details.str();
        if (!details.empty()) {
            std::cout << details;
        }
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
