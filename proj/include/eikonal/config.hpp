#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eikonal/types.hpp"

namespace eikonal {

/// Builds a ScatteringConfig, enforcing every invariant.
/// Throws ValidationError naming the offending field path.
ScatteringConfig make_config(std::vector<ChargeSpec> charges, double p0,
                             bool allow_noninteger = false);

/// Parses the JSON config document:
///
///   {
///     "p0": 1.0,
///     "allow_noninteger": false,        // optional
///     "charges": [
///       {"pos": [x, y], "electric": 0.0, "n": 1, "theta": 0.0}
///     ]
///   }
///
/// `electric`, `n` and `theta` default to 0. Unknown keys are rejected.
/// Throws SchemaError for malformed documents and ValidationError for
/// documents that parse but break an invariant.
ScatteringConfig parse_config(std::string_view text);

/// Reads and parses a config file.
ScatteringConfig load_config(const std::string& path);

/// Normalised JSON text; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScatteringConfig& config);

/// Stable short hex digest of the normalised config, used in file names.
std::string config_digest(const ScatteringConfig& config);

/// Q_k = alpha_k + i*p0*n_k/2 in config order.
std::vector<ComplexCharge> complex_charges(const ScatteringConfig& config);

ComplexCharge complex_charge(const ChargeSpec& charge, double p0);

}  // namespace eikonal
