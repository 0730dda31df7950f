#include "eikonal/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eikonal/csv.hpp"
#include "eikonal/errors.hpp"

namespace eikonal {

namespace {

using nlohmann::json;

std::string charge_path(std::size_t k, const char* field) {
    std::string path = "charges[" + std::to_string(k) + "]";
    if (field != nullptr) {
        path += ".";
        path += field;
    }
    return path;
}

double require_number(const json& node, const std::string& path) {
    if (!node.is_number()) {
        throw SchemaError(path + ": expected a number");
    }
    return node.get<double>();
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw SchemaError(where + ": unknown key '" + item.key() + "'");
        }
    }
}

}  // namespace

ScatteringConfig make_config(std::vector<ChargeSpec> charges, double p0,
                             bool allow_noninteger) {
    if (!std::isfinite(p0) || p0 <= 0.0) {
        throw ValidationError("p0", "incident momentum must be positive and finite");
    }
    if (charges.empty()) {
        throw ValidationError("charges", "at least one charge is required");
    }
    bool any_nonzero = false;
    for (std::size_t k = 0; k < charges.size(); ++k) {
        const ChargeSpec& c = charges[k];
        if (!std::isfinite(c.position.real()) || !std::isfinite(c.position.imag())) {
            throw ValidationError(charge_path(k, "pos"), "position must be finite");
        }
        if (!std::isfinite(c.electric)) {
            throw ValidationError(charge_path(k, "electric"), "coupling must be finite");
        }
        if (!std::isfinite(c.dirac_n)) {
            throw ValidationError(charge_path(k, "n"), "Dirac number must be finite");
        }
        if (!allow_noninteger && c.dirac_n != std::round(c.dirac_n)) {
            throw ValidationError(charge_path(k, "n"),
                                  "Dirac quantisation requires an integer (set allow_noninteger "
                                  "to override)");
        }
        if (!(c.string_angle >= 0.0 && c.string_angle < 2.0 * pi)) {
            throw ValidationError(charge_path(k, "theta"), "string angle must lie in [0, 2*pi)");
        }
        if (c.electric != 0.0 || c.dirac_n != 0.0) {
            any_nonzero = true;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (charges[j].position == c.position) {
                throw ValidationError(charge_path(k, "pos"),
                                      "duplicate position (merge coincident charges into one dyon)");
            }
        }
    }
    if (!any_nonzero) {
        throw ValidationError("charges", "all charges vanish");
    }
    ScatteringConfig config;
    config.charges_ = std::move(charges);
    config.p0_ = p0;
    config.allow_noninteger_ = allow_noninteger;
    return config;
}

ScatteringConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("top level must be an object");
    }
    reject_unknown_keys(doc, {"p0", "allow_noninteger", "charges"}, "top level");
    if (!doc.contains("p0")) {
        throw SchemaError("p0: missing");
    }
    const double p0 = require_number(doc["p0"], "p0");
    bool allow_noninteger = false;
    if (doc.contains("allow_noninteger")) {
        if (!doc["allow_noninteger"].is_boolean()) {
            throw SchemaError("allow_noninteger: expected a boolean");
        }
        allow_noninteger = doc["allow_noninteger"].get<bool>();
    }
    if (!doc.contains("charges") || !doc["charges"].is_array()) {
        throw SchemaError("charges: expected an array");
    }
    std::vector<ChargeSpec> charges;
    const json& list = doc["charges"];
    for (std::size_t k = 0; k < list.size(); ++k) {
        const json& item = list[k];
        const std::string where = charge_path(k, nullptr);
        if (!item.is_object()) {
            throw SchemaError(where + ": expected an object");
        }
        reject_unknown_keys(item, {"pos", "electric", "n", "theta"}, where);
        if (!item.contains("pos") || !item["pos"].is_array() || item["pos"].size() != 2) {
            throw SchemaError(charge_path(k, "pos") + ": expected [x, y]");
        }
        ChargeSpec c;
        c.position = {require_number(item["pos"][0], charge_path(k, "pos")),
                      require_number(item["pos"][1], charge_path(k, "pos"))};
        if (item.contains("electric")) {
            c.electric = require_number(item["electric"], charge_path(k, "electric"));
        }
        if (item.contains("n")) {
            c.dirac_n = require_number(item["n"], charge_path(k, "n"));
        }
        if (item.contains("theta")) {
            c.string_angle = require_number(item["theta"], charge_path(k, "theta"));
        }
        charges.push_back(c);
    }
    return make_config(std::move(charges), p0, allow_noninteger);
}

ScatteringConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ScatteringConfig& config) {
    // Written by hand so every number uses the shortest round-trip form.
    std::string out = "{\"p0\": " + format_double(config.p0());
    if (config.allow_noninteger()) {
        out += ", \"allow_noninteger\": true";
    }
    out += ", \"charges\": [";
    for (std::size_t k = 0; k < config.size(); ++k) {
        const ChargeSpec& c = config[k];
        if (k > 0) {
            out += ", ";
        }
        out += "{\"pos\": [" + format_double(c.position.real()) + ", " +
               format_double(c.position.imag()) + "], \"electric\": " + format_double(c.electric) +
               ", \"n\": " + format_double(c.dirac_n) +
               ", \"theta\": " + format_double(c.string_angle) + "}";
    }
    out += "]}";
    return out;
}

std::string config_digest(const ScatteringConfig& config) {
    // FNV-1a over the normalised text.
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char ch : serialize_config(config)) {
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

ComplexCharge complex_charge(const ChargeSpec& charge, double p0) {
    return {Complex(charge.electric, 0.5 * p0 * charge.dirac_n)};
}

std::vector<ComplexCharge> complex_charges(const ScatteringConfig& config) {
    std::vector<ComplexCharge> out;
    out.reserve(config.size());
    for (const ChargeSpec& c : config.charges()) {
        out.push_back(complex_charge(c, config.p0()));
    }
    return out;
}

}  // namespace eikonal
