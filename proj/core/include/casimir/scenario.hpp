#pragma once

#include <optional>
#include <string>

#include "casimir/dielectric.hpp"
#include "casimir/resonance.hpp"
#include "casimir/units.hpp"

namespace casimir {

// One axis sweep: separation or temperature. Bounds are stored in SI after
// parsing (m or K); the unit suffix on the file keys fixes which.
struct SweepSpec {
    std::string variable;  // "d" or "T"
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    bool log_spacing = true;
};

// Everything a scenario file can declare. Optional fields stay empty when the
// file omits them; each subcommand checks for what it needs and names the
// missing key in its error.
struct Scenario {
    std::optional<DielectricModel> halfspace;
    std::optional<DielectricModel> gap;
    std::optional<double> separation;   // m
    std::optional<double> temperature;  // K

    std::optional<double> kappa_per_m;  // screening wave number, 1/m
    std::string kappa_source = "supplied";

    std::optional<PolarizabilityModel> polarizability;
    int branch_sign = +1;

    std::optional<SweepSpec> sweep;
    UnitSystem units = UnitSystem::SI;
};

// Sectioned key-value format:
//   [materials] [geometry] [thermal] [sweep] [output]
//   key = value          # comment
// Unknown sections, unknown keys, duplicate keys, and malformed numbers are
// hard errors carrying the offending line number. Dimensional keys carry a
// unit suffix (d_um, T_K, omega_p_eV); eV keys convert to rad/s here.
Scenario parse_scenario_text(const std::string& text,
                             const std::string& origin);
Scenario parse_scenario_file(const std::string& path);

}  // namespace casimir
