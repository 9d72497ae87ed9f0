#include "casimir/units.hpp"

#include <algorithm>
#include <cctype>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

// Multiplier taking an SI value to NaturalNuclear for each dimension.
double si_to_natural_factor(Dimension dim) {
    switch (dim) {
        case Dimension::Energy:
            return 1.0 / si::joule_per_mev;
        case Dimension::EnergyPerArea:
            // J/m^2 -> MeV/fm^2: divide by J/MeV, then by fm^2 per m^2.
            return si::metre_per_fm * si::metre_per_fm / si::joule_per_mev;
        case Dimension::Length:
            return 1.0 / si::metre_per_fm;
        case Dimension::Temperature:
        case Dimension::Frequency:
            return 1.0;
    }
    throw InputError("unknown dimension");
}

}  // namespace

Quantity convert(const Quantity& q, UnitSystem target) {
    if (q.system == target) {
        return q;
    }
    const double factor = si_to_natural_factor(q.dim);
    const double value =
        (target == UnitSystem::NaturalNuclear) ? q.value * factor : q.value / factor;
    return Quantity{value, q.dim, target};
}

std::string unit_label(Dimension dim, UnitSystem system) {
    const bool natural = (system == UnitSystem::NaturalNuclear);
    switch (dim) {
        case Dimension::Energy:
            return natural ? "MeV" : "J";
        case Dimension::EnergyPerArea:
            return natural ? "MeV/fm^2" : "J/m^2";
        case Dimension::Length:
            return natural ? "fm" : "m";
        case Dimension::Temperature:
            return "K";
        case Dimension::Frequency:
            return "rad/s";
    }
    throw InputError("unknown dimension");
}

std::string to_string(UnitSystem system) {
    return system == UnitSystem::SI ? "si" : "natural";
}

UnitSystem unit_system_from_string(const std::string& name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "si") {
        return UnitSystem::SI;
    }
    if (lower == "natural") {
        return UnitSystem::NaturalNuclear;
    }
    throw InputError("unknown unit system '" + name + "' (expected si|natural)");
}

}  // namespace casimir
