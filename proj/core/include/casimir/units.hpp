#pragma once

#include <string>

namespace casimir {

// All internal computation is SI. NaturalNuclear is a reporting system
// (MeV, fm) for the short-distance demo output.
enum class UnitSystem { SI, NaturalNuclear };

enum class Dimension { Energy, EnergyPerArea, Length, Temperature, Frequency };

// A value tagged with what it measures and the system it is expressed in.
struct Quantity {
    double value;
    Dimension dim;
    UnitSystem system;
};

// Only Energy (J <-> MeV), EnergyPerArea (J/m^2 <-> MeV/fm^2) and Length
// (m <-> fm) change numerically; Temperature stays in K and Frequency in
// rad/s in both systems. convert(convert(q, B), A) == q up to rounding.
Quantity convert(const Quantity& q, UnitSystem target);

// Unit label for headers and reports: "J/m^2", "MeV/fm^2", "K", ...
std::string unit_label(Dimension dim, UnitSystem system);

std::string to_string(UnitSystem system);

// Accepts "si" and "natural" (case-insensitive); throws InputError otherwise.
UnitSystem unit_system_from_string(const std::string& name);

}  // namespace casimir
