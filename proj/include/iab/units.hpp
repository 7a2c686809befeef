#pragma once

#include <string>

namespace iab {

/// Parsers for dimensioned config values written as "<number> <unit>".
/// Units are mandatory; a bare number is rejected so a config can never be
/// misread at the wrong scale. `field` names the offending key in errors.
double parse_length(const std::string& text, const std::string& field);   // m, cm, mm
double parse_pressure(const std::string& text, const std::string& field); // Pa, kPa, MPa
double parse_density(const std::string& text, const std::string& field);  // kg/m^3, g/cm^3

} // namespace iab
