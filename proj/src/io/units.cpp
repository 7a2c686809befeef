#include "iab/units.hpp"

#include <cctype>
#include <cstdlib>
#include <initializer_list>
#include <utility>

#include "iab/errors.hpp"

namespace iab {

namespace {

struct UnitScale {
    const char* symbol;
    double factor;
};

double parse_with_units(const std::string& text, const std::string& field, const char* kind,
                        std::initializer_list<UnitScale> units) {
    const char* begin = text.c_str();
    char* cursor = nullptr;
    const double value = std::strtod(begin, &cursor);
    if (cursor == begin)
        throw ConfigError("field '" + field + "': expected \"<number> <unit>\", got \"" + text +
                          "\"");
    while (*cursor != '\0' && std::isspace(static_cast<unsigned char>(*cursor)))
        ++cursor;
    const std::string unit(cursor);
    if (unit.empty())
        throw ConfigError("field '" + field + "': missing " + std::string(kind) +
                          " unit on \"" + text + "\" (units are mandatory)");
    for (const UnitScale& u : units) {
        if (unit == u.symbol)
            return value * u.factor;
    }
    std::string known;
    for (const UnitScale& u : units)
        known += std::string(known.empty() ? "" : ", ") + u.symbol;
    throw ConfigError("field '" + field + "': unknown " + std::string(kind) + " unit \"" + unit +
                      "\" (known: " + known + ")");
}

} // namespace

double parse_length(const std::string& text, const std::string& field) {
    return parse_with_units(text, field, "length",
                            {{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}});
}

double parse_pressure(const std::string& text, const std::string& field) {
    return parse_with_units(text, field, "pressure",
                            {{"Pa", 1.0}, {"kPa", 1e3}, {"MPa", 1e6}});
}

double parse_density(const std::string& text, const std::string& field) {
    return parse_with_units(text, field, "density",
                            {{"kg/m^3", 1.0}, {"g/cm^3", 1e3}});
}

} // namespace iab
