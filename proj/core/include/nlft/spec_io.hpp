#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "nlft/measure.hpp"
#include "nlft/transfer.hpp"

namespace nlft {

using Potential = std::variant<DiscretePotential, StepPotential>;

/// JSON measure document:
///   {"ac": {"kind": "none"|"constant"|"table", "value"?: x, "xs"?: [...], "ys"?: [...]},
///    "atoms": [{"x": x, "mass": m}], "period": P|null}
/// Errors name the offending field, e.g. "atoms[2].mass: negative mass".
Measure measure_from_spec(std::string_view text);
Measure measure_from_file(const std::string& path);
std::string measure_to_spec(const Measure& mu);

/// {"kind": "discrete", "spacing": d, "masses": [...], "first_index"?: k} or
/// {"kind": "step", "breakpoints": [...], "values": [...]}.
Potential potential_from_spec(std::string_view text);
Potential potential_from_file(const std::string& path);
std::string potential_to_spec(const Potential& pot);

}  // namespace nlft
