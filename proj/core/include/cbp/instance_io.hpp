#pragma once

#include "cbp/core.hpp"

#include <iosfwd>
#include <string>

namespace cbp {

// Instance text format, one item per line:
//   <color-name> <num>/<den>
// "0" is shorthand for 0/1, bare integers are accepted, lines starting
// with '#' are ignored. Color names define color ids in first-appearance
// order. Throws std::invalid_argument on malformed input.
Instance parse_instance(std::istream& in, const std::string& label = "");
Instance parse_instance_text(const std::string& text, const std::string& label = "");
Instance load_instance(const std::string& path);

std::string format_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace cbp
