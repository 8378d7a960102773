#pragma once

#include <string>
#include <string_view>

namespace jcsusy {

// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

// Strict parse of a whole string as a double; throws RangeError otherwise.
double parse_double(std::string_view text);

}  // namespace jcsusy
