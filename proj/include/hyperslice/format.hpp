#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperslice {

/// Shortest of %.15g / %.17g that reads back to the same double.
std::string format_number(double v);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace hyperslice
