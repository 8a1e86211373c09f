#pragma once

#include <string_view>

namespace frontier::core {

/// Quality of the system under test: a well-behaved and a degraded version.
enum class Preset { hq, lq };

/// Accepts "hq"/"HQ" and "lq"/"LQ"; throws std::invalid_argument otherwise.
Preset parse_preset(std::string_view name);
std::string_view to_string(Preset preset);

} // namespace frontier::core
