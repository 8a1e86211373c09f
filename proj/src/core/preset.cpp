#include "frontier/core/preset.hpp"

#include <stdexcept>
#include <string>

namespace frontier::core {

Preset parse_preset(std::string_view name) {
    if (name == "hq" || name == "HQ") {
        return Preset::hq;
    }
    if (name == "lq" || name == "LQ") {
        return Preset::lq;
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "' (expected hq or lq)");
}

std::string_view to_string(Preset preset) { return preset == Preset::hq ? "hq" : "lq"; }

} // namespace frontier::core
