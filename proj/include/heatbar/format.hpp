#pragma once

#include <string>

namespace heatbar {

/// Shortest decimal string that reads back to exactly v.
[[nodiscard]] std::string format_double(double v);

}  // namespace heatbar
