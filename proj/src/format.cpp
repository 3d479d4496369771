#include "heatbar/format.hpp"

#include <charconv>

namespace heatbar {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace heatbar
