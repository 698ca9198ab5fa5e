#include "bentcert/format.hpp"

#include <cstdio>

namespace bentcert {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_coords(const Space& space, Space::Point m) {
  std::string s;
  for (std::uint32_t i = 0; i < space.d(); ++i) {
    if (i) s += ';';
    s += std::to_string(space.coord(m, i));
  }
  return s;
}

}  // namespace bentcert
