#pragma once

#include <string>

#include "bentcert/space.hpp"

namespace bentcert {

/// "%.12g"; every float in emitted reports goes through here.
std::string format_double(double v);
/// Element indices of the coordinates, joined by ';'.
std::string format_coords(const Space& space, Space::Point m);

}  // namespace bentcert
