#pragma once

#include <string>

#include "dtk/instance.hpp"
#include "dtk/network.hpp"

namespace dtk {

/// SVG 1.1 drawing of a network over its instance: points as circles, edges
/// as segments, the root filled red. The view box fits the points with a 5%
/// margin on every side and flips y so that up is up.
std::string render_svg(const Instance& instance, const Network& network);

}  // namespace dtk
