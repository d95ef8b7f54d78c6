#pragma once

#include <string>

#include "kfact/archmap.hpp"

namespace kfact {

/// Static ASCII picture of the arch diagram of a 1-factorization.
/// With with_dual, the dual vertex positions are marked on the baseline.
std::string render_ascii(const DualLayout& layout, bool with_dual);

/// SVG 1.1 document with one semicircular arc per edge. Arc endpoint
/// x-coordinates equal (l(i), r(i)) in user units; the document width maps
/// one baseline unit to 40 rendered pixels. With with_dual, dual arcs are
/// drawn dashed.
std::string render_svg(const DualLayout& layout,
                       const RootedForest& cover_forest, bool with_dual);

}  // namespace kfact
