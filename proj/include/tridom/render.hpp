#pragma once

#include <string>
#include <variant>

#include "tridom/broadcast.hpp"
#include "tridom/lattice.hpp"

namespace tridom {

struct RenderFlags {
    bool reception_values = false;
    bool reach_hexagons = false;
    bool boundary = false;
};

// Pure description of one figure; rendering never mutates it.
struct RenderSpec {
    std::variant<MatchstickRegion, Window> region;
    PointSet towers;
    Params params{1, 1};
    RenderFlags show;
};

// Text figure: one row per lattice line; plain vertices '.', towers '#'.
// With reception_values on, every region vertex (towers included) prints
// its reception as a base-36 digit.  Matchstick regions print the apex row
// first; windows print the highest row first.  Byte-stable.
std::string render_ascii(const RenderSpec& spec);

// Standalone SVG 1.1 document in the Cartesian embedding
// (m - n/2, n*sqrt(3)/2), every coordinate at fixed 4-decimal precision.
// Optional layers: grid edges always, boundary outline, reach hexagons of
// graph radius t-1 around each tower, per-vertex reception labels.
std::string render_svg(const RenderSpec& spec);

}  // namespace tridom
