#pragma once

#include "tridom/broadcast.hpp"
#include "tridom/lattice.hpp"

namespace tridom {

// Periodic tower placement generated by two integer basis vectors.
struct PatternLattice {
    Params params;
    Point v1;
    Point v2;
    bool mirrored = false;
};

PatternLattice pattern(Params p);         // v1=(2t-r, t),  v2=(t-r, 2t-r)
PatternLattice mirror_pattern(Params p);  // coordinate swap of pattern(p)

// All lattice combinations a*v1 + b*v2 (+shift) inside the extended
// window box, row-major, duplicate-free.
PointSet enumerate(const PatternLattice& pl, const Window& w);
PointSet enumerate_shifted(const PatternLattice& pl, Point shift, const Window& w);

// |det(v1, v2)| = 3t^2 - 3tr + r^2: one tower per this many vertices.
long long vertices_per_tower(Params p);

// Smallest positive s with (s, 0) in the sublattice.
int axis_period(Params p);

bool lattice_member(const PatternLattice& pl, Point q);

}  // namespace tridom
