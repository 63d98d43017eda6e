#pragma once

#include "jsurf/hilbert.hpp"
#include "jsurf/sheets.hpp"
#include "jsurf/triangulation.hpp"

#include <vector>

namespace jsurf {

/// Normal surface in triangle/quad coordinates. Per tetrahedron the
/// seven entries are the four vertex triangles (by vertex 0..3)
/// followed by the three quads (pairings 01|23, 02|13, 03|12).
struct NormalSurface {
    std::vector<long> coords;
    bool admissible = false;

    long tri(int tet, int v) const { return coords[7 * tet + v]; }
    long quad(int tet, int q) const { return coords[7 * tet + 4 + q]; }
    bool is_zero() const;

    /// Geometric intersection count with an edge class representative:
    /// both endpoint triangles plus the two quad types crossing the edge.
    long edge_weight(const Triangulation& T, int tet, int edge) const;

    static NormalSurface from_coords(const Triangulation& T, std::vector<long> coords);
};

/// At most one nonzero quad type in every tetrahedron.
bool is_admissible(const Triangulation& T, const std::vector<long>& coords);

/// Three equations per interior face pair: at each face corner the
/// triangle+quad arc count must agree on both sides of the gluing.
/// Rows ordered by (tet, face, corner vertex) of the lower side.
DiophantineSystem matching_equations(const Triangulation& T);

/// Hilbert basis of the matching equations, tagged admissible or not.
std::vector<NormalSurface> fundamental_surfaces(const Triangulation& T,
                                                const HilbertLimits& limits = {});

/// Euler characteristic by counting the identification cell complex:
/// edge intersection points, face arcs, and discs. Throws
/// "not an embedded surface" for non-admissible coordinates.
long euler_characteristic(const Triangulation& T, const NormalSurface& S);

/// One boundary curve with homology class a*meridian + b*longitude.
struct BoundaryCurve {
    long a = 0;
    long b = 0;
    bool trivial() const { return a == 0 && b == 0; }
};

struct BoundaryData {
    long sheets = 0;          // intersections of the boundary with the meridian edge
    long boundary_count = 0;  // nontrivial curves
    long trivial_curves = 0;
    bool coherent = true;  // all nontrivial curves parallel
    Slope slope;           // meaningful when boundary_count > 0 and coherent
    std::vector<BoundaryCurve> curves;
};

/// Traces the normal curves of the surface boundary on the boundary
/// torus and reads off their homology classes. Throws "no boundary"
/// for closed surfaces and requires admissibility.
BoundaryData boundary_data(const Triangulation& T, const NormalSurface& S);

/// No tetrahedron carries different nonzero quad types between the two.
bool compatible(const NormalSurface& s1, const NormalSurface& s2);

/// Coordinate-wise sum; throws "incompatible quadrilateral types".
NormalSurface haken_sum(const Triangulation& T, const NormalSurface& s1,
                        const NormalSurface& s2);

}  // namespace jsurf
