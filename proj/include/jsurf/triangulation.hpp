#pragma once

#include <array>
#include <string>
#include <vector>

namespace jsurf {

/// Vertex pairs of the six tetrahedron edges, in index order.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Edge index for a vertex pair.
int edge_index(int u, int v);

/// Quad type pairing vertices u and v together (0: 01|23, 1: 02|13,
/// 2: 03|12).
int quad_pairing(int u, int v);

/// The two quad types separating u from v (the ones meeting edge uv).
std::array<int, 2> quads_meeting_edge(int u, int v);

struct FaceGluing {
    int tet = -1;                 // -1: boundary face
    std::array<int, 4> perm{};    // vertex map into the target tet
    bool is_boundary() const { return tet < 0; }
};

/// Reference to an edge instance inside one tetrahedron.
struct EdgeRef {
    int tet = 0;
    int edge = 0;  // 0..5
    bool operator==(const EdgeRef&) const = default;
};

/// Tetrahedra gluing table with torus boundary, marked meridian edge
/// and longitude path. Immutable after parse; all derived class data is
/// computed during validation.
class Triangulation {
public:
    /// Parse and validate. Distinct errors for non-involutive gluings,
    /// non-torus boundary, meridian off the boundary, and broken
    /// longitude paths.
    static Triangulation parse(const std::string& text);

    int tet_count() const { return ntet_; }
    const FaceGluing& gluing(int tet, int face) const { return gluings_[tet][face]; }

    // -- derived identifications --
    int edge_class_count() const { return edge_class_count_; }
    int edge_class(int tet, int edge) const { return edge_class_[6 * tet + edge]; }
    /// True when the instance's low-to-high vertex direction disagrees
    /// with the class's canonical direction.
    bool edge_flipped(int tet, int edge) const { return edge_flip_[6 * tet + edge]; }
    int vertex_class_count() const { return vertex_class_count_; }
    int vertex_class(int tet, int v) const { return vertex_class_[4 * tet + v]; }
    int orientation(int tet) const { return orient_[tet]; }

    bool is_boundary_face(int tet, int face) const {
        return gluings_[tet][face].is_boundary();
    }
    bool is_boundary_edge_class(int cls) const { return boundary_edge_class_[cls]; }
    int boundary_face_count() const { return boundary_face_count_; }

    /// The two (tet, face, edge) boundary instances flanking a boundary
    /// edge instance, found by pivoting through interior gluings.
    /// Given a boundary face and one of its edges, returns the partner
    /// boundary (tet, face) whose matching edge instance it is glued to
    /// along the boundary surface, plus that edge.
    struct BoundaryEdgePartner {
        int tet, face, edge;
        // endpoint map: vertex w of the source instance corresponds to
        // vertex partner_vertex[w] of the partner instance
        std::array<int, 4> vertex_map;
    };
    BoundaryEdgePartner boundary_partner(int tet, int face, int edge) const;

    const EdgeRef& meridian() const { return meridian_; }
    const std::vector<EdgeRef>& longitude() const { return longitude_; }
    const std::vector<int>& longitude_dirs() const { return longitude_dirs_; }
    int longitude_meridian_crossings() const { return longitude_meridian_crossings_; }

    int meridian_class() const;

private:
    void validate();

    int ntet_ = 0;
    std::vector<std::array<FaceGluing, 4>> gluings_;
    EdgeRef meridian_;
    std::vector<EdgeRef> longitude_;
    std::vector<int> longitude_dirs_;  // +1: low-to-high vertex order

    // derived
    std::vector<int> edge_class_;
    std::vector<char> edge_flip_;
    int edge_class_count_ = 0;
    std::vector<int> vertex_class_;
    int vertex_class_count_ = 0;
    std::vector<int> orient_;
    std::vector<char> boundary_edge_class_;
    int boundary_face_count_ = 0;
    int longitude_meridian_crossings_ = 0;
};

}  // namespace jsurf
