#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zonelab/arrangement2d.hpp"
#include "zonelab/geometry.hpp"

namespace zonelab {

struct GeneralPosition3Report {
    enum class Kind { Ok, ParallelPair, DegenerateTriple, ConcurrentQuadruple };
    Kind kind = Kind::Ok;
    std::vector<int> plane_ids;

    bool ok() const { return kind == Kind::Ok; }
    std::string describe() const;
};

// Exhaustive exact checks over all pairs (parallel normals), triples
// (normal matrix rank < 3: parallel family or a shared line) and
// quadruples (common point). When extra is supplied it participates in
// every check. Violations are data, not errors.
GeneralPosition3Report general_position_3d(
    const std::vector<Plane>& planes,
    const std::optional<Plane>& extra = std::nullopt);

// True when the plane contains a corner of every centered cube: it
// passes through the origin and its normal annihilates a corner
// direction. No bounding box is generic for such a plane.
bool plane_blocks_every_box(const Plane& h);

// True when the intersection line of two non-parallel planes meets the
// box edge skeleton at every half-width (its projection along some axis
// is a corner diagonal through the origin).
bool plane_pair_blocks_every_box(const Plane& h1, const Plane& h2);

// Bounding-cube half-width: 1 + the largest coordinate magnitude over
// all triple intersection points of planes and extras, grown until the
// box is generic (every plane crosses the open cube, no plane through a
// corner, no extended vertex on a fourth extended plane, no plane pair
// meeting the box edge skeleton). Returns nullopt when no width works,
// e.g. a plane through the origin containing a corner direction.
std::optional<Rational> try_box_half_width_3d(const std::vector<Plane>& planes,
                                              const std::vector<Plane>& extras,
                                              int max_attempts = 200);

// Throwing wrapper: Error(NotGeneralPosition) or
// Error(BoxGenericityViolation).
Rational compute_box_half_width(const std::vector<Plane>& planes,
                                const std::vector<Plane>& extras = {});

struct Vertex3 {
    Point3 point;
    std::array<int, 3> ext; // ascending indices into extended_planes
};

struct FaceRecord {
    int supporting_plane_id = 0; // generator id, or a negative box id
    int cell_id = 0;
    std::vector<Point3> polygon; // convex vertex cycle on the plane
    int edge_count = 0;          // == polygon.size()
};

struct Cell3 {
    // One sign per extended plane, generators first, then the six box
    // planes (always the interior sign).
    std::vector<int8_t> signs;
    // Boundary counts over the whole polytope, box-supported elements
    // included.
    int V_count = 0;
    int E_count = 0;
    int F_count = 0;
    // Faces supported by generator planes only.
    int F_real = 0;
    std::vector<FaceRecord> face_records;
    Point3 representative;
    std::vector<int> vertex_indices;
};

// Cell/face/edge/vertex incidence structure of a plane arrangement
// clipped to the cube [-A, A]^3. Immutable after build; queries are pure
// and safe to run concurrently.
struct Arrangement3 {
    std::vector<Plane> planes;          // generators, input order
    Rational box_half_width;
    std::vector<Plane> extended_planes; // generators + 6 box planes
    std::vector<Vertex3> vertices;      // all extended vertices in the closed cube
    std::vector<Cell3> cells;

    int generator_count() const { return static_cast<int>(planes.size()); }
    int generator_vertex_count() const;

    // Exact point location; nullopt when p lies on an extended plane or
    // outside the open cube.
    std::optional<int> locate_cell(const Point3& p) const;

    const std::vector<int8_t>& vertex_signs(int vertex_index) const {
        return vertex_signs_[vertex_index];
    }

    std::vector<std::vector<int8_t>> vertex_signs_;
    std::unordered_map<std::string, int> cell_by_signs_;
};

// Requires general position and a box produced by
// compute_box_half_width. Throws Error(NotGeneralPosition) or
// Error(BoxGenericityViolation).
Arrangement3 build_arrangement_3d(const std::vector<Plane>& planes,
                                  const Rational& box_half_width);

struct Zone3Report {
    std::vector<int> cell_ids; // sorted ascending
    long long zone_size = 0;   // sum of F_real over crossed cells

    int cell_count() const { return static_cast<int>(cell_ids.size()); }
};

// Cells whose interior S crosses: exactly those with polytope vertices
// strictly on both sides of S. Throws Error(DegenerateQuery) when S is
// parallel to a generator or passes through an extended vertex.
Zone3Report zone_3d(const Arrangement3& arr, const Plane& s);

// Rebuilds the arrangement over the remaining generators with the same
// box half-width, so cells untouched by the removed plane are identical.
// Throws Error(UnknownPlane).
Arrangement3 remove_plane(const Arrangement3& arr, int q_id);

// Exact affine coordinate chart on a plane: p(u, v) = origin + u e1 + v e2.
struct Chart {
    Plane plane;
    Point3 origin;
    Vec3 e1, e2;

    // Chart coordinates of a point on the plane.
    Point2 to_chart(const Point3& p) const;

    // Image of other_plane ∩ plane as a chart line; id is taken from
    // other_plane. Throws Error(ParallelPlanes).
    Line2 line_of(const Plane& other_plane) const;
};

struct InducedArrangement {
    Arrangement2 arrangement;
    Chart chart;
};

// The 2D arrangement cut on generator q_id by all other generators.
// extras participate in box sizing and genericity (but not as lines), so
// their chart images remain valid zone queries. Throws
// Error(UnknownPlane) or Error(BoxTooSmall).
InducedArrangement induced_arrangement(const Arrangement3& arr, int q_id,
                                       const std::vector<Plane>& extras = {});

// Debug dump: VERTICES and CELLS sections with stable field order.
void dump_arrangement(const Arrangement3& arr, std::ostream& os);

} // namespace zonelab
