#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zonelab/geometry.hpp"

namespace zonelab {

struct GeneralPosition2Report {
    enum class Kind { Ok, ParallelPair, ConcurrentTriple };
    Kind kind = Kind::Ok;
    std::vector<int> line_ids;

    bool ok() const { return kind == Kind::Ok; }
    std::string describe() const;
};

// Exhaustive exact check: no two lines parallel, no three concurrent.
// Violations are reported as data, not thrown.
GeneralPosition2Report general_position_2d(const std::vector<Line2>& lines);

// True when the line contains a corner of every centered square: it
// passes through the origin with slope +-1 in box coordinates. No
// bounding square is generic for such a line.
bool line_blocks_every_box(const Line2& l);

// Half-width of a bounding square that strictly contains every pairwise
// intersection among lines and extras, grown until the box is generic:
// every line crosses the open square, no line passes through a corner,
// and no two of (lines, extras, box sides) meet on a third. Returns
// nullopt if no clean width is found within max_attempts increments or
// a line passes through a corner at every width.
std::optional<Rational> try_box_half_width_2d(const std::vector<Line2>& lines,
                                              const std::vector<Line2>& extras,
                                              int max_attempts = 200);

// Throwing wrapper: Error(NotGeneralPosition) for a degenerate input,
// Error(BoxTooSmall) when no generic width exists.
Rational compute_box_half_width_2d(const std::vector<Line2>& lines,
                                   const std::vector<Line2>& extras = {});

struct Vertex2 {
    Point2 point;
    int ext_i = -1; // indices into Arrangement2::extended_lines
    int ext_j = -1;
};

struct Face2 {
    // One sign per extended line, generators first, then the four box
    // sides (whose signs always equal the interior side).
    std::vector<int8_t> signs;
    // Boundary edges supported by generator lines; box-supported edges
    // are excluded.
    int edge_count = 0;
    Point2 representative;
    // Closure vertices, as indices into Arrangement2::vertices.
    std::vector<int> vertex_indices;
};

// Full incidence structure of a line arrangement clipped to the square
// [-W, W]^2. Immutable after build; queries may run concurrently.
struct Arrangement2 {
    std::vector<Line2> lines;          // generators, in input order
    Rational box_half_width;
    std::vector<Line2> extended_lines; // generators + 4 box sides
    std::vector<Vertex2> vertices;     // all extended vertices in the closed box
    std::vector<Face2> faces;

    int generator_count() const { return static_cast<int>(lines.size()); }
    int generator_vertex_count() const;

    // Exact point location. Returns nullopt when the point lies on an
    // extended line or outside the open box.
    std::optional<int> locate_face(const Point2& p) const;

    const std::vector<int8_t>& vertex_signs(int vertex_index) const {
        return vertex_signs_[vertex_index];
    }

    // build internals, exposed for reuse by queries
    std::vector<std::vector<int8_t>> vertex_signs_;
    std::unordered_map<std::string, int> face_by_signs_;
};

// Builds the complete face list. Lines must be in general position with
// every pairwise intersection strictly inside the box, no line through a
// box corner, and every line crossing the open box (as produced by
// compute_box_half_width_2d). Throws Error(NotGeneralPosition) or
// Error(BoxTooSmall).
Arrangement2 build_arrangement_2d(const std::vector<Line2>& lines,
                                  const Rational& box_half_width);

struct Zone2Report {
    std::vector<int> face_ids; // sorted ascending
    long long zone_size = 0;   // sum of edge_count over crossed faces

    int face_count() const { return static_cast<int>(face_ids.size()); }
};

// Faces whose interior the query line s crosses, found by walking s
// across the arrangement. Throws Error(DegenerateQuery) when s is
// parallel to a generator, passes through an arrangement vertex or box
// corner, or misses the open box.
Zone2Report zone_2d(const Arrangement2& arr, const Line2& s);

// '-' / '0' / '+' rendering of a sign vector, used for face identity.
std::string signs_key(const std::vector<int8_t>& signs);

} // namespace zonelab
