#include "zonelab/arrangement3d.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <set>
#include <sstream>

namespace zonelab {

namespace {

constexpr int kNumBoxPlanes = 6;
// Box planes in canonical form: x-A, x+A, y-A, y+A, z-A, z+A.
const int8_t kInsideSign[kNumBoxPlanes] = {-1, +1, -1, +1, -1, +1};

std::vector<Plane> box_planes(const Rational& a) {
    return {
        Plane(1, 0, 0, -a, -1),
        Plane(1, 0, 0, a, -2),
        Plane(0, 1, 0, -a, -3),
        Plane(0, 1, 0, a, -4),
        Plane(0, 0, 1, -a, -5),
        Plane(0, 0, 1, a, -6),
    };
}

std::vector<Point3> box_corners(const Rational& a) {
    std::vector<Point3> corners;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1})
                corners.push_back({a * sx, a * sy, a * sz});
    return corners;
}

bool planes_parallel(const Plane& p1, const Plane& p2) {
    return cross(p1.normal(), p2.normal()).is_zero();
}

bool in_closed_cube(const Point3& p, const Rational& a) {
    return abs(p.x) <= a && abs(p.y) <= a && abs(p.z) <= a;
}

bool in_open_cube(const Point3& p, const Rational& a) {
    return abs(p.x) < a && abs(p.y) < a && abs(p.z) < a;
}

const Rational& coord(const Point3& p, int axis) {
    return axis == 0 ? p.x : (axis == 1 ? p.y : p.z);
}

const Rational& coord(const Vec3& v, int axis) {
    return axis == 0 ? v.x : (axis == 1 ? v.y : v.z);
}

bool crosses_open_cube(const Plane& h, const Rational& a, bool* corner_hit) {
    bool pos = false, neg = false;
    for (const Point3& corner : box_corners(a)) {
        int s = side_of_plane(corner, h);
        if (s == 0) {
            if (corner_hit) *corner_hit = true;
            return false;
        }
        (s > 0 ? pos : neg) = true;
    }
    if (corner_hit) *corner_hit = false;
    return pos && neg;
}

// Exact slab clipping: the open parameter interval where the line is
// strictly inside the cube must be nonempty.
bool line_crosses_open_cube(const ParametricLine3& line, const Rational& a) {
    bool bounded = false;
    Rational lo, hi;
    for (int axis = 0; axis < 3; ++axis) {
        const Rational& d = coord(line.direction, axis);
        const Rational& p = coord(line.point, axis);
        if (d.is_zero()) {
            if (abs(p) >= a) return false;
            continue;
        }
        Rational t1 = (-a - p) / d;
        Rational t2 = (a - p) / d;
        if (t2 < t1) std::swap(t1, t2);
        if (!bounded) {
            lo = t1;
            hi = t2;
            bounded = true;
        } else {
            lo = max(lo, t1);
            hi = min(hi, t2);
        }
    }
    return !bounded || lo < hi;
}

Rational det4(const std::array<std::array<Rational, 4>, 4>& m) {
    Rational result = 0;
    for (int col = 0; col < 4; ++col) {
        std::array<std::array<Rational, 3>, 3> minor;
        for (int r = 1; r < 4; ++r) {
            int mc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == col) continue;
                minor[r - 1][mc++] = m[r][c];
            }
        }
        Rational term = m[0][col] * det3(minor);
        result += (col % 2 == 0) ? term : -term;
    }
    return result;
}

// In-plane orthogonal-free rational basis derived from the normal.
void plane_basis(const Vec3& normal, Vec3& e1, Vec3& e2) {
    if (normal.x.is_zero() && normal.y.is_zero()) {
        e1 = {1, 0, 0};
        e2 = {0, 1, 0};
    } else {
        e1 = {-normal.y, normal.x, Rational(0)};
        e2 = cross(normal, e1);
    }
}

// Strict angular order around the origin for nonzero 2D offsets.
bool angle_less(const std::pair<Rational, Rational>& p,
                const std::pair<Rational, Rational>& q) {
    auto half = [](const std::pair<Rational, Rational>& d) {
        return (d.second.sign() > 0 ||
                (d.second.sign() == 0 && d.first.sign() > 0))
                   ? 0
                   : 1;
    };
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return (p.first * q.second - q.first * p.second).sign() > 0;
}

} // namespace

std::string GeneralPosition3Report::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Ok:
            os << "ok";
            break;
        case Kind::ParallelPair:
            os << "parallel planes " << plane_ids[0] << " and " << plane_ids[1];
            break;
        case Kind::DegenerateTriple:
            os << "planes " << plane_ids[0] << ", " << plane_ids[1] << ", "
               << plane_ids[2] << " have rank-deficient normals";
            break;
        case Kind::ConcurrentQuadruple:
            os << "planes " << plane_ids[0] << ", " << plane_ids[1] << ", "
               << plane_ids[2] << ", " << plane_ids[3]
               << " share a common point";
            break;
    }
    return os.str();
}

GeneralPosition3Report general_position_3d(const std::vector<Plane>& planes,
                                           const std::optional<Plane>& extra) {
    std::vector<Plane> all = planes;
    if (extra) all.push_back(*extra);
    const int n = static_cast<int>(all.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (planes_parallel(all[i], all[j])) {
                return {GeneralPosition3Report::Kind::ParallelPair,
                        {all[i].id, all[j].id}};
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                Rational det = det3({{{all[i].a, all[i].b, all[i].c},
                                      {all[j].a, all[j].b, all[j].c},
                                      {all[k].a, all[k].b, all[k].c}}});
                if (det.is_zero()) {
                    return {GeneralPosition3Report::Kind::DegenerateTriple,
                            {all[i].id, all[j].id, all[k].id}};
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                for (int l = k + 1; l < n; ++l) {
                    std::array<std::array<Rational, 4>, 4> m = {{
                        {all[i].a, all[i].b, all[i].c, all[i].d},
                        {all[j].a, all[j].b, all[j].c, all[j].d},
                        {all[k].a, all[k].b, all[k].c, all[k].d},
                        {all[l].a, all[l].b, all[l].c, all[l].d},
                    }};
                    if (det4(m).is_zero()) {
                        return {GeneralPosition3Report::Kind::ConcurrentQuadruple,
                                {all[i].id, all[j].id, all[k].id, all[l].id}};
                    }
                }
            }
        }
    }
    return {};
}

bool plane_blocks_every_box(const Plane& h) {
    if (!h.d.is_zero()) return false;
    for (int s2 : {-1, 1}) {
        for (int s3 : {-1, 1}) {
            if ((h.a + h.b * s2 + h.c * s3).is_zero()) return true;
        }
    }
    return false;
}

bool plane_pair_blocks_every_box(const Plane& h1, const Plane& h2) {
    ParametricLine3 line = intersect_two_planes(h1, h2);
    for (int axis = 0; axis < 3; ++axis) {
        int i1 = (axis + 1) % 3, i2 = (axis + 2) % 3;
        const Rational& d1 = coord(line.direction, i1);
        const Rational& d2 = coord(line.direction, i2);
        if (d1.is_zero() && d2.is_zero()) continue;
        const Rational& q1 = coord(line.point, i1);
        const Rational& q2 = coord(line.point, i2);
        if ((d1 - d2).is_zero() && (q1 - q2).is_zero()) return true;
        if ((d1 + d2).is_zero() && (q1 + q2).is_zero()) return true;
    }
    return false;
}

namespace {

bool box_generic_3d(const std::vector<Plane>& all, const Rational& a) {
    for (const Plane& h : all) {
        if (!crosses_open_cube(h, a, nullptr)) return false;
    }
    std::vector<Plane> box = box_planes(a);
    const int m = static_cast<int>(all.size());
    // Every pair line must cross the open cube (the cell census needs the
    // line's cells) and must not lie inside a box plane.
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            ParametricLine3 line = intersect_two_planes(all[i], all[j]);
            if (!line_crosses_open_cube(line, a)) return false;
            for (const Plane& b : box) {
                if (dot(b.normal(), line.direction).is_zero() &&
                    side_of_plane(line.point, b) == 0) {
                    return false;
                }
            }
        }
    }
    std::vector<Plane> ext = all;
    ext.insert(ext.end(), box.begin(), box.end());
    const int me = static_cast<int>(ext.size());
    for (int i = 0; i < me; ++i) {
        for (int j = i + 1; j < me; ++j) {
            for (int k = j + 1; k < me; ++k) {
                Rational det = det3({{{ext[i].a, ext[i].b, ext[i].c},
                                      {ext[j].a, ext[j].b, ext[j].c},
                                      {ext[k].a, ext[k].b, ext[k].c}}});
                if (det.is_zero()) continue;
                Point3 p = intersect_three_planes(ext[i], ext[j], ext[k]);
                if (!in_closed_cube(p, a)) continue;
                if (i < m && j < m && k < m && !in_open_cube(p, a)) return false;
                for (int t = 0; t < me; ++t) {
                    if (t == i || t == j || t == k) continue;
                    if (side_of_plane(p, ext[t]) == 0) return false;
                }
            }
        }
    }
    return true;
}

} // namespace

std::optional<Rational> try_box_half_width_3d(const std::vector<Plane>& planes,
                                              const std::vector<Plane>& extras,
                                              int max_attempts) {
    std::vector<Plane> all = planes;
    all.insert(all.end(), extras.begin(), extras.end());
    for (const Plane& h : all) {
        if (plane_blocks_every_box(h)) return std::nullopt;
    }
    const int m = static_cast<int>(all.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (planes_parallel(all[i], all[j])) continue;
            if (plane_pair_blocks_every_box(all[i], all[j])) {
                return std::nullopt;
            }
        }
    }
    Rational base = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                Rational det = det3({{{all[i].a, all[i].b, all[i].c},
                                      {all[j].a, all[j].b, all[j].c},
                                      {all[k].a, all[k].b, all[k].c}}});
                if (det.is_zero()) continue;
                Point3 p = intersect_three_planes(all[i], all[j], all[k]);
                base = max(base, max(abs(p.x), max(abs(p.y), abs(p.z))));
            }
        }
    }
    Rational a = base + 1;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        if (box_generic_3d(all, a)) return a;
        a += 1;
    }
    return std::nullopt;
}

Rational compute_box_half_width(const std::vector<Plane>& planes,
                                const std::vector<Plane>& extras) {
    std::vector<Plane> all = planes;
    all.insert(all.end(), extras.begin(), extras.end());
    GeneralPosition3Report gp = general_position_3d(all);
    if (!gp.ok()) {
        throw Error(ErrorCode::NotGeneralPosition, gp.describe());
    }
    std::optional<Rational> a = try_box_half_width_3d(planes, extras);
    if (!a) {
        throw Error(ErrorCode::BoxGenericityViolation,
                    "no generic bounding box exists for this input");
    }
    return *a;
}

int Arrangement3::generator_vertex_count() const {
    const int n = generator_count();
    int count = 0;
    for (const Vertex3& v : vertices) {
        if (v.ext[2] < n) ++count;
    }
    return count;
}

std::optional<int> Arrangement3::locate_cell(const Point3& p) const {
    const int n = generator_count();
    std::vector<int8_t> signs(extended_planes.size());
    for (std::size_t k = 0; k < extended_planes.size(); ++k) {
        int s = side_of_plane(p, extended_planes[k]);
        if (s == 0) return std::nullopt;
        signs[k] = static_cast<int8_t>(s);
    }
    for (int k = 0; k < kNumBoxPlanes; ++k) {
        if (signs[n + k] != kInsideSign[k]) return std::nullopt;
    }
    auto it = cell_by_signs_.find(signs_key(signs));
    if (it == cell_by_signs_.end()) {
        throw Error(ErrorCode::AssertionFailure,
                    "interior point not covered by any enumerated cell");
    }
    return it->second;
}

Arrangement3 build_arrangement_3d(const std::vector<Plane>& planes,
                                  const Rational& box_half_width) {
    if (box_half_width.sign() <= 0) {
        throw Error(ErrorCode::InvalidArgument, "box half-width must be positive");
    }
    GeneralPosition3Report gp = general_position_3d(planes);
    if (!gp.ok()) {
        throw Error(ErrorCode::NotGeneralPosition, gp.describe());
    }

    Arrangement3 arr;
    arr.planes = planes;
    arr.box_half_width = box_half_width;
    arr.extended_planes = planes;
    for (const Plane& b : box_planes(box_half_width)) {
        arr.extended_planes.push_back(b);
    }
    const int n = static_cast<int>(planes.size());
    const int m = static_cast<int>(arr.extended_planes.size());
    const Rational& a = arr.box_half_width;

    for (const Plane& h : planes) {
        bool corner_hit = false;
        if (!crosses_open_cube(h, a, &corner_hit)) {
            throw Error(ErrorCode::BoxGenericityViolation,
                        corner_hit
                            ? "plane " + std::to_string(h.id) + " contains a box corner"
                            : "plane " + std::to_string(h.id) +
                                  " does not cross the box interior");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ParametricLine3 line =
                intersect_two_planes(arr.planes[i], arr.planes[j]);
            if (!line_crosses_open_cube(line, a)) {
                throw Error(ErrorCode::BoxGenericityViolation,
                            "intersection line of planes " +
                                std::to_string(arr.planes[i].id) + " and " +
                                std::to_string(arr.planes[j].id) +
                                " misses the box interior");
            }
            for (int k = n; k < m; ++k) {
                const Plane& b = arr.extended_planes[k];
                if (dot(b.normal(), line.direction).is_zero() &&
                    side_of_plane(line.point, b) == 0) {
                    throw Error(ErrorCode::BoxGenericityViolation,
                                "intersection line of planes " +
                                    std::to_string(arr.planes[i].id) + " and " +
                                    std::to_string(arr.planes[j].id) +
                                    " lies in a box plane");
                }
            }
        }
    }

    // Vertices: nonsingular extended triples inside the closed cube, each
    // strictly off every non-supporting extended plane.
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                const Plane& hi = arr.extended_planes[i];
                const Plane& hj = arr.extended_planes[j];
                const Plane& hk = arr.extended_planes[k];
                Rational det = det3({{{hi.a, hi.b, hi.c},
                                      {hj.a, hj.b, hj.c},
                                      {hk.a, hk.b, hk.c}}});
                if (det.is_zero()) continue; // generator triples are nonsingular by GP
                Point3 p = intersect_three_planes(hi, hj, hk);
                bool generator_triple = k < n;
                if (!in_closed_cube(p, a)) {
                    if (generator_triple) {
                        throw Error(ErrorCode::BoxGenericityViolation,
                                    "generator vertex lies outside the box");
                    }
                    continue;
                }
                if (generator_triple && !in_open_cube(p, a)) {
                    throw Error(ErrorCode::BoxGenericityViolation,
                                "generator vertex lies on the box boundary");
                }
                std::vector<int8_t> signs(m, 0);
                for (int t = 0; t < m; ++t) {
                    if (t == i || t == j || t == k) continue;
                    int s = side_of_plane(p, arr.extended_planes[t]);
                    if (s == 0) {
                        throw Error(ErrorCode::BoxGenericityViolation,
                                    "extended vertex lies on a fourth extended plane");
                    }
                    signs[t] = static_cast<int8_t>(s);
                }
                arr.vertices.push_back({p, {i, j, k}});
                arr.vertex_signs_.push_back(std::move(signs));
            }
        }
    }

    // Support masks speed up the edge and face scans below.
    std::vector<uint32_t> support(arr.vertices.size(), 0);
    for (std::size_t vi = 0; vi < arr.vertices.size(); ++vi) {
        for (int e : arr.vertices[vi].ext) support[vi] |= 1u << e;
    }

    // Cells: the eight sign choices around each vertex enumerate every
    // cell, since each bounded cell has a vertex on its closure.
    for (std::size_t vi = 0; vi < arr.vertices.size(); ++vi) {
        const Vertex3& v = arr.vertices[vi];
        for (int choice = 0; choice < 8; ++choice) {
            std::vector<int8_t> signs = arr.vertex_signs_[vi];
            for (int t = 0; t < 3; ++t) {
                signs[v.ext[t]] = static_cast<int8_t>((choice >> t & 1) ? 1 : -1);
            }
            bool inside = true;
            for (int k = 0; k < kNumBoxPlanes; ++k) {
                if (signs[n + k] != kInsideSign[k]) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            std::string key = signs_key(signs);
            if (arr.cell_by_signs_.count(key)) continue;
            arr.cell_by_signs_.emplace(std::move(key),
                                       static_cast<int>(arr.cells.size()));
            Cell3 cell;
            cell.signs = std::move(signs);
            arr.cells.push_back(std::move(cell));
        }
    }

    for (std::size_t ci = 0; ci < arr.cells.size(); ++ci) {
        Cell3& cell = arr.cells[ci];
        for (std::size_t vi = 0; vi < arr.vertices.size(); ++vi) {
            const std::vector<int8_t>& vs = arr.vertex_signs_[vi];
            bool on_closure = true;
            for (int k = 0; k < m; ++k) {
                if (vs[k] != 0 && vs[k] != cell.signs[k]) {
                    on_closure = false;
                    break;
                }
            }
            if (on_closure) cell.vertex_indices.push_back(static_cast<int>(vi));
        }
        cell.V_count = static_cast<int>(cell.vertex_indices.size());
        if (cell.V_count < 4) {
            throw Error(ErrorCode::AssertionFailure,
                        "cell with fewer than four vertices");
        }

        // Edges: vertex pairs on exactly two common supporting planes whose
        // midpoint stays on the cell closure.
        for (std::size_t ai = 0; ai < cell.vertex_indices.size(); ++ai) {
            for (std::size_t bi = ai + 1; bi < cell.vertex_indices.size(); ++bi) {
                int va = cell.vertex_indices[ai];
                int vb = cell.vertex_indices[bi];
                if (std::popcount(support[va] & support[vb]) != 2) continue;
                const Point3& pa = arr.vertices[va].point;
                const Point3& pb = arr.vertices[vb].point;
                Point3 mid{(pa.x + pb.x) / 2, (pa.y + pb.y) / 2,
                           (pa.z + pb.z) / 2};
                bool on_closure = true;
                for (int k = 0; k < m; ++k) {
                    int s = side_of_plane(mid, arr.extended_planes[k]);
                    if (s != 0 && s != cell.signs[k]) {
                        on_closure = false;
                        break;
                    }
                }
                if (on_closure) ++cell.E_count;
            }
        }

        // Faces: every plane supporting a cell vertex carries a facet.
        uint32_t face_mask = 0;
        for (int vi : cell.vertex_indices) face_mask |= support[vi];
        for (int k = 0; k < m; ++k) {
            if (!(face_mask & (1u << k))) continue;
            ++cell.F_count;
            if (k < n) ++cell.F_real;

            FaceRecord rec;
            rec.supporting_plane_id = arr.extended_planes[k].id;
            rec.cell_id = static_cast<int>(ci);
            std::vector<Point3> pts;
            for (int vi : cell.vertex_indices) {
                if (support[vi] & (1u << k)) pts.push_back(arr.vertices[vi].point);
            }
            if (pts.size() < 3) {
                throw Error(ErrorCode::AssertionFailure,
                            "facet with fewer than three vertices");
            }
            Vec3 e1, e2;
            plane_basis(arr.extended_planes[k].normal(), e1, e2);
            Rational cx = 0, cy = 0, cz = 0;
            for (const Point3& p : pts) {
                cx += p.x;
                cy += p.y;
                cz += p.z;
            }
            Rational cnt(static_cast<long>(pts.size()));
            Point3 centroid{cx / cnt, cy / cnt, cz / cnt};
            std::sort(pts.begin(), pts.end(),
                      [&](const Point3& p, const Point3& q) {
                          Vec3 dp = p - centroid;
                          Vec3 dq = q - centroid;
                          return angle_less({dot(dp, e1), dot(dp, e2)},
                                            {dot(dq, e1), dot(dq, e2)});
                      });
            rec.polygon = std::move(pts);
            rec.edge_count = static_cast<int>(rec.polygon.size());
            cell.face_records.push_back(std::move(rec));
        }

        Rational sx = 0, sy = 0, sz = 0;
        for (int vi : cell.vertex_indices) {
            sx += arr.vertices[vi].point.x;
            sy += arr.vertices[vi].point.y;
            sz += arr.vertices[vi].point.z;
        }
        Rational cnt(static_cast<long>(cell.V_count));
        cell.representative = {sx / cnt, sy / cnt, sz / cnt};
        for (int k = 0; k < m; ++k) {
            if (side_of_plane(cell.representative, arr.extended_planes[k]) !=
                cell.signs[k]) {
                throw Error(ErrorCode::AssertionFailure,
                            "cell representative does not realize its signs");
            }
        }
    }

    return arr;
}

Zone3Report zone_3d(const Arrangement3& arr, const Plane& s) {
    for (const Plane& h : arr.planes) {
        if (planes_parallel(s, h)) {
            throw Error(ErrorCode::DegenerateQuery,
                        "query plane is parallel to plane " + std::to_string(h.id));
        }
    }
    for (const Vertex3& v : arr.vertices) {
        if (side_of_plane(v.point, s) == 0) {
            throw Error(ErrorCode::DegenerateQuery,
                        "query plane passes through an extended vertex");
        }
    }

    Zone3Report report;
    for (std::size_t ci = 0; ci < arr.cells.size(); ++ci) {
        const Cell3& cell = arr.cells[ci];
        bool pos = false, neg = false;
        for (int vi : cell.vertex_indices) {
            int sg = side_of_plane(arr.vertices[vi].point, s);
            (sg > 0 ? pos : neg) = true;
            if (pos && neg) break;
        }
        if (pos && neg) {
            report.cell_ids.push_back(static_cast<int>(ci));
            report.zone_size += cell.F_real;
        }
    }
    return report;
}

Arrangement3 remove_plane(const Arrangement3& arr, int q_id) {
    std::vector<Plane> rest;
    bool found = false;
    for (const Plane& h : arr.planes) {
        if (h.id == q_id) {
            found = true;
        } else {
            rest.push_back(h);
        }
    }
    if (!found) {
        throw Error(ErrorCode::UnknownPlane,
                    "no generator with id " + std::to_string(q_id));
    }
    return build_arrangement_3d(rest, arr.box_half_width);
}

Point2 Chart::to_chart(const Point3& p) const {
    if (side_of_plane(p, plane) != 0) {
        throw Error(ErrorCode::InvalidArgument, "point is not on the chart plane");
    }
    Vec3 w = p - origin;
    for (int r1 = 0; r1 < 3; ++r1) {
        for (int r2 = r1 + 1; r2 < 3; ++r2) {
            Rational minor = coord(e1, r1) * coord(e2, r2) -
                             coord(e1, r2) * coord(e2, r1);
            if (minor.is_zero()) continue;
            Rational u = (coord(w, r1) * coord(e2, r2) -
                          coord(w, r2) * coord(e2, r1)) /
                         minor;
            Rational v = (coord(e1, r1) * coord(w, r2) -
                          coord(e1, r2) * coord(w, r1)) /
                         minor;
            return {u, v};
        }
    }
    throw Error(ErrorCode::AssertionFailure, "degenerate chart basis");
}

Line2 Chart::line_of(const Plane& other_plane) const {
    Rational la = dot(other_plane.normal(), e1);
    Rational lb = dot(other_plane.normal(), e2);
    if (la.is_zero() && lb.is_zero()) {
        throw Error(ErrorCode::ParallelPlanes,
                    "plane " + std::to_string(other_plane.id) +
                        " is parallel to the chart plane");
    }
    Rational lc = other_plane.a * origin.x + other_plane.b * origin.y +
                  other_plane.c * origin.z + other_plane.d;
    return Line2(la, lb, lc, other_plane.id);
}

InducedArrangement induced_arrangement(const Arrangement3& arr, int q_id,
                                       const std::vector<Plane>& extras) {
    const Plane* q = nullptr;
    for (const Plane& h : arr.planes) {
        if (h.id == q_id) {
            q = &h;
            break;
        }
    }
    if (!q) {
        throw Error(ErrorCode::UnknownPlane,
                    "no generator with id " + std::to_string(q_id));
    }

    Chart chart;
    chart.plane = *q;
    plane_basis(q->normal(), chart.e1, chart.e2);
    if (!q->a.is_zero()) {
        chart.origin = {-q->d / q->a, Rational(0), Rational(0)};
    } else if (!q->b.is_zero()) {
        chart.origin = {Rational(0), -q->d / q->b, Rational(0)};
    } else {
        chart.origin = {Rational(0), Rational(0), -q->d / q->c};
    }
    Point3 base_origin = chart.origin;

    // A chart line through the origin with slope +-1 blocks every centered
    // square; sliding the origin along e1 clears each such line for all but
    // one offset, so finitely many candidates always suffice.
    const int max_shifts =
        static_cast<int>(arr.planes.size() + extras.size()) + 2;
    for (int shift = 0; shift <= max_shifts; ++shift) {
        chart.origin = base_origin + chart.e1 * Rational(shift, 13);
        std::vector<Line2> lines;
        for (const Plane& h : arr.planes) {
            if (h.id == q_id) continue;
            lines.push_back(chart.line_of(h));
        }
        std::vector<Line2> extra_lines;
        for (const Plane& h : extras) {
            extra_lines.push_back(chart.line_of(h));
        }
        std::optional<Rational> w = try_box_half_width_2d(lines, extra_lines);
        if (!w) continue;
        return {build_arrangement_2d(lines, *w), chart};
    }
    throw Error(ErrorCode::BoxTooSmall,
                "no usable chart found for the induced arrangement");
}

void dump_arrangement(const Arrangement3& arr, std::ostream& os) {
    os << "VERTICES " << arr.vertices.size() << "\n";
    for (const Vertex3& v : arr.vertices) {
        os << v.point.x << " " << v.point.y << " " << v.point.z << " planes";
        for (int e : v.ext) {
            os << " " << arr.extended_planes[e].id;
        }
        os << "\n";
    }
    os << "CELLS " << arr.cells.size() << "\n";
    for (const Cell3& cell : arr.cells) {
        os << "signs " << signs_key(cell.signs) << " V " << cell.V_count
           << " E " << cell.E_count << " F " << cell.F_count << " F_real "
           << cell.F_real << " rep " << cell.representative.x << " "
           << cell.representative.y << " " << cell.representative.z << "\n";
    }
}

} // namespace zonelab
