#include "zonelab/arrangement2d.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zonelab {

namespace {

constexpr int kNumSides = 4;
// Box sides in canonical form: u-W, u+W, v-W, v+W.
const int8_t kInsideSign[kNumSides] = {-1, +1, -1, +1};

std::vector<Line2> box_side_lines(const Rational& w) {
    return {
        Line2(1, 0, -w, -1),
        Line2(1, 0, w, -2),
        Line2(0, 1, -w, -3),
        Line2(0, 1, w, -4),
    };
}

std::vector<Point2> box_corners(const Rational& w) {
    return {{w, w}, {w, -w}, {-w, w}, {-w, -w}};
}

bool lines_parallel(const Line2& l1, const Line2& l2) {
    return det2(l1.a, l1.b, l2.a, l2.b).is_zero();
}

bool in_closed_box(const Point2& p, const Rational& w) {
    return abs(p.u) <= w && abs(p.v) <= w;
}

bool in_open_box(const Point2& p, const Rational& w) {
    return abs(p.u) < w && abs(p.v) < w;
}

// Crosses the open square: strictly mixed corner signs, none zero.
bool crosses_open_box(const Line2& l, const Rational& w, bool* corner_hit) {
    bool pos = false, neg = false;
    for (const Point2& corner : box_corners(w)) {
        int s = side_of_line(corner, l);
        if (s == 0) {
            if (corner_hit) *corner_hit = true;
            return false;
        }
        (s > 0 ? pos : neg) = true;
    }
    if (corner_hit) *corner_hit = false;
    return pos && neg;
}

} // namespace

std::string signs_key(const std::vector<int8_t>& signs) {
    std::string key(signs.size(), '0');
    for (std::size_t i = 0; i < signs.size(); ++i) {
        key[i] = signs[i] < 0 ? '-' : (signs[i] > 0 ? '+' : '0');
    }
    return key;
}

std::string GeneralPosition2Report::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Ok:
            os << "ok";
            break;
        case Kind::ParallelPair:
            os << "parallel lines " << line_ids[0] << " and " << line_ids[1];
            break;
        case Kind::ConcurrentTriple:
            os << "concurrent lines " << line_ids[0] << ", " << line_ids[1]
               << ", " << line_ids[2];
            break;
    }
    return os.str();
}

GeneralPosition2Report general_position_2d(const std::vector<Line2>& lines) {
    const int n = static_cast<int>(lines.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (lines_parallel(lines[i], lines[j])) {
                return {GeneralPosition2Report::Kind::ParallelPair,
                        {lines[i].id, lines[j].id}};
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                Rational det = det3({{{lines[i].a, lines[i].b, lines[i].c},
                                      {lines[j].a, lines[j].b, lines[j].c},
                                      {lines[k].a, lines[k].b, lines[k].c}}});
                if (det.is_zero()) {
                    return {GeneralPosition2Report::Kind::ConcurrentTriple,
                            {lines[i].id, lines[j].id, lines[k].id}};
                }
            }
        }
    }
    return {};
}

namespace {

// Full genericity of lines+extras against the square of half-width w: every
// line crosses the open square, no corner containment, all non-side pairwise
// intersections strictly interior, and no extended vertex on a third
// extended line.
bool box_generic_2d(const std::vector<Line2>& all, const Rational& w) {
    for (const Line2& l : all) {
        if (!crosses_open_box(l, w, nullptr)) return false;
    }
    std::vector<Line2> ext = all;
    for (const Line2& side : box_side_lines(w)) ext.push_back(side);
    const int m = static_cast<int>(all.size());
    const int me = static_cast<int>(ext.size());
    for (int i = 0; i < me; ++i) {
        for (int j = i + 1; j < me; ++j) {
            if (lines_parallel(ext[i], ext[j])) continue;
            Point2 p = intersect_two_lines(ext[i], ext[j]);
            if (!in_closed_box(p, w)) continue;
            if (i < m && j < m && !in_open_box(p, w)) return false;
            for (int k = 0; k < me; ++k) {
                if (k == i || k == j) continue;
                if (side_of_line(p, ext[k]) == 0) return false;
            }
        }
    }
    return true;
}

} // namespace

bool line_blocks_every_box(const Line2& l) {
    return l.c.is_zero() && ((l.a + l.b).is_zero() || (l.a - l.b).is_zero());
}

std::optional<Rational> try_box_half_width_2d(const std::vector<Line2>& lines,
                                              const std::vector<Line2>& extras,
                                              int max_attempts) {
    std::vector<Line2> all = lines;
    all.insert(all.end(), extras.begin(), extras.end());
    for (const Line2& l : all) {
        if (line_blocks_every_box(l)) return std::nullopt;
    }
    Rational base = 0;
    const int m = static_cast<int>(all.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (lines_parallel(all[i], all[j])) continue;
            Point2 p = intersect_two_lines(all[i], all[j]);
            base = max(base, max(abs(p.u), abs(p.v)));
        }
    }
    Rational w = base + 1;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        if (box_generic_2d(all, w)) return w;
        w += 1;
    }
    return std::nullopt;
}

Rational compute_box_half_width_2d(const std::vector<Line2>& lines,
                                   const std::vector<Line2>& extras) {
    std::vector<Line2> all = lines;
    all.insert(all.end(), extras.begin(), extras.end());
    GeneralPosition2Report gp = general_position_2d(all);
    if (!gp.ok()) {
        throw Error(ErrorCode::NotGeneralPosition, gp.describe());
    }
    std::optional<Rational> w = try_box_half_width_2d(lines, extras);
    if (!w) {
        throw Error(ErrorCode::BoxTooSmall,
                    "no generic bounding square exists for this input");
    }
    return *w;
}

int Arrangement2::generator_vertex_count() const {
    const int n = generator_count();
    int count = 0;
    for (const Vertex2& v : vertices) {
        if (v.ext_i < n && v.ext_j < n) ++count;
    }
    return count;
}

std::optional<int> Arrangement2::locate_face(const Point2& p) const {
    const int n = generator_count();
    std::vector<int8_t> signs(extended_lines.size());
    for (std::size_t k = 0; k < extended_lines.size(); ++k) {
        int s = side_of_line(p, extended_lines[k]);
        if (s == 0) return std::nullopt;
        signs[k] = static_cast<int8_t>(s);
    }
    for (int k = 0; k < kNumSides; ++k) {
        if (signs[n + k] != kInsideSign[k]) return std::nullopt;
    }
    auto it = face_by_signs_.find(signs_key(signs));
    if (it == face_by_signs_.end()) {
        throw Error(ErrorCode::AssertionFailure,
                    "interior point not covered by any enumerated face");
    }
    return it->second;
}

Arrangement2 build_arrangement_2d(const std::vector<Line2>& lines,
                                  const Rational& box_half_width) {
    if (box_half_width.sign() <= 0) {
        throw Error(ErrorCode::InvalidArgument, "box half-width must be positive");
    }
    GeneralPosition2Report gp = general_position_2d(lines);
    if (!gp.ok()) {
        throw Error(ErrorCode::NotGeneralPosition, gp.describe());
    }

    Arrangement2 arr;
    arr.lines = lines;
    arr.box_half_width = box_half_width;
    arr.extended_lines = lines;
    for (const Line2& side : box_side_lines(box_half_width)) {
        arr.extended_lines.push_back(side);
    }
    const int n = static_cast<int>(lines.size());
    const int m = static_cast<int>(arr.extended_lines.size());
    const Rational& w = arr.box_half_width;

    for (const Line2& l : lines) {
        bool corner_hit = false;
        if (!crosses_open_box(l, w, &corner_hit)) {
            throw Error(ErrorCode::BoxTooSmall,
                        corner_hit
                            ? "line " + std::to_string(l.id) + " contains a box corner"
                            : "line " + std::to_string(l.id) +
                                  " does not cross the box interior");
        }
    }

    // Vertices: all extended pairwise intersections inside the closed box.
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Line2& li = arr.extended_lines[i];
            const Line2& lj = arr.extended_lines[j];
            if (lines_parallel(li, lj)) continue;
            Point2 p = intersect_two_lines(li, lj);
            if (!in_closed_box(p, w)) {
                if (i < n && j < n) {
                    throw Error(ErrorCode::BoxTooSmall,
                                "intersection of lines " + std::to_string(li.id) +
                                    " and " + std::to_string(lj.id) +
                                    " lies outside the box");
                }
                continue;
            }
            if (i < n && j < n && !in_open_box(p, w)) {
                throw Error(ErrorCode::BoxTooSmall,
                            "intersection of lines " + std::to_string(li.id) +
                                " and " + std::to_string(lj.id) +
                                " lies on the box boundary");
            }
            std::vector<int8_t> signs(m, 0);
            for (int k = 0; k < m; ++k) {
                if (k == i || k == j) continue;
                int s = side_of_line(p, arr.extended_lines[k]);
                if (s == 0) {
                    // Three generators sharing a point were rejected above, so
                    // a box line is involved here.
                    throw Error(ErrorCode::BoxTooSmall,
                                "box boundary meets two lines at one point");
                }
                signs[k] = static_cast<int8_t>(s);
            }
            arr.vertices.push_back({p, i, j});
            arr.vertex_signs_.push_back(std::move(signs));
        }
    }

    // Faces: every bounded face has a vertex on its closure, so the sign
    // choices around the vertices enumerate all of them.
    for (std::size_t vi = 0; vi < arr.vertices.size(); ++vi) {
        const Vertex2& v = arr.vertices[vi];
        for (int si = -1; si <= 1; si += 2) {
            for (int sj = -1; sj <= 1; sj += 2) {
                std::vector<int8_t> signs = arr.vertex_signs_[vi];
                signs[v.ext_i] = static_cast<int8_t>(si);
                signs[v.ext_j] = static_cast<int8_t>(sj);
                bool inside = true;
                for (int k = 0; k < kNumSides; ++k) {
                    if (signs[n + k] != kInsideSign[k]) {
                        inside = false;
                        break;
                    }
                }
                if (!inside) continue;
                std::string key = signs_key(signs);
                if (arr.face_by_signs_.count(key)) continue;
                arr.face_by_signs_.emplace(std::move(key),
                                           static_cast<int>(arr.faces.size()));
                Face2 face;
                face.signs = std::move(signs);
                arr.faces.push_back(std::move(face));
            }
        }
    }

    for (Face2& face : arr.faces) {
        for (std::size_t vi = 0; vi < arr.vertices.size(); ++vi) {
            const std::vector<int8_t>& vs = arr.vertex_signs_[vi];
            bool on_closure = true;
            for (int k = 0; k < m; ++k) {
                if (vs[k] != 0 && vs[k] != face.signs[k]) {
                    on_closure = false;
                    break;
                }
            }
            if (on_closure) face.vertex_indices.push_back(static_cast<int>(vi));
        }
        if (face.vertex_indices.empty()) {
            throw Error(ErrorCode::AssertionFailure, "face with no vertices");
        }

        // Edges: vertex pairs sharing exactly one supporting line whose
        // midpoint stays on the face closure.
        for (std::size_t a = 0; a < face.vertex_indices.size(); ++a) {
            for (std::size_t b = a + 1; b < face.vertex_indices.size(); ++b) {
                const Vertex2& va = arr.vertices[face.vertex_indices[a]];
                const Vertex2& vb = arr.vertices[face.vertex_indices[b]];
                int common = -1;
                int shared = 0;
                for (int s1 : {va.ext_i, va.ext_j}) {
                    for (int s2 : {vb.ext_i, vb.ext_j}) {
                        if (s1 == s2) {
                            common = s1;
                            ++shared;
                        }
                    }
                }
                if (shared != 1) continue;
                Point2 mid{(va.point.u + vb.point.u) / 2,
                           (va.point.v + vb.point.v) / 2};
                bool on_closure = true;
                for (int k = 0; k < m; ++k) {
                    int s = side_of_line(mid, arr.extended_lines[k]);
                    if (s != 0 && s != face.signs[k]) {
                        on_closure = false;
                        break;
                    }
                }
                if (on_closure && common < n) ++face.edge_count;
            }
        }

        Rational usum = 0, vsum = 0;
        for (int vi : face.vertex_indices) {
            usum += arr.vertices[vi].point.u;
            vsum += arr.vertices[vi].point.v;
        }
        Rational count(static_cast<long>(face.vertex_indices.size()));
        face.representative = {usum / count, vsum / count};
        for (int k = 0; k < m; ++k) {
            if (side_of_line(face.representative, arr.extended_lines[k]) !=
                face.signs[k]) {
                throw Error(ErrorCode::AssertionFailure,
                            "face representative does not realize its signs");
            }
        }
    }

    return arr;
}

Zone2Report zone_2d(const Arrangement2& arr, const Line2& s) {
    const Rational& w = arr.box_half_width;
    for (const Line2& l : arr.lines) {
        if (lines_parallel(s, l)) {
            throw Error(ErrorCode::DegenerateQuery,
                        "query line is parallel to line " + std::to_string(l.id));
        }
    }
    for (const Vertex2& v : arr.vertices) {
        if (side_of_line(v.point, s) == 0) {
            throw Error(ErrorCode::DegenerateQuery,
                        "query line passes through an arrangement vertex");
        }
    }
    bool corner_hit = false;
    if (!crosses_open_box(s, w, &corner_hit)) {
        throw Error(ErrorCode::DegenerateQuery,
                    corner_hit ? "query line passes through a box corner"
                               : "query line does not cross the box interior");
    }

    // Walk s: sort its crossings with every extended line, then locate the
    // face containing each in-box segment midpoint.
    Point2 p0 = s.b.is_zero() ? Point2{-s.c / s.a, Rational(0)}
                              : Point2{Rational(0), -s.c / s.b};
    Rational du = -s.b, dv = s.a;
    std::vector<Rational> ts;
    for (const Line2& l : arr.extended_lines) {
        if (lines_parallel(s, l)) continue;
        Point2 p = intersect_two_lines(s, l);
        if (!in_closed_box(p, w)) continue;
        Rational t = du.is_zero() ? (p.v - p0.v) / dv : (p.u - p0.u) / du;
        ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (ts[i] == ts[i - 1]) {
            throw Error(ErrorCode::AssertionFailure,
                        "duplicate crossing parameter on a validated query");
        }
    }

    std::set<int> face_ids;
    for (std::size_t i = 1; i < ts.size(); ++i) {
        Rational tm = (ts[i - 1] + ts[i]) / 2;
        Point2 mid{p0.u + du * tm, p0.v + dv * tm};
        if (!in_open_box(mid, w)) continue;
        std::optional<int> face = arr.locate_face(mid);
        if (!face) {
            throw Error(ErrorCode::AssertionFailure,
                        "zone walk midpoint fell on an extended line");
        }
        face_ids.insert(*face);
    }

    Zone2Report report;
    report.face_ids.assign(face_ids.begin(), face_ids.end());
    for (int f : report.face_ids) {
        report.zone_size += arr.faces[f].edge_count;
    }
    return report;
}

} // namespace zonelab
