#include "zonelab/zone_analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zonelab {

namespace {

bool is_generator_id(const Arrangement3& arr, int plane_id) {
    for (const Plane& h : arr.planes) {
        if (h.id == plane_id) return true;
    }
    return false;
}

long long generator_pairs_excluding(const Cell3& cell, int q_id) {
    long long count = 0;
    for (const FaceRecord& f : cell.face_records) {
        if (f.supporting_plane_id >= 0 && f.supporting_plane_id != q_id) {
            ++count;
        }
    }
    return count;
}

// Signs of cell restricted to the arrangement without plane q: drop the
// entry at q's generator position; the relative order of the remaining
// generators and the box planes is unchanged.
std::vector<int8_t> signs_without(const std::vector<int8_t>& signs, int q_pos) {
    std::vector<int8_t> out;
    out.reserve(signs.size() - 1);
    for (std::size_t k = 0; k < signs.size(); ++k) {
        if (static_cast<int>(k) != q_pos) out.push_back(signs[k]);
    }
    return out;
}

// Strictly mixed signs of the polygon's vertices against q.
bool polygon_cut_by(const std::vector<Point3>& polygon, const Plane& q) {
    bool pos = false, neg = false;
    for (const Point3& p : polygon) {
        int s = side_of_plane(p, q);
        if (s == 0) {
            throw Error(ErrorCode::AssertionFailure,
                        "face vertex lies on the removed plane");
        }
        (s > 0 ? pos : neg) = true;
    }
    return pos && neg;
}

Theorem1Record theorem1_on(const Arrangement3& arr, const Zone3Report& zone,
                           const Plane& q, int q_pos, const Plane& s) {
    Theorem1Record rec;
    rec.q_id = q.id;

    Arrangement3 without_q = remove_plane(arr, q.id);
    Zone3Report zone_without_q = zone_3d(without_q, s);
    rec.rhs_zone_a_minus_q = zone_without_q.zone_size;

    InducedArrangement induced = induced_arrangement(arr, q.id, {s});
    Line2 s_image = induced.chart.line_of(s);
    Zone2Report zone_lq = zone_2d(induced.arrangement, s_image);
    rec.rhs_zone_lq = zone_lq.zone_size;

    std::vector<bool> in_zone(arr.cells.size(), false);
    for (int ci : zone.cell_ids) in_zone[ci] = true;

    long long split_pair_count = 0;
    for (int ci : zone.cell_ids) {
        const Cell3& cell = arr.cells[ci];
        long long pairs = generator_pairs_excluding(cell, q.id);
        rec.lhs_pairs += pairs;

        auto host_it =
            without_q.cell_by_signs_.find(signs_key(signs_without(cell.signs, q_pos)));
        if (host_it == without_q.cell_by_signs_.end()) {
            throw Error(ErrorCode::AssertionFailure,
                        "zone cell has no host cell after plane removal");
        }
        const Cell3& host = without_q.cells[host_it->second];

        bool host_cut = false;
        {
            bool pos = false, neg = false;
            for (int vi : host.vertex_indices) {
                int sg = side_of_plane(without_q.vertices[vi].point, q);
                if (sg == 0) {
                    throw Error(ErrorCode::AssertionFailure,
                                "host cell vertex lies on the removed plane");
                }
                (sg > 0 ? pos : neg) = true;
            }
            host_cut = pos && neg;
        }
        if (!host_cut) {
            rec.uncut_pairs += pairs;
            continue;
        }

        std::vector<int8_t> sibling_signs = cell.signs;
        sibling_signs[q_pos] = static_cast<int8_t>(-sibling_signs[q_pos]);
        auto sibling_it = arr.cell_by_signs_.find(signs_key(sibling_signs));
        if (sibling_it == arr.cell_by_signs_.end()) {
            throw Error(ErrorCode::AssertionFailure,
                        "cut cell is missing its sibling across the plane");
        }
        if (!in_zone[sibling_it->second]) {
            rec.one_side_pairs += pairs;
            continue;
        }

        // Both halves of the host cell are in the zone: classify each face
        // by whether the matching host face is cut by q.
        for (const FaceRecord& f : cell.face_records) {
            if (f.supporting_plane_id < 0 || f.supporting_plane_id == q.id) {
                continue;
            }
            const FaceRecord* host_face = nullptr;
            for (const FaceRecord& hf : host.face_records) {
                if (hf.supporting_plane_id == f.supporting_plane_id) {
                    host_face = &hf;
                    break;
                }
            }
            if (!host_face) {
                throw Error(ErrorCode::AssertionFailure,
                            "zone cell face has no host face after removal");
            }
            if (polygon_cut_by(host_face->polygon, q)) {
                ++split_pair_count;
            } else {
                ++rec.both_sides_unsplit_pairs;
            }
        }
    }

    if (split_pair_count % 2 != 0) {
        throw Error(ErrorCode::AssertionFailure,
                    "split faces were not consumed in pairs");
    }
    rec.both_sides_split_faces = split_pair_count / 2;

    if (rec.lhs_pairs != rec.uncut_pairs + rec.one_side_pairs +
                             rec.both_sides_unsplit_pairs + split_pair_count) {
        throw Error(ErrorCode::AssertionFailure,
                    "case accounting does not add up to the pair count");
    }
    if (rec.both_sides_split_faces > rec.rhs_zone_lq) {
        throw Error(ErrorCode::AssertionFailure,
                    "split faces exceed the induced 2D zone size");
    }
    if (!rec.holds()) {
        std::ostringstream os;
        os << "pair count " << rec.lhs_pairs << " exceeds " << rec.rhs_zone_a_minus_q
           << " + " << rec.rhs_zone_lq << " for plane " << q.id;
        throw Error(ErrorCode::AssertionFailure, os.str());
    }
    return rec;
}

} // namespace

long long count_pairs(const Arrangement3& arr, const Plane& s, int q_id) {
    if (!is_generator_id(arr, q_id)) {
        throw Error(ErrorCode::UnknownPlane,
                    "no generator with id " + std::to_string(q_id));
    }
    Zone3Report zone = zone_3d(arr, s);
    long long count = 0;
    for (int ci : zone.cell_ids) {
        count += generator_pairs_excluding(arr.cells[ci], q_id);
    }
    return count;
}

Theorem1Record verify_theorem1(const std::vector<Plane>& planes,
                               const Plane& s, int q_id) {
    GeneralPosition3Report gp = general_position_3d(planes, s);
    if (!gp.ok()) {
        throw Error(ErrorCode::DegenerateInstance, gp.describe());
    }
    int q_pos = -1;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        if (planes[i].id == q_id) q_pos = static_cast<int>(i);
    }
    if (q_pos < 0) {
        throw Error(ErrorCode::UnknownPlane,
                    "no generator with id " + std::to_string(q_id));
    }
    Rational a = compute_box_half_width(planes, {s});
    Arrangement3 arr = build_arrangement_3d(planes, a);
    Zone3Report zone = zone_3d(arr, s);
    return theorem1_on(arr, zone, planes[q_pos], q_pos, s);
}

RecurrenceRecord verify_recurrence(const std::vector<Plane>& planes,
                                   const Plane& s) {
    if (planes.empty()) {
        throw Error(ErrorCode::InvalidArgument, "recurrence needs n >= 1 planes");
    }
    GeneralPosition3Report gp = general_position_3d(planes, s);
    if (!gp.ok()) {
        throw Error(ErrorCode::DegenerateInstance, gp.describe());
    }
    Rational a = compute_box_half_width(planes, {s});
    Arrangement3 arr = build_arrangement_3d(planes, a);
    Zone3Report zone = zone_3d(arr, s);

    RecurrenceRecord rec;
    rec.n = static_cast<int>(planes.size());
    rec.zone_size = zone.zone_size;
    rec.lhs = static_cast<long long>(rec.n - 1) * rec.zone_size;
    rec.f_value = Rational(rec.zone_size) / Rational(rec.n);

    long long lhs_total = 0;
    for (std::size_t q_pos = 0; q_pos < planes.size(); ++q_pos) {
        Theorem1Record t = theorem1_on(arr, zone, planes[q_pos],
                                       static_cast<int>(q_pos), s);
        lhs_total += t.lhs_pairs;
        rec.rhs += t.rhs_zone_a_minus_q + t.rhs_zone_lq;
        rec.per_q.push_back(std::move(t));
    }

    if (lhs_total != rec.lhs) {
        std::ostringstream os;
        os << "sum of per-plane pair counts " << lhs_total << " differs from (n-1)*zone "
           << rec.lhs;
        throw Error(ErrorCode::AssertionFailure, os.str());
    }
    if (!rec.holds()) {
        std::ostringstream os;
        os << "summed inequality fails: " << rec.lhs << " > " << rec.rhs;
        throw Error(ErrorCode::AssertionFailure, os.str());
    }
    return rec;
}

RecurrenceRecord RecurrenceRecord::sample(int n, long long zone_size) {
    RecurrenceRecord rec;
    rec.n = n;
    rec.zone_size = zone_size;
    rec.lhs = static_cast<long long>(n - 1) * zone_size;
    rec.f_value = n > 0 ? Rational(zone_size) / Rational(n) : Rational(0);
    return rec;
}

ZoneStatistics fit_constants(const std::vector<RecurrenceRecord>& records) {
    std::map<int, long long> max_by_n;
    for (const RecurrenceRecord& rec : records) {
        if (rec.n < 1) {
            throw Error(ErrorCode::InvalidArgument, "record with n < 1");
        }
        auto [it, inserted] = max_by_n.emplace(rec.n, rec.zone_size);
        if (!inserted) it->second = std::max(it->second, rec.zone_size);
    }
    if (max_by_n.size() < 2) {
        throw Error(ErrorCode::InsufficientData,
                    "constant fitting needs at least two distinct n values");
    }

    ZoneStatistics stats;
    for (const auto& [n, z] : max_by_n) {
        stats.n_values.push_back(n);
        stats.max_zone.push_back(z);
        stats.max_f.push_back(Rational(z) / Rational(n));
        stats.max_z_over_n2.push_back(static_cast<double>(z) /
                                      (static_cast<double>(n) * n));
    }

    double xbar = 0, ybar = 0;
    const std::size_t k = stats.n_values.size();
    for (std::size_t i = 0; i < k; ++i) {
        xbar += stats.n_values[i];
        ybar += stats.max_f[i].to_double();
    }
    xbar /= static_cast<double>(k);
    ybar /= static_cast<double>(k);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < k; ++i) {
        double dx = stats.n_values[i] - xbar;
        sxy += dx * (stats.max_f[i].to_double() - ybar);
        sxx += dx * dx;
    }
    stats.fitted_slope = sxy / sxx;
    return stats;
}

} // namespace zonelab
