#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "zonelab/arrangement3d.hpp"
#include "zonelab/harness.hpp"

using namespace zonelab;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected a zonelab::Error");
}

std::vector<Plane> octant_planes() {
    return {Plane(1, 0, 0, 0, 0), Plane(0, 1, 0, 0, 1), Plane(0, 0, 1, 0, 2)};
}

// Coordinate planes plus x+y+z=1: four planes bounding a simplex.
std::vector<Plane> simplex_planes() {
    return {Plane(1, 0, 0, 0, 0), Plane(0, 1, 0, 0, 1), Plane(0, 0, 1, 0, 2),
            Plane(1, 1, 1, -1, 3)};
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::set<std::string> built_cell_keys(const Arrangement3& arr) {
    std::set<std::string> keys;
    for (const Cell3& c : arr.cells) keys.insert(signs_key(c.signs));
    return keys;
}

// plane-id, then the polygon's vertex coordinates in sorted text order:
// identifies a face polygon independently of which cell listed it.
std::string face_key(const FaceRecord& rec) {
    std::vector<std::string> coords;
    for (const Point3& p : rec.polygon) {
        coords.push_back(p.x.str() + "," + p.y.str() + "," + p.z.str());
    }
    std::sort(coords.begin(), coords.end());
    std::string key = std::to_string(rec.supporting_plane_id) + ":";
    for (const std::string& c : coords) key += c + ";";
    return key;
}

} // namespace

TEST_CASE("general_position_3d reports each violation kind") {
    CHECK(general_position_3d(octant_planes()).ok());

    GeneralPosition3Report parallel =
        general_position_3d({Plane(1, 0, 0, 0, 0), Plane(1, 0, 0, -1, 1)});
    CHECK(parallel.kind == GeneralPosition3Report::Kind::ParallelPair);

    // x=0, y=0, x+y=0 all contain the z axis.
    GeneralPosition3Report triple = general_position_3d(
        {Plane(1, 0, 0, 0, 0), Plane(0, 1, 0, 0, 1), Plane(1, 1, 0, 0, 2)});
    CHECK(triple.kind == GeneralPosition3Report::Kind::DegenerateTriple);
    CHECK(triple.plane_ids == std::vector<int>{0, 1, 2});

    // Coordinate planes plus a fourth through the origin.
    GeneralPosition3Report quad = general_position_3d(
        {Plane(1, 0, 0, 0, 0), Plane(0, 1, 0, 0, 1), Plane(0, 0, 1, 0, 2),
         Plane(1, 1, 1, 0, 3)});
    CHECK(quad.kind == GeneralPosition3Report::Kind::ConcurrentQuadruple);

    // The query plane takes part in every check.
    GeneralPosition3Report with_s = general_position_3d(
        {Plane(1, 0, 0, 0, 0)}, Plane(1, 0, 0, -2, 9));
    CHECK(with_s.kind == GeneralPosition3Report::Kind::ParallelPair);
    CHECK(with_s.plane_ids == std::vector<int>{0, 9});
}

TEST_CASE("box half-width covers all triple points") {
    CHECK(compute_box_half_width(octant_planes()) == Rational(1));

    std::vector<Plane> shifted{Plane(1, 0, 0, -1, 0), Plane(0, 1, 0, -2, 1),
                               Plane(0, 0, 1, -3, 2)};
    CHECK(compute_box_half_width(shifted) == Rational(4));

    // Random instance: enumerate the four triple points directly.
    SplitMix64 rng(42);
    std::vector<Plane> planes = generate_planes(4, rng, 10);
    Rational biggest = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                Point3 p =
                    intersect_three_planes(planes[i], planes[j], planes[k]);
                biggest = max(biggest, max(abs(p.x), max(abs(p.y), abs(p.z))));
            }
        }
    }
    Rational a = compute_box_half_width(planes);
    CHECK(a >= biggest + 1);
    // No genericity retry expected for this seed.
    CHECK(a == biggest + 1);
}

TEST_CASE("planes that block every centered box are detected") {
    // x - y = 0 contains the corners (A, A, +-A) of every cube.
    CHECK(plane_blocks_every_box(Plane(1, -1, 0, 0, 0)));
    CHECK_FALSE(plane_blocks_every_box(Plane(1, -1, 0, -1, 0)));
    CHECK_FALSE(plane_blocks_every_box(Plane(1, 0, 0, 0, 0)));

    // x - z = 1 and y - z = 1 meet in the line (t+1, t+1, t), which
    // passes through the box edge x = y = A for every A >= 1/2.
    CHECK(plane_pair_blocks_every_box(Plane(1, 0, -1, -1, 0),
                                      Plane(0, 1, -1, -1, 1)));
    CHECK_FALSE(plane_pair_blocks_every_box(Plane(1, 0, 0, 0, 0),
                                            Plane(0, 1, 0, 0, 1)));

    CHECK(code_of([] {
              compute_box_half_width({Plane(1, -1, 0, 0, 0)});
          }) == ErrorCode::BoxGenericityViolation);
}

TEST_CASE("empty arrangement is one box cell") {
    Arrangement3 arr = build_arrangement_3d({}, Rational(1));
    REQUIRE(arr.cells.size() == 1);
    const Cell3& cube = arr.cells[0];
    CHECK(cube.V_count == 8);
    CHECK(cube.E_count == 12);
    CHECK(cube.F_count == 6);
    CHECK(cube.F_real == 0);
    CHECK(arr.generator_vertex_count() == 0);
    CHECK(cube.representative == Point3{0, 0, 0});
}

TEST_CASE("coordinate planes cut the box into eight unit cubes") {
    Arrangement3 arr = build_arrangement_3d(octant_planes(), Rational(1));
    REQUIRE(arr.cells.size() == 8);
    for (const Cell3& cell : arr.cells) {
        CHECK(cell.V_count == 8);
        CHECK(cell.E_count == 12);
        CHECK(cell.F_count == 6);
        CHECK(cell.F_real == 3);
    }
    CHECK(arr.generator_vertex_count() == 1);
}

TEST_CASE("four generic planes: fifteen cells, one simplex") {
    Rational a = compute_box_half_width(simplex_planes());
    CHECK(a == Rational(2));
    Arrangement3 arr = build_arrangement_3d(simplex_planes(), a);
    REQUIRE(arr.cells.size() == 15);

    int simplex_cells = 0;
    for (const Cell3& cell : arr.cells) {
        if (cell.F_real == cell.F_count) {
            // Bounded entirely by generator planes: the simplex.
            ++simplex_cells;
            CHECK(cell.V_count == 4);
            CHECK(cell.E_count == 6);
            CHECK(cell.F_count == 4);
            CHECK(signs_key(cell.signs).substr(0, 4) == "+++-");
        }
    }
    CHECK(simplex_cells == 1);
}

TEST_CASE("cell structure on random instances") {
    SplitMix64 rng(31337);
    for (int n = 0; n <= 5; ++n) {
        std::vector<Plane> planes = generate_planes(n, rng, 8);
        Rational a = compute_box_half_width(planes);
        Arrangement3 arr = build_arrangement_3d(planes, a);

        long long expected_cells =
            binom(n, 0) + binom(n, 1) + binom(n, 2) + binom(n, 3);
        CHECK(static_cast<long long>(arr.cells.size()) == expected_cells);
        CHECK(arr.generator_vertex_count() == binom(n, 3));

        // Construction-independent cell enumeration must agree exactly.
        CHECK(built_cell_keys(arr) ==
              oracle::enumerate_cell_keys_3d(planes, a));

        std::map<std::string, int> face_uses;
        for (const Cell3& cell : arr.cells) {
            CHECK(2 * cell.E_count == 3 * cell.V_count);
            CHECK(cell.F_count == cell.E_count - cell.V_count + 2);
            CHECK(cell.V_count < 2 * cell.F_count);
            CHECK(cell.E_count < 3 * cell.F_count);
            CHECK(cell.F_real >= 0);
            CHECK(cell.F_real <= cell.F_count);
            CHECK(static_cast<int>(cell.face_records.size()) == cell.F_count);

            for (const FaceRecord& rec : cell.face_records) {
                REQUIRE(rec.polygon.size() >= 3);
                CHECK(rec.edge_count == static_cast<int>(rec.polygon.size()));
                ++face_uses[face_key(rec)];

                // Planar: every polygon vertex satisfies the supporting
                // plane's equation.
                const Plane* sup = nullptr;
                for (const Plane& h : arr.extended_planes) {
                    if (h.id == rec.supporting_plane_id) sup = &h;
                }
                REQUIRE(sup != nullptr);
                for (const Point3& p : rec.polygon) {
                    CHECK(side_of_plane(p, *sup) == 0);
                }
                // Convex cycle: consistent turn direction all the way around.
                const std::size_t k = rec.polygon.size();
                int orientation = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    Vec3 e1 = rec.polygon[(i + 1) % k] - rec.polygon[i];
                    Vec3 e2 = rec.polygon[(i + 2) % k] - rec.polygon[(i + 1) % k];
                    int turn = dot(cross(e1, e2), sup->normal()).sign();
                    CHECK(turn != 0);
                    if (orientation == 0) orientation = turn;
                    CHECK(turn == orientation);
                }
            }
        }

        // Every generator-supported face borders exactly two cells, every
        // box-supported face exactly one.
        for (const auto& [key, uses] : face_uses) {
            bool box_face = key[0] == '-';
            CHECK(uses == (box_face ? 1 : 2));
        }
    }
}

TEST_CASE("zone of a single plane contains both halves") {
    std::vector<Plane> one{Plane(0, 0, 1, 0, 0)}; // z = 0
    Rational a = compute_box_half_width(one, {Plane(1, 0, 0, 0, 1)});
    Arrangement3 arr = build_arrangement_3d(one, a);
    Zone3Report zone = zone_3d(arr, Plane(1, 0, 0, 0, 1)); // x = 0
    CHECK(zone.cell_count() == 2);
    CHECK(zone.zone_size == 2);
}

TEST_CASE("octant zone of x+y+z=1/2 misses only the negative octant") {
    std::vector<Plane> planes = octant_planes();
    Plane s(1, 1, 1, Rational(-1, 2), 3);
    Rational a = compute_box_half_width(planes, {s});
    CHECK(a == Rational(3, 2));
    Arrangement3 arr = build_arrangement_3d(planes, a);
    Zone3Report zone = zone_3d(arr, s);
    CHECK(zone.cell_count() == 7);
    CHECK(zone.zone_size == 21);
    for (int ci : zone.cell_ids) {
        CHECK(signs_key(arr.cells[ci].signs).substr(0, 3) != "---");
    }
}

TEST_CASE("zone of the empty arrangement is the box cell") {
    std::vector<Plane> none;
    Plane s(1, 1, 1, Rational(-1, 2), 0);
    Rational a = compute_box_half_width(none, {s});
    Arrangement3 arr = build_arrangement_3d(none, a);
    Zone3Report zone = zone_3d(arr, s);
    CHECK(zone.cell_count() == 1);
    CHECK(zone.zone_size == 0);
}

TEST_CASE("degenerate zone queries are rejected") {
    Arrangement3 arr = build_arrangement_3d(octant_planes(), Rational(1));
    CHECK(code_of([&] { zone_3d(arr, Plane(1, 0, 0, -5, 9)); }) ==
          ErrorCode::DegenerateQuery);
    // Through the origin vertex.
    CHECK(code_of([&] { zone_3d(arr, Plane(1, 2, 3, 0, 9)); }) ==
          ErrorCode::DegenerateQuery);
}

TEST_CASE("zone membership matches the feasibility oracle") {
    SplitMix64 rng(808);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 1 + static_cast<int>(rng.next_int(0, 4));
        auto [planes, s] = generate_planes_with_query(n, rng, 8);
        Rational a = compute_box_half_width(planes, {s});
        Arrangement3 arr = build_arrangement_3d(planes, a);
        Zone3Report zone = zone_3d(arr, s);

        std::set<int> in_zone(zone.cell_ids.begin(), zone.cell_ids.end());
        for (std::size_t ci = 0; ci < arr.cells.size(); ++ci) {
            bool feasible = oracle::cell_meets_plane(
                arr.extended_planes, arr.cells[ci].signs, s);
            CHECK(feasible == (in_zone.count(static_cast<int>(ci)) > 0));
        }

        // Sampled points on s always land in reported zone cells.
        for (int k = 0; k < 5; ++k) {
            auto p = oracle::sample_point_on_plane(s, a, arr.extended_planes,
                                                   rng);
            REQUIRE(p.has_value());
            auto cell = arr.locate_cell(*p);
            REQUIRE(cell.has_value());
            CHECK(in_zone.count(*cell) > 0);
        }

        // Zone size dominates the zone cell count once generators exist.
        CHECK(zone.zone_size >= zone.cell_count());
    }
}

TEST_CASE("remove_plane rebuilds over the remaining generators") {
    std::vector<Plane> planes = octant_planes();
    Rational a(1);
    Arrangement3 arr = build_arrangement_3d(planes, a);

    Arrangement3 without_z = remove_plane(arr, 2);
    CHECK(without_z.cells.size() == 4);
    CHECK(without_z.box_half_width == a);

    Arrangement3 only_box = remove_plane(remove_plane(without_z, 0), 1);
    CHECK(only_box.cells.size() == 1);

    CHECK(code_of([&] { remove_plane(arr, 17); }) == ErrorCode::UnknownPlane);

    SplitMix64 rng(4444);
    std::vector<Plane> random_planes = generate_planes(5, rng, 8);
    Rational ra = compute_box_half_width(random_planes);
    Arrangement3 rarr = build_arrangement_3d(random_planes, ra);
    Arrangement3 rwithout = remove_plane(rarr, random_planes[2].id);
    CHECK(static_cast<long long>(rwithout.cells.size()) ==
          binom(4, 0) + binom(4, 1) + binom(4, 2) + binom(4, 3));
}

TEST_CASE("induced arrangement on a coordinate plane") {
    Arrangement3 arr = build_arrangement_3d(octant_planes(), Rational(1));
    InducedArrangement induced = induced_arrangement(arr, 2); // on z = 0
    CHECK(induced.arrangement.lines.size() == 2);
    CHECK(induced.arrangement.faces.size() == 4);
    // Chart round trip: chart lines vanish exactly where the source
    // planes meet the chart plane.
    for (const Line2& l : induced.arrangement.lines) {
        CHECK((l.id == 0 || l.id == 1));
    }

    Arrangement3 single = build_arrangement_3d({Plane(0, 0, 1, 0, 0)}, Rational(1));
    InducedArrangement trivial = induced_arrangement(single, 0);
    CHECK(trivial.arrangement.lines.empty());
    CHECK(trivial.arrangement.faces.size() == 1);
}

TEST_CASE("induced arrangement slides the chart off blocked origins") {
    // On q: x+y+z=1 the images of the coordinate planes pass through the
    // default chart origin with slopes that hit box corners; the builder
    // must shift the chart and still produce all seven faces.
    std::vector<Plane> planes = simplex_planes();
    Rational a = compute_box_half_width(planes);
    Arrangement3 arr = build_arrangement_3d(planes, a);
    InducedArrangement induced = induced_arrangement(arr, 3);
    CHECK(induced.arrangement.lines.size() == 3);
    CHECK(general_position_2d(induced.arrangement.lines).ok());
    CHECK(induced.arrangement.faces.size() == 7);

    // The chart keeps its plane: mapped lines vanish on the plane's
    // intersection with each source plane.
    for (const Plane& h : planes) {
        if (h.id == 3) continue;
        Line2 img = induced.chart.line_of(h);
        ParametricLine3 meet = intersect_two_planes(h, planes[3]);
        Point2 c1 = induced.chart.to_chart(meet.point);
        Point2 c2 = induced.chart.to_chart(meet.point + meet.direction);
        CHECK(side_of_line(c1, img) == 0);
        CHECK(side_of_line(c2, img) == 0);
    }

    CHECK(code_of([&] { induced_arrangement(arr, 99); }) ==
          ErrorCode::UnknownPlane);
}

TEST_CASE("arrangement dump has the two documented sections") {
    Arrangement3 arr = build_arrangement_3d(octant_planes(), Rational(1));
    std::ostringstream os;
    dump_arrangement(arr, os);
    std::string text = os.str();
    CHECK(text.rfind("VERTICES ", 0) == 0);
    CHECK(text.find("CELLS 8") != std::string::npos);
    CHECK(text.find("F_real 3") != std::string::npos);
}
