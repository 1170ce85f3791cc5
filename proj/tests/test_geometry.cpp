#include <doctest.h>

#include "zonelab/geometry.hpp"
#include "zonelab/harness.hpp"

using namespace zonelab;

namespace {

Rational rnd(SplitMix64& rng) {
    return Rational(rng.next_int(-50, 50), rng.next_int(1, 12));
}

Plane random_plane(SplitMix64& rng, int id) {
    while (true) {
        Rational a = rnd(rng), b = rnd(rng), c = rnd(rng), d = rnd(rng);
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        return Plane(a, b, c, d, id);
    }
}

} // namespace

TEST_CASE("side_of_plane evaluates the sign exactly") {
    Plane h1(1, 1, 1, -1, 0); // x + y + z - 1
    CHECK(side_of_plane({0, 0, 0}, h1) == -1);

    Plane h2(0, 0, 1, 0, 1); // z = 0
    CHECK(side_of_plane({0, 0, 0}, h2) == 0);

    // x - y + 2z - 5 at (1,2,3) evaluates to 1 - 2 + 6 - 5 = 0 by hand,
    // so the exact sign is 0; at (1,2,4) it is 1 - 2 + 8 - 5 = 2 > 0.
    Plane h3(1, -1, 2, -5, 2);
    CHECK(side_of_plane({1, 2, 3}, h3) == 0);
    CHECK(side_of_plane({1, 2, 4}, h3) == +1);
}

TEST_CASE("intersect_three_planes solves the system exactly") {
    Plane x(1, 0, 0, 0, 0), y(0, 1, 0, 0, 1), z(0, 0, 1, 0, 2);
    CHECK(intersect_three_planes(x, y, z) == Point3{0, 0, 0});

    Plane x1(1, 0, 0, -1, 0), y2(0, 1, 0, -2, 1), z3(0, 0, 1, -3, 2);
    CHECK(intersect_three_planes(x1, y2, z3) == Point3{1, 2, 3});

    // x + y = 1, x - y = 0, z = 5 has the hand solution (1/2, 1/2, 5).
    Plane p1(1, 1, 0, -1, 0), p2(1, -1, 0, 0, 1), p3(0, 0, 1, -5, 2);
    Point3 p = intersect_three_planes(p1, p2, p3);
    CHECK(p == Point3{Rational(1, 2), Rational(1, 2), Rational(5)});

    // x=0, y=0, x+y=1 is singular.
    Plane p4(1, 1, 0, -1, 3);
    CHECK_THROWS_AS(intersect_three_planes(x, y, p4), Error);
    try {
        intersect_three_planes(x, y, p4);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularTriple);
    }
}

TEST_CASE("intersect_two_planes returns an exact point-direction line") {
    Plane z(0, 0, 1, 0, 0), y(0, 1, 0, 0, 1);
    ParametricLine3 l = intersect_two_planes(z, y);
    CHECK(side_of_plane(l.point, z) == 0);
    CHECK(l.direction.y.is_zero());
    CHECK(l.direction.z.is_zero());
    CHECK(!l.direction.x.is_zero());

    Plane x1(1, 0, 0, -1, 0), y1(0, 1, 0, -1, 1);
    ParametricLine3 vert = intersect_two_planes(x1, y1);
    CHECK(vert.point.x == Rational(1));
    CHECK(vert.point.y == Rational(1));
    CHECK(!vert.direction.z.is_zero());

    // (1,1,1) x (1,-1,0) = (1,1,-2) by hand.
    Plane s(1, 1, 1, 0, 0), t(1, -1, 0, 0, 1);
    ParametricLine3 diag = intersect_two_planes(s, t);
    Vec3 expected{1, 1, -2};
    CHECK(cross(diag.direction, expected).is_zero());

    Plane x2(1, 0, 0, -2, 2);
    CHECK_THROWS_AS(intersect_two_planes(x1, x2), Error);
}

TEST_CASE("points on an intersection line satisfy both planes") {
    SplitMix64 rng(12345);
    int produced = 0;
    while (produced < 50) {
        Plane h1 = random_plane(rng, 0);
        Plane h2 = random_plane(rng, 1);
        if (cross(h1.normal(), h2.normal()).is_zero()) continue;
        ParametricLine3 l = intersect_two_planes(h1, h2);
        CHECK(side_of_plane(l.point, h1) == 0);
        CHECK(side_of_plane(l.point, h2) == 0);
        Point3 other = l.point + l.direction;
        CHECK(side_of_plane(other, h1) == 0);
        CHECK(side_of_plane(other, h2) == 0);
        ++produced;
    }
}

TEST_CASE("triple intersections lie on all three planes") {
    SplitMix64 rng(54321);
    int produced = 0;
    while (produced < 50) {
        Plane h1 = random_plane(rng, 0);
        Plane h2 = random_plane(rng, 1);
        Plane h3 = random_plane(rng, 2);
        Rational det = det3({{{h1.a, h1.b, h1.c},
                              {h2.a, h2.b, h2.c},
                              {h3.a, h3.b, h3.c}}});
        if (det.is_zero()) continue;
        Point3 p = intersect_three_planes(h1, h2, h3);
        CHECK(side_of_plane(p, h1) == 0);
        CHECK(side_of_plane(p, h2) == 0);
        CHECK(side_of_plane(p, h3) == 0);
        ++produced;
    }
}

TEST_CASE("2D predicates") {
    Line2 diag(1, 1, -1, 0); // u + v = 1
    CHECK(side_of_line({0, 0}, diag) == -1);

    Line2 u0(1, 0, 0, 1), v0(0, 1, 0, 2);
    CHECK(intersect_two_lines(u0, v0) == Point2{0, 0});

    // u + v = 2, u - v = 0 meet at (1,1) by hand.
    Line2 l1(1, 1, -2, 0), l2(1, -1, 0, 1);
    CHECK(intersect_two_lines(l1, l2) == Point2{1, 1});

    Line2 u1(1, 0, -1, 3);
    CHECK_THROWS_AS(intersect_two_lines(u0, u1), Error);
}

TEST_CASE("plane canonicalization makes equality syntactic") {
    Plane a(Rational(1, 2), Rational(0), Rational(0), Rational(-1, 3), 0);
    Plane b(3, 0, 0, -2, 1);
    CHECK(a.same_plane(b));
    CHECK(a.a == Rational(3));
    CHECK(a.d == Rational(-2));

    // Scaling by any nonzero rational gives the same canonical form; a
    // negative scale flips every sign back.
    SplitMix64 rng(777);
    for (int i = 0; i < 100; ++i) {
        Plane p = random_plane(rng, 0);
        Rational scale(rng.next_int(-20, 20), rng.next_int(1, 9));
        if (scale.is_zero()) continue;
        Plane q(p.a * scale, p.b * scale, p.c * scale, p.d * scale, 1);
        CHECK(p.same_plane(q));
    }

    CHECK_THROWS_AS(Plane(0, 0, 0, 1, 0), Error);

    Line2 l(Rational(-1, 2), Rational(1, 4), Rational(0), 0);
    Line2 k(2, -1, 0, 1);
    CHECK(l.same_line(k));
    CHECK(l.a == Rational(2)); // leading coefficient made positive
}
