#pragma once

#include <array>
#include <string>
#include <vector>

#include "zonelab/rational.hpp"

namespace zonelab {

struct Vec3 {
    Rational x, y, z;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(const Rational& s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    bool operator==(const Vec3& o) const = default;

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
};

inline Rational dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Point3 {
    Rational x, y, z;

    bool operator==(const Point3& o) const = default;

    Vec3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Point3 operator+(const Vec3& v) const { return {x + v.x, y + v.y, z + v.z}; }
};

// Plane {a x + b y + c z + d = 0}. Coefficients are canonicalized on
// construction: scaled to coprime integers with the first nonzero of
// (a, b, c, d) positive, so geometric equality is coefficient equality.
// The id is caller-assigned and ignored by comparisons.
struct Plane {
    Rational a, b, c, d;
    int id = -1;

    Plane() = default;
    Plane(const Rational& a_, const Rational& b_, const Rational& c_,
          const Rational& d_, int id_ = -1);

    Vec3 normal() const { return {a, b, c}; }
    bool same_plane(const Plane& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    std::string str() const;
};

struct Point2 {
    Rational u, v;

    bool operator==(const Point2& o) const = default;
};

// Line {a u + b v + c = 0} in some 2D chart, canonicalized like Plane.
struct Line2 {
    Rational a, b, c;
    int id = -1;

    Line2() = default;
    Line2(const Rational& a_, const Rational& b_, const Rational& c_,
          int id_ = -1);

    bool same_line(const Line2& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    std::string str() const;
};

struct ParametricLine3 {
    Point3 point;
    Vec3 direction; // never zero
};

// Sign of a x + b y + c z + d at p, exactly.
int side_of_plane(const Point3& p, const Plane& h);

// Common point of three planes. Throws Error(SingularTriple) when the
// 3x3 coefficient matrix is singular (a general-position violation).
Point3 intersect_three_planes(const Plane& h1, const Plane& h2, const Plane& h3);

// Intersection line of two planes in point-direction form; the direction
// is the cross product of the normals. Throws Error(ParallelPlanes) when
// the normals are parallel.
ParametricLine3 intersect_two_planes(const Plane& h1, const Plane& h2);

int side_of_line(const Point2& p, const Line2& l);

// Throws Error(ParallelLines) when the 2x2 system is singular.
Point2 intersect_two_lines(const Line2& l1, const Line2& l2);

Rational det2(const Rational& a, const Rational& b,
              const Rational& c, const Rational& d);

Rational det3(const std::array<std::array<Rational, 3>, 3>& m);

// Canonicalizes a coefficient vector in place: clears denominators,
// divides out the integer content, and makes the first nonzero entry
// positive. The vector must not be all zero.
void canonicalize_coefficients(std::vector<Rational>& coeffs);

} // namespace zonelab
