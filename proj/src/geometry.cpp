#include "zonelab/geometry.hpp"

#include <sstream>

namespace zonelab {

void canonicalize_coefficients(std::vector<Rational>& coeffs) {
    BigInt scale = 1;
    for (const Rational& r : coeffs) {
        BigInt den = r.denominator();
        scale = scale / gcd(scale, den) * den; // lcm
    }
    std::vector<BigInt> nums;
    nums.reserve(coeffs.size());
    BigInt content = 0;
    for (const Rational& r : coeffs) {
        BigInt n = r.numerator() * (scale / r.denominator());
        content = gcd(content, n);
        nums.push_back(n);
    }
    if (content == 0) {
        throw Error(ErrorCode::InvalidArgument, "all-zero coefficient vector");
    }
    int lead = 0;
    for (const BigInt& n : nums) {
        if (n != 0) {
            lead = sgn(n);
            break;
        }
    }
    if (lead < 0) content = -content;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] = Rational(BigInt(nums[i] / content));
    }
}

Plane::Plane(const Rational& a_, const Rational& b_, const Rational& c_,
             const Rational& d_, int id_)
    : a(a_), b(b_), c(c_), d(d_), id(id_) {
    if (a.is_zero() && b.is_zero() && c.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "plane with zero normal");
    }
    std::vector<Rational> coeffs{a, b, c, d};
    canonicalize_coefficients(coeffs);
    a = coeffs[0];
    b = coeffs[1];
    c = coeffs[2];
    d = coeffs[3];
}

std::string Plane::str() const {
    std::ostringstream os;
    os << a << " " << b << " " << c << " " << d;
    return os.str();
}

Line2::Line2(const Rational& a_, const Rational& b_, const Rational& c_, int id_)
    : a(a_), b(b_), c(c_), id(id_) {
    if (a.is_zero() && b.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "line with zero normal");
    }
    std::vector<Rational> coeffs{a, b, c};
    canonicalize_coefficients(coeffs);
    a = coeffs[0];
    b = coeffs[1];
    c = coeffs[2];
}

std::string Line2::str() const {
    std::ostringstream os;
    os << a << " " << b << " " << c;
    return os.str();
}

int side_of_plane(const Point3& p, const Plane& h) {
    return (h.a * p.x + h.b * p.y + h.c * p.z + h.d).sign();
}

Rational det2(const Rational& a, const Rational& b,
              const Rational& c, const Rational& d) {
    return a * d - b * c;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
         - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
         + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

Point3 intersect_three_planes(const Plane& h1, const Plane& h2, const Plane& h3) {
    std::array<std::array<Rational, 3>, 3> m = {{
        {h1.a, h1.b, h1.c},
        {h2.a, h2.b, h2.c},
        {h3.a, h3.b, h3.c},
    }};
    Rational det = det3(m);
    if (det.is_zero()) {
        throw Error(ErrorCode::SingularTriple,
                    "planes (" + h1.str() + "), (" + h2.str() + "), (" +
                        h3.str() + ") have no unique common point");
    }
    // Cramer's rule on a x + b y + c z = -d.
    Rational r1 = -h1.d, r2 = -h2.d, r3 = -h3.d;
    Rational dx = det3({{{r1, h1.b, h1.c}, {r2, h2.b, h2.c}, {r3, h3.b, h3.c}}});
    Rational dy = det3({{{h1.a, r1, h1.c}, {h2.a, r2, h2.c}, {h3.a, r3, h3.c}}});
    Rational dz = det3({{{h1.a, h1.b, r1}, {h2.a, h2.b, r2}, {h3.a, h3.b, r3}}});
    return {dx / det, dy / det, dz / det};
}

ParametricLine3 intersect_two_planes(const Plane& h1, const Plane& h2) {
    Vec3 dir = cross(h1.normal(), h2.normal());
    if (dir.is_zero()) {
        throw Error(ErrorCode::ParallelPlanes,
                    "planes (" + h1.str() + ") and (" + h2.str() + ") are parallel");
    }
    // Fix the coordinate whose direction component is nonzero at 0; the
    // remaining 2x2 system has that same component as its determinant.
    Point3 p{0, 0, 0};
    if (!dir.z.is_zero()) {
        Rational det = dir.z;
        p.x = det2(-h1.d, h1.b, -h2.d, h2.b) / det;
        p.y = det2(h1.a, -h1.d, h2.a, -h2.d) / det;
    } else if (!dir.y.is_zero()) {
        Rational det = -dir.y;
        p.x = det2(-h1.d, h1.c, -h2.d, h2.c) / det;
        p.z = det2(h1.a, -h1.d, h2.a, -h2.d) / det;
    } else {
        Rational det = dir.x;
        p.y = det2(-h1.d, h1.c, -h2.d, h2.c) / det;
        p.z = det2(h1.b, -h1.d, h2.b, -h2.d) / det;
    }
    return {p, dir};
}

int side_of_line(const Point2& p, const Line2& l) {
    return (l.a * p.u + l.b * p.v + l.c).sign();
}

Point2 intersect_two_lines(const Line2& l1, const Line2& l2) {
    Rational det = det2(l1.a, l1.b, l2.a, l2.b);
    if (det.is_zero()) {
        throw Error(ErrorCode::ParallelLines,
                    "lines (" + l1.str() + ") and (" + l2.str() + ") are parallel");
    }
    Rational u = det2(-l1.c, l1.b, -l2.c, l2.b) / det;
    Rational v = det2(l1.a, -l1.c, l2.a, -l2.c) / det;
    return {u, v};
}

} // namespace zonelab
