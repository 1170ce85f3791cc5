#pragma once

// Test-side oracles. Each re-derives its answer from the raw input by a
// route independent of the arrangement construction: faces and cells are
// enumerated by sampling around edge midpoints of the extended
// arrangement, and zone membership is decided by Fourier-Motzkin
// elimination on the exact sign-constraint system.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zonelab/geometry.hpp"
#include "zonelab/harness.hpp"

namespace zonelab::oracle {

// All face sign-keys (generators first, then the four box sides) of the
// line arrangement clipped to [-w, w]^2, found by perturbing off the
// midpoint of every extended edge.
std::set<std::string> enumerate_face_keys_2d(const std::vector<Line2>& lines,
                                             const Rational& w);

// All cell sign-keys of the plane arrangement clipped to [-a, a]^3, found
// by sampling the four regions around every extended edge midpoint.
std::set<std::string> enumerate_cell_keys_3d(const std::vector<Plane>& planes,
                                             const Rational& a);

// Number of generator-supported edges of the clipped 2D arrangement,
// counted line by line along each generator.
long long count_generator_edges_2d(const std::vector<Line2>& lines,
                                   const Rational& w);

// Exact feasibility of { x realizes signs over ext_planes } and
// { x on s }, via substitution of s and Fourier-Motzkin elimination.
bool cell_meets_plane(const std::vector<Plane>& ext_planes,
                      const std::vector<int8_t>& signs, const Plane& s);

// A random exact point on s, strictly inside the open box and off every
// plane in ext_planes. Nullopt if no sample is found in the attempt
// budget.
std::optional<Point3> sample_point_on_plane(const Plane& s,
                                            const Rational& box_half_width,
                                            const std::vector<Plane>& ext_planes,
                                            SplitMix64& rng);

} // namespace zonelab::oracle
