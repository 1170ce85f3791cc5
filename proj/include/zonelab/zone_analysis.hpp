#pragma once

#include <vector>

#include "zonelab/arrangement3d.hpp"

namespace zonelab {

// Pair-count inequality data for one (arrangement, S, Q) instance.
struct Theorem1Record {
    int q_id = -1;
    // Pairs (f, C): C a zone cell, f a generator face of C not on Q.
    long long lhs_pairs = 0;
    long long rhs_zone_a_minus_q = 0;
    long long rhs_zone_lq = 0;

    // Proof-case accounting. A pair lands in exactly one bucket; a split
    // face accounts for two pairs, one on each side of Q.
    long long uncut_pairs = 0;
    long long one_side_pairs = 0;
    long long both_sides_unsplit_pairs = 0;
    long long both_sides_split_faces = 0;

    bool holds() const {
        return lhs_pairs <= rhs_zone_a_minus_q + rhs_zone_lq;
    }
};

struct RecurrenceRecord {
    int n = 0;
    long long zone_size = 0;
    std::vector<Theorem1Record> per_q;
    long long lhs = 0;     // (n-1) * zone_size
    long long rhs = 0;     // sum over Q of both zone terms
    Rational f_value;      // zone_size / n

    bool holds() const { return lhs <= rhs; }

    // Shallow record carrying only what fit_constants reads.
    static RecurrenceRecord sample(int n, long long zone_size);
};

struct ZoneStatistics {
    std::vector<int> n_values;           // ascending
    std::vector<long long> max_zone;     // max z per n
    std::vector<Rational> max_f;         // max z/n per n
    std::vector<double> max_z_over_n2;   // approximate, reporting only
    double fitted_slope = 0.0;           // least squares of max f against n
};

// Number of (face, cell) pairs over cells in zone(s) where the face is
// supported by a generator other than q_id. Box faces never count.
long long count_pairs(const Arrangement3& arr, const Plane& s, int q_id);

// Builds the arrangement (box sized with s as an extra), the arrangement
// without Q, and the induced 2D arrangement on Q, then checks
// lhs_pairs <= zone size in A-Q + 2D zone size of s on Q. Throws
// Error(DegenerateInstance) when planes+s are not in general position and
// Error(AssertionFailure) if the inequality or the case accounting fails.
Theorem1Record verify_theorem1(const std::vector<Plane>& planes,
                               const Plane& s, int q_id);

// Aggregates verify_theorem1 over every generator Q; checks the exact
// identity sum_Q lhs_pairs == (n-1) * zone_size and the summed inequality.
RecurrenceRecord verify_recurrence(const std::vector<Plane>& planes,
                                   const Plane& s);

// Per-n maxima of z and f = z/n, the least-squares slope of max f against
// n, and the z/n^2 table. Requires records for at least two distinct n;
// throws Error(InsufficientData) otherwise. Only n and zone_size are read.
ZoneStatistics fit_constants(const std::vector<RecurrenceRecord>& records);

} // namespace zonelab
