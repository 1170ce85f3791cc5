#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zonelab/zone_analysis.hpp"

namespace zonelab {

// SplitMix64: state advances by the 64-bit golden-ratio constant and the
// output is the two-round xor-multiply finalizer. Fully specified in the
// README so runs are reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-enough integer in [lo, hi] via modulo reduction.
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next() %
                                      static_cast<uint64_t>(hi - lo + 1));
    }

    static uint64_t scramble(uint64_t x) { return SplitMix64(x).next(); }

private:
    uint64_t state_;
};

enum class ExperimentMode {
    EulerChecks,
    Zone2d,
    Zone3d,
    Theorem1,
    Recurrence,
    Sweep,
};

ExperimentMode mode_from_string(const std::string& name);
std::string mode_to_string(ExperimentMode mode);

struct ExperimentConfig {
    int n_min = 3;
    int n_max = 8;
    int trials_per_n = 5;
    uint64_t seed = 1;
    long coefficient_bound = 10;
    ExperimentMode mode = ExperimentMode::EulerChecks;
    // Desk-scale ceiling; raise explicitly to go past it.
    int max_n = 15;
    // Fixture input: overrides generation, runs a single trial.
    std::optional<std::string> planes_file;
    // Query coefficients: 4 entries for plane modes, 3 for zone2d.
    std::optional<std::vector<Rational>> s_coefficients;

    void validate() const; // throws Error(InvalidArgument)
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct ExperimentResult {
    CsvTable csv;
    std::string summary;
};

// n planes with small random rational coefficients, rejection-sampled
// until they are in general position and box-compatible. Deterministic
// for a given rng state. Throws Error(GenerationExhausted) after 10000
// draws.
std::vector<Plane> generate_planes(int n, SplitMix64& rng,
                                   long coefficient_bound);

// As above plus one extra plane (id n) valid as a zone query, validated
// jointly with the others.
std::pair<std::vector<Plane>, Plane> generate_planes_with_query(
    int n, SplitMix64& rng, long coefficient_bound);

std::vector<Line2> generate_lines(int n, SplitMix64& rng,
                                  long coefficient_bound);

std::pair<std::vector<Line2>, Line2> generate_lines_with_query(
    int n, SplitMix64& rng, long coefficient_bound);

// Runs the configured experiment. Any module error or failed assertion is
// rethrown annotated with (seed, n, trial) and an instance dump.
ExperimentResult run_experiment(const ExperimentConfig& config);

// "a b c d" rational literals, one plane per row, '#' comments.
std::vector<Plane> parse_planes_file(const std::string& path);
std::vector<Plane> parse_planes_text(const std::string& text);

// "a b c" rational literals, one line per row, '#' comments.
std::vector<Line2> parse_lines_file(const std::string& path);
std::vector<Line2> parse_lines_text(const std::string& text);

// Inverse of the parsers: one row per plane/line in file format. Used
// for instance dumps in error reports and for writing L_Q line sets.
std::string planes_to_text(const std::vector<Plane>& planes);
std::string lines_to_text(const std::vector<Line2>& lines);

std::string csv_to_string(const CsvTable& table);
void emit_csv(const CsvTable& table, const std::string& path);

// Shortest round-trip decimal rendering, deterministic across runs.
std::string format_double(double value);

} // namespace zonelab
