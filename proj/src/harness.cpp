#include "zonelab/harness.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace zonelab {

ExperimentMode mode_from_string(const std::string& name) {
    if (name == "euler-checks") return ExperimentMode::EulerChecks;
    if (name == "zone2d") return ExperimentMode::Zone2d;
    if (name == "zone3d") return ExperimentMode::Zone3d;
    if (name == "theorem1") return ExperimentMode::Theorem1;
    if (name == "recurrence") return ExperimentMode::Recurrence;
    if (name == "sweep") return ExperimentMode::Sweep;
    throw Error(ErrorCode::InvalidArgument, "unknown mode '" + name + "'");
}

std::string mode_to_string(ExperimentMode mode) {
    switch (mode) {
        case ExperimentMode::EulerChecks: return "euler-checks";
        case ExperimentMode::Zone2d: return "zone2d";
        case ExperimentMode::Zone3d: return "zone3d";
        case ExperimentMode::Theorem1: return "theorem1";
        case ExperimentMode::Recurrence: return "recurrence";
        case ExperimentMode::Sweep: return "sweep";
    }
    return "unknown";
}

void ExperimentConfig::validate() const {
    if (n_min < 1 || n_min > n_max) {
        throw Error(ErrorCode::InvalidArgument, "need 1 <= n_min <= n_max");
    }
    if (trials_per_n < 1) {
        throw Error(ErrorCode::InvalidArgument, "trials_per_n must be at least 1");
    }
    if (coefficient_bound < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "coefficient_bound must be at least 2");
    }
    if (n_max > max_n) {
        throw Error(ErrorCode::InvalidArgument,
                    "n_max " + std::to_string(n_max) + " exceeds the ceiling " +
                        std::to_string(max_n) + "; raise --max-n-override");
    }
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

namespace {

constexpr int kGenerationBudget = 10000;

Rational draw_rational(SplitMix64& rng, long bound) {
    long num = rng.next_int(-bound, bound);
    long den = rng.next_int(1, bound);
    return Rational(num, den);
}

bool plane_fits(const std::vector<Plane>& existing, const Plane& cand) {
    if (plane_blocks_every_box(cand)) return false;
    for (const Plane& e : existing) {
        if (cross(e.normal(), cand.normal()).is_zero()) return false;
        if (plane_pair_blocks_every_box(e, cand)) return false;
    }
    const int n = static_cast<int>(existing.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rational det = det3({{{existing[i].a, existing[i].b, existing[i].c},
                                  {existing[j].a, existing[j].b, existing[j].c},
                                  {cand.a, cand.b, cand.c}}});
            if (det.is_zero()) return false;
        }
    }
    std::vector<Plane> with = existing;
    with.push_back(cand);
    // The incremental pair/triple checks above leave only quadruple
    // concurrency to test; the full validator keeps this honest.
    GeneralPosition3Report gp = general_position_3d(with);
    return gp.ok();
}

bool line_fits(const std::vector<Line2>& existing, const Line2& cand) {
    if (line_blocks_every_box(cand)) return false;
    for (const Line2& e : existing) {
        if (det2(e.a, e.b, cand.a, cand.b).is_zero()) return false;
    }
    const int n = static_cast<int>(existing.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rational det = det3({{{existing[i].a, existing[i].b, existing[i].c},
                                  {existing[j].a, existing[j].b, existing[j].c},
                                  {cand.a, cand.b, cand.c}}});
            if (det.is_zero()) return false;
        }
    }
    return true;
}

Plane draw_plane(SplitMix64& rng, long bound, int id, int& attempts,
                 const std::vector<Plane>& existing) {
    while (true) {
        if (++attempts > kGenerationBudget) {
            throw Error(ErrorCode::GenerationExhausted,
                        "no general-position plane found in " +
                            std::to_string(kGenerationBudget) +
                            " draws; coefficient bound too small?");
        }
        Rational a = draw_rational(rng, bound);
        Rational b = draw_rational(rng, bound);
        Rational c = draw_rational(rng, bound);
        Rational d = draw_rational(rng, bound);
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        Plane cand(a, b, c, d, id);
        if (!plane_fits(existing, cand)) continue;
        return cand;
    }
}

Line2 draw_line(SplitMix64& rng, long bound, int id, int& attempts,
                const std::vector<Line2>& existing) {
    while (true) {
        if (++attempts > kGenerationBudget) {
            throw Error(ErrorCode::GenerationExhausted,
                        "no general-position line found in " +
                            std::to_string(kGenerationBudget) +
                            " draws; coefficient bound too small?");
        }
        Rational a = draw_rational(rng, bound);
        Rational b = draw_rational(rng, bound);
        Rational c = draw_rational(rng, bound);
        if (a.is_zero() && b.is_zero()) continue;
        Line2 cand(a, b, c, id);
        if (!line_fits(existing, cand)) continue;
        return cand;
    }
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

uint64_t trial_seed(uint64_t seed, int n, int trial) {
    return SplitMix64::scramble(seed ^ (static_cast<uint64_t>(n) << 32) ^
                                static_cast<uint64_t>(trial + 1));
}

void check_cell_identities(const Arrangement3& arr) {
    for (const Cell3& cell : arr.cells) {
        if (2 * cell.E_count != 3 * cell.V_count) {
            throw Error(ErrorCode::AssertionFailure,
                        "cell identity 2E = 3V fails: signs " +
                            signs_key(cell.signs) + " V=" +
                            std::to_string(cell.V_count) + " E=" +
                            std::to_string(cell.E_count));
        }
        if (cell.F_count != cell.E_count - cell.V_count + 2) {
            throw Error(ErrorCode::AssertionFailure,
                        "cell Euler formula fails: signs " +
                            signs_key(cell.signs) + " V=" +
                            std::to_string(cell.V_count) + " E=" +
                            std::to_string(cell.E_count) + " F=" +
                            std::to_string(cell.F_count));
        }
    }
}

void check_census(const Arrangement3& arr) {
    const int n = arr.generator_count();
    long long expected_cells =
        binom(n, 0) + binom(n, 1) + binom(n, 2) + binom(n, 3);
    if (static_cast<long long>(arr.cells.size()) != expected_cells) {
        throw Error(ErrorCode::AssertionFailure,
                    "cell census fails: expected " +
                        std::to_string(expected_cells) + ", built " +
                        std::to_string(arr.cells.size()));
    }
    if (arr.generator_vertex_count() != binom(n, 3)) {
        throw Error(ErrorCode::AssertionFailure,
                    "vertex census fails: expected " +
                        std::to_string(binom(n, 3)) + ", built " +
                        std::to_string(arr.generator_vertex_count()));
    }
}

struct TrialContext {
    uint64_t seed;
    int n;
    int trial;
    std::string instance;
};

[[noreturn]] void rethrow_annotated(const Error& e, const TrialContext& ctx) {
    std::ostringstream os;
    os << "(seed=" << ctx.seed << ", n=" << ctx.n << ", trial=" << ctx.trial
       << ") " << e.what();
    if (!ctx.instance.empty()) {
        os << "\ninstance:\n" << ctx.instance;
    }
    throw Error(e.code(), os.str());
}

Plane query_plane_from(const std::vector<Rational>& coeffs, int id) {
    if (coeffs.size() != 4) {
        throw Error(ErrorCode::InvalidArgument,
                    "query plane needs 4 coefficients");
    }
    return Plane(coeffs[0], coeffs[1], coeffs[2], coeffs[3], id);
}

Line2 query_line_from(const std::vector<Rational>& coeffs, int id) {
    if (coeffs.size() != 3) {
        throw Error(ErrorCode::InvalidArgument,
                    "query line needs 3 coefficients");
    }
    return Line2(coeffs[0], coeffs[1], coeffs[2], id);
}

std::string seed_str(uint64_t seed) {
    return std::to_string(seed);
}

void append_theorem1_rows(CsvTable& csv, uint64_t seed, int n, int trial,
                          const RecurrenceRecord& rec) {
    for (const Theorem1Record& t : rec.per_q) {
        csv.rows.push_back({seed_str(seed), std::to_string(n),
                            std::to_string(trial), std::to_string(t.q_id),
                            std::to_string(t.lhs_pairs),
                            std::to_string(t.rhs_zone_a_minus_q),
                            std::to_string(t.rhs_zone_lq),
                            std::to_string(t.uncut_pairs),
                            std::to_string(t.one_side_pairs),
                            std::to_string(t.both_sides_unsplit_pairs),
                            std::to_string(t.both_sides_split_faces),
                            t.holds() ? "1" : "0"});
    }
}

void append_recurrence_row(CsvTable& csv, uint64_t seed, int n, int trial,
                           const RecurrenceRecord& rec) {
    csv.rows.push_back({seed_str(seed), std::to_string(n),
                        std::to_string(trial), std::to_string(rec.zone_size),
                        std::to_string(rec.lhs), std::to_string(rec.rhs),
                        rec.f_value.str(),
                        format_double(rec.f_value.to_double()),
                        rec.holds() ? "1" : "0"});
}

const std::vector<std::string> kTheorem1Header = {
    "seed", "n", "trial", "q_id", "lhs_pairs", "rhs_zone_a_minus_q",
    "rhs_zone_lq", "uncut_pairs", "one_side_pairs",
    "both_sides_unsplit_pairs", "both_sides_split_faces", "ok"};

const std::vector<std::string> kRecurrenceHeader = {
    "seed", "n", "trial", "zone_size", "lhs", "rhs",
    "f_value", "f_value_approx", "ok"};

ExperimentResult run_fixture(const ExperimentConfig& config) {
    ExperimentResult result;
    TrialContext ctx{config.seed, 0, 0, ""};
    try {
        if (config.mode == ExperimentMode::Sweep) {
            throw Error(ErrorCode::InvalidArgument,
                        "sweep mode needs generated instances, not a fixture");
        }
        if (config.mode == ExperimentMode::Zone2d) {
            std::vector<Line2> lines = parse_lines_file(*config.planes_file);
            ctx.n = static_cast<int>(lines.size());
            ctx.instance = lines_to_text(lines);
            if (!config.s_coefficients) {
                throw Error(ErrorCode::InvalidArgument,
                            "zone2d fixture needs --s-plane \"a b c\"");
            }
            Line2 s = query_line_from(*config.s_coefficients,
                                      static_cast<int>(lines.size()));
            Rational w = compute_box_half_width_2d(lines, {s});
            Arrangement2 arr = build_arrangement_2d(lines, w);
            Zone2Report zone = zone_2d(arr, s);
            result.csv.header = {"seed", "n", "trial", "zone_faces",
                                 "zone_size", "zone_per_n_approx"};
            double per_n = lines.empty()
                               ? 0.0
                               : static_cast<double>(zone.zone_size) /
                                     static_cast<double>(lines.size());
            result.csv.rows.push_back(
                {seed_str(config.seed), std::to_string(ctx.n), "0",
                 std::to_string(zone.face_count()),
                 std::to_string(zone.zone_size), format_double(per_n)});
            std::ostringstream os;
            os << "zone2d fixture: " << zone.face_count() << " faces crossed, zone size "
               << zone.zone_size << "\n";
            result.summary = os.str();
            return result;
        }

        std::vector<Plane> planes = parse_planes_file(*config.planes_file);
        ctx.n = static_cast<int>(planes.size());
        ctx.instance = planes_to_text(planes);
        switch (config.mode) {
            case ExperimentMode::EulerChecks: {
                Rational a = compute_box_half_width(planes);
                Arrangement3 arr = build_arrangement_3d(planes, a);
                check_cell_identities(arr);
                check_census(arr);
                result.csv.header = {"seed", "n", "trial", "cell_count",
                                     "generator_vertex_count", "identities_ok"};
                result.csv.rows.push_back(
                    {seed_str(config.seed), std::to_string(ctx.n), "0",
                     std::to_string(arr.cells.size()),
                     std::to_string(arr.generator_vertex_count()), "1"});
                std::ostringstream os;
                os << "euler-checks fixture: " << arr.cells.size()
                   << " cells verified\n";
                result.summary = os.str();
                return result;
            }
            case ExperimentMode::Zone3d: {
                if (!config.s_coefficients) {
                    throw Error(ErrorCode::InvalidArgument,
                                "zone3d fixture needs --s-plane \"a b c d\"");
                }
                Plane s = query_plane_from(*config.s_coefficients,
                                           static_cast<int>(planes.size()));
                GeneralPosition3Report gp = general_position_3d(planes, s);
                if (!gp.ok()) {
                    throw Error(ErrorCode::DegenerateInstance, gp.describe());
                }
                Rational a = compute_box_half_width(planes, {s});
                Arrangement3 arr = build_arrangement_3d(planes, a);
                Zone3Report zone = zone_3d(arr, s);
                result.csv.header = {"seed", "n", "trial", "zone_cells",
                                     "zone_size", "zone_per_n2_approx"};
                double per_n2 =
                    planes.empty() ? 0.0
                                   : static_cast<double>(zone.zone_size) /
                                         (static_cast<double>(ctx.n) * ctx.n);
                result.csv.rows.push_back(
                    {seed_str(config.seed), std::to_string(ctx.n), "0",
                     std::to_string(zone.cell_count()),
                     std::to_string(zone.zone_size), format_double(per_n2)});
                std::ostringstream os;
                os << "zone3d fixture: " << zone.cell_count()
                   << " cells crossed, zone size " << zone.zone_size << "\n";
                result.summary = os.str();
                return result;
            }
            case ExperimentMode::Theorem1:
            case ExperimentMode::Recurrence: {
                if (!config.s_coefficients) {
                    throw Error(ErrorCode::InvalidArgument,
                                "this mode needs --s-plane \"a b c d\"");
                }
                Plane s = query_plane_from(*config.s_coefficients,
                                           static_cast<int>(planes.size()));
                RecurrenceRecord rec = verify_recurrence(planes, s);
                if (config.mode == ExperimentMode::Theorem1) {
                    result.csv.header = kTheorem1Header;
                    append_theorem1_rows(result.csv, config.seed, ctx.n, 0, rec);
                } else {
                    result.csv.header = kRecurrenceHeader;
                    append_recurrence_row(result.csv, config.seed, ctx.n, 0, rec);
                }
                std::ostringstream os;
                os << mode_to_string(config.mode) << " fixture: lhs " << rec.lhs
                   << " <= rhs " << rec.rhs << ", zone size " << rec.zone_size
                   << "\n";
                result.summary = os.str();
                return result;
            }
            default:
                throw Error(ErrorCode::InvalidArgument, "unsupported fixture mode");
        }
    } catch (const Error& e) {
        rethrow_annotated(e, ctx);
    }
}

ExperimentResult run_generated(const ExperimentConfig& config) {
    ExperimentResult result;
    std::ostringstream summary;

    switch (config.mode) {
        case ExperimentMode::EulerChecks:
            result.csv.header = {"seed", "n", "trial", "cell_count",
                                 "generator_vertex_count", "identities_ok"};
            break;
        case ExperimentMode::Zone2d:
            result.csv.header = {"seed", "n", "trial", "zone_faces",
                                 "zone_size", "zone_per_n_approx"};
            break;
        case ExperimentMode::Zone3d:
            result.csv.header = {"seed", "n", "trial", "zone_cells",
                                 "zone_size", "zone_per_n2_approx"};
            break;
        case ExperimentMode::Theorem1:
            result.csv.header = kTheorem1Header;
            break;
        case ExperimentMode::Recurrence:
            result.csv.header = kRecurrenceHeader;
            break;
        case ExperimentMode::Sweep:
            result.csv.header = {"seed", "n", "trial", "zone3_size",
                                 "zone3_cells", "zone2_size",
                                 "z_over_n_approx", "z_over_n2_approx",
                                 "zone2_over_n_approx"};
            break;
    }

    long long total_cells = 0;
    long long instances = 0;
    long long checks = 0;
    long long max_zone2 = 0;
    double max_zone2_per_n = 0.0;
    long long max_zone3 = 0;
    std::vector<RecurrenceRecord> sweep_samples;
    std::map<int, long long> sweep_max_zone2_by_n;

    for (int n = config.n_min; n <= config.n_max; ++n) {
        for (int trial = 0; trial < config.trials_per_n; ++trial) {
            TrialContext ctx{config.seed, n, trial, ""};
            try {
                SplitMix64 rng(trial_seed(config.seed, n, trial));
                switch (config.mode) {
                    case ExperimentMode::EulerChecks: {
                        std::vector<Plane> planes =
                            generate_planes(n, rng, config.coefficient_bound);
                        ctx.instance = planes_to_text(planes);
                        Rational a = compute_box_half_width(planes);
                        Arrangement3 arr = build_arrangement_3d(planes, a);
                        check_cell_identities(arr);
                        check_census(arr);
                        total_cells += static_cast<long long>(arr.cells.size());
                        ++instances;
                        result.csv.rows.push_back(
                            {seed_str(config.seed), std::to_string(n),
                             std::to_string(trial),
                             std::to_string(arr.cells.size()),
                             std::to_string(arr.generator_vertex_count()), "1"});
                        break;
                    }
                    case ExperimentMode::Zone2d: {
                        auto [lines, s] = generate_lines_with_query(
                            n, rng, config.coefficient_bound);
                        ctx.instance = lines_to_text(lines) + "# s: " + s.str();
                        Rational w = compute_box_half_width_2d(lines, {s});
                        Arrangement2 arr = build_arrangement_2d(lines, w);
                        Zone2Report zone = zone_2d(arr, s);
                        double per_n = static_cast<double>(zone.zone_size) /
                                       static_cast<double>(n);
                        max_zone2 = std::max(max_zone2, zone.zone_size);
                        max_zone2_per_n = std::max(max_zone2_per_n, per_n);
                        ++instances;
                        result.csv.rows.push_back(
                            {seed_str(config.seed), std::to_string(n),
                             std::to_string(trial),
                             std::to_string(zone.face_count()),
                             std::to_string(zone.zone_size),
                             format_double(per_n)});
                        break;
                    }
                    case ExperimentMode::Zone3d: {
                        auto [planes, s] = generate_planes_with_query(
                            n, rng, config.coefficient_bound);
                        ctx.instance = planes_to_text(planes) + "# s: " + s.str();
                        Rational a = compute_box_half_width(planes, {s});
                        Arrangement3 arr = build_arrangement_3d(planes, a);
                        Zone3Report zone = zone_3d(arr, s);
                        max_zone3 = std::max(max_zone3, zone.zone_size);
                        ++instances;
                        double per_n2 = static_cast<double>(zone.zone_size) /
                                        (static_cast<double>(n) * n);
                        result.csv.rows.push_back(
                            {seed_str(config.seed), std::to_string(n),
                             std::to_string(trial),
                             std::to_string(zone.cell_count()),
                             std::to_string(zone.zone_size),
                             format_double(per_n2)});
                        break;
                    }
                    case ExperimentMode::Theorem1:
                    case ExperimentMode::Recurrence: {
                        auto [planes, s] = generate_planes_with_query(
                            n, rng, config.coefficient_bound);
                        ctx.instance = planes_to_text(planes) + "# s: " + s.str();
                        RecurrenceRecord rec = verify_recurrence(planes, s);
                        ++instances;
                        checks += static_cast<long long>(rec.per_q.size());
                        if (config.mode == ExperimentMode::Theorem1) {
                            append_theorem1_rows(result.csv, config.seed, n,
                                                 trial, rec);
                        } else {
                            append_recurrence_row(result.csv, config.seed, n,
                                                  trial, rec);
                        }
                        break;
                    }
                    case ExperimentMode::Sweep: {
                        auto [planes, s] = generate_planes_with_query(
                            n, rng, config.coefficient_bound);
                        ctx.instance = planes_to_text(planes) + "# s: " + s.str();
                        Rational a = compute_box_half_width(planes, {s});
                        Arrangement3 arr = build_arrangement_3d(planes, a);
                        Zone3Report zone3 = zone_3d(arr, s);

                        auto [lines, s2] = generate_lines_with_query(
                            n, rng, config.coefficient_bound);
                        Rational w = compute_box_half_width_2d(lines, {s2});
                        Arrangement2 arr2 = build_arrangement_2d(lines, w);
                        Zone2Report zone2 = zone_2d(arr2, s2);

                        sweep_samples.push_back(
                            RecurrenceRecord::sample(n, zone3.zone_size));
                        auto [it, inserted] =
                            sweep_max_zone2_by_n.emplace(n, zone2.zone_size);
                        if (!inserted) {
                            it->second = std::max(it->second, zone2.zone_size);
                        }
                        ++instances;
                        double zn = static_cast<double>(zone3.zone_size) / n;
                        double zn2 = zn / n;
                        double z2n = static_cast<double>(zone2.zone_size) / n;
                        max_zone2_per_n = std::max(max_zone2_per_n, z2n);
                        result.csv.rows.push_back(
                            {seed_str(config.seed), std::to_string(n),
                             std::to_string(trial),
                             std::to_string(zone3.zone_size),
                             std::to_string(zone3.cell_count()),
                             std::to_string(zone2.zone_size),
                             format_double(zn), format_double(zn2),
                             format_double(z2n)});
                        break;
                    }
                }
            } catch (const Error& e) {
                rethrow_annotated(e, ctx);
            }
        }
    }

    switch (config.mode) {
        case ExperimentMode::EulerChecks:
            summary << "euler-checks: " << instances << " instances, "
                    << total_cells
                    << " cells verified; both identities held everywhere\n";
            break;
        case ExperimentMode::Zone2d:
            summary << "zone2d: " << instances << " trials; max zone size "
                    << max_zone2 << "; max zone/n "
                    << format_double(max_zone2_per_n) << "\n";
            break;
        case ExperimentMode::Zone3d:
            summary << "zone3d: " << instances << " trials; max zone size "
                    << max_zone3 << "\n";
            break;
        case ExperimentMode::Theorem1:
        case ExperimentMode::Recurrence:
            summary << mode_to_string(config.mode) << ": " << instances
                    << " instances, " << checks
                    << " per-plane checks; every inequality held\n";
            break;
        case ExperimentMode::Sweep: {
            summary << "sweep: " << instances << " trials\n";
            summary << "n max_z3 max_f max_z3_over_n2 max_z2 max_z2_over_n\n";
            try {
                ZoneStatistics stats = fit_constants(sweep_samples);
                for (std::size_t i = 0; i < stats.n_values.size(); ++i) {
                    int n = stats.n_values[i];
                    long long z2 = sweep_max_zone2_by_n[n];
                    summary << n << " " << stats.max_zone[i] << " "
                            << stats.max_f[i].str() << " "
                            << format_double(stats.max_z_over_n2[i]) << " "
                            << z2 << " "
                            << format_double(static_cast<double>(z2) / n)
                            << "\n";
                }
                summary << "fitted slope of max f(n) against n: "
                        << format_double(stats.fitted_slope) << "\n";
            } catch (const Error& e) {
                if (e.code() != ErrorCode::InsufficientData) throw;
                summary << "constant fit skipped: " << e.what() << "\n";
            }
            break;
        }
    }

    result.summary = summary.str();
    return result;
}

} // namespace

std::string planes_to_text(const std::vector<Plane>& planes) {
    std::ostringstream os;
    for (const Plane& h : planes) os << h.str() << "\n";
    return os.str();
}

std::string lines_to_text(const std::vector<Line2>& lines) {
    std::ostringstream os;
    for (const Line2& l : lines) os << l.str() << "\n";
    return os.str();
}

std::vector<Plane> generate_planes(int n, SplitMix64& rng,
                                   long coefficient_bound) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative plane count");
    if (coefficient_bound < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "coefficient bound must be at least 2");
    }
    std::vector<Plane> planes;
    int attempts = 0;
    while (static_cast<int>(planes.size()) < n) {
        planes.push_back(draw_plane(rng, coefficient_bound,
                                    static_cast<int>(planes.size()), attempts,
                                    planes));
    }
    return planes;
}

std::pair<std::vector<Plane>, Plane> generate_planes_with_query(
    int n, SplitMix64& rng, long coefficient_bound) {
    std::vector<Plane> planes = generate_planes(n, rng, coefficient_bound);
    int attempts = 0;
    Plane s = draw_plane(rng, coefficient_bound, n, attempts, planes);
    return {std::move(planes), std::move(s)};
}

std::vector<Line2> generate_lines(int n, SplitMix64& rng,
                                  long coefficient_bound) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative line count");
    if (coefficient_bound < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "coefficient bound must be at least 2");
    }
    std::vector<Line2> lines;
    int attempts = 0;
    while (static_cast<int>(lines.size()) < n) {
        lines.push_back(draw_line(rng, coefficient_bound,
                                  static_cast<int>(lines.size()), attempts,
                                  lines));
    }
    return lines;
}

std::pair<std::vector<Line2>, Line2> generate_lines_with_query(
    int n, SplitMix64& rng, long coefficient_bound) {
    std::vector<Line2> lines = generate_lines(n, rng, coefficient_bound);
    int attempts = 0;
    Line2 s = draw_line(rng, coefficient_bound, n, attempts, lines);
    return {std::move(lines), std::move(s)};
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    if (config.planes_file) {
        return run_fixture(config);
    }
    return run_generated(config);
}

namespace {

std::vector<std::vector<Rational>> parse_rows(const std::string& text,
                                              std::size_t fields) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream fields_stream(line);
        std::vector<std::string> tokens;
        std::string token;
        while (fields_stream >> token) tokens.push_back(token);
        if (tokens.empty()) continue;
        if (tokens.size() != fields) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": expected " +
                            std::to_string(fields) + " fields, got " +
                            std::to_string(tokens.size()));
        }
        std::vector<Rational> row;
        for (const std::string& t : tokens) {
            try {
                row.push_back(Rational::parse(t));
            } catch (const Error&) {
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(line_no) +
                                ": bad rational literal '" + t + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

std::vector<Plane> parse_planes_text(const std::string& text) {
    std::vector<Plane> planes;
    for (const std::vector<Rational>& row : parse_rows(text, 4)) {
        try {
            planes.emplace_back(row[0], row[1], row[2], row[3],
                                static_cast<int>(planes.size()));
        } catch (const Error&) {
            throw Error(ErrorCode::ParseError,
                        "plane " + std::to_string(planes.size()) +
                            " has a zero normal");
        }
    }
    return planes;
}

std::vector<Plane> parse_planes_file(const std::string& path) {
    return parse_planes_text(read_file(path));
}

std::vector<Line2> parse_lines_text(const std::string& text) {
    std::vector<Line2> lines;
    for (const std::vector<Rational>& row : parse_rows(text, 3)) {
        try {
            lines.emplace_back(row[0], row[1], row[2],
                               static_cast<int>(lines.size()));
        } catch (const Error&) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lines.size()) +
                            " has a zero normal");
        }
    }
    return lines;
}

std::vector<Line2> parse_lines_file(const std::string& path) {
    return parse_lines_text(read_file(path));
}

std::string csv_to_string(const CsvTable& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) os << ",";
        os << table.header[i];
    }
    os << "\n";
    for (const std::vector<std::string>& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "\n";
    }
    return os.str();
}

void emit_csv(const CsvTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    }
    out << csv_to_string(table);
    if (!out) {
        throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
    }
}

} // namespace zonelab
