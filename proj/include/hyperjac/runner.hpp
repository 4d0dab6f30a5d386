#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperjac/cantor.hpp"
#include "hyperjac/curve.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/grouplaw.hpp"
#include "hyperjac/mumford.hpp"
#include "hyperjac/rng.hpp"

namespace hyperjac::runner {

inline constexpr int kReportSchema = 1;
inline constexpr int kMaxGenus = 12;

inline constexpr std::array<DegeneracyKind, 5> kAllKinds = {
    DegeneracyKind::SharedSupport, DegeneracyKind::SingularM, DegeneracyKind::ZeroOmega,
    DegeneracyKind::ZeroRho, DegeneracyKind::SingularQT};

struct SelftestOptions {
    std::uint64_t modulus = 10007;
    int genus_max = 8;
    int trials = 200;
    std::uint64_t seed = 1;
};

struct GenusSelftest {
    int genus = 0;
    int trials = 0;
    int ok = 0;
    int mismatches = 0;
    std::array<int, kAllKinds.size()> degenerate_by_kind{};
    std::uint64_t elapsed_ns = 0;

    int degenerate_total() const {
        int total = 0;
        for (int n : degenerate_by_kind) total += n;
        return total;
    }
    double degeneracy_rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(degenerate_total()) / trials;
    }
};

struct SelftestReport {
    SelftestOptions options;
    std::vector<GenusSelftest> rows;
    std::uint64_t elapsed_ns = 0;

    int total_mismatches() const {
        int total = 0;
        for (const auto& row : rows) total += row.mismatches;
        return total;
    }
    bool passed() const { return total_mismatches() == 0; }
};

inline void check_sweep_options(int genus_max, int trials) {
    if (genus_max < 1 || genus_max > kMaxGenus)
        throw Error("genus-max must be between 1 and " + std::to_string(kMaxGenus));
    if (trials < 1) throw Error("trials must be >= 1");
}

// Seeded differential sweep: per genus, random curves and divisor pairs go
// through both addition routes. Every non-degenerate explicit result must
// match the oracle exactly; degeneracies are tallied per kind. Divisors are
// sampled without the x != 0 restriction so the ZeroOmega locus shows up in
// the statistics at its natural rate.
inline SelftestReport run_selftest(const SelftestOptions& opt) {
    check_sweep_options(opt.genus_max, opt.trials);
    const FieldModulus m(opt.modulus);
    SelftestReport report;
    report.options = opt;
    SplitMix64 root(opt.seed);
    const auto t_start = std::chrono::steady_clock::now();

    for (int g = 1; g <= opt.genus_max; ++g) {
        SplitMix64 rng = root.fork();
        GenusSelftest row;
        row.genus = g;
        row.trials = opt.trials;
        const auto g_start = std::chrono::steady_clock::now();

        for (int t = 0; t < opt.trials; ++t) {
            const CurvePtr curve = sample_curve(m, g, rng);
            const MumfordDivisor d1 = random_divisor(curve, rng, /*require_nonzero_x=*/false);
            const MumfordDivisor d2 = random_divisor(curve, rng, /*require_nonzero_x=*/false);
            try {
                const MumfordDivisor sum = grouplaw::add(d1, d2);
                if (cantor::agrees(cantor::cantor_add(d1, d2), sum))
                    ++row.ok;
                else
                    ++row.mismatches;
            } catch (const DegeneracyError& err) {
                ++row.degenerate_by_kind[static_cast<std::size_t>(err.kind())];
            }
        }
        row.elapsed_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                                 g_start)
                .count());
        report.rows.push_back(row);
    }
    report.elapsed_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                             t_start)
            .count());
    return report;
}

inline nlohmann::json to_json(const SelftestReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json degenerate;
        for (std::size_t k = 0; k < kAllKinds.size(); ++k)
            degenerate[kind_name(kAllKinds[k])] = row.degenerate_by_kind[k];
        rows.push_back({{"genus", row.genus},
                        {"trials", row.trials},
                        {"ok", row.ok},
                        {"mismatches", row.mismatches},
                        {"degenerate", degenerate},
                        {"degeneracy_rate", row.degeneracy_rate()},
                        {"elapsed_ns", row.elapsed_ns}});
    }
    return {{"schema", kReportSchema},
            {"command", "selftest"},
            {"modulus", r.options.modulus},
            {"seed", r.options.seed},
            {"genus_max", r.options.genus_max},
            {"trials", r.options.trials},
            {"rows", rows},
            {"total_mismatches", r.total_mismatches()},
            {"elapsed_ns", r.elapsed_ns}};
}

inline std::string to_text(const SelftestReport& r) {
    std::ostringstream out;
    out << "selftest: p=" << r.options.modulus << " seed=" << r.options.seed
        << " trials=" << r.options.trials << "\n";
    for (const auto& row : r.rows) {
        out << "  g=" << row.genus << ": ok=" << row.ok << " mismatches=" << row.mismatches
            << " degenerate=" << row.degenerate_total() << " (";
        bool first = true;
        for (std::size_t k = 0; k < kAllKinds.size(); ++k) {
            if (row.degenerate_by_kind[k] == 0) continue;
            if (!first) out << ", ";
            out << kind_name(kAllKinds[k]) << "=" << row.degenerate_by_kind[k];
            first = false;
        }
        if (first) out << "none";
        out << ") rate=" << 100.0 * row.degeneracy_rate() << "%\n";
    }
    out << (r.passed() ? "selftest PASSED" : "selftest FAILED") << ": " << r.total_mismatches()
        << " oracle mismatches\n";
    return out.str();
}

struct BenchOptions {
    std::uint64_t modulus = 10007;
    int genus_max = 8;
    int trials = 100;
    std::uint64_t seed = 1;
};

struct BenchRow {
    int genus = 0;
    int timed_explicit = 0;  // successful explicit additions
    int degenerate = 0;
    std::uint64_t explicit_median_ns = 0;
    std::uint64_t explicit_p90_ns = 0;
    std::uint64_t cantor_median_ns = 0;
    std::uint64_t cantor_p90_ns = 0;
};

struct BenchReport {
    BenchOptions options;
    std::vector<BenchRow> rows;
    std::uint64_t elapsed_ns = 0;
};

namespace detail_r {
inline std::uint64_t percentile(std::vector<std::uint64_t>& xs, double frac) {
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());
    std::size_t idx = static_cast<std::size_t>(frac * static_cast<double>(xs.size() - 1));
    return xs[idx];
}
}  // namespace detail_r

// Wall-time comparison of the two addition routes on identical inputs, one
// fixed random curve per genus. Informational: the numbers carry no
// pass/fail semantics.
inline BenchReport run_bench(const BenchOptions& opt) {
    check_sweep_options(opt.genus_max, opt.trials);
    const FieldModulus m(opt.modulus);
    BenchReport report;
    report.options = opt;
    SplitMix64 root(opt.seed);
    const auto t_start = std::chrono::steady_clock::now();

    for (int g = 1; g <= opt.genus_max; ++g) {
        SplitMix64 rng = root.fork();
        const CurvePtr curve = sample_curve(m, g, rng);
        std::vector<std::pair<MumfordDivisor, MumfordDivisor>> pairs;
        pairs.reserve(static_cast<std::size_t>(opt.trials));
        for (int t = 0; t < opt.trials; ++t)
            pairs.emplace_back(random_divisor(curve, rng, /*require_nonzero_x=*/true),
                               random_divisor(curve, rng, /*require_nonzero_x=*/true));

        BenchRow row;
        row.genus = g;
        std::vector<std::uint64_t> explicit_ns, cantor_ns;
        for (const auto& [d1, d2] : pairs) {
            const auto t0 = std::chrono::steady_clock::now();
            bool ok = true;
            try {
                grouplaw::add(d1, d2);
            } catch (const DegeneracyError&) {
                ok = false;
            }
            const auto t1 = std::chrono::steady_clock::now();
            cantor::cantor_add(d1, d2);
            const auto t2 = std::chrono::steady_clock::now();
            if (ok) {
                ++row.timed_explicit;
                explicit_ns.push_back(static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
            } else {
                ++row.degenerate;
            }
            cantor_ns.push_back(static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count()));
        }
        row.explicit_median_ns = detail_r::percentile(explicit_ns, 0.5);
        row.explicit_p90_ns = detail_r::percentile(explicit_ns, 0.9);
        row.cantor_median_ns = detail_r::percentile(cantor_ns, 0.5);
        row.cantor_p90_ns = detail_r::percentile(cantor_ns, 0.9);
        report.rows.push_back(row);
    }
    report.elapsed_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                             t_start)
            .count());
    return report;
}

inline nlohmann::json to_json(const BenchReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"genus", row.genus},
                        {"timed_explicit", row.timed_explicit},
                        {"degenerate", row.degenerate},
                        {"explicit_ns", {{"median", row.explicit_median_ns},
                                         {"p90", row.explicit_p90_ns}}},
                        {"cantor_ns", {{"median", row.cantor_median_ns},
                                       {"p90", row.cantor_p90_ns}}}});
    return {{"schema", kReportSchema},
            {"command", "bench"},
            {"modulus", r.options.modulus},
            {"seed", r.options.seed},
            {"genus_max", r.options.genus_max},
            {"trials", r.options.trials},
            {"rows", rows},
            {"elapsed_ns", r.elapsed_ns}};
}

inline std::string to_text(const BenchReport& r) {
    std::ostringstream out;
    out << "bench: p=" << r.options.modulus << " seed=" << r.options.seed
        << " trials=" << r.options.trials << " (wall time per addition, ns)\n";
    out << "  genus   explicit median      p90   |   cantor median      p90   (timed/degenerate)\n";
    for (const auto& row : r.rows) {
        out << "  " << row.genus << "\t" << row.explicit_median_ns << "\t" << row.explicit_p90_ns
            << "\t|\t" << row.cantor_median_ns << "\t" << row.cantor_p90_ns << "\t("
            << row.timed_explicit << "/" << row.degenerate << ")\n";
    }
    return out.str();
}

}  // namespace hyperjac::runner
