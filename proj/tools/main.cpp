// Command-line frontend: curve/divisor I/O, single group-law operations,
// differential self-test sweeps and benchmarks.
//
// Exit codes, uniform across subcommands:
//   0  success
//   1  degenerate input / mathematical failure (including oracle mismatch)
//   2  usage, parse or validation failure

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "hyperjac/cantor.hpp"
#include "hyperjac/curve.hpp"
#include "hyperjac/grouplaw.hpp"
#include "hyperjac/mumford.hpp"
#include "hyperjac/runner.hpp"

namespace {

using namespace hyperjac;

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 1;
constexpr int kExitUsage = 2;

struct AddArgs {
    std::string curve_file;
    std::string d1, d2;
    std::string method = "explicit";
    bool retry_translation = false;
    std::uint64_t seed = 0;
};

std::string render(const cantor::Sum& sum) {
    if (const auto* full = std::get_if<MumfordDivisor>(&sum)) return to_text(*full);
    const auto& sub = std::get<cantor::SubgenericResult>(sum);
    return "subgeneric: u=" + to_text(sub.u) + "; v=" + to_text(sub.v) +
           "; weight=" + std::to_string(sub.weight);
}

int cmd_add(const AddArgs& args) {
    const CurvePtr curve = read_curve_file(args.curve_file);
    const MumfordDivisor d1 = parse_divisor(curve, args.d1);
    const MumfordDivisor d2 = parse_divisor(curve, args.d2);

    const bool want_explicit = args.method == "explicit" || args.method == "both";
    const bool want_cantor = args.method == "cantor" || args.method == "both";

    std::optional<MumfordDivisor> explicit_sum;
    if (want_explicit) {
        try {
            explicit_sum = args.retry_translation
                               ? grouplaw::add_translated(d1, d2, 16, args.seed)
                               : grouplaw::add(d1, d2);
        } catch (const DegeneracyError& err) {
            std::cout << (args.method == "both" ? "explicit: " : "") << "degenerate: "
                      << kind_name(err.kind()) << "\n";
            std::cerr << "stage " << err.stage() << ": " << err.what() << "\n";
            if (args.method != "both") return kExitDegenerate;
        }
        if (explicit_sum)
            std::cout << (args.method == "both" ? "explicit: " : "") << to_text(*explicit_sum)
                      << "\n";
    }

    std::optional<cantor::Sum> oracle_sum;
    if (want_cantor) {
        oracle_sum = cantor::cantor_add(d1, d2);
        std::cout << (args.method == "both" ? "cantor: " : "") << render(*oracle_sum) << "\n";
        if (args.method == "cantor")
            return std::holds_alternative<MumfordDivisor>(*oracle_sum) ? kExitOk : kExitDegenerate;
    }

    if (args.method == "both") {
        if (!explicit_sum) return kExitDegenerate;
        const bool agree = cantor::agrees(*oracle_sum, *explicit_sum);
        std::cout << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
        return agree ? kExitOk : kExitDegenerate;
    }
    return kExitOk;
}

int cmd_random(const std::string& curve_file, std::uint64_t seed, bool allow_zero_x) {
    const CurvePtr curve = read_curve_file(curve_file);
    std::cout << to_text(random_divisor(curve, seed, /*require_nonzero_x=*/!allow_zero_x)) << "\n";
    return kExitOk;
}

int cmd_check(const std::string& curve_file, const std::string& d_text) {
    const CurvePtr curve = read_curve_file(curve_file);
    // Parse the raw pair without the membership validation that
    // parse_divisor would apply: the whole point is to report it.
    const auto [u, v] = parse_divisor_pair(curve->field(), d_text);
    const ZMembership z = is_on_Z(*curve, u, v);
    std::cout << "on-Z: " << (z.on_z ? "true" : "false") << "\n";
    if (z.on_z) std::cout << "w=" << to_text(z.w) << "\n";
    return z.on_z ? kExitOk : kExitDegenerate;
}

int cmd_neg(const std::string& curve_file, const std::string& d_text) {
    const CurvePtr curve = read_curve_file(curve_file);
    std::cout << to_text(grouplaw::negate(parse_divisor(curve, d_text))) << "\n";
    return kExitOk;
}

int cmd_double(const std::string& curve_file, const std::string& d_text, std::uint64_t seed) {
    const CurvePtr curve = read_curve_file(curve_file);
    std::cout << to_text(grouplaw::dbl(parse_divisor(curve, d_text), seed)) << "\n";
    return kExitOk;
}

void maybe_write_json(const std::string& path, const nlohmann::json& doc) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write JSON report to '" + path + "'");
    out << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian arithmetic on hyperelliptic curves in Mumford coordinates:\n"
                 "an explicit rational-formula group law checked against a\n"
                 "composition-reduction oracle."};
    app.require_subcommand(1);

    AddArgs add_args;
    auto* add = app.add_subcommand("add", "Add two divisor classes");
    add->add_option("--curve", add_args.curve_file, "curve file")->required();
    add->add_option("--d1", add_args.d1, "first divisor, `u=[...]; v=[...]`")->required();
    add->add_option("--d2", add_args.d2, "second divisor")->required();
    add->add_option("--method", add_args.method, "explicit|cantor|both")
        ->check(CLI::IsMember({"explicit", "cantor", "both"}));
    add->add_flag("--retry-translation", add_args.retry_translation,
                  "retry through a random x-translation when a point sits at x = 0");
    add->add_option("--seed", add_args.seed, "seed for the translation retries");

    std::string curve_file, d_text;
    std::uint64_t seed = 0;
    bool allow_zero_x = false;

    auto* rnd = app.add_subcommand("random", "Sample a random divisor");
    rnd->add_option("--curve", curve_file, "curve file")->required();
    rnd->add_option("--seed", seed, "sampling seed");
    rnd->add_flag("--allow-zero-x", allow_zero_x, "permit a supporting point with x = 0");

    auto* chk = app.add_subcommand("check", "Test chart membership of a (u, v) pair");
    chk->add_option("--curve", curve_file, "curve file")->required();
    chk->add_option("--d", d_text, "divisor literal")->required();
    chk->add_option("--seed", seed, "accepted for flag uniformity; unused");

    auto* neg = app.add_subcommand("neg", "Negate a divisor class");
    neg->add_option("--curve", curve_file, "curve file")->required();
    neg->add_option("--d", d_text, "divisor literal")->required();
    neg->add_option("--seed", seed, "accepted for flag uniformity; unused");

    auto* dbl = app.add_subcommand("double", "Double a divisor class via a dummy summand");
    dbl->add_option("--curve", curve_file, "curve file")->required();
    dbl->add_option("--d", d_text, "divisor literal")->required();
    dbl->add_option("--seed", seed, "dummy-divisor seed");

    runner::SelftestOptions st;
    std::string json_path;
    auto* selftest = app.add_subcommand("selftest", "Differential sweep against the oracle");
    selftest->add_option("--modulus", st.modulus, "odd prime field size");
    selftest->add_option("--genus-max", st.genus_max, "sweep genus 1..N (N <= 12)");
    selftest->add_option("--trials", st.trials, "random pairs per genus");
    selftest->add_option("--seed", st.seed, "sweep seed");
    selftest->add_option("--json", json_path, "write the JSON report here");

    runner::BenchOptions bn;
    auto* bench = app.add_subcommand("bench", "Time explicit vs oracle additions");
    bench->add_option("--modulus", bn.modulus, "odd prime field size");
    bench->add_option("--genus-max", bn.genus_max, "sweep genus 1..N (N <= 12)");
    bench->add_option("--trials", bn.trials, "timed pairs per genus");
    bench->add_option("--seed", bn.seed, "sweep seed");
    bench->add_option("--json", json_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (add->parsed()) return cmd_add(add_args);
        if (rnd->parsed()) return cmd_random(curve_file, seed, allow_zero_x);
        if (chk->parsed()) return cmd_check(curve_file, d_text);
        if (neg->parsed()) return cmd_neg(curve_file, d_text);
        if (dbl->parsed()) return cmd_double(curve_file, d_text, seed);
        if (selftest->parsed()) {
            const auto report = runner::run_selftest(st);
            std::cout << runner::to_text(report);
            maybe_write_json(json_path, runner::to_json(report));
            return report.passed() ? kExitOk : kExitDegenerate;
        }
        if (bench->parsed()) {
            const auto report = runner::run_bench(bn);
            std::cout << runner::to_text(report);
            maybe_write_json(json_path, runner::to_json(report));
            return kExitOk;
        }
    } catch (const DegeneracyError& err) {
        std::cout << "degenerate: " << kind_name(err.kind()) << "\n";
        std::cerr << "stage " << err.stage() << ": " << err.what() << "\n";
        return kExitDegenerate;
    } catch (const RetriesExhausted& err) {
        std::cerr << "failed: " << err.what() << "\n";
        return kExitDegenerate;
    } catch (const SamplingExhausted& err) {
        std::cerr << "failed: " << err.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
