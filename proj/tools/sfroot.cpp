// sfroot: queries, range scans, bound evaluation and the proof pipeline.
//
// Exit status: 0 ok, 1 mathematical failure found, 2 usage or resource error.

#include "sfroot/bounds.hpp"
#include "sfroot/caseanalysis.hpp"
#include "sfroot/counting.hpp"
#include "sfroot/error.hpp"
#include "sfroot/report_io.hpp"
#include "sfroot/scan.hpp"
#include "sfroot/sieve.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace sfroot;
using json = nlohmann::ordered_json;
using nt::u64;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string factor_text(const nt::FactoredInt& f)
{
    std::string out;
    for (const auto& pp : f.factors()) {
        if (!out.empty()) {
            out += '*';
        }
        out += std::to_string(pp.prime);
        if (pp.exponent > 1) {
            out += '^' + std::to_string(pp.exponent);
        }
    }
    return out.empty() ? "1" : out;
}

nt::PrimeContext context_for(u64 p)
{
    if (!nt::is_prime(p)) {
        throw DomainError(std::to_string(p) + " is not prime");
    }
    return nt::PrimeContext(p);
}

json provenance(const nt::PrimeContext& ctx)
{
    return json{{"p", ctx.p()}, {"p_minus_1", factor_text(ctx.pm1())}, {"omega", ctx.omega()},
                {"radical", ctx.radical()}};
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw ResourceError("cannot write " + path);
    }
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Square-free primitive roots: queries, scans, explicit bounds and certificates"};
    app.require_subcommand(1);

    u64 query_p = 0;
    auto* gsf = app.add_subcommand("gsf", "Least square-free primitive root of a prime");
    gsf->add_option("p", query_p, "prime modulus")->required();
    auto* gsfull = app.add_subcommand("gsfull", "Least square-full primitive root of a prime");
    gsfull->add_option("p", query_p, "prime modulus")->required();

    u64 count_x = 0;
    u64 count_e = 0;
    std::string count_kind = "squarefree-primroot";
    auto* count = app.add_subcommand("count", "Exact count of qualifying n <= x");
    count->add_option("p", query_p, "prime modulus")->required();
    count->add_option("x", count_x, "cutoff, 1 <= x < p")->required();
    count->add_option("--kind", count_kind, "squarefree-primroot | efree-squarefree | squarefull-primroot")
        ->check(CLI::IsMember({"squarefree-primroot", "efree-squarefree", "squarefull-primroot"}));
    count->add_option("--e", count_e, "divisor of p-1 for efree-squarefree");

    std::string scan_kind;
    u64 scan_from = 2;
    u64 scan_to = 0;
    unsigned jobs = 1;
    std::string out_path;
    std::string format = "lines";
    std::string checkpoint;
    bool no_checkpoint = false;
    bool timing = false;
    double alpha = 0.96;
    auto* scan = app.add_subcommand("scan", "Scan a prime range");
    scan->add_option("--kind", scan_kind, "squarefree-conjecture | squarefull-dudek | theorem-direct | lloyd-prime-root")
        ->required();
    scan->add_option("--from", scan_from, "lower end (inclusive)");
    scan->add_option("--to", scan_to, "upper end (inclusive)")->required();
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("--alpha", alpha, "exponent for theorem-direct");
    scan->add_option("--out", out_path, "report file (default stdout)");
    scan->add_option("--format", format, "lines | csv")->check(CLI::IsMember({"lines", "csv"}));
    scan->add_option("--checkpoint", checkpoint, "progress file (default <out>.ckpt above 1e6)");
    scan->add_flag("--no-checkpoint", no_checkpoint, "never write progress markers");
    scan->add_flag("--timing", timing, "print elapsed time to stderr");

    unsigned omega = 0;
    unsigned s = 0;
    std::string p_text;
    std::vector<u64> excluded;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate G / G_s or solve for the threshold");
    bounds_cmd->require_subcommand(1);
    auto* beval = bounds_cmd->add_subcommand("eval", "Conservative lower bound at p");
    auto* bthr = bounds_cmd->add_subcommand("threshold", "Least p from which the verdict holds");
    for (auto* sub : {beval, bthr}) {
        sub->add_option("--alpha", alpha, "exponent, x = p^alpha")->required();
        sub->add_option("--omega", omega, "omega(p-1)")->required();
        sub->add_option("--s", s, "sieving primes (0 = plain G)");
        sub->add_option("--exclude", excluded, "primes known not to divide p-1")->delimiter(',');
    }
    beval->add_option("--p", p_text, "modulus: integer, decimal like 3.34e15, or 'primorial'")->required();

    bool trust_lloyd = true;
    u64 direct_limit = 10'000'000;
    unsigned omega_max = 500;
    auto* proof = app.add_subcommand("proof", "Run the full case analysis and write the certificate report");
    proof->add_option("--alpha", alpha, "exponent")->required();
    proof->add_flag("--trust-lloyd,!--no-trust-lloyd", trust_lloyd, "rely on the prime primitive root table");
    proof->add_option("--direct-limit", direct_limit, "direct scan limit");
    proof->add_option("--omega-max", omega_max, "largest omega certified individually");
    proof->add_option("--jobs", jobs, "worker threads");
    proof->add_option("--out", out_path, "report file (default stdout)");

    auto* o13 = app.add_subcommand("omega13", "Forced-divisor ladder and omega = 13 enumeration");
    o13->add_option("--alpha", alpha, "exponent");
    o13->add_option("--jobs", jobs, "worker threads");
    o13->add_option("--out", out_path, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (gsf->parsed()) {
            if (query_p == 2) {
                std::cout << json{{"p", 2}, {"p_minus_1", "1"}, {"omega", 0}, {"radical", 1}, {"gsf", 1}}.dump()
                          << '\n';
                return kOk;
            }
            const auto ctx = context_for(query_p);
            auto j = provenance(ctx);
            j["gsf"] = counting::least_squarefree_primroot(ctx);
            std::cout << j.dump() << '\n';
            return kOk;
        }
        if (gsfull->parsed()) {
            if (query_p == 2) {
                std::cout << json{{"p", 2}, {"p_minus_1", "1"}, {"omega", 0}, {"radical", 1}, {"gsfull", 1}}.dump()
                          << '\n';
                return kOk;
            }
            const auto ctx = context_for(query_p);
            auto j = provenance(ctx);
            const auto r = counting::least_squarefull_primroot(ctx);
            j["gsfull"] = r ? json(*r) : json("none below p");
            std::cout << j.dump() << '\n';
            return kOk;
        }
        if (count->parsed()) {
            const auto ctx = context_for(query_p);
            counting::CountResult r;
            if (count_kind == "squarefree-primroot") {
                r = counting::count_squarefree_primroots(ctx, count_x);
            } else if (count_kind == "squarefull-primroot") {
                r = counting::count_squarefull_primroots(ctx, count_x);
            } else {
                if (count_e == 0) {
                    throw DomainError("--e is required for efree-squarefree");
                }
                r = counting::count_efree_squarefree(ctx, count_e, count_x);
            }
            auto j = json::parse(io::to_line(r));
            j["p_minus_1"] = factor_text(ctx.pm1());
            j["omega"] = ctx.omega();
            std::cout << j.dump() << '\n';
            return kOk;
        }
        if (scan->parsed()) {
            const auto kind = scan::scan_kind_from_string(scan_kind);
            scan::ScanOptions opt;
            opt.jobs = jobs;
            opt.alpha = alpha;
            if (!no_checkpoint) {
                if (!checkpoint.empty()) {
                    opt.checkpoint_path = checkpoint;
                } else if (!out_path.empty() && out_path != "-" && scan_to - std::min(scan_from, scan_to) >
                                                                        scan::kCheckpointThreshold) {
                    opt.checkpoint_path = out_path + ".ckpt";
                }
            }
            const auto report = scan::run_scan(kind, scan_from, scan_to, opt);
            emit(format == "csv" ? io::to_csv(report) : io::to_lines(report), out_path);
            if (timing) {
                std::fprintf(stderr, "elapsed %.3f s, %.0f primes/s\n", report.seconds,
                             report.seconds > 0 ? static_cast<double>(report.primes_scanned) / report.seconds : 0.0);
            }
            // Primes lacking a square-full root are the Dudek scan's findings, not failures.
            if (kind != scan::ScanKind::SquarefullDudek && !report.violations.empty()) {
                return kFailure;
            }
            return kOk;
        }
        if (beval->parsed()) {
            bounds::Enclosure p = p_text == "primorial" ? bounds::Enclosure::exact(nt::primorial(omega) + 1)
                                                        : bounds::Enclosure::from_decimal(p_text);
            bounds::BoundEvaluation ev;
            if (s == 0) {
                ev = bounds::eval_G(p, alpha, omega);
            } else {
                ev = bounds::eval_Gs(p, alpha, omega - s, bounds::worst_case_delta(omega, s, excluded), s);
            }
            std::cout << io::to_line(ev) << '\n';
            return kOk;
        }
        if (bthr->parsed()) {
            const auto t = bounds::threshold_p(alpha, omega, s, excluded);
            std::cout << io::to_line(t) << '\n';
            return kOk;
        }
        if (proof->parsed()) {
            cases::ProofOptions opt;
            opt.trust_lloyd = trust_lloyd;
            opt.direct_scan_limit = direct_limit;
            opt.omega_max = omega_max;
            opt.jobs = jobs;
            const auto report = cases::full_proof(alpha, opt);
            emit(io::to_lines(report), out_path);
            for (const auto& f : report.failures) {
                std::cerr << "failure: " << f << '\n';
            }
            if (report.residual_p0) {
                std::cerr << "proved for p > " << *report.residual_p0 << " (and below the covered ranges)\n";
            }
            return report.complete() ? kOk : kFailure;
        }
        if (o13->parsed()) {
            const auto ladder = cases::forced_divisor_ladder(alpha);
            const auto rec = cases::omega13_pipeline(alpha, jobs);
            emit(io::to_lines(ladder) + io::to_lines(rec), out_path);
            return kOk;
        }
    } catch (const CertificationError& e) {
        std::cerr << "sfroot: " << e.what() << '\n';
        return kFailure;
    } catch (const InvariantError& e) {
        std::cerr << "sfroot: " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "sfroot: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
