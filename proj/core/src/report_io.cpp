#include "sfroot/report_io.hpp"

#include "sfroot/error.hpp"

#include <json.hpp>

#include <sstream>

namespace sfroot::io {

using json = nlohmann::ordered_json;
using bounds::Rational;
using bounds::BigInt;

std::string rational_text(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational rational_from_text(std::string_view text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        return Rational(BigInt(std::string(text.substr(0, slash))), BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::exception&) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
}

namespace {

json real(double v, std::string_view rounding)
{
    return json{{"value", v}, {"bits", 53}, {"rounding", rounding}};
}

double real_value(const json& j) { return j.at("value").get<double>(); }

template <class T>
json opt(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key)
{
    const auto& v = j.at(key);
    return v.is_null() ? std::nullopt : std::optional<T>(v.get<T>());
}

json opt_rational(const std::optional<Rational>& q) { return q ? json(rational_text(*q)) : json(nullptr); }

std::optional<Rational> get_opt_rational(const json& j, const char* key)
{
    const auto& v = j.at(key);
    return v.is_null() ? std::nullopt : std::optional<Rational>(rational_from_text(v.get<std::string>()));
}

std::vector<json> parse_lines(std::string_view text)
{
    std::vector<json> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("record")) {
            throw DomainError("malformed report line: " + line);
        }
        out.push_back(std::move(j));
    }
    return out;
}

json violation_json(const char* record, const scan::Violation& v)
{
    return json{{"record", record}, {"p", v.p}, {"value", opt(v.value)}};
}

json case_json(const cases::CaseCertificate& c)
{
    return json{{"record", "case"},
                {"omega", c.omega},
                {"s", c.s},
                {"excluded", c.excluded},
                {"delta_min", opt_rational(c.delta_min)},
                {"threshold", c.threshold},
                {"primorial_floor", c.primorial_floor.str()},
                {"floor", c.floor.str()},
                {"status", cases::to_string(c.status)},
                {"stable", c.stable},
                {"monotone_beyond", c.monotone_beyond},
                {"notes", c.notes}};
}

cases::CaseCertificate case_from(const json& j)
{
    cases::CaseCertificate c;
    c.omega = j.at("omega").get<unsigned>();
    c.s = j.at("s").get<unsigned>();
    c.excluded = j.at("excluded").get<std::vector<nt::u64>>();
    c.delta_min = get_opt_rational(j, "delta_min");
    c.threshold = j.at("threshold").get<std::string>();
    c.primorial_floor = BigInt(j.at("primorial_floor").get<std::string>());
    c.floor = BigInt(j.at("floor").get<std::string>());
    c.status = cases::case_status_from_string(j.at("status").get<std::string>());
    c.stable = j.at("stable").get<bool>();
    c.monotone_beyond = j.at("monotone_beyond").get<bool>();
    c.notes = j.at("notes").get<std::string>();
    return c;
}

void ladder_lines(const cases::LadderResult& r, std::string& out)
{
    out += json{{"record", "ladder"}, {"window_lo", r.window_lo}, {"window_hi", r.window_hi}, {"closed", r.closed()}}
               .dump() +
           '\n';
    for (const auto& s : r.steps) {
        out += json{{"record", "ladder_step"},
                    {"q", s.q},
                    {"s", s.s},
                    {"method", cases::to_string(s.method)},
                    {"witness", s.witness},
                    {"delta", opt_rational(s.delta)},
                    {"closed", s.closed}}
                   .dump() +
               '\n';
    }
}

void omega13_lines(const cases::Omega13Record& r, std::string& out)
{
    out += json{{"record", "omega13"},
                {"base", r.base},
                {"window_lo", r.window_lo},
                {"window_hi", r.window_hi},
                {"candidate_count", r.candidate_count},
                {"prime_count", r.prime_count},
                {"survivor_count", r.survivor_count},
                {"smallest_survivor", r.smallest_survivor},
                {"smallest_survivor_p_minus_1", r.smallest_survivor == 0 ? 0 : r.smallest_survivor - 1},
                {"endpoints_clear", r.endpoints_clear}}
               .dump() +
           '\n';
    for (const auto& e : r.eliminated) {
        out += json{{"record", "omega13_eliminated"},
                    {"p", e.p},
                    {"delta", rational_text(e.delta)},
                    {"gs_value", real(e.gs_value, "down")}}
                   .dump() +
               '\n';
    }
    for (const auto& s : r.survivors) {
        out += json{{"record", "omega13_survivor"},
                    {"p", s.p},
                    {"delta", rational_text(s.delta)},
                    {"gs_value", real(s.gs_value, "down")},
                    {"least_squarefree_root", s.least_squarefree_root}}
                   .dump() +
               '\n';
    }
}

} // namespace

std::string to_lines(const scan::ScanReport& r)
{
    std::string out;
    json head{{"record", "scan"}, {"kind", scan::to_string(r.kind)}, {"from", r.from}, {"to", r.to}};
    head["alpha"] = r.kind == scan::ScanKind::TheoremDirect ? real(r.alpha, "nearest") : json(nullptr);
    head["chunks"] = r.chunks;
    out += head.dump() + '\n';
    for (const auto& v : r.violations) {
        out += violation_json("violation", v).dump() + '\n';
    }
    for (const auto& v : r.exempt_failures) {
        out += violation_json("exempt", v).dump() + '\n';
    }
    json sum{{"record", "summary"},
             {"primes_scanned", r.primes_scanned},
             {"violation_count", r.violations.size()},
             {"exempt_count", r.exempt_failures.size()},
             {"largest_violation", opt(r.largest_violation())},
             {"worst_p", opt(r.worst_p)},
             {"worst_value", opt(r.worst_value)},
             {"worst_ratio", real(r.worst_ratio, "nearest")}};
    out += sum.dump() + '\n';
    return out;
}

scan::ScanReport scan_from_lines(std::string_view text)
{
    scan::ScanReport r;
    bool have_head = false;
    bool have_summary = false;
    for (const auto& j : parse_lines(text)) {
        const auto rec = j.at("record").get<std::string>();
        if (rec == "scan") {
            have_head = true;
            r.kind = scan::scan_kind_from_string(j.at("kind").get<std::string>());
            r.from = j.at("from").get<nt::u64>();
            r.to = j.at("to").get<nt::u64>();
            r.alpha = j.at("alpha").is_null() ? 0.0 : real_value(j.at("alpha"));
            r.chunks = j.at("chunks").get<nt::u64>();
        } else if (rec == "violation" || rec == "exempt") {
            scan::Violation v{j.at("p").get<nt::u64>(), get_opt<nt::u64>(j, "value")};
            (rec == "violation" ? r.violations : r.exempt_failures).push_back(v);
        } else if (rec == "summary") {
            have_summary = true;
            r.primes_scanned = j.at("primes_scanned").get<nt::u64>();
            r.worst_p = get_opt<nt::u64>(j, "worst_p");
            r.worst_value = get_opt<nt::u64>(j, "worst_value");
            r.worst_ratio = real_value(j.at("worst_ratio"));
        } else {
            throw DomainError("unexpected record '" + rec + "' in scan report");
        }
    }
    if (!have_head || !have_summary) {
        throw DomainError("scan report is missing its header or summary");
    }
    return r;
}

std::string to_csv(const scan::ScanReport& r)
{
    std::ostringstream out;
    out << "# kind=" << scan::to_string(r.kind) << " from=" << r.from << " to=" << r.to
        << " primes_scanned=" << r.primes_scanned << '\n';
    out << "p,value,class\n";
    auto row = [&](const scan::Violation& v, const char* cls) {
        out << v.p << ',' << (v.value ? std::to_string(*v.value) : std::string()) << ',' << cls << '\n';
    };
    for (const auto& v : r.violations) {
        row(v, "violation");
    }
    for (const auto& v : r.exempt_failures) {
        row(v, "exempt");
    }
    return out.str();
}

std::string to_lines(const cases::Omega13Record& r)
{
    std::string out;
    omega13_lines(r, out);
    return out;
}

std::string to_lines(const cases::LadderResult& r)
{
    std::string out;
    ladder_lines(r, out);
    return out;
}

std::string to_lines(const cases::ProofReport& r)
{
    std::string out;
    out += json{{"record", "proof"},
                {"alpha", real(r.alpha, "nearest")},
                {"trust_lloyd", r.options.trust_lloyd},
                {"direct_scan_limit", r.options.direct_scan_limit},
                {"omega_max", r.options.omega_max}}
               .dump() +
           '\n';
    out += json{{"record", "direct"},
                {"limit", r.direct.limit},
                {"primes_checked", r.direct.primes_checked},
                {"violations", r.direct.violations}}
               .dump() +
           '\n';
    out += json{{"record", "lloyd"},
                {"trusted", r.lloyd.trusted},
                {"range", "2791 < p < 2.5e15"},
                {"implication", "a prime primitive root is square-free, so g_sf(p) <= least prime primitive root"},
                {"verified_from", r.lloyd.verified_from},
                {"verified_to", r.lloyd.verified_to},
                {"primes_checked", r.lloyd.primes_checked},
                {"violations", r.lloyd.violations}}
               .dump() +
           '\n';
    for (const auto& c : r.cases) {
        out += case_json(c).dump() + '\n';
    }
    if (r.ladder) {
        ladder_lines(*r.ladder, out);
    }
    if (r.omega13) {
        omega13_lines(*r.omega13, out);
    }
    out += json{{"record", "tail"},
                {"omega_max", r.tail.omega_max},
                {"next_prime", r.tail.next_prime},
                {"base_verdict", r.tail.base_verdict},
                {"step_holds", r.tail.step_holds},
                {"notes", r.tail.notes}}
               .dump() +
           '\n';
    out += json{{"record", "summary"},
                {"complete", r.complete()},
                {"residual_p0", opt(r.residual_p0)},
                {"failures", r.failures}}
               .dump() +
           '\n';
    return out;
}

cases::ProofReport proof_from_lines(std::string_view text)
{
    cases::ProofReport r;
    bool have_head = false;
    for (const auto& j : parse_lines(text)) {
        const auto rec = j.at("record").get<std::string>();
        if (rec == "proof") {
            have_head = true;
            r.alpha = real_value(j.at("alpha"));
            r.options.trust_lloyd = j.at("trust_lloyd").get<bool>();
            r.options.direct_scan_limit = j.at("direct_scan_limit").get<nt::u64>();
            r.options.omega_max = j.at("omega_max").get<unsigned>();
        } else if (rec == "direct") {
            r.direct.limit = j.at("limit").get<nt::u64>();
            r.direct.primes_checked = j.at("primes_checked").get<nt::u64>();
            r.direct.violations = j.at("violations").get<std::vector<nt::u64>>();
        } else if (rec == "lloyd") {
            r.lloyd.trusted = j.at("trusted").get<bool>();
            r.lloyd.verified_from = j.at("verified_from").get<nt::u64>();
            r.lloyd.verified_to = j.at("verified_to").get<nt::u64>();
            r.lloyd.primes_checked = j.at("primes_checked").get<nt::u64>();
            r.lloyd.violations = j.at("violations").get<std::vector<nt::u64>>();
        } else if (rec == "case") {
            r.cases.push_back(case_from(j));
        } else if (rec == "ladder") {
            r.ladder.emplace();
            r.ladder->window_lo = j.at("window_lo").get<std::string>();
            r.ladder->window_hi = j.at("window_hi").get<std::string>();
        } else if (rec == "ladder_step") {
            if (!r.ladder) {
                throw DomainError("ladder_step before ladder record");
            }
            cases::LadderStep s;
            s.q = j.at("q").get<nt::u64>();
            s.s = j.at("s").get<unsigned>();
            s.method = j.at("method").get<std::string>() == "size" ? cases::LadderMethod::Size
                                                                   : cases::LadderMethod::Bound;
            s.witness = j.at("witness").get<std::string>();
            s.delta = get_opt_rational(j, "delta");
            s.closed = j.at("closed").get<bool>();
            r.ladder->steps.push_back(std::move(s));
        } else if (rec == "omega13") {
            auto& o = r.omega13.emplace();
            o.base = j.at("base").get<nt::u64>();
            o.window_lo = j.at("window_lo").get<nt::u64>();
            o.window_hi = j.at("window_hi").get<nt::u64>();
            o.candidate_count = j.at("candidate_count").get<nt::u64>();
            o.prime_count = j.at("prime_count").get<nt::u64>();
            o.survivor_count = j.at("survivor_count").get<nt::u64>();
            o.smallest_survivor = j.at("smallest_survivor").get<nt::u64>();
            o.endpoints_clear = j.at("endpoints_clear").get<bool>();
        } else if (rec == "omega13_eliminated" || rec == "omega13_survivor") {
            if (!r.omega13) {
                throw DomainError(rec + " before omega13 record");
            }
            const auto p = j.at("p").get<nt::u64>();
            const auto delta = rational_from_text(j.at("delta").get<std::string>());
            const double gs = real_value(j.at("gs_value"));
            if (rec == "omega13_eliminated") {
                r.omega13->eliminated.push_back({p, delta, gs});
            } else {
                r.omega13->survivors.push_back({p, delta, gs, j.at("least_squarefree_root").get<nt::u64>()});
            }
        } else if (rec == "tail") {
            r.tail.omega_max = j.at("omega_max").get<unsigned>();
            r.tail.next_prime = j.at("next_prime").get<nt::u64>();
            r.tail.base_verdict = j.at("base_verdict").get<bool>();
            r.tail.step_holds = j.at("step_holds").get<bool>();
            r.tail.notes = j.at("notes").get<std::string>();
        } else if (rec == "summary") {
            r.residual_p0 = get_opt<std::string>(j, "residual_p0");
            r.failures = j.at("failures").get<std::vector<std::string>>();
        } else {
            throw DomainError("unexpected record '" + rec + "' in proof report");
        }
    }
    if (!have_head) {
        throw DomainError("proof report is missing its header");
    }
    return r;
}

std::string to_line(const cases::CaseCertificate& c) { return case_json(c).dump(); }

std::string to_line(const bounds::BoundEvaluation& e)
{
    json j{{"record", "bound"}, {"p", e.p}, {"alpha", real(e.alpha, "nearest")}, {"x", real(e.x, "down")},
           {"omega_k", e.omega_k}};
    j["s"] = opt(e.s);
    j["delta"] = opt_rational(e.delta);
    j["Delta"] = e.Delta ? real(*e.Delta, "up") : json(nullptr);
    j["value"] = real(e.value, "down");
    j["rounding"] = bounds::to_string(e.rounding);
    j["working_bits"] = e.precision;
    j["verdict"] = e.verdict;
    return j.dump();
}

std::string to_line(const bounds::ThresholdResult& t)
{
    json j{{"record", "threshold"}, {"alpha", real(t.alpha, "nearest")}, {"omega", t.omega}, {"s", t.s},
           {"excluded", t.excluded}, {"omega_k", t.omega_k}};
    j["delta"] = opt_rational(t.delta);
    j["p_star"] = t.p_star_text;
    j["p_star_rounding"] = "up";
    j["stable"] = t.stable;
    j["monotone_beyond"] = t.monotone_beyond;
    return j.dump();
}

std::string to_line(const counting::CountResult& c)
{
    json j{{"record", "count"}, {"p", c.p}, {"x", c.x}, {"kind", counting::to_string(c.kind)}, {"e", opt(c.e)},
           {"count", c.count}};
    j["main_term"] = c.main_term ? real(*c.main_term, "nearest") : json(nullptr);
    j["error_bound"] = c.error_bound ? real(*c.error_bound, "up") : json(nullptr);
    return j.dump();
}

} // namespace sfroot::io
