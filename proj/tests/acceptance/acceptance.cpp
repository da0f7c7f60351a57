// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// usage: acceptance <etaforge-cli> <source-dir> [--long]
// The full-range scan (criterion 2) runs only with --long.

#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "etaforge/kernel10.hpp"
#include "etaforge/numeric.hpp"
#include "etaforge/parallel.hpp"
#include "etaforge/qseries.hpp"
#include "etaforge/search.hpp"
#include "etaforge/verify.hpp"

namespace {

using namespace etaforge;
using Clock = std::chrono::steady_clock;

constexpr int kJobs = 4;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int run_command(const std::string& cmd, std::string& output) {
    output.clear();
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (pipe == nullptr) return -1;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    int status = pclose(pipe);
    return status;
}

Outcome suites_pass(const std::vector<std::pair<std::string, long>>& suites) {
    for (const auto& [name, terms] : suites) {
        std::vector<CheckResult> checks = run_suite(name, terms, kJobs);
        for (const CheckResult& c : checks)
            if (!c.pass) return {false, name + "/" + c.name + ": " + c.detail};
        if (checks.empty()) return {false, "suite " + name + " ran no checks"};
    }
    return {true, ""};
}

// criterion 1: the range-10 scan reproduces the golden parameter tables exactly
Outcome scan_box_golden(const std::string& cli, const std::string& src) {
    std::string out;
    int status = run_command(cli + " scan-a --range 10 --golden " + src +
                                 "/data/golden_tables.json",
                             out);
    if (status != 0) return {false, "scan-a exited with status " + std::to_string(status)};
    if (out.find("EMPTY-DIFF") == std::string::npos)
        return {false, "scan-a reported a nonempty set difference"};
    return {true, ""};
}

// criterion 2: nothing new in the +/-40 box (long)
Outcome scan_box_full(const std::string& cli, const std::string& src) {
    std::string out;
    int status = run_command(cli + " --jobs 4 scan-a --range 40 --golden " + src +
                                 "/data/golden_tables.json",
                             out);
    if (status != 0) return {false, "scan-a exited with status " + std::to_string(status)};
    if (out.find("EMPTY-DIFF") == std::string::npos)
        return {false, "scan-a reported a nonempty set difference"};
    return {true, ""};
}

// criterion 3: multiplier bound 1 vs 2 separates the four reference rows
Outcome search_multiplier_bounds() {
    auto contains = [](const std::vector<SearchHit>& hits, const EtaExponents& e) {
        for (const SearchHit& h : hits)
            if (h.e == e) return true;
        return false;
    };
    std::vector<SearchHit> b1 = search_level10(8, Int(1), 400, kJobs);
    std::vector<SearchHit> b2 = search_level10(8, Int(2), 400, kJobs);
    const EtaExponents in1{8, -7, 0, 3}, in2{0, 3, 8, -7};
    const EtaExponents only2a{3, 0, -7, 8}, only2b{-7, 8, 3, 0};
    if (!contains(b1, in1) || !contains(b1, in2))
        return {false, "a multiplier-1 row is missing at bound 1"};
    if (contains(b1, only2a) || contains(b1, only2b))
        return {false, "a multiplier-2 row appears at bound 1"};
    if (!contains(b2, only2a) || !contains(b2, only2b))
        return {false, "a multiplier-2 row is missing at bound 2"};
    return {true, ""};
}

// criterion 9: both evaluation routes hit every displayed closed form
Outcome special_values() {
    const long prec = 256;
    BigFloat tol_quad = BigFloat::from_rat(Rat(Int(1), Int(1000000000000L)), prec);
    BigFloat pi = BigFloat::pi(prec);
    BigFloat q10 = BigFloat::exp(-(BigFloat::from_long(2, prec) * pi) / sqrt_rat(Rat(10), prec));

    for (const char* what : {"row:1.0", "row:3.0", "row:4.0", "row:3.1", "fine0", "integral2",
                             "integral3", "integral4", "integral5", "integral6"}) {
        NumericReport report = evaluate_special(what, prec);
        for (const NumericCheck& entry : report.entries)
            if (!entry.pass)
                return {false, std::string(what) + "/" + entry.check +
                                   ": series route misses the closed form at 1e-20"};
    }

    PuiseuxSeries q = PuiseuxSeries::monomial(Rat(1), Rat(1), 400);
    for (const char* label : {"1.0", "3.0", "4.0", "3.1"}) {
        std::pair<BigFloat, BigFloat> both = ramanujan_fine_value(label, prec);
        PuiseuxSeries integrand =
            eta_exponent_series(a_to_e(row_parameters(label)), 400) / q;
        BigFloat quad = quadrature_check(integrand, q10, tol_quad);
        if (!((quad - both.second).abs() <= tol_quad))
            return {false, std::string("row ") + label + ": quadrature misses at 1e-12"};
    }
    {
        PuiseuxSeries integrand = eta_quotient({{2, 20}, {1, -16}}, 400) / q;
        BigFloat q0 = BigFloat::exp(-pi);
        BigFloat quad = quadrature_check(integrand, q0, tol_quad);
        BigFloat closed = BigFloat::from_rat(Rat(1, 16), prec);
        if (!((quad - closed).abs() <= tol_quad))
            return {false, "fine0: quadrature misses 1/16 at 1e-12"};
    }
    for (int index = 2; index <= 6; ++index) {
        PuiseuxSeries integrand = integral_integrand_series(index, 400);
        for (const IntegralSpecialValue& value : integral_special_values(index, prec)) {
            BigFloat quad = quadrature_check(integrand, value.q0, tol_quad);
            if (!((quad - value.closed).abs() <= tol_quad))
                return {false, value.name + ": quadrature misses at 1e-12"};
        }
    }

    NumericReport cert = appendix_k_certificate(prec);
    if (!cert.all_pass()) return {false, "modulus certificate check failed"};
    if (cert.entries.size() != 4) return {false, "modulus certificate is incomplete"};
    return {true, ""};
}

// criterion 10: sparsity, residue structure, and oracle agreement
Outcome property_suites() {
    PuiseuxSeries euler = euler_product(1, 1001);
    std::vector<Rat> expected(1001, Rat(0));
    for (long j = 1;; ++j) {
        long g1 = j * (3 * j - 1) / 2;
        long g2 = j * (3 * j + 1) / 2;
        if (g1 > 1000 && g2 > 1000) break;
        Rat s((j % 2 == 0) ? 1 : -1);
        if (g1 <= 1000) expected[static_cast<size_t>(g1)] = s;
        if (g2 <= 1000) expected[static_cast<size_t>(g2)] = s;
    }
    expected[0] = 1;
    const std::vector<Rat>& c = euler.coefficients();
    if (euler.offset() != 0 || static_cast<long>(c.size()) < 1001)
        return {false, "euler product window too short"};
    for (long m = 0; m <= 1000; ++m)
        if (c[static_cast<size_t>(m)] != expected[static_cast<size_t>(m)])
            return {false, "pentagonal sparsity fails at exponent " + std::to_string(m)};

    std::vector<ParamExponents> box;
    for (long a1 = -6; a1 <= 6; ++a1)
        for (long a2 = -6; a2 <= 6; ++a2)
            for (long a3 = -6; a3 <= 6; ++a3) box.push_back({-(a1 + a2 + a3), a1, a2, a3});
    std::atomic<long> residue_failures(0);
    parallel_for(static_cast<long>(box.size()), kJobs, [&](long i) {
        RationalityCertificate cert = decide_rationality(box[static_cast<size_t>(i)], false);
        Sqrt5 sum(0), ra, rb, rg, rd;
        bool ok = true;
        for (const auto& [name, val] : cert.residues) {
            sum = sum + val;
            if (name == "alpha") ra = val;
            if (name == "beta") rb = val;
            if (name == "gamma") rg = val;
            if (name == "delta") rd = val;
            if ((name == "0" || name == "1" || name == "-1" || name == "inf") && !(val.b == 0))
                ok = false;
        }
        if (!(sum.a == 0 && sum.b == 0)) ok = false;
        Sqrt5 ca = ra.conj(), cg = rg.conj();
        if (!(rb.a == ca.a && rb.b == ca.b && rd.a == cg.a && rd.b == cg.b)) ok = false;
        if (!ok) residue_failures.fetch_add(1);
    });
    if (residue_failures.load() != 0)
        return {false, std::to_string(residue_failures.load()) +
                           " triples violate the residue structure"};

    // dual oracle: exact decider vs integrality of the scaled antiderivative,
    // over the +/-2 box, every rational +/-6 triple, and a seeded +/-6 sample
    std::set<std::array<long, 4>> domain;
    for (long a1 = -2; a1 <= 2; ++a1)
        for (long a2 = -2; a2 <= 2; ++a2)
            for (long a3 = -2; a3 <= 2; ++a3)
                if (!(a1 == 0 && a2 == 0 && a3 == 0))
                    domain.insert({-(a1 + a2 + a3), a1, a2, a3});
    for (const ParamExponents& a : scan_a(6, kJobs)) domain.insert({a[0], a[1], a[2], a[3]});
    std::mt19937 rng(20260819u);
    std::uniform_int_distribution<long> pick(-6, 6);
    while (domain.size() < 244) {
        long a1 = pick(rng), a2 = pick(rng), a3 = pick(rng);
        if (a1 == 0 && a2 == 0 && a3 == 0) continue;
        domain.insert({-(a1 + a2 + a3), a1, a2, a3});
    }
    std::vector<std::array<long, 4>> rows(domain.begin(), domain.end());
    std::atomic<long> disagreements(0);
    parallel_for(static_cast<long>(rows.size()), kJobs, [&](long i) {
        const std::array<long, 4>& r = rows[static_cast<size_t>(i)];
        ParamExponents a{r[0], r[1], r[2], r[3]};
        bool decider = decide_rationality(a, false).rational;
        bool divisibility = false;
        try {
            minimal_multiplier(a_to_e(a), Int(27720), 500);
            divisibility = true;
        } catch (const std::exception&) {
            divisibility = false;
        }
        if (decider != divisibility) disagreements.fetch_add(1);
    });
    if (disagreements.load() != 0)
        return {false, std::to_string(disagreements.load()) + " of " +
                           std::to_string(rows.size()) + " oracle comparisons disagree"};
    return {true, ""};
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <etaforge-cli> <source-dir> [--long]\n");
        return 2;
    }
    std::string cli = argv[1];
    std::string src = argv[2];
    bool run_long = argc > 3 && std::string(argv[3]) == "--long";

    struct Criterion {
        int number;
        const char* name;
        double budget_seconds; // 0 = no budget
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "scan-box-reproduction", 60.0, [&] { return scan_box_golden(cli, src); }},
        {2, "full-range-scan", 0.0, [&] { return scan_box_full(cli, src); }},
        {3, "multiplier-search", 0.0, [] { return search_multiplier_bounds(); }},
        {4, "derivative-identities", 0.0, [] { return suites_pass({{"tables89", 400}}); }},
        {5, "parametrization", 0.0, [] { return suites_pass({{"rp", 400}}); }},
        {6, "lambert-identities", 0.0, [] { return suites_pass({{"section1", 1000}}); }},
        {7, "integral-identities-and-tables", 0.0,
         [] { return suites_pass({{"t1", 600}, {"table1", 60}, {"table2", 100}}); }},
        {8, "polynomial-lemmas-and-limits", 0.0,
         [] { return suites_pass({{"lemmas", 0}, {"limits", 0}}); }},
        {9, "special-values", 120.0, [] { return special_values(); }},
        {10, "property-suites", 0.0, [] { return property_suites(); }},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        if (cr.number == 2 && !run_long) {
            std::printf("SKIP %2d %-32s (long; pass --long to run)\n", cr.number, cr.name);
            continue;
        }
        auto t0 = Clock::now();
        Outcome result;
        try {
            result = cr.run();
        } catch (const std::exception& ex) {
            result = {false, std::string("exception: ") + ex.what()};
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        if (result.pass && cr.budget_seconds > 0 && elapsed > cr.budget_seconds) {
            result.pass = false;
            result.detail = "over the " + std::to_string(static_cast<long>(cr.budget_seconds)) +
                            "s budget";
        }
        if (result.pass) {
            std::printf("PASS %2d %-32s (%.1fs)\n", cr.number, cr.name, elapsed);
        } else {
            ++failures;
            std::printf("FAIL %2d %-32s (%.1fs) %s\n", cr.number, cr.name, elapsed,
                        result.detail.c_str());
        }
        std::fflush(stdout);
    }
    if (failures != 0) std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
