#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etaforge/errors.hpp"
#include "etaforge/kernel10.hpp"
#include "etaforge/numeric.hpp"
#include "etaforge/qseries.hpp"
#include "etaforge/search.hpp"
#include "etaforge/verify.hpp"

namespace {

using namespace etaforge;

struct RunConfig {
    long truncation = 400;
    long e_max = 19;
    long b_bound = 27720;
    long range = 10;
    long precision = 256;
    std::string output;
    std::string suite = "all";
    int jobs = 1;
};

std::string trimmed(const std::string& text) {
    size_t l = text.find_first_not_of(" \t\r");
    if (l == std::string::npos) return "";
    size_t r = text.find_last_not_of(" \t\r");
    return text.substr(l, r - l + 1);
}

long parse_positive(const std::string& key, const std::string& value) {
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || v <= 0)
        throw std::runtime_error("config: " + key + " needs a positive integer, got '" + value +
                                 "'");
    return v;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;
        size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     " is not key=value");
        std::string key = trimmed(body.substr(0, eq));
        std::string value = trimmed(body.substr(eq + 1));
        if (key == "truncation")
            cfg.truncation = parse_positive(key, value);
        else if (key == "e_max")
            cfg.e_max = parse_positive(key, value);
        else if (key == "b_bound")
            cfg.b_bound = parse_positive(key, value);
        else if (key == "range")
            cfg.range = parse_positive(key, value);
        else if (key == "precision")
            cfg.precision = parse_positive(key, value);
        else if (key == "jobs")
            cfg.jobs = static_cast<int>(parse_positive(key, value));
        else if (key == "output")
            cfg.output = value;
        else if (key == "suite")
            cfg.suite = value;
        else
            throw std::runtime_error("config: unknown key '" + key + "'");
    }
}

std::vector<long> parse_tuple(const std::string& text, size_t count, const std::string& flag) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(trimmed(part), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != trimmed(part).size())
            throw std::runtime_error(flag + ": '" + part + "' is not an integer");
        out.push_back(v);
    }
    if (out.size() != count)
        throw std::runtime_error(flag + " needs " + std::to_string(count) +
                                 " comma-separated integers");
    return out;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int run_expand(const std::string& e_text, long terms, bool as_json, std::string& out) {
    std::vector<long> v = parse_tuple(e_text, 4, "--e");
    EtaExponents e{v[0], v[1], v[2], v[3]};
    PuiseuxSeries s = eta_exponent_series(e, terms);
    if (as_json) {
        nlohmann::json doc;
        doc["e"] = e;
        doc["offset"] = rat_str(s.offset());
        doc["terms"] = terms;
        std::vector<std::string> coeffs;
        coeffs.reserve(s.coefficients().size());
        for (const Rat& c : s.coefficients()) coeffs.push_back(rat_str(c));
        doc["coefficients"] = coeffs;
        out = doc.dump(2) + "\n";
    } else {
        std::ostringstream text;
        for (size_t i = 0; i < s.coefficients().size(); ++i) {
            Rat ex = s.offset() + Rat(static_cast<long>(i));
            text << rat_str(ex) << " " << rat_str(s.coefficients()[i]) << "\n";
        }
        out = text.str();
    }
    return 0;
}

int run_search(long e_max, const Int& b, long terms, int jobs, std::string& out) {
    std::vector<SearchHit> hits = search_level10(e_max, b, terms, jobs);
    std::ostringstream text;
    for (const SearchHit& hit : hits) text << search_hit_to_json(hit) << "\n";
    out = text.str();
    return 0;
}

std::set<std::array<long, 3>> golden_triples(const std::string& golden_path, long range) {
    std::ifstream in(golden_path);
    if (!in) throw std::runtime_error("cannot open golden tables at " + golden_path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::set<std::array<long, 3>> expected;
    auto in_box = [range](const std::array<long, 3>& t) {
        return std::abs(t[0]) <= range && std::abs(t[1]) <= range && std::abs(t[2]) <= range;
    };
    for (const auto& row : doc.at("table8")) {
        std::array<long, 3> t{row.at("a").at(1).get<long>(), row.at("a").at(2).get<long>(),
                              row.at("a").at(3).get<long>()};
        if (in_box(t)) expected.insert(t);
    }
    for (const auto& fam : doc.at("table9")) {
        for (long m = 0;; ++m) {
            std::array<long, 3> t;
            bool inside = true;
            for (int i = 0; i < 3; ++i) {
                t[static_cast<size_t>(i)] = fam.at("a_base").at(i + 1).get<long>() +
                                            m * fam.at("a_step").at(i + 1).get<long>();
            }
            inside = in_box(t);
            if (!inside) break;
            expected.insert(t);
        }
    }
    return expected;
}

int run_scan(long range, int jobs, const std::string& golden_path, std::string& out) {
    std::vector<ParamExponents> got = scan_a(range, jobs);
    std::set<std::array<long, 3>> found;
    std::ostringstream text;
    text << "scan-a range=" << range << "\n";
    for (const ParamExponents& a : got) {
        found.insert({a[1], a[2], a[3]});
        text << a[1] << "," << a[2] << "," << a[3] << "\n";
    }
    std::set<std::array<long, 3>> expected = golden_triples(golden_path, range);
    std::vector<std::array<long, 3>> missing, unexpected;
    for (const auto& t : expected)
        if (!found.count(t)) missing.push_back(t);
    for (const auto& t : found)
        if (!expected.count(t)) unexpected.push_back(t);
    text << "found " << found.size() << " expected " << expected.size() << "\n";
    for (const auto& t : missing)
        text << "missing " << t[0] << "," << t[1] << "," << t[2] << "\n";
    for (const auto& t : unexpected)
        text << "unexpected " << t[0] << "," << t[1] << "," << t[2] << "\n";
    bool clean = missing.empty() && unexpected.empty();
    text << (clean ? "EMPTY-DIFF" : "DIFF") << "\n";
    out = text.str();
    return clean ? 0 : 1;
}

int run_integrate(const std::string& a_text, std::string& out) {
    std::vector<long> v = parse_tuple(a_text, 3, "--a");
    ParamExponents a{-(v[0] + v[1] + v[2]), v[0], v[1], v[2]};
    RationalityCertificate cert = decide_rationality(a, true);
    out = certificate_to_json(cert) + "\n";
    return 0;
}

int run_verify(const std::string& suite, long terms_override, int jobs, std::string& out) {
    std::vector<CheckResult> checks = run_suite(suite, terms_override, jobs);
    out = suite_report_to_json(suite, checks) + "\n";
    for (const CheckResult& c : checks)
        if (!c.pass) return 1;
    return 0;
}

int run_eval(const std::string& what, long precision, std::string& out) {
    NumericReport report = evaluate_special(what, precision);
    out = numeric_report_to_json(report) + "\n";
    return report.all_pass() ? 0 : 1;
}

int deliver(const std::string& out, const std::string& path) {
    if (path.empty()) {
        std::cout << out;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    file << out;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for level-10 eta quotients and their antiderivatives"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_flag;
    int jobs_flag = 0;
    app.add_option("--config", config_path, "line-oriented key=value configuration file");
    app.add_option("--output", output_flag, "write output to this file instead of stdout");
    app.add_option("--jobs", jobs_flag, "worker thread count (default 1)");

    auto* expand = app.add_subcommand("expand", "print the q-expansion of an eta quotient");
    std::string e_text;
    long terms_flag = 0;
    bool as_json = false;
    expand->add_option("--e", e_text, "exponents of eta(q),eta(q^2),eta(q^5),eta(q^10)")
        ->required();
    expand->add_option("--terms", terms_flag, "number of coefficients");
    expand->add_flag("--json", as_json, "emit a JSON document");

    auto* search = app.add_subcommand("search", "search exponent vectors with integer "
                                                "antiderivatives after a multiplier");
    long emax_flag = 0;
    std::string b_flag;
    long search_terms_flag = 0;
    bool deep = false;
    search->add_option("--emax", emax_flag, "bound on |e_i|");
    search->add_option("--b", b_flag, "multiplier bound (its divisors are tried)");
    search->add_option("--terms", search_terms_flag, "divisibility truncation");
    search->add_flag("--deep", deep, "double the divisibility truncation");

    auto* scan = app.add_subcommand("scan-a", "scan parameter triples and compare against the "
                                              "golden tables");
    long range_flag = 0;
    std::string golden_path = "data/golden_tables.json";
    scan->add_option("--range", range_flag, "half-width of the parameter box");
    scan->add_option("--golden", golden_path, "path to the golden tables JSON");

    auto* integrate = app.add_subcommand("integrate-k", "decide rationality of a k-integrand and "
                                                        "print its certificate");
    std::string a_text;
    integrate->add_option("--a", a_text, "parameter triple a1,a2,a3")->required();

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite_flag;
    long verify_terms_flag = 0;
    verify->add_option("--suite", suite_flag,
                       "all|section1|table1|table2|t1|lemmas|limits|rp|tables89");
    verify->add_option("--terms", verify_terms_flag, "override each check's truncation");

    auto* eval = app.add_subcommand("eval", "evaluate a named special value numerically");
    std::string what;
    long prec_flag = 0;
    eval->add_option("--what", what, "k|u|fine0|row:<label>|integral1..integral6")->required();
    eval->add_option("--prec", prec_flag, "precision in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        RunConfig cfg;
        if (const char* env = std::getenv("ETAFORGE_PREC"))
            cfg.precision = parse_positive("ETAFORGE_PREC", env);
        if (!config_path.empty()) load_config_file(config_path, cfg);
        if (jobs_flag > 0) cfg.jobs = jobs_flag;
        if (!output_flag.empty()) cfg.output = output_flag;
        if (cfg.truncation <= 0 || cfg.e_max <= 0 || cfg.b_bound <= 0 || cfg.range <= 0 ||
            cfg.precision <= 0 || cfg.jobs <= 0)
            throw std::runtime_error("config: all bounds must be positive");

        std::string out;
        int rc = 0;
        if (expand->parsed()) {
            long terms = terms_flag > 0 ? terms_flag : cfg.truncation;
            rc = run_expand(e_text, terms, as_json, out);
        } else if (search->parsed()) {
            long e_max = emax_flag > 0 ? emax_flag : cfg.e_max;
            Int b = b_flag.empty() ? Int(cfg.b_bound) : Int(b_flag);
            long terms = search_terms_flag > 0 ? search_terms_flag : cfg.truncation;
            if (deep) terms *= 2;
            rc = run_search(e_max, b, terms, cfg.jobs, out);
        } else if (scan->parsed()) {
            long range = range_flag > 0 ? range_flag : cfg.range;
            rc = run_scan(range, cfg.jobs, golden_path, out);
        } else if (integrate->parsed()) {
            rc = run_integrate(a_text, out);
        } else if (verify->parsed()) {
            std::string suite = suite_flag.empty() ? cfg.suite : suite_flag;
            rc = run_verify(suite, verify_terms_flag, cfg.jobs, out);
        } else if (eval->parsed()) {
            long prec = prec_flag > 0 ? prec_flag : cfg.precision;
            rc = run_eval(what, prec, out);
        }
        int io = deliver(out, cfg.output);
        return rc != 0 ? rc : io;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
