#pragma once
#include <array>
#include <string>
#include <vector>

#include "field5.hpp"
#include "kernel10.hpp"
#include "qseries.hpp"

namespace etaforge {

// binomial coefficient by the falling-factorial definition, so the upper
// index may be negative: binomial(-1, 3) = -1
Int binomial(long u, long k);

// named coefficient rules; "s:" tags give the series-in-w coefficients
// ("s:5", "s:6A", "s:6B", "s:6C", "s:8", "s:9"), "T:" tags the series-in-X
// coefficients ("T:1".."T:5", "T:6A", "T:6B", "T:6C", "T:7".."T:10")
Int coefficient_rule(const std::string& tag, long n);

// (alpha, beta, gamma) for the three-term recurrence
// (n+1)^3 s(n+1) = -(2n+1)(alpha n^2 + alpha n + alpha - 2 beta) s(n)
//                  - (alpha^2 + 4 gamma) n^3 s(n-1)
struct RecurrenceConstants {
    long alpha = 0, beta = 0, gamma = 0;
};
RecurrenceConstants recurrence_constants(const std::string& tag);

// x, w, y with w = x/(1 - alpha x - gamma x^2), y = q dlog x, y = sum s(n) w^n
struct XwyRow {
    PuiseuxSeries x, w, y;
};
XwyRow table1_series(const std::string& tag, long terms);

// w, X, Z with q dlog w = Z and Z = sum T(n) X^n
struct WxzRow {
    PuiseuxSeries w, X, Z;
};
WxzRow table2_series(const std::string& tag, long terms);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

CheckResult verify_table1_row(const std::string& tag, long terms);
// the six antiderivative identities behind the classical integral values
CheckResult verify_integral_identity(int index, long terms);
CheckResult verify_table2_row(const std::string& tag, long terms);

// terminating 2F1(a, b; c; x) for integer b <= 0
Rat hyp2f1_terminating(long a, long b, long c, const Rat& x);

// the binomial double sum g(z) in its equivalent polynomial forms
// ("g1", "g2", "g3", "g4", "gfinal") and its closed form ("closed");
// dense coefficients in z, trailing zeros trimmed
std::vector<Rat> g_form_polynomial(long n, const std::string& form);

// n! times the n-th Taylor coefficient at k = alpha of
// (k-gamma)^n (k-delta)^n / (k-beta)^{n+1}; requires pairwise distinct
// entries with (alpha+beta)(gamma+delta) = 2(alpha beta + gamma delta)
Sqrt5 quartet_limit_taylor(const Sqrt5& alpha, const Sqrt5& beta, const Sqrt5& gamma,
                           const Sqrt5& delta, long n);
Sqrt5 quartet_limit_closed(const Sqrt5& alpha, const Sqrt5& beta, const Sqrt5& gamma,
                           const Sqrt5& delta, long n);

// variant with expansion point 2ab/(a+b) for (x-a)^n (x-b)^n / x^{n+1}
Sqrt5 pole_limit_taylor(const Sqrt5& a, const Sqrt5& b, long n);
Sqrt5 pole_limit_closed(const Sqrt5& a, const Sqrt5& b, long n);

// deterministic rational quartets satisfying the quartet relation
std::vector<std::array<Sqrt5, 4>> random_rational_quartets(int count, unsigned seed);

// parameter vector of a closed-form row by label: "1.0".."12" for the
// printed rows, "<family>.<m>" for family members
ParamExponents row_parameters(const std::string& label);

// suites: section1, table1, table2, t1, lemmas, limits, rp, tables89, all;
// terms_override > 0 replaces each series check's default truncation
std::vector<CheckResult> run_suite(const std::string& name, long terms_override = 0,
                                   int jobs = 1);
std::string suite_report_to_json(const std::string& suite,
                                 const std::vector<CheckResult>& checks);

} // namespace etaforge
