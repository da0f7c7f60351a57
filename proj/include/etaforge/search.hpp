#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kernel10.hpp"

namespace etaforge {

// integer coefficients of the eta quotient q^w prod E(q^d)^{e_d}:
// returns (w, coefficients of q^w .. q^{end-1}); requires 24 | weight
std::pair<long, std::vector<Int>> integer_eta_expansion(const EtaExponents& e, long end);

struct DivisibilityResult {
    bool pass = false;
    std::optional<long> failing_exponent;
    // conditions restricted to prime exponents coprime to b
    bool prime_stress = false;
};

// pass iff b*u(q) has no constant term and j | b*c(j) for every nonzero
// exponent j in [w, n)
DivisibilityResult divisibility_test(const EtaExponents& e, const Int& b, long n);

// smallest divisor of b_bound passing divisibility_test at truncation n
Int minimal_multiplier(const EtaExponents& e, const Int& b_bound, long n);

struct SearchHit {
    EtaExponents e{};
    std::optional<ParamExponents> a;
    Int minimal_b;
    long truncation = 0;
    std::string status; // "certified" or "candidate"
};

// enumerate admissible |e_d| <= e_max, filter by divisibility with
// multiplier b at truncation n, certify via the exact decider;
// lexicographic in e
std::vector<SearchHit> search_level10(long e_max, const Int& b, long n, int jobs = 1);

// all (a1,a2,a3) in [-range, range]^3 whose integral is rational,
// lexicographic; a0 = -(a1+a2+a3)
std::vector<ParamExponents> scan_a(long range, int jobs = 1);

std::string search_hit_to_json(const SearchHit& hit);

} // namespace etaforge
