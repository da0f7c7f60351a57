#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field5.hpp"
#include "qseries.hpp"

namespace etaforge {

// exponents (e1, e2, e5, e10) of an eta quotient of level 10
using EtaExponents = std::array<long, 4>;
// exponents (a0, a1, a2, a3) of the k-side integrand
// f(k) = k^{a0-1} (1-k^2)^{a1} (1+k-k^2)^{a2} (1-4k-k^2)^{a3}
using ParamExponents = std::array<long, 4>;

bool is_admissible(const EtaExponents& e);

std::array<Rat, 4> e_to_a_exact(const EtaExponents& e);
// throws NonIntegralParams when the linear formulas are non-integral
ParamExponents e_to_a(const EtaExponents& e);
EtaExponents a_to_e(const ParamExponents& a);

struct FamilyRow {
    EtaExponents e;
    ParamExponents a;
};
// the four one-parameter families; m >= 0, m = 0 gives the base rows
FamilyRow family_exponents(int family, long m);

// k(q) = r(q) r(q^2)^2, offset 1
PuiseuxSeries k_series(long terms);
// Rogers-Ramanujan continued fraction r(q), offset 1/5
PuiseuxSeries r_series(long terms);
// y10 = q dlog k / dq = eta1 eta2^2 eta5^3 / eta10^2
PuiseuxSeries y10_series(long terms);
// eta quotient with the given exponent vector
PuiseuxSeries eta_exponent_series(const EtaExponents& e, long terms);

struct RationalityCertificate {
    ParamExponents a{};
    bool rational = false;
    // residues at k = 0, 1, -1, alpha, beta, gamma, delta and at infinity
    std::vector<std::pair<std::string, Sqrt5>> residues;
    std::optional<RationalFunction5> g;
};

RationalFunction5 integrand_k_form(const ParamExponents& a);

// exact rationality decision for the antiderivative of f(k) dk; when
// rational and with_g, the certificate carries g with derivative(g) = f
RationalityCertificate decide_rationality(const ParamExponents& a, bool with_g = true);

// exact yes/no with a fast modular prefilter; agrees with decide_rationality
bool is_rational_quick(const ParamExponents& a);

// lhs = eta_d^24, rhs = y10^6 times the stated rational function of k
std::pair<PuiseuxSeries, PuiseuxSeries> rp_identity_series(int index, long terms);

// q-expansion of g(k(q)); g must have rational coefficients
PuiseuxSeries compose_rational_with_k(const RationalFunction5& g, long terms);

std::string certificate_to_json(const RationalityCertificate& cert);

} // namespace etaforge
