#pragma once
#include <gmpxx.h>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace etaforge {

using Int = mpz_class;
using Rat = mpq_class;

// Truncated q-series with a rational leading exponent ("offset") and dense
// exact-rational coefficients for exponents offset, offset+1, ..., offset+N-1.
// Exponents below the offset are exactly zero; exponents at or beyond
// offset+N are unknown. Normal form: the leading stored coefficient is
// nonzero, or the series is the canonical zero (no coefficients, offset 0).
class PuiseuxSeries {
  public:
    PuiseuxSeries() = default;
    PuiseuxSeries(Rat offset, std::vector<Rat> coeffs);

    static PuiseuxSeries zero();
    static PuiseuxSeries constant(const Rat& value, long terms);
    static PuiseuxSeries monomial(const Rat& coeff, const Rat& exponent, long terms);

    bool is_zero() const { return c_.empty(); }
    const Rat& offset() const { return off_; }
    long truncation() const { return static_cast<long>(c_.size()); }
    const std::vector<Rat>& coefficients() const { return c_; }
    // exponent of first unknown coefficient
    Rat window_end() const { return off_ + truncation(); }

    // coefficient of q^e; 0 below the window, InsufficientTruncation at or
    // beyond the truncation point
    Rat coefficient(const Rat& e) const;

    PuiseuxSeries truncated(long terms) const;

    friend PuiseuxSeries operator-(const PuiseuxSeries& a);
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const Rat& s, const PuiseuxSeries& a);

    PuiseuxSeries pow(long n) const;
    // exact rational power; the leading coefficient must have an exact
    // rational root of the required order (NonUnitLeadingCoefficient)
    PuiseuxSeries pow(const Rat& alpha) const;

    // q d/dq
    PuiseuxSeries q_derivative() const;
    // integral of f dq/q: q^n -> q^n/n; ConstantTermPresent if a q^0 term is
    // present, NonIntegerExponent unless all exponents are integers
    PuiseuxSeries antiderivative_dq_over_q() const;

    // substitute q -> q^t, t >= 1
    PuiseuxSeries dilated(long t) const;

    bool operator==(const PuiseuxSeries& b) const;
    // first exponent (within the common window) where coefficients differ
    std::pair<bool, Rat> first_mismatch(const PuiseuxSeries& b) const;

    std::string to_string(long max_terms = 12) const;

  private:
    void normalize();

    Rat off_;
    std::vector<Rat> c_;
};

// E(q^d) = prod_{j>=1} (1 - q^{d j}), by the pentagonal number theorem
PuiseuxSeries euler_product(long d, long terms);

// q^{sum d e_d / 24} prod_d E(q^d)^{e_d}
PuiseuxSeries eta_quotient(const std::map<long, long>& exponents, long terms);

// q^{prefix} prod_{j>=1} prod_{(r,e)} (1 - q^{m j - r})^{e}
PuiseuxSeries generalized_eta_product(long m, const std::vector<std::pair<long, long>>& factors,
                                      const Rat& prefix, long terms);

// sum_{j>=1} j^s q^{c j} / (1 - q^{c j})
PuiseuxSeries lambert_sum(long s, long c, long terms);

// 1 - 5 sum_{j>=1} chi(j) j q^j/(1-q^j), chi the quadratic character mod 5
PuiseuxSeries legendre_lambert_5(long terms);

// Q = 1 + 240 sum j^3 q^j/(1-q^j),  R = 1 - 504 sum j^5 q^j/(1-q^j)
PuiseuxSeries eisenstein_q(long terms);
PuiseuxSeries eisenstein_r(long terms);

// exact rational n-th root; (found, root)
std::pair<bool, Rat> rational_root(const Rat& v, unsigned long n);

} // namespace etaforge
