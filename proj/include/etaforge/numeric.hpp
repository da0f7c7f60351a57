#pragma once

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "etaforge/field5.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge {

// Arbitrary-precision binary floating point value.  Every value carries its
// own precision; arithmetic results use the larger precision of the two
// operands, so precision never degrades silently.  There is no ambient
// global precision.
class BigFloat {
  public:
    explicit BigFloat(long precision_bits = 256);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_long(long value, long precision_bits = 256);
    static BigFloat from_rat(const Rat& value, long precision_bits = 256);
    static BigFloat pi(long precision_bits);

    long precision() const;
    bool is_zero() const;
    int sign() const;

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    // principal square root; negative operand is a domain error
    static BigFloat sqrt(const BigFloat& x);
    static BigFloat exp(const BigFloat& x);
    // x^e for positive x and rational e
    BigFloat pow_rat(const Rat& e) const;
    BigFloat pow_long(long e) const;
    BigFloat abs() const;

    int cmp(const BigFloat& other) const;
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }

    double to_double() const;
    // scientific notation with the given number of significant digits
    std::string to_string(long digits = 50) const;

    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }

  private:
    mpfr_t value_;
};

// sqrt(n/d) for a nonnegative rational radicand, at the given precision
BigFloat sqrt_rat(const Rat& radicand, long precision_bits);

// Numerical value of a truncated series at a real point together with a
// certified estimate of the discarded tail.  The tail estimate comes from a
// geometric envelope fitted to the last 20 retained coefficients: with
// A = max |c_i| over the window and B the per-step geometric slope between
// the maxima of the window's two halves (clamped to at least 1), the tail
// is modeled as q0^offset * A * B * q0^N / (1 - B*q0), assuming
// |c_n| <= A * B^(n-N+1) for n >= N.  If B*q0 >= 1 the envelope diverges
// and the evaluation throws InsufficientTruncation.
struct SeriesEval {
    BigFloat value;
    BigFloat tail_bound;
};

// pre: 0 < q0 < 1; result precision follows q0
SeriesEval eval_series(const PuiseuxSeries& s, const BigFloat& q0);

// Both routes to the value of one antiderivative row at q0 = exp(-2*pi/sqrt(10)):
// first the truncated antiderivative series evaluated numerically, second the
// closed form g(k0) - g(0) with g the exact rational antiderivative in k and
// k0 = sqrt(10 + 4*sqrt(5)) - 2 - sqrt(5).  Labels name either a printed row
// ("1.0", "5", ..., "12") or a family member ("3.1" is family 3 at m = 1).
// Rows whose integrand diverges at 0 throw NotIntegrableAtZero.
std::pair<BigFloat, BigFloat> ramanujan_fine_value(const std::string& label,
                                                   long precision_bits = 256);

// Adaptive Gauss-Legendre value of the integral of u over [0, q0].  The node
// count doubles until two successive values agree to tolerance/10; if that
// never happens before the node budget is spent, throws ToleranceNotMet.
// pre: u has offset > -1 (else the integral diverges at 0)
BigFloat quadrature_check(const PuiseuxSeries& u, const BigFloat& q0, const BigFloat& tolerance);

struct NumericCheck {
    std::string check;
    BigFloat lhs;
    BigFloat rhs;
    BigFloat abs_error;
    BigFloat tolerance;
    bool pass = false;
};

struct NumericReport {
    long precision_bits = 256;
    std::vector<NumericCheck> entries;
    bool all_pass() const;
};

// The four checks behind the special value k(exp(-2*pi/sqrt(10))):
//   (i)   [k/(1+k-k^2)] * [(1-k^2)/(1-4k-k^2)] = 1/5          (to 1e-30)
//   (ii)  1/k - k = 4 + 2*sqrt(5)                             (to 1e-30)
//   (iii) 0 < k < sqrt(5) - 2                                 (strict)
//   (iv)  series value of k agrees with sqrt(10+4*sqrt(5))-2-sqrt(5) (to 1e-60)
NumericReport appendix_k_certificate(long precision_bits = 256);

// One displayed special value of a classical integral: the evaluation point
// and the closed form the antiderivative takes there.
struct IntegralSpecialValue {
    std::string name;
    BigFloat q0;
    BigFloat closed;
};

// indices 1..6; the displayed values of integral 2, 3, 4 cover three points
std::vector<IntegralSpecialValue> integral_special_values(int index, long precision_bits = 256);

// eta-form antiderivative of one classical integral (offset 1 in q)
PuiseuxSeries integral_antiderivative_series(int index, long terms);
// matching integrand with the offset shifted to 0, ready for quadrature
PuiseuxSeries integral_integrand_series(int index, long terms);

// Named special values for the eval command.  Accepts:
//   k, u, fine0, integral1 ... integral6, row:<label>
// Each entry compares a series-route value against its closed form.
NumericReport evaluate_special(const std::string& what, long precision_bits = 256);

std::string numeric_report_to_json(const NumericReport& report);

}  // namespace etaforge
