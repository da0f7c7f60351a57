#include "etaforge/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "etaforge/errors.hpp"
#include "etaforge/kernel10.hpp"
#include "etaforge/verify.hpp"

namespace etaforge {

BigFloat::BigFloat(long precision_bits) {
    if (precision_bits < MPFR_PREC_MIN) precision_bits = MPFR_PREC_MIN;
    mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_long(long value, long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_set_si(out.value_, value, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from_rat(const Rat& value, long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_set_q(out.value_, value.get_mpq_t(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pi(long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
}

long BigFloat::precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

int BigFloat::sign() const { return mpfr_sgn(value_); }

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DivisionByZero("BigFloat division by zero");
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt(const BigFloat& x) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative value");
    BigFloat out(x.precision());
    mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::exp(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_exp(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow_rat(const Rat& e) const {
    if (sign() < 0) throw std::domain_error("rational power of a negative base");
    if (!e.get_den().fits_ulong_p()) throw std::domain_error("exponent denominator too large");
    BigFloat out(precision());
    mpfr_pow_z(out.value_, value_, e.get_num().get_mpz_t(), MPFR_RNDN);
    unsigned long den = e.get_den().get_ui();
    if (den != 1) mpfr_rootn_ui(out.value_, out.value_, den, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow_long(long e) const {
    BigFloat out(precision());
    mpfr_pow_si(out.value_, value_, e, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(precision());
    mpfr_abs(out.value_, value_, MPFR_RNDN);
    return out;
}

int BigFloat::cmp(const BigFloat& other) const { return mpfr_cmp(value_, other.value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(long digits) const {
    if (digits < 2) digits = 2;
    std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    std::vector<char> buf(static_cast<size_t>(digits) + 48);
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
    return std::string(buf.data());
}

BigFloat sqrt_rat(const Rat& radicand, long precision_bits) {
    if (radicand < 0) throw std::domain_error("square root of a negative radicand");
    return BigFloat::sqrt(BigFloat::from_rat(radicand, precision_bits));
}

namespace {

BigFloat bf(long v, long prec) { return BigFloat::from_long(v, prec); }

BigFloat pow10(long e, long prec) { return bf(10, prec).pow_long(e); }

// exp(-pi * c / sqrt(d))
BigFloat q_exp_point(const Rat& c, long d, long prec) {
    BigFloat arg = BigFloat::pi(prec) * BigFloat::from_rat(c, prec);
    if (d != 1) arg = arg / sqrt_rat(Rat(d), prec);
    return BigFloat::exp(-arg);
}

BigFloat q10_point(long prec) { return q_exp_point(Rat(2), 10, prec); }

// sqrt(10 + 4 sqrt(5)) - 2 - sqrt(5)
BigFloat k0_closed(long prec) {
    BigFloat s5 = sqrt_rat(Rat(5), prec);
    BigFloat inner = bf(10, prec) + bf(4, prec) * s5;
    return BigFloat::sqrt(inner) - bf(2, prec) - s5;
}

// plain Horner partial sum, no tail accounting; pre: t > 0
BigFloat horner_value(const PuiseuxSeries& s, const BigFloat& t) {
    long prec = t.precision();
    const std::vector<Rat>& c = s.coefficients();
    BigFloat acc(prec);
    for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i)
        acc = acc * t + BigFloat::from_rat(c[i], prec);
    if (s.offset() != 0) acc = acc * t.pow_rat(s.offset());
    return acc;
}

BigFloat eval_sqrt5(const Sqrt5& v, const BigFloat& s5, long prec) {
    return BigFloat::from_rat(v.a, prec) + BigFloat::from_rat(v.b, prec) * s5;
}

BigFloat eval_poly5(const Poly5& p, const BigFloat& x, const BigFloat& s5) {
    long prec = x.precision();
    BigFloat acc(prec);
    for (long i = p.degree(); i >= 0; --i) acc = acc * x + eval_sqrt5(p.coeff(i), s5, prec);
    return acc;
}

BigFloat eval_rational5(const RationalFunction5& f, const BigFloat& x) {
    long prec = x.precision();
    BigFloat s5 = sqrt_rat(Rat(5), prec);
    BigFloat den = eval_poly5(f.den, x, s5);
    if (den.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
    return eval_poly5(f.num, x, s5) / den;
}

void legendre_pair(long n, const BigFloat& x, BigFloat& pn, BigFloat& pn1) {
    long prec = x.precision();
    BigFloat p0 = bf(1, prec);
    BigFloat p1 = x;
    for (long j = 1; j < n; ++j) {
        BigFloat p2 = (bf(2 * j + 1, prec) * x * p1 - bf(j, prec) * p0) / bf(j + 1, prec);
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    pn = std::move(p1);
    pn1 = std::move(p0);
}

BigFloat legendre_node(long n, long i, long prec, BigFloat& weight_out) {
    BigFloat ang = BigFloat::pi(prec) * bf(4 * i + 3, prec) / bf(4 * n + 2, prec);
    BigFloat x(prec);
    mpfr_cos(x.raw(), ang.raw(), MPFR_RNDN);
    BigFloat one = bf(1, prec);
    BigFloat eps(prec);
    mpfr_set_ui_2exp(eps.raw(), 1, static_cast<mpfr_exp_t>(-(prec - 8)), MPFR_RNDN);
    BigFloat pn(prec), pn1(prec), dp(prec);
    for (int iter = 0; iter < 200; ++iter) {
        legendre_pair(n, x, pn, pn1);
        dp = bf(n, prec) * (x * pn - pn1) / (x * x - one);
        BigFloat dx = pn / dp;
        x = x - dx;
        if (dx.abs() <= eps) break;
    }
    legendre_pair(n, x, pn, pn1);
    dp = bf(n, prec) * (x * pn - pn1) / (x * x - one);
    weight_out = bf(2, prec) / ((one - x * x) * dp * dp);
    return x;
}

BigFloat gauss_value(const PuiseuxSeries& u, const BigFloat& q0, long n) {
    long prec = q0.precision();
    BigFloat one = bf(1, prec);
    BigFloat half_q = q0 / bf(2, prec);
    BigFloat sum(prec);
    for (long i = 0; 2 * i < n; ++i) {
        BigFloat w(prec);
        BigFloat x = legendre_node(n, i, prec, w);
        if (2 * i + 1 == n) {
            sum = sum + w * horner_value(u, half_q * (one + x));
        } else {
            sum = sum +
                  w * (horner_value(u, half_q * (one + x)) + horner_value(u, half_q * (one - x)));
        }
    }
    return half_q * sum;
}

void push_check(NumericReport& report, std::string name, BigFloat lhs, BigFloat rhs,
                BigFloat tolerance) {
    NumericCheck entry;
    entry.check = std::move(name);
    entry.abs_error = (lhs - rhs).abs();
    entry.lhs = std::move(lhs);
    entry.rhs = std::move(rhs);
    entry.pass = entry.abs_error <= tolerance;
    entry.tolerance = std::move(tolerance);
    report.entries.push_back(std::move(entry));
}

} // namespace

SeriesEval eval_series(const PuiseuxSeries& s, const BigFloat& q0) {
    long prec = q0.precision();
    BigFloat zero(prec);
    BigFloat one = bf(1, prec);
    if (!(q0 > zero) || !(q0 < one))
        throw std::invalid_argument("series evaluation needs 0 < q0 < 1");
    const std::vector<Rat>& c = s.coefficients();
    long n = static_cast<long>(c.size());
    if (n == 0) return {BigFloat(prec), BigFloat(prec)};
    BigFloat value = horner_value(s, q0);
    long w0 = std::max(0L, n - 20);
    long mid = std::max(w0, n - 10);
    Rat lead(0), trail(0);
    for (long i = w0; i < mid; ++i) {
        Rat m = abs(c[static_cast<size_t>(i)]);
        if (m > lead) lead = m;
    }
    for (long i = mid; i < n; ++i) {
        Rat m = abs(c[static_cast<size_t>(i)]);
        if (m > trail) trail = m;
    }
    Rat big = std::max(lead, trail);
    if (big == 0)
        for (long i = 0; i < n; ++i) {
            Rat m = abs(c[static_cast<size_t>(i)]);
            if (m > big) big = m;
        }
    BigFloat growth = one;
    if (lead != 0 && trail > lead)
        growth = BigFloat::from_rat(trail / lead, prec).pow_rat(Rat(1, n - mid));
    BigFloat ratio = growth * q0;
    if (!(ratio < one))
        throw InsufficientTruncation("coefficient growth envelope does not contract at this point");
    BigFloat tail = BigFloat::from_rat(big, prec) * growth * q0.pow_long(n) / (one - ratio);
    if (s.offset() != 0) tail = tail * q0.pow_rat(s.offset());
    return {std::move(value), tail.abs()};
}

std::pair<BigFloat, BigFloat> ramanujan_fine_value(const std::string& label, long precision_bits) {
    ParamExponents a = row_parameters(label);
    if (a[0] < 1) throw NotIntegrableAtZero("row " + label + " diverges at the origin");
    EtaExponents e = a_to_e(a);
    const long terms = 400;
    PuiseuxSeries anti = eta_exponent_series(e, terms).antiderivative_dq_over_q();
    BigFloat q0 = q10_point(precision_bits);
    SeriesEval sv = eval_series(anti, q0);
    if (sv.tail_bound > pow10(-60, precision_bits))
        throw InsufficientTruncation("tail bound exceeds the evaluation target for row " + label);
    RationalityCertificate cert = decide_rationality(a, true);
    if (!cert.rational || !cert.g)
        throw std::invalid_argument("row " + label + " has no rational antiderivative");
    BigFloat k0 = k0_closed(precision_bits);
    BigFloat closed =
        eval_rational5(*cert.g, k0) - eval_rational5(*cert.g, BigFloat(precision_bits));
    return {std::move(sv.value), std::move(closed)};
}

BigFloat quadrature_check(const PuiseuxSeries& u, const BigFloat& q0, const BigFloat& tolerance) {
    if (u.offset() <= Rat(-1)) throw std::invalid_argument("integrand diverges at the origin");
    if (q0.sign() <= 0) throw std::invalid_argument("upper limit must be positive");
    if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    BigFloat target = tolerance / bf(10, tolerance.precision());
    BigFloat prev = gauss_value(u, q0, 16);
    for (long n = 32; n <= 2048; n *= 2) {
        BigFloat cur = gauss_value(u, q0, n);
        if ((cur - prev).abs() <= target) return cur;
        prev = std::move(cur);
    }
    throw ToleranceNotMet("quadrature values do not settle at the requested tolerance");
}

bool NumericReport::all_pass() const {
    for (const NumericCheck& entry : entries)
        if (!entry.pass) return false;
    return true;
}

NumericReport appendix_k_certificate(long precision_bits) {
    NumericReport report;
    report.precision_bits = precision_bits;
    long prec = precision_bits;
    BigFloat one = bf(1, prec);
    BigFloat q0 = q10_point(prec);
    BigFloat k = eval_series(k_series(400), q0).value;
    BigFloat s5 = sqrt_rat(Rat(5), prec);

    BigFloat lhs1 = (k / (one + k - k * k)) * ((one - k * k) / (one - bf(4, prec) * k - k * k));
    push_check(report, "k-multiplier-product", lhs1, BigFloat::from_rat(Rat(1, 5), prec),
               pow10(-30, prec));

    push_check(report, "u-value", one / k - k, bf(4, prec) + bf(2, prec) * s5, pow10(-30, prec));

    NumericCheck range;
    range.check = "k-range";
    range.lhs = k;
    range.rhs = s5 - bf(2, prec);
    range.tolerance = BigFloat(prec);
    if (k.sign() <= 0) {
        range.abs_error = k.abs();
        range.pass = false;
    } else if (!(k < range.rhs)) {
        range.abs_error = k - range.rhs;
        range.pass = false;
    } else {
        range.abs_error = BigFloat(prec);
        range.pass = true;
    }
    report.entries.push_back(std::move(range));

    push_check(report, "k-closed-form", k, k0_closed(prec), pow10(-60, prec));
    return report;
}

PuiseuxSeries integral_antiderivative_series(int index, long terms) {
    switch (index) {
        case 1: return r_series(terms).pow(5);
        case 2: return eta_quotient({{2, 1}, {6, 5}, {1, -5}, {3, -1}}, terms);
        case 3: return eta_quotient({{1, 4}, {6, 8}, {2, -8}, {3, -4}}, terms);
        case 4: return eta_quotient({{1, 3}, {6, 9}, {2, -3}, {3, -9}}, terms);
        case 5: return eta_quotient({{2, 2}, {8, 4}, {1, -4}, {4, -2}}, terms);
        case 6: return eta_quotient({{9, 3}, {1, -3}}, terms);
        default: throw std::invalid_argument("integral index must be 1..6");
    }
}

PuiseuxSeries integral_integrand_series(int index, long terms) {
    PuiseuxSeries q = PuiseuxSeries::monomial(Rat(1), Rat(1), terms);
    switch (index) {
        case 1: return eta_quotient({{1, 5}, {5, -1}}, terms) * r_series(terms).pow(5) / q;
        case 2: return eta_quotient({{2, 8}, {3, 6}, {1, -10}}, terms) / q;
        case 3: return eta_quotient({{1, 8}, {6, 6}, {2, -10}}, terms) / q;
        case 4: return eta_quotient({{1, 6}, {6, 8}, {3, -10}}, terms) / q;
        case 5: return eta_quotient({{2, 8}, {4, 4}, {1, -8}}, terms) / q;
        case 6: return eta_quotient({{3, 10}, {1, -6}}, terms) / q;
        default: throw std::invalid_argument("integral index must be 1..6");
    }
}

std::vector<IntegralSpecialValue> integral_special_values(int index, long precision_bits) {
    long prec = precision_bits;
    BigFloat one = bf(1, prec);
    BigFloat two = bf(2, prec);
    BigFloat s2 = sqrt_rat(Rat(2), prec);
    BigFloat s3 = sqrt_rat(Rat(3), prec);
    BigFloat s6 = sqrt_rat(Rat(6), prec);
    std::vector<IntegralSpecialValue> out;
    auto add = [&out](std::string name, BigFloat q0, BigFloat closed) {
        out.push_back({std::move(name), std::move(q0), std::move(closed)});
    };
    switch (index) {
        case 1: {
            BigFloat alpha = (one + sqrt_rat(Rat(5), prec)) / two;
            BigFloat a5 = alpha.pow_long(5);
            add("integral1", q_exp_point(Rat(2), 5, prec), BigFloat::sqrt(a5 * a5 + one) - a5);
            break;
        }
        case 2:
            add("integral2-at-sqrt6", q_exp_point(Rat(2), 6, prec), s2 / bf(12, prec));
            add("integral2-at-sqrt3", q_exp_point(Rat(2), 3, prec), (s3 - one) / bf(24, prec));
            add("integral2-at-sqrt2", q_exp_point(Rat(2), 2, prec), (s6 - two) / bf(36, prec));
            break;
        case 3:
            add("integral3-at-sqrt6", q_exp_point(Rat(2), 6, prec),
                (s2 - one) * (s2 - one) / bf(3, prec));
            add("integral3-at-sqrt3", q_exp_point(Rat(2), 3, prec),
                (two - s3) * (two - s3) / bf(3, prec));
            add("integral3-at-sqrt2", q_exp_point(Rat(2), 2, prec),
                (s6 - two) * (s6 - two) / bf(18, prec));
            break;
        case 4:
            add("integral4-at-sqrt6", q_exp_point(Rat(2), 6, prec),
                (bf(3, prec) * s2 - bf(4, prec)) / bf(4, prec));
            add("integral4-at-sqrt3", q_exp_point(Rat(2), 3, prec),
                (s3 - one).pow_long(3) / bf(16, prec));
            add("integral4-at-sqrt2", q_exp_point(Rat(2), 2, prec),
                (s6 - two).pow_long(3) / bf(8, prec));
            break;
        case 5:
            add("integral5", q_exp_point(Rat(1), 2, prec), one / sqrt_rat(Rat(32), prec));
            break;
        case 6:
            add("integral6", q_exp_point(Rat(2, 3), 1, prec), one / (bf(3, prec) * s3));
            break;
        default: throw std::invalid_argument("integral index must be 1..6");
    }
    return out;
}

NumericReport evaluate_special(const std::string& what, long precision_bits) {
    NumericReport report;
    report.precision_bits = precision_bits;
    long prec = precision_bits;
    const long terms = 400;
    if (what == "k") {
        BigFloat k = eval_series(k_series(terms), q10_point(prec)).value;
        push_check(report, "k-closed-form", k, k0_closed(prec), pow10(-60, prec));
    } else if (what == "u") {
        BigFloat one = bf(1, prec);
        BigFloat k = eval_series(k_series(terms), q10_point(prec)).value;
        push_check(report, "u-value", one / k - k,
                   bf(4, prec) + bf(2, prec) * sqrt_rat(Rat(5), prec), pow10(-30, prec));
    } else if (what == "fine0") {
        PuiseuxSeries v = eta_quotient({{4, 8}, {1, -8}}, terms);
        BigFloat value = eval_series(v, q_exp_point(Rat(1), 1, prec)).value;
        push_check(report, "fine0", value, BigFloat::from_rat(Rat(1, 16), prec), pow10(-20, prec));
    } else if (what.rfind("row:", 0) == 0) {
        std::pair<BigFloat, BigFloat> both = ramanujan_fine_value(what.substr(4), prec);
        push_check(report, what, both.first, both.second, pow10(-20, prec));
    } else if (what.rfind("integral", 0) == 0) {
        int index = 0;
        try {
            size_t used = 0;
            index = std::stoi(what.substr(8), &used);
            if (used != what.size() - 8) index = 0;
        } catch (const std::exception&) {
            index = 0;
        }
        if (index < 1 || index > 6) throw std::invalid_argument("unknown value name: " + what);
        PuiseuxSeries v = integral_antiderivative_series(index, terms);
        for (IntegralSpecialValue& value : integral_special_values(index, prec)) {
            SeriesEval sv = eval_series(v, value.q0);
            push_check(report, value.name, sv.value, value.closed, pow10(-20, prec));
        }
    } else {
        throw std::invalid_argument("unknown value name: " + what);
    }
    return report;
}

std::string numeric_report_to_json(const NumericReport& report) {
    nlohmann::json doc;
    doc["precision_bits"] = report.precision_bits;
    doc["pass"] = report.all_pass();
    nlohmann::json checks = nlohmann::json::array();
    for (const NumericCheck& entry : report.entries) {
        nlohmann::json row;
        row["check"] = entry.check;
        row["lhs"] = entry.lhs.to_string(40);
        row["rhs"] = entry.rhs.to_string(40);
        row["abs_error"] = entry.abs_error.to_string(3);
        row["tolerance"] = entry.tolerance.to_string(3);
        row["precision_bits"] = report.precision_bits;
        row["pass"] = entry.pass;
        checks.push_back(std::move(row));
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2);
}

} // namespace etaforge
