#include "etaforge/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "etaforge/parallel.hpp"
#include "etaforge/search.hpp"
#include "json.hpp"

namespace etaforge {

namespace {

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int signed_pow(long base, long e) {
    Int b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rat ratpow(const Rat& base, long e) {
    Rat r(1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

Sqrt5 spow(const Sqrt5& base, long e) {
    Sqrt5 r(1);
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

bool series_agree(const PuiseuxSeries& a, const PuiseuxSeries& b, long min_overlap,
                  std::string& detail) {
    auto mm = a.first_mismatch(b);
    if (mm.first) {
        detail = "first mismatch at q^" + mm.second.get_str();
        return false;
    }
    if (a.is_zero() != b.is_zero()) {
        detail = "zero series compared against nonzero series";
        return false;
    }
    Rat lo = std::max(a.offset(), b.offset());
    Rat hi = std::min(a.window_end(), b.window_end());
    if (hi - lo < min_overlap) {
        detail = "window overlap too short";
        return false;
    }
    return true;
}

} // namespace

Int binomial(long u, long k) {
    if (k < 0) return Int(0);
    Int n(u), r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Int coefficient_rule(const std::string& tag, long n) {
    if (n < 0) return Int(0);
    Int s(0);
    if (tag == "s:5") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j);
            t = t * t * t * binomial(4 * n - 5 * j, 3 * n);
            s += (j + n) % 2 == 0 ? t : -t;
        }
        return s;
    }
    if (tag == "s:6A") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j) * binomial(n + j, j);
            s += t * t;
        }
        return s;
    }
    if (tag == "s:6B") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j);
            s += t * t * binomial(2 * j, j) * binomial(2 * (n - j), n - j);
        }
        return n % 2 == 0 ? s : -s;
    }
    if (tag == "s:6C") {
        for (long j = 0; 3 * j <= n; ++j) {
            Int fj = factorial(j);
            Int t = factorial(n + j) / (fj * fj * fj * fj * factorial(n - 3 * j));
            s += signed_pow(-3, n - 3 * j) * t;
        }
        return s;
    }
    if (tag == "s:8") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j) * binomial(2 * j, n);
            s += t * t;
        }
        return s;
    }
    if (tag == "s:9") {
        for (long j = 0; j <= n; ++j)
            for (long l = 0; l <= n; ++l) {
                Int t = binomial(n, j);
                s += t * t * binomial(n, l) * binomial(j, l) * binomial(j + l, n);
            }
        return s;
    }
    if (tag == "T:1") return binomial(6 * n, 3 * n) * binomial(3 * n, n) * binomial(2 * n, n);
    if (tag == "T:2") {
        Int c = binomial(2 * n, n);
        return binomial(4 * n, 2 * n) * c * c;
    }
    if (tag == "T:3") {
        Int c = binomial(2 * n, n);
        return binomial(3 * n, n) * c * c;
    }
    if (tag == "T:4") {
        Int c = binomial(2 * n, n);
        return c * c * c;
    }
    if (tag == "T:5") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j);
            s += t * t * binomial(n + j, j);
        }
        return binomial(2 * n, n) * s;
    }
    if (tag == "T:6A") {
        for (long j = 0; j <= n; ++j)
            for (long l = 0; l <= j; ++l) {
                Int t = binomial(j, l);
                s += signed_pow(-8, n - j) * binomial(n, j) * t * t * t;
            }
        return binomial(2 * n, n) * s;
    }
    if (tag == "T:6B") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j);
            s += t * t * binomial(2 * j, j);
        }
        return binomial(2 * n, n) * s;
    }
    if (tag == "T:6C") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j);
            s += t * t * t;
        }
        return binomial(2 * n, n) * s;
    }
    if (tag == "T:7") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j);
            s += t * t * binomial(2 * j, n) * binomial(n + j, j);
        }
        return s;
    }
    if (tag == "T:8") {
        for (long j = 0; j <= n; ++j)
            s += binomial(n, j) * binomial(2 * j, j) * binomial(2 * (n - j), n - j);
        s *= binomial(2 * n, n);
        return n % 2 == 0 ? s : -s;
    }
    if (tag == "T:9") {
        for (long j = 0; 3 * j <= n; ++j)
            s += signed_pow(-3, n - 3 * j) * binomial(n, j) * binomial(n - j, j) *
                 binomial(n - 2 * j, j);
        return binomial(2 * n, n) * s;
    }
    if (tag == "T:10") {
        for (long j = 0; j <= n; ++j) {
            Int t = binomial(n, j);
            t = t * t;
            s += t * t;
        }
        return s;
    }
    throw std::invalid_argument("unknown coefficient rule: " + tag);
}

RecurrenceConstants recurrence_constants(const std::string& tag) {
    if (tag == "5") return {11, 3, 1};
    if (tag == "6A") return {-17, -6, -72};
    if (tag == "6B") return {10, 3, -9};
    if (tag == "6C") return {7, 2, 8};
    if (tag == "8") return {-12, -4, -32};
    if (tag == "9") return {-9, -3, -27};
    throw std::invalid_argument("unknown recurrence tag: " + tag);
}

XwyRow table1_series(const std::string& tag, long terms) {
    long N = terms;
    if (tag == "5")
        return {r_series(N).pow(5), eta_quotient({{5, 6}, {1, -6}}, N),
                eta_quotient({{1, 5}, {5, -1}}, N)};
    if (tag == "6A")
        return {eta_quotient({{2, 1}, {6, 5}, {1, -5}, {3, -1}}, N),
                eta_quotient({{1, 12}, {6, 12}, {2, -12}, {3, -12}}, N),
                eta_quotient({{2, 7}, {3, 7}, {1, -5}, {6, -5}}, N)};
    if (tag == "6B")
        return {eta_quotient({{1, 4}, {6, 8}, {2, -8}, {3, -4}}, N),
                eta_quotient({{2, 6}, {6, 6}, {1, -6}, {3, -6}}, N),
                eta_quotient({{1, 4}, {3, 4}, {2, -2}, {6, -2}}, N)};
    if (tag == "6C")
        return {eta_quotient({{1, 3}, {6, 9}, {2, -3}, {3, -9}}, N),
                eta_quotient({{3, 4}, {6, 4}, {1, -4}, {2, -4}}, N),
                eta_quotient({{1, 3}, {2, 3}, {3, -1}, {6, -1}}, N)};
    if (tag == "8")
        return {eta_quotient({{2, 2}, {8, 4}, {1, -4}, {4, -2}}, N),
                eta_quotient({{1, 8}, {8, 8}, {2, -8}, {4, -8}}, N),
                eta_quotient({{2, 6}, {4, 6}, {1, -4}, {8, -4}}, N)};
    if (tag == "9")
        return {eta_quotient({{9, 3}, {1, -3}}, N),
                eta_quotient({{1, 6}, {9, 6}, {3, -12}}, N),
                eta_quotient({{3, 10}, {1, -3}, {9, -3}}, N)};
    throw std::invalid_argument("unknown series row: " + tag);
}

namespace {

struct QuadRow {
    long c1, c2;
    Rat xpow;
    std::map<long, long> w, etaz;
};

QuadRow table2_data(const std::string& tag) {
    if (tag == "2") return {128, 4096, Rat(1, 4), {{2, 24}, {1, -24}}, {{1, 2}, {2, 2}}};
    if (tag == "3") return {54, 729, Rat(1, 3), {{3, 12}, {1, -12}}, {{1, 2}, {3, 2}}};
    if (tag == "4") return {32, 256, Rat(5, 12), {{4, 8}, {1, -8}}, {{1, 2}, {4, 2}}};
    if (tag == "5") return {22, 125, Rat(1, 2), {{5, 6}, {1, -6}}, {{1, 2}, {5, 2}}};
    if (tag == "6A")
        return {-34, 1, Rat(1, 2), {{1, 12}, {6, 12}, {2, -12}, {3, -12}},
                {{1, 1}, {2, 1}, {3, 1}, {6, 1}}};
    if (tag == "6B")
        return {20, 64, Rat(1, 2), {{2, 6}, {6, 6}, {1, -6}, {3, -6}},
                {{1, 1}, {2, 1}, {3, 1}, {6, 1}}};
    if (tag == "6C")
        return {14, 81, Rat(1, 2), {{3, 4}, {6, 4}, {1, -4}, {2, -4}},
                {{1, 1}, {2, 1}, {3, 1}, {6, 1}}};
    if (tag == "7") return {13, 49, Rat(2, 3), {{7, 4}, {1, -4}}, {{1, 2}, {7, 2}}};
    if (tag == "8")
        return {-24, 16, Rat(1, 2), {{1, 8}, {8, 8}, {2, -8}, {4, -8}}, {{2, 2}, {4, 2}}};
    if (tag == "9") return {-18, -27, Rat(1, 2), {{1, 6}, {9, 6}, {3, -12}}, {{3, 4}}};
    if (tag == "10")
        return {6, 25, Rat(3, 4), {{5, 2}, {10, 2}, {1, -2}, {2, -2}},
                {{1, 1}, {2, 1}, {5, 1}, {10, 1}}};
    throw std::invalid_argument("unknown quadratic row: " + tag);
}

} // namespace

WxzRow table2_series(const std::string& tag, long terms) {
    long N = terms;
    if (tag == "1") {
        PuiseuxSeries Q = eisenstein_q(N), R = eisenstein_r(N);
        PuiseuxSeries qh = Q.pow(Rat(3, 2));
        PuiseuxSeries w = Rat(1, 432) * ((qh - R) / (qh + R));
        PuiseuxSeries quad = PuiseuxSeries::constant(1, N) + Rat(864) * w +
                             Rat(186624) * (w * w);
        PuiseuxSeries X = w / quad;
        PuiseuxSeries Z = eta_quotient({{1, 4}}, N) / X.pow(Rat(1, 6));
        return {w, X, Z};
    }
    QuadRow row = table2_data(tag);
    PuiseuxSeries w = eta_quotient(row.w, N);
    PuiseuxSeries quad = PuiseuxSeries::constant(1, N) + Rat(row.c1) * w +
                         Rat(row.c2) * (w * w);
    PuiseuxSeries X = w / quad;
    PuiseuxSeries Z = eta_quotient(row.etaz, N) / X.pow(row.xpow);
    return {w, X, Z};
}

CheckResult verify_table1_row(const std::string& tag, long terms) {
    CheckResult res{"table1-" + tag, false, ""};
    XwyRow row = table1_series(tag, terms);
    RecurrenceConstants rc = recurrence_constants(tag);

    PuiseuxSeries den = PuiseuxSeries::constant(1, terms) - Rat(rc.alpha) * row.x -
                        Rat(rc.gamma) * (row.x * row.x);
    std::string why;
    if (!series_agree(row.x / den, row.w, terms / 2, why)) {
        res.detail = "w relation: " + why;
        return res;
    }
    if (!series_agree(row.x.q_derivative() / row.x, row.y, terms / 2, why)) {
        res.detail = "logarithmic derivative: " + why;
        return res;
    }

    std::string stag = "s:" + tag;
    long M = terms;
    PuiseuxSeries sum = PuiseuxSeries::constant(Rat(coefficient_rule(stag, M)), terms);
    for (long n = M - 1; n >= 0; --n)
        sum = sum * row.w + PuiseuxSeries::constant(Rat(coefficient_rule(stag, n)), terms);
    if (!series_agree(sum, row.y, terms / 2, why)) {
        res.detail = "coefficient sum: " + why;
        return res;
    }

    std::vector<Int> s(22);
    for (long n = 0; n <= 21; ++n) s[static_cast<size_t>(n)] = coefficient_rule(stag, n);
    Int disc = Int(rc.alpha) * rc.alpha + 4 * Int(rc.gamma);
    for (long n = 0; n <= 20; ++n) {
        Int lhs = Int(n + 1) * (n + 1) * (n + 1) * s[static_cast<size_t>(n + 1)];
        Int rhs = -Int(2 * n + 1) *
                  (Int(rc.alpha) * n * n + Int(rc.alpha) * n + Int(rc.alpha) - 2 * Int(rc.beta)) *
                  s[static_cast<size_t>(n)];
        if (n >= 1) rhs -= disc * Int(n) * n * n * s[static_cast<size_t>(n - 1)];
        if (lhs != rhs) {
            res.detail = "recurrence fails at n=" + std::to_string(n);
            return res;
        }
    }
    res.pass = true;
    return res;
}

CheckResult verify_integral_identity(int index, long terms) {
    CheckResult res{"integral-identity-" + std::to_string(index), false, ""};
    long N = terms;
    PuiseuxSeries u, v;
    switch (index) {
        case 1: {
            v = r_series(N).pow(5);
            u = eta_quotient({{1, 5}, {5, -1}}, N) * v;
            break;
        }
        case 2:
            v = eta_quotient({{2, 1}, {6, 5}, {1, -5}, {3, -1}}, N);
            u = eta_quotient({{2, 8}, {3, 6}, {1, -10}}, N);
            break;
        case 3:
            v = eta_quotient({{1, 4}, {6, 8}, {2, -8}, {3, -4}}, N);
            u = eta_quotient({{1, 8}, {6, 6}, {2, -10}}, N);
            break;
        case 4:
            v = eta_quotient({{1, 3}, {6, 9}, {2, -3}, {3, -9}}, N);
            u = eta_quotient({{1, 6}, {6, 8}, {3, -10}}, N);
            break;
        case 5:
            v = eta_quotient({{2, 2}, {8, 4}, {1, -4}, {4, -2}}, N);
            u = eta_quotient({{2, 8}, {4, 4}, {1, -8}}, N);
            break;
        case 6:
            v = eta_quotient({{9, 3}, {1, -3}}, N);
            u = eta_quotient({{3, 10}, {1, -6}}, N);
            break;
        default:
            throw std::invalid_argument("integral identity index must be 1..6");
    }
    std::string why;
    res.pass = series_agree(v.q_derivative(), u, terms / 2, why);
    if (!res.pass) res.detail = why;
    return res;
}

CheckResult verify_table2_row(const std::string& tag, long terms) {
    CheckResult res{"table2-" + tag, false, ""};
    WxzRow row = table2_series(tag, terms);
    std::string why;
    if (!series_agree(row.w.q_derivative() / row.w, row.Z, terms / 2, why)) {
        res.detail = "logarithmic derivative: " + why;
        return res;
    }

    std::string ttag = "T:" + tag;
    long M = terms;
    PuiseuxSeries sum = PuiseuxSeries::constant(Rat(coefficient_rule(ttag, M)), terms);
    for (long n = M - 1; n >= 0; --n)
        sum = sum * row.X + PuiseuxSeries::constant(Rat(coefficient_rule(ttag, n)), terms);
    if (!series_agree(sum, row.Z, terms / 2, why)) {
        res.detail = "coefficient sum: " + why;
        return res;
    }

    if (tag == "4") {
        if (!series_agree(row.Z, eta_quotient({{2, 20}, {1, -8}, {4, -8}}, terms), terms / 2,
                          why)) {
            res.detail = "alternate quotient form: " + why;
            return res;
        }
    }
    if (tag == "7") {
        long N = terms;
        PuiseuxSeries A = euler_product(1, N).pow(4) / euler_product(7, N).pow(4);
        PuiseuxSeries inner = A + PuiseuxSeries::monomial(13, 1, N) +
                              PuiseuxSeries::monomial(49, 2, N) / A;
        PuiseuxSeries rhs = PuiseuxSeries::monomial(1, 1, N) *
                            (euler_product(7, N).pow(6) / euler_product(1, N).pow(2)) *
                            inner.pow(Rat(2, 3));
        if (!series_agree(row.w.q_derivative(), rhs, terms / 2, why)) {
            res.detail = "two-thirds power form: " + why;
            return res;
        }
    }
    res.pass = true;
    return res;
}

Rat hyp2f1_terminating(long a, long b, long c, const Rat& x) {
    if (b > 0) throw std::invalid_argument("terminating 2F1 needs a nonpositive integer b");
    Rat sum(1), term(1);
    for (long t = 0; t < -b; ++t) {
        term *= Rat(a + t) * Rat(b + t) * x;
        term /= Rat(t + 1) * Rat(c + t);
        sum += term;
    }
    return sum;
}

namespace {

using RatPoly = std::vector<Rat>;

void ptrim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly padd(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ptrim(r);
    return r;
}

RatPoly pmul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ptrim(r);
    return r;
}

RatPoly pscale(const Rat& s, RatPoly a) {
    for (Rat& c : a) c *= s;
    ptrim(a);
    return a;
}

RatPoly ppow(const RatPoly& base, long e) {
    RatPoly r{Rat(1)};
    for (long i = 0; i < e; ++i) r = pmul(r, base);
    return r;
}

RatPoly pshift(const RatPoly& a, long m) {
    if (a.empty()) return {};
    RatPoly r(a.size() + static_cast<size_t>(m), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(m)] = a[i];
    return r;
}

RatPoly hyp2f1_poly(long a, long b, long c, const RatPoly& x) {
    RatPoly sum{Rat(1)}, term{Rat(1)};
    for (long t = 0; t < -b; ++t) {
        term = pmul(term, x);
        term = pscale(Rat(a + t) * Rat(b + t) / (Rat(t + 1) * Rat(c + t)), term);
        sum = padd(sum, term);
    }
    return sum;
}

} // namespace

std::vector<Rat> g_form_polynomial(long n, const std::string& form) {
    if (n < 0) throw std::invalid_argument("g form needs n >= 0");
    const RatPoly half_up{Rat(1, 2), Rat(1, 2)};    // (1+z)/2
    const RatPoly half_down{Rat(1, 2), Rat(-1, 2)}; // (1-z)/2
    const RatPoly zm1{Rat(-1), Rat(1)};             // z-1
    RatPoly g;
    if (form == "g1") {
        const RatPoly zp1{Rat(1), Rat(1)};
        for (long t = 0; t <= n; ++t) {
            RatPoly inner(static_cast<size_t>(n - t) + 1, Rat(0));
            for (long s = 0; s + t <= n; ++s)
                inner[static_cast<size_t>(s)] = Rat(binomial(n, s) * binomial(n, s + t));
            ptrim(inner);
            Rat sc = Rat(binomial(t + n, t)) * ratpow(Rat(-1, 2), t);
            g = padd(g, pscale(sc, pmul(inner, ppow(zp1, t))));
        }
        return g;
    }
    if (form == "g2") {
        for (long s = 0; s <= n; ++s) {
            Rat b = Rat(binomial(n, s));
            g = padd(g, pscale(b * b, pshift(hyp2f1_poly(n + 1, s - n, s + 1, half_up), s)));
        }
        return g;
    }
    if (form == "g3") {
        for (long s = 0; s <= n; ++s) {
            Rat b = Rat(binomial(n, s));
            g = padd(g,
                     pscale(b * b, pshift(hyp2f1_poly(n + 1, -s, n + 1 - s, half_up), n - s)));
        }
        return g;
    }
    if (form == "g4") {
        for (long s = 0; s <= n; ++s) {
            Rat b = Rat(binomial(n, s));
            if (s % 2 != 0) b = -b;
            g = padd(g, pscale(b, pshift(hyp2f1_poly(n + 1, -s, 1, half_down), n - s)));
        }
        return g;
    }
    if (form == "gfinal")
        return pscale(hyp2f1_terminating(n + 1, -n, 1, Rat(1, 2)), ppow(zm1, n));
    if (form == "closed") {
        if (n % 2 != 0) return {};
        Rat sc = Rat(binomial(n, n / 2)) * ratpow(Rat(1, 2), n);
        if ((n / 2) % 2 != 0) sc = -sc;
        return pscale(sc, ppow(zm1, n));
    }
    throw std::invalid_argument("unknown g form: " + form);
}

namespace {

void require_quartet(const Sqrt5& alpha, const Sqrt5& beta, const Sqrt5& gamma,
                     const Sqrt5& delta) {
    const Sqrt5* v[4] = {&alpha, &beta, &gamma, &delta};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*v[i] == *v[j])
                throw QuartetViolatesRelation("quartet entries must be pairwise distinct");
    if ((alpha + beta) * (gamma + delta) != Sqrt5(2) * (alpha * beta + gamma * delta))
        throw QuartetViolatesRelation();
}

Sqrt5 limit_scale(long n) {
    Rat odd(1);
    for (long i = 1; i <= n - 1; i += 2) odd *= Rat(i) * Rat(i);
    if ((n / 2) % 2 != 0) odd = -odd;
    return Sqrt5(odd);
}

} // namespace

Sqrt5 quartet_limit_taylor(const Sqrt5& alpha, const Sqrt5& beta, const Sqrt5& gamma,
                           const Sqrt5& delta, long n) {
    require_quartet(alpha, beta, gamma, delta);
    Poly5 num = (Poly5::linear(gamma) * Poly5::linear(delta)).pow(n);
    RationalFunction5 f(num, Poly5::linear(beta).pow(n + 1));
    std::vector<Sqrt5> tay = taylor_at_point(f, alpha, n + 1);
    Rat fac(1);
    for (long i = 2; i <= n; ++i) fac *= i;
    return Sqrt5(fac) * tay[static_cast<size_t>(n)];
}

Sqrt5 quartet_limit_closed(const Sqrt5& alpha, const Sqrt5& beta, const Sqrt5& gamma,
                           const Sqrt5& delta, long n) {
    require_quartet(alpha, beta, gamma, delta);
    if (n % 2 != 0) return Sqrt5(0);
    return limit_scale(n) * spow(gamma - delta, n) / spow(alpha - beta, n + 1);
}

namespace {

Sqrt5 pole_expansion_point(const Sqrt5& a, const Sqrt5& b) {
    if (a.is_zero() || b.is_zero() || a == b || (a + b).is_zero())
        throw QuartetViolatesRelation("pole variant needs distinct nonzero a, b with a+b != 0");
    return Sqrt5(2) * a * b / (a + b);
}

} // namespace

Sqrt5 pole_limit_taylor(const Sqrt5& a, const Sqrt5& b, long n) {
    Sqrt5 x0 = pole_expansion_point(a, b);
    Poly5 num = (Poly5::linear(a) * Poly5::linear(b)).pow(n);
    RationalFunction5 f(num, Poly5::linear(Sqrt5(0)).pow(n + 1));
    std::vector<Sqrt5> tay = taylor_at_point(f, x0, n + 1);
    Rat fac(1);
    for (long i = 2; i <= n; ++i) fac *= i;
    return Sqrt5(fac) * tay[static_cast<size_t>(n)];
}

Sqrt5 pole_limit_closed(const Sqrt5& a, const Sqrt5& b, long n) {
    Sqrt5 x0 = pole_expansion_point(a, b);
    (void)x0;
    if (n % 2 != 0) return Sqrt5(0);
    return limit_scale(n) * spow(a - b, n) * spow((a + b) / (Sqrt5(2) * a * b), n + 1);
}

std::vector<std::array<Sqrt5, 4>> random_rational_quartets(int count, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    auto draw = [&]() {
        Rat r(num(gen), den(gen));
        r.canonicalize();
        return Sqrt5(r);
    };
    std::vector<std::array<Sqrt5, 4>> out;
    while (static_cast<int>(out.size()) < count) {
        Sqrt5 al = draw(), be = draw(), ga = draw();
        Sqrt5 bottom = al + be - Sqrt5(2) * ga;
        if (bottom.is_zero()) continue;
        Sqrt5 de = (Sqrt5(2) * al * be - ga * (al + be)) / bottom;
        if (al == be || al == ga || al == de || be == ga || be == de || ga == de) continue;
        out.push_back({al, be, ga, de});
    }
    return out;
}

namespace {

struct PrintedRow {
    const char* label;
    std::array<long, 3> a123;
    std::vector<long> num;
    bool with_circle_factor; // numerator carries an extra (1 + k^2)
    bool negate;
    int den_base; // 0: k, 1: 1-k^2, 2: 1+k-k^2, 3: 1-4k-k^2
    long den_pow;
    long den_scale;
};

const std::vector<PrintedRow>& printed_rows() {
    static const std::vector<PrintedRow> rows = {
        {"1.0", {0, -2, 1}, {1, 0, 1}, false, true, 2, 1, 1},
        {"2.0", {1, 0, 0}, {1, 0, 1}, false, true, 0, 1, 1},
        {"3.0", {-2, 0, 0}, {1, 0, 1}, false, false, 1, 1, 4},
        {"4.0", {0, 1, -2}, {1, 0, 1}, false, false, 3, 1, 4},
        {"5", {1, -4, 0}, {2, 6, 0, -5}, false, false, 2, 3, 15},
        {"6", {0, 2, 1}, {1, -3, -31, 3, 1}, true, true, 0, 3, 3},
        {"7", {-4, 1, 2}, {-29, 6, 66, 0, -21, -6}, false, false, 1, 3, 6},
        {"8", {2, 0, -4}, {-1, 12, -30, 20, 15}, false, false, 3, 3, 30},
        {"9", {0, -5, 1}, {2, 8, 4, -16, -5}, false, false, 2, 4, 20},
        {"10", {1, 3, 0}, {1, 4, -3, -36, 3, 4, -1}, true, true, 0, 4, 4},
        {"11", {-5, 0, 3}, {-7, 0, 29, -8, -21, -8, -1}, false, false, 1, 4, 2},
        {"12", {3, 1, -5}, {1, -6, 37, -98, 35, 110, 55, 10}, false, false, 3, 4, 10},
    };
    return rows;
}

Poly5 poly_from_longs(const std::vector<long>& v) {
    std::vector<Sqrt5> c;
    c.reserve(v.size());
    for (long x : v) c.push_back(Sqrt5(x));
    return Poly5(std::move(c));
}

Poly5 pole_base_poly(int base) {
    switch (base) {
        case 0: return poly_from_longs({0, 1});
        case 1: return poly_from_longs({1, 0, -1});
        case 2: return poly_from_longs({1, 1, -1});
        case 3: return poly_from_longs({1, -4, -1});
        default: throw std::invalid_argument("unknown denominator base");
    }
}

RationalFunction5 printed_antiderivative(const PrintedRow& row) {
    Poly5 num = poly_from_longs(row.num);
    if (row.with_circle_factor) num = num * poly_from_longs({1, 0, 1});
    if (row.negate) num = -num;
    Poly5 den = Sqrt5(Rat(row.den_scale)) * pole_base_poly(row.den_base).pow(row.den_pow);
    return RationalFunction5(num, den);
}

ParamExponents full_params(const std::array<long, 3>& a123) {
    return {-(a123[0] + a123[1] + a123[2]), a123[0], a123[1], a123[2]};
}

CheckResult check_derivative_identity(const std::string& name, const ParamExponents& a,
                                      const EtaExponents& e,
                                      const RationalFunction5* printed, long terms) {
    CheckResult res{name, false, ""};
    RationalityCertificate cert = decide_rationality(a, true);
    if (!cert.rational || !cert.g) {
        res.detail = "decider reports an irrational antiderivative";
        return res;
    }
    if (printed != nullptr) {
        RationalFunction5 diff = *cert.g - *printed;
        if (!(diff.den.degree() == 0 && diff.num.degree() <= 0)) {
            res.detail = "printed antiderivative differs by more than a constant";
            return res;
        }
    }
    PuiseuxSeries lhs = compose_rational_with_k(*cert.g, terms).q_derivative();
    PuiseuxSeries rhs = eta_exponent_series(e, terms);
    std::string why;
    res.pass = series_agree(lhs, rhs, terms / 2, why);
    if (!res.pass) res.detail = why;
    return res;
}

CheckResult check_scan_box(long range, int jobs) {
    CheckResult res{"tables89-scan-box", false, ""};
    std::vector<ParamExponents> got = scan_a(range, jobs);
    std::set<ParamExponents> expected;
    for (const PrintedRow& row : printed_rows()) expected.insert(full_params(row.a123));
    for (int fam = 1; fam <= 4; ++fam)
        for (long m = 1;; ++m) {
            ParamExponents a = family_exponents(fam, m).a;
            if (std::max({std::abs(a[1]), std::abs(a[2]), std::abs(a[3])}) > range) break;
            expected.insert(a);
        }
    std::set<ParamExponents> seen(got.begin(), got.end());
    if (seen.size() != got.size()) {
        res.detail = "scan reports duplicate rows";
        return res;
    }
    for (const ParamExponents& a : seen)
        if (!expected.count(a)) {
            res.detail = "unexpected row (" + std::to_string(a[1]) + "," + std::to_string(a[2]) +
                         "," + std::to_string(a[3]) + ")";
            return res;
        }
    for (const ParamExponents& a : expected)
        if (!seen.count(a)) {
            res.detail = "missing row (" + std::to_string(a[1]) + "," + std::to_string(a[2]) +
                         "," + std::to_string(a[3]) + ")";
            return res;
        }
    res.pass = true;
    return res;
}

CheckResult check_g_forms(long n) {
    CheckResult res{"lemmas-forms-n" + std::to_string(n), false, ""};
    std::vector<Rat> target = g_form_polynomial(n, "closed");
    for (const char* form : {"g1", "g2", "g3", "g4", "gfinal"}) {
        if (g_form_polynomial(n, form) != target) {
            res.detail = std::string("form ") + form + " differs from the closed form";
            return res;
        }
    }
    res.pass = true;
    return res;
}

CheckResult check_gauss_half() {
    CheckResult res{"lemmas-gauss-half", false, ""};
    for (long m = 1; m <= 15; ++m) {
        Rat expect = Rat(binomial(2 * m, m)) * ratpow(Rat(1, 4), m);
        if (m % 2 != 0) expect = -expect;
        if (hyp2f1_terminating(2 * m + 1, -2 * m, 1, Rat(1, 2)) != expect) {
            res.detail = "even case fails at m=" + std::to_string(m);
            return res;
        }
    }
    for (long m = 0; m <= 14; ++m)
        if (hyp2f1_terminating(2 * m + 2, -(2 * m + 1), 1, Rat(1, 2)) != 0) {
            res.detail = "odd case fails at m=" + std::to_string(m);
            return res;
        }
    res.pass = true;
    return res;
}

CheckResult check_golden_limits(long max_n) {
    CheckResult res{"limits-golden", false, ""};
    Sqrt5 al = quartet_alpha(), be = quartet_beta(), ga = quartet_gamma(), de = quartet_delta();
    for (long n = 1; n <= max_n; ++n)
        if (quartet_limit_taylor(al, be, ga, de, n) != quartet_limit_closed(al, be, ga, de, n)) {
            res.detail = "golden quartet differs at n=" + std::to_string(n);
            return res;
        }
    res.pass = true;
    return res;
}

CheckResult check_golden_value() {
    CheckResult res{"limits-golden-value", false, ""};
    Sqrt5 got = quartet_limit_taylor(quartet_alpha(), quartet_beta(), quartet_gamma(),
                                     quartet_delta(), 2);
    if (got != Sqrt5(Rat(0), Rat(-4, 5))) {
        res.detail = "n=2 value is " + got.to_string();
        return res;
    }
    res.pass = true;
    return res;
}

CheckResult check_pole_pairs() {
    CheckResult res{"limits-pole-pairs", false, ""};
    const std::pair<long, long> pairs[] = {{1, 2}, {3, -1}, {2, 5}, {-3, 7}};
    for (auto [pa, pb] : pairs) {
        Sqrt5 a(pa), b(pb);
        Sqrt5 x0 = Sqrt5(2) * a * b / (a + b);
        for (long n = 1; n <= 8; ++n) {
            Sqrt5 tay = pole_limit_taylor(a, b, n);
            if (tay != pole_limit_closed(a, b, n)) {
                res.detail = "pair (" + std::to_string(pa) + "," + std::to_string(pb) +
                             ") differs at n=" + std::to_string(n);
                return res;
            }
            if (tay != quartet_limit_taylor(x0, Sqrt5(0), a, b, n)) {
                res.detail = "pole variant disagrees with the quartet form at n=" +
                             std::to_string(n);
                return res;
            }
        }
    }
    res.pass = true;
    return res;
}

CheckResult check_random_quartets(int count, unsigned seed, long max_n) {
    CheckResult res{"limits-random-quartets", false, ""};
    auto quartets = random_rational_quartets(count, seed);
    for (size_t i = 0; i < quartets.size(); ++i) {
        const auto& [al, be, ga, de] = quartets[i];
        for (long n = 1; n <= max_n; ++n)
            if (quartet_limit_taylor(al, be, ga, de, n) !=
                quartet_limit_closed(al, be, ga, de, n)) {
                res.detail = "quartet " + std::to_string(i) + " differs at n=" +
                             std::to_string(n);
                return res;
            }
    }
    res.pass = true;
    return res;
}

CheckResult check_series_pair(const std::string& name, const PuiseuxSeries& lhs,
                              const PuiseuxSeries& rhs, long min_overlap) {
    CheckResult res{name, false, ""};
    std::string why;
    res.pass = series_agree(lhs, rhs, min_overlap, why);
    if (!res.pass) res.detail = why;
    return res;
}

} // namespace

ParamExponents row_parameters(const std::string& label) {
    size_t dot = label.find('.');
    if (dot != std::string::npos) {
        int fam = 0;
        long m = -1;
        try {
            fam = std::stoi(label.substr(0, dot));
            m = std::stol(label.substr(dot + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad row label: " + label);
        }
        if (fam < 1 || fam > 4 || m < 0) throw std::invalid_argument("bad row label: " + label);
        return family_exponents(fam, m).a;
    }
    for (const PrintedRow& row : printed_rows())
        if (label == row.label) return full_params(row.a123);
    throw std::invalid_argument("unknown row label: " + label);
}

std::vector<CheckResult> run_suite(const std::string& name, long terms_override, int jobs) {
    static const std::set<std::string> known = {"all",    "section1", "table1", "table2", "t1",
                                                "lemmas", "limits",   "rp",     "tables89"};
    if (!known.count(name)) throw std::invalid_argument("unknown suite: " + name);
    auto want = [&](const char* suite) { return name == "all" || name == suite; };
    auto pick = [&](long def) { return terms_override > 0 ? terms_override : def; };

    std::vector<std::pair<std::string, std::function<CheckResult()>>> tasks;
    auto add = [&](std::string label, std::function<CheckResult()> fn) {
        tasks.emplace_back(std::move(label), std::move(fn));
    };

    if (want("section1")) {
        long N = pick(500);
        add("section1-quintic-lambert", [N] {
            return check_series_pair("section1-quintic-lambert", legendre_lambert_5(N),
                                     euler_product(1, N).pow(5) / euler_product(5, N), N / 2);
        });
        add("section1-quartic-lambert", [N] {
            PuiseuxSeries lhs = eta_quotient({{2, 20}, {1, -8}, {4, -8}}, N);
            PuiseuxSeries rhs = PuiseuxSeries::constant(1, N) + Rat(8) * lambert_sum(1, 1, N) -
                                Rat(32) * lambert_sum(1, 4, N);
            return check_series_pair("section1-quartic-lambert", lhs, rhs, N / 2);
        });
        add("section1-fine-antiderivative", [N] {
            PuiseuxSeries v = eta_quotient({{4, 8}, {1, -8}}, N);
            PuiseuxSeries u = eta_quotient({{2, 20}, {1, -16}}, N);
            return check_series_pair("section1-fine-antiderivative", v.q_derivative(), u, N / 2);
        });
    }
    if (want("table1")) {
        long N = pick(60);
        for (const char* tag : {"5", "6A", "6B", "6C", "8", "9"})
            add(std::string("table1-") + tag,
                [tag, N] { return verify_table1_row(tag, N); });
    }
    if (want("table2")) {
        for (const char* tag : {"1", "2", "3", "4", "5", "6A", "6B", "6C", "7", "8", "9", "10"}) {
            long N = pick(std::string(tag) == "7" ? 100 : 40);
            add(std::string("table2-") + tag,
                [tag, N] { return verify_table2_row(tag, N); });
        }
    }
    if (want("t1")) {
        long N = pick(300);
        for (int i = 1; i <= 6; ++i)
            add("integral-identity-" + std::to_string(i),
                [i, N] { return verify_integral_identity(i, N); });
    }
    if (want("lemmas")) {
        for (long n = 1; n <= 30; ++n)
            add("lemmas-forms-n" + std::to_string(n), [n] { return check_g_forms(n); });
        add("lemmas-gauss-half", [] { return check_gauss_half(); });
    }
    if (want("limits")) {
        add("limits-golden", [] { return check_golden_limits(16); });
        add("limits-golden-value", [] { return check_golden_value(); });
        add("limits-pole-pairs", [] { return check_pole_pairs(); });
        add("limits-random-quartets", [] { return check_random_quartets(20, 20260819u, 10); });
    }
    if (want("rp")) {
        long N = pick(200);
        for (int i = 1; i <= 4; ++i)
            add("rp-" + std::to_string(i), [i, N] {
                auto pr = rp_identity_series(i, N);
                return check_series_pair("rp-" + std::to_string(i), pr.first, pr.second, N / 2);
            });
        add("rp-y10", [N] {
            return check_series_pair("rp-y10", y10_series(N),
                                     eta_quotient({{1, 1}, {2, 2}, {5, 3}, {10, -2}}, N), N / 2);
        });
        add("rp-k-product", [N] {
            PuiseuxSeries rhs = r_series(N) * r_series(N).dilated(2).pow(2);
            return check_series_pair("rp-k-product", k_series(N), rhs, N / 2);
        });
    }
    if (want("tables89")) {
        long N = pick(200);
        for (const PrintedRow& row : printed_rows()) {
            add(std::string("tables89-row-") + row.label, [&row, N] {
                RationalFunction5 printed = printed_antiderivative(row);
                ParamExponents a = full_params(row.a123);
                return check_derivative_identity(std::string("tables89-row-") + row.label, a,
                                                 a_to_e(a), &printed, N);
            });
        }
        for (int fam = 1; fam <= 4; ++fam)
            for (long m = 1; m <= 8; ++m) {
                std::string label =
                    "tables89-family-" + std::to_string(fam) + "." + std::to_string(m);
                add(label, [label, fam, m, N] {
                    FamilyRow fr = family_exponents(fam, m);
                    return check_derivative_identity(label, fr.a, fr.e, nullptr, N);
                });
            }
        add("tables89-scan-box", [jobs] { return check_scan_box(10, jobs); });
    }

    std::vector<CheckResult> out(tasks.size());
    parallel_for(static_cast<long>(tasks.size()), jobs, [&](long i) {
        const auto& task = tasks[static_cast<size_t>(i)];
        try {
            out[static_cast<size_t>(i)] = task.second();
        } catch (const std::exception& ex) {
            out[static_cast<size_t>(i)] =
                CheckResult{task.first, false, std::string("exception: ") + ex.what()};
        }
    });
    return out;
}

std::string suite_report_to_json(const std::string& suite,
                                 const std::vector<CheckResult>& checks) {
    nlohmann::json j;
    j["suite"] = suite;
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        all = all && c.pass;
        nlohmann::json item;
        item["name"] = c.name;
        item["status"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty()) item["first_mismatch"] = c.detail;
        arr.push_back(std::move(item));
    }
    j["pass"] = all;
    j["checks"] = std::move(arr);
    return j.dump(2);
}

} // namespace etaforge
