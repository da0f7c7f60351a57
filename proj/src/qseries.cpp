#include "etaforge/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace etaforge {

static bool is_integer(const Rat& r) { return r.get_den() == 1; }

PuiseuxSeries::PuiseuxSeries(Rat offset, std::vector<Rat> coeffs)
    : off_(std::move(offset)), c_(std::move(coeffs)) {
    normalize();
}

void PuiseuxSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        off_ = 0;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        off_ += static_cast<long>(lead);
    }
}

PuiseuxSeries PuiseuxSeries::zero() { return PuiseuxSeries(); }

PuiseuxSeries PuiseuxSeries::constant(const Rat& value, long terms) {
    std::vector<Rat> c(static_cast<size_t>(std::max(terms, 1L)), Rat(0));
    c[0] = value;
    return PuiseuxSeries(Rat(0), std::move(c));
}

PuiseuxSeries PuiseuxSeries::monomial(const Rat& coeff, const Rat& exponent, long terms) {
    std::vector<Rat> c(static_cast<size_t>(std::max(terms, 1L)), Rat(0));
    c[0] = coeff;
    return PuiseuxSeries(exponent, std::move(c));
}

Rat PuiseuxSeries::coefficient(const Rat& e) const {
    if (is_zero()) return Rat(0);
    Rat rel = e - off_;
    if (!is_integer(rel)) return Rat(0);
    if (rel < 0) return Rat(0);
    long i = static_cast<long>(rel.get_num().get_si());
    if (i >= truncation()) throw InsufficientTruncation("coefficient beyond truncation");
    return c_[static_cast<size_t>(i)];
}

PuiseuxSeries PuiseuxSeries::truncated(long terms) const {
    if (is_zero() || terms >= truncation()) return *this;
    if (terms <= 0) return zero();
    std::vector<Rat> c(c_.begin(), c_.begin() + terms);
    return PuiseuxSeries(off_, std::move(c));
}

PuiseuxSeries operator-(const PuiseuxSeries& a) {
    PuiseuxSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Rat diff = b.off_ - a.off_;
    if (diff.get_den() != 1) throw OffsetMismatch("offsets differ by a non-integer");
    Rat start = std::min(a.off_, b.off_);
    Rat end = std::min(a.window_end(), b.window_end());
    long n = static_cast<long>(Rat(end - start).get_num().get_si());
    std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
    long sa = static_cast<long>(Rat(a.off_ - start).get_num().get_si());
    long sb = static_cast<long>(Rat(b.off_ - start).get_num().get_si());
    for (long i = 0; i < a.truncation() && sa + i < n; ++i) c[static_cast<size_t>(sa + i)] += a.c_[static_cast<size_t>(i)];
    for (long i = 0; i < b.truncation() && sb + i < n; ++i) c[static_cast<size_t>(sb + i)] += b.c_[static_cast<size_t>(i)];
    return PuiseuxSeries(start, std::move(c));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.is_zero() || b.is_zero()) return PuiseuxSeries::zero();
    long n = std::min(a.truncation(), b.truncation());
    std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
    for (long i = 0; i < a.truncation() && i < n; ++i) {
        const Rat& x = a.c_[static_cast<size_t>(i)];
        if (x == 0) continue;
        long lim = std::min<long>(b.truncation(), n - i);
        for (long j = 0; j < lim; ++j) {
            const Rat& y = b.c_[static_cast<size_t>(j)];
            if (y == 0) continue;
            c[static_cast<size_t>(i + j)] += x * y;
        }
    }
    return PuiseuxSeries(a.off_ + b.off_, std::move(c));
}

PuiseuxSeries operator*(const Rat& s, const PuiseuxSeries& a) {
    if (s == 0) return PuiseuxSeries::zero();
    PuiseuxSeries r = a;
    for (auto& x : r.c_) x *= s;
    return r;
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (b.is_zero()) throw DivisionByZeroSeries();
    if (a.is_zero()) return PuiseuxSeries::zero();
    long n = std::min(a.truncation(), b.truncation());
    const Rat& b0 = b.c_[0];
    std::vector<Rat> inv(static_cast<size_t>(n), Rat(0));
    inv[0] = 1 / b0;
    for (long m = 1; m < n; ++m) {
        Rat s(0);
        long lim = std::min<long>(m, b.truncation() - 1);
        for (long j = 1; j <= lim; ++j) {
            const Rat& y = b.c_[static_cast<size_t>(j)];
            if (y == 0) continue;
            s += y * inv[static_cast<size_t>(m - j)];
        }
        inv[static_cast<size_t>(m)] = -s / b0;
    }
    PuiseuxSeries binv(-b.off_, std::move(inv));
    return a * binv;
}

PuiseuxSeries PuiseuxSeries::pow(long n) const {
    if (n == 0) return constant(Rat(1), std::max(truncation(), 1L));
    if (is_zero()) {
        if (n > 0) return zero();
        throw DivisionByZeroSeries("negative power of zero series");
    }
    bool neg = n < 0;
    unsigned long m = neg ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    PuiseuxSeries base = *this;
    PuiseuxSeries acc = constant(Rat(1), truncation());
    while (m) {
        if (m & 1) acc = acc * base;
        m >>= 1;
        if (m) base = base * base;
    }
    if (!neg) return acc;
    return constant(Rat(1), truncation()) / acc;
}

std::pair<bool, Rat> rational_root(const Rat& v, unsigned long n) {
    if (n == 0) return {false, Rat(0)};
    if (n == 1) return {true, v};
    if (v == 0) return {true, Rat(0)};
    bool neg = sgn(v) < 0;
    if (neg && n % 2 == 0) return {false, Rat(0)};
    mpz_class num = abs(v.get_num()), den = v.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return {false, Rat(0)};
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return {false, Rat(0)};
    Rat r(rn, rd);
    r.canonicalize();
    return {true, neg ? Rat(-r) : r};
}

PuiseuxSeries PuiseuxSeries::pow(const Rat& alpha) const {
    if (is_integer(alpha)) return pow(static_cast<long>(alpha.get_num().get_si()));
    if (is_zero()) {
        if (sgn(alpha) > 0) return zero();
        throw DivisionByZeroSeries("negative power of zero series");
    }
    unsigned long q = alpha.get_den().get_ui();
    auto [ok, c0root] = rational_root(c_[0], q);
    if (!ok) throw NonUnitLeadingCoefficient("leading coefficient has no exact rational root");
    Rat lead(1);
    mpz_class p = alpha.get_num();
    bool pneg = sgn(p) < 0;
    mpz_class pa = abs(p);
    for (mpz_class i = 0; i < pa; ++i) lead *= c0root;
    if (pneg) lead = 1 / lead;
    long n = truncation();
    // y = (1 + u)^alpha via n y_n = sum_{j<n} (alpha (n-j) - j) u_{n-j} y_j
    std::vector<Rat> u(static_cast<size_t>(n), Rat(0));
    for (long i = 1; i < n; ++i) u[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] / c_[0];
    std::vector<Rat> y(static_cast<size_t>(n), Rat(0));
    y[0] = 1;
    for (long m = 1; m < n; ++m) {
        Rat s(0);
        for (long j = 0; j < m; ++j) {
            const Rat& um = u[static_cast<size_t>(m - j)];
            if (um == 0) continue;
            s += (alpha * (m - j) - j) * um * y[static_cast<size_t>(j)];
        }
        y[static_cast<size_t>(m)] = s / m;
    }
    for (auto& x : y) x *= lead;
    return PuiseuxSeries(off_ * alpha, std::move(y));
}

PuiseuxSeries PuiseuxSeries::q_derivative() const {
    PuiseuxSeries r = *this;
    for (long i = 0; i < r.truncation(); ++i) r.c_[static_cast<size_t>(i)] *= (r.off_ + i);
    r.normalize();
    return r;
}

PuiseuxSeries PuiseuxSeries::antiderivative_dq_over_q() const {
    if (is_zero()) return zero();
    if (!is_integer(off_)) throw NonIntegerExponent("antiderivative requires integer exponents");
    PuiseuxSeries r = *this;
    for (long i = 0; i < r.truncation(); ++i) {
        Rat e = r.off_ + i;
        if (e == 0) {
            if (r.c_[static_cast<size_t>(i)] != 0) throw ConstantTermPresent();
            continue;
        }
        r.c_[static_cast<size_t>(i)] /= e;
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::dilated(long t) const {
    if (is_zero()) return zero();
    std::vector<Rat> c(static_cast<size_t>(truncation() * t), Rat(0));
    for (long i = 0; i < truncation(); ++i) c[static_cast<size_t>(i * t)] = c_[static_cast<size_t>(i)];
    return PuiseuxSeries(off_ * t, std::move(c));
}

bool PuiseuxSeries::operator==(const PuiseuxSeries& b) const {
    return off_ == b.off_ && c_ == b.c_;
}

std::pair<bool, Rat> PuiseuxSeries::first_mismatch(const PuiseuxSeries& b) const {
    Rat end = is_zero() ? (b.is_zero() ? Rat(0) : b.window_end())
                        : (b.is_zero() ? window_end() : std::min(window_end(), b.window_end()));
    auto coeff_below = [&](const PuiseuxSeries& s, const Rat& e) -> Rat {
        if (s.is_zero()) return Rat(0);
        Rat rel = e - s.off_;
        if (rel.get_den() != 1 || rel < 0 || rel >= s.truncation()) return Rat(0);
        return s.c_[static_cast<size_t>(rel.get_num().get_si())];
    };
    std::vector<Rat> exps;
    for (long i = 0; !is_zero() && i < truncation(); ++i) exps.push_back(off_ + i);
    for (long i = 0; !b.is_zero() && i < b.truncation(); ++i) exps.push_back(b.off_ + i);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    for (const Rat& e : exps) {
        if (e >= end) break;
        if (coeff_below(*this, e) != coeff_below(b, e)) return {true, e};
    }
    return {false, end};
}

std::string PuiseuxSeries::to_string(long max_terms) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    long shown = 0;
    for (long i = 0; i < truncation() && shown < max_terms; ++i) {
        const Rat& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rat e = off_ + i;
        if (shown) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rat ac = abs(c);
        if (ac != 1 || e == 0) os << ac.get_str();
        if (e != 0) {
            if (ac != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e.get_str();
        }
        ++shown;
    }
    os << " + O(q^" << window_end().get_str() << ")";
    return os.str();
}

PuiseuxSeries euler_product(long d, long terms) {
    std::vector<Rat> c(static_cast<size_t>(terms), Rat(0));
    c[0] = 1;
    for (long j = 1;; ++j) {
        long g1 = d * j * (3 * j - 1) / 2;
        long g2 = d * j * (3 * j + 1) / 2;
        if (g1 >= terms && g2 >= terms) break;
        int s = (j % 2 == 0) ? 1 : -1;
        if (g1 < terms) c[static_cast<size_t>(g1)] += s;
        if (g2 < terms) c[static_cast<size_t>(g2)] += s;
    }
    return PuiseuxSeries(Rat(0), std::move(c));
}

PuiseuxSeries eta_quotient(const std::map<long, long>& exponents, long terms) {
    PuiseuxSeries out = PuiseuxSeries::constant(Rat(1), terms);
    Rat off(0);
    for (const auto& [d, e] : exponents) {
        Rat w(d * e, 24);
        w.canonicalize();
        off += w;
        if (e == 0) continue;
        PuiseuxSeries p = euler_product(d, terms).pow(static_cast<long>(e));
        out = out * p;
    }
    return PuiseuxSeries::monomial(Rat(1), off, terms) * out;
}

PuiseuxSeries generalized_eta_product(long m, const std::vector<std::pair<long, long>>& factors,
                                      const Rat& prefix, long terms) {
    std::vector<Rat> c(static_cast<size_t>(terms), Rat(0));
    c[0] = 1;
    for (const auto& [res, e] : factors) {
        long reps = e >= 0 ? e : -e;
        for (long rep = 0; rep < reps; ++rep) {
            for (long j = 1; m * j - res < terms; ++j) {
                long a = m * j - res;
                if (a <= 0) continue;
                if (e > 0) {
                    for (long i = terms - 1; i >= a; --i)
                        c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - a)];
                } else {
                    for (long i = a; i < terms; ++i)
                        c[static_cast<size_t>(i)] += c[static_cast<size_t>(i - a)];
                }
            }
        }
    }
    return PuiseuxSeries(prefix, std::move(c));
}

PuiseuxSeries lambert_sum(long s, long cc, long terms) {
    std::vector<Rat> c(static_cast<size_t>(terms), Rat(0));
    for (long j = 1; cc * j < terms; ++j) {
        Int js(1);
        for (long t = 0; t < s; ++t) js *= j;
        for (long l = 1; cc * j * l < terms; ++l) c[static_cast<size_t>(cc * j * l)] += Rat(js);
    }
    return PuiseuxSeries(Rat(0), std::move(c));
}

PuiseuxSeries legendre_lambert_5(long terms) {
    std::vector<Rat> c(static_cast<size_t>(terms), Rat(0));
    c[0] = 1;
    for (long j = 1; j < terms; ++j) {
        long r = j % 5;
        int chi = (r == 1 || r == 4) ? 1 : (r == 2 || r == 3) ? -1 : 0;
        if (chi == 0) continue;
        for (long l = 1; j * l < terms; ++l) c[static_cast<size_t>(j * l)] += Rat(-5 * chi * j);
    }
    return PuiseuxSeries(Rat(0), std::move(c));
}

PuiseuxSeries eisenstein_q(long terms) {
    return PuiseuxSeries::constant(Rat(1), terms) + Rat(240) * lambert_sum(3, 1, terms);
}

PuiseuxSeries eisenstein_r(long terms) {
    return PuiseuxSeries::constant(Rat(1), terms) - Rat(504) * lambert_sum(5, 1, terms);
}

} // namespace etaforge
