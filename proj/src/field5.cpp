#include "etaforge/field5.hpp"

#include <algorithm>
#include <sstream>

namespace etaforge {

std::string Sqrt5::to_string() const {
    std::ostringstream os;
    os << "(" << a.get_str() << (b < 0 ? "" : "+") << b.get_str() << "*sqrt5)";
    return os.str();
}

Sqrt5 quartet_alpha() { return {Rat(1, 2), Rat(1, 2)}; }
Sqrt5 quartet_beta() { return {Rat(1, 2), Rat(-1, 2)}; }
Sqrt5 quartet_gamma() { return {Rat(-2), Rat(1)}; }
Sqrt5 quartet_delta() { return {Rat(-2), Rat(-1)}; }

void Poly5::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly5 Poly5::constant(const Sqrt5& v) {
    return Poly5(std::vector<Sqrt5>{v});
}

Poly5 Poly5::linear(const Sqrt5& root) {
    return Poly5(std::vector<Sqrt5>{-root, Sqrt5(1)});
}

bool Poly5::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Sqrt5& v) { return v.is_rational(); });
}

Poly5 Poly5::conj() const {
    std::vector<Sqrt5> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].conj();
    return Poly5(std::move(r));
}

Sqrt5 Poly5::eval(const Sqrt5& x) const {
    Sqrt5 acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly5 Poly5::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Sqrt5> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Sqrt5(Rat(static_cast<long>(i))) * c_[i];
    return Poly5(std::move(r));
}

Poly5 Poly5::pow(long n) const {
    Poly5 result = constant(Sqrt5(1));
    Poly5 base = *this;
    for (long e = n; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

std::vector<Sqrt5> Poly5::shifted(const Sqrt5& x0, long m) const {
    // repeated synthetic division by (x - x0)
    std::vector<Sqrt5> out;
    out.reserve(static_cast<size_t>(m));
    std::vector<Sqrt5> cur = c_;
    for (long j = 0; j < m; ++j) {
        if (cur.empty()) {
            out.emplace_back();
            continue;
        }
        Sqrt5 rem;
        std::vector<Sqrt5> quot(cur.size() > 1 ? cur.size() - 1 : 0);
        Sqrt5 acc;
        for (size_t i = cur.size(); i-- > 0;) {
            acc = acc * x0 + cur[i];
            if (i > 0)
                quot[i - 1] = acc;
            else
                rem = acc;
        }
        out.push_back(rem);
        cur = std::move(quot);
    }
    return out;
}

Poly5 operator-(const Poly5& p) {
    std::vector<Sqrt5> r(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = -p.c_[i];
    return Poly5(std::move(r));
}

Poly5 operator+(const Poly5& p, const Poly5& q) {
    std::vector<Sqrt5> r(std::max(p.c_.size(), q.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < p.c_.size()) r[i] = r[i] + p.c_[i];
        if (i < q.c_.size()) r[i] = r[i] + q.c_[i];
    }
    return Poly5(std::move(r));
}

Poly5 operator-(const Poly5& p, const Poly5& q) { return p + (-q); }

Poly5 operator*(const Poly5& p, const Poly5& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Sqrt5> r(p.c_.size() + q.c_.size() - 1);
    for (size_t i = 0; i < p.c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
    return Poly5(std::move(r));
}

Poly5 operator*(const Sqrt5& s, const Poly5& p) {
    std::vector<Sqrt5> r(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
    return Poly5(std::move(r));
}

std::pair<Poly5, Poly5> Poly5::divmod(const Poly5& n, const Poly5& d) {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (n.degree() < d.degree()) return {{}, n};
    std::vector<Sqrt5> rem = n.c_;
    std::vector<Sqrt5> quot(static_cast<size_t>(n.degree() - d.degree()) + 1);
    Sqrt5 lcinv = d.leading().inv();
    for (size_t qi = quot.size(); qi-- > 0;) {
        Sqrt5 f = rem[qi + d.c_.size() - 1] * lcinv;
        quot[qi] = f;
        if (!f.is_zero())
            for (size_t j = 0; j < d.c_.size(); ++j) rem[qi + j] = rem[qi + j] - f * d.c_[j];
    }
    return {Poly5(std::move(quot)), Poly5(std::move(rem))};
}

Poly5 Poly5::monic() const {
    if (is_zero()) return {};
    return leading().inv() * (*this);
}

Poly5 Poly5::gcd(Poly5 a, Poly5 b) {
    // monic remainder sequence keeps the rational coefficients small
    while (!b.is_zero()) {
        b = b.monic();
        Poly5 r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

std::string Poly5::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << c_[i].to_string();
        if (i == 1) os << "*k";
        if (i > 1) os << "*k^" << i;
    }
    return os.str();
}

RationalFunction5::RationalFunction5(Poly5 n, Poly5 d) {
    if (d.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (n.is_zero()) {
        num = Poly5();
        den = Poly5::constant(Sqrt5(1));
        return;
    }
    Poly5 g = Poly5::gcd(n, d);
    if (g.degree() > 0) {
        n = Poly5::divmod(n, g).first;
        d = Poly5::divmod(d, g).first;
    }
    Sqrt5 lcinv = d.leading().inv();
    num = lcinv * n;
    den = lcinv * d;
}

Sqrt5 RationalFunction5::eval(const Sqrt5& x) const {
    Sqrt5 dv = den.eval(x);
    if (dv.is_zero()) throw PoleAtExpansionPoint("evaluation at a pole");
    return num.eval(x) / dv;
}

RationalFunction5 RationalFunction5::derivative() const {
    return {num.derivative() * den - num * den.derivative(), den * den};
}

RationalFunction5 operator+(const RationalFunction5& f, const RationalFunction5& g) {
    return {f.num * g.den + g.num * f.den, f.den * g.den};
}

RationalFunction5 operator-(const RationalFunction5& f, const RationalFunction5& g) {
    return {f.num * g.den - g.num * f.den, f.den * g.den};
}

RationalFunction5 operator*(const RationalFunction5& f, const RationalFunction5& g) {
    return {f.num * g.num, f.den * g.den};
}

RationalFunction5 operator/(const RationalFunction5& f, const RationalFunction5& g) {
    if (g.is_zero()) throw DivisionByZero("division by zero rational function");
    return {f.num * g.den, f.den * g.num};
}

std::string RationalFunction5::to_string() const {
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

std::vector<std::pair<Sqrt5, long>> factor_level10_denominator(const Poly5& den) {
    if (den.is_zero()) throw DivisionByZero("factoring the zero polynomial");
    const Sqrt5 candidates[] = {Sqrt5(0),        Sqrt5(1),       Sqrt5(-1),      quartet_alpha(),
                                quartet_beta(),  quartet_gamma(), quartet_delta()};
    std::vector<std::pair<Sqrt5, long>> roots;
    Poly5 rem = den.monic();
    for (const Sqrt5& p : candidates) {
        long mult = 0;
        while (rem.degree() >= 1 && rem.eval(p).is_zero()) {
            rem = Poly5::divmod(rem, Poly5::linear(p)).first;
            ++mult;
        }
        if (mult > 0) roots.emplace_back(p, mult);
    }
    if (rem.degree() == 1) {
        Sqrt5 p = -rem.coeff(0) / rem.coeff(1);
        bool merged = false;
        for (auto& [q, m] : roots)
            if (q == p) {
                ++m;
                merged = true;
            }
        if (!merged) roots.emplace_back(p, 1);
        rem = Poly5::constant(Sqrt5(1));
    }
    if (rem.degree() >= 2)
        throw UnsplitDenominator("denominator has an irreducible factor of degree " +
                                 std::to_string(rem.degree()) + " over Q(sqrt5)");
    return roots;
}

namespace {

// truncated series product/inverse over Q(sqrt5), length m
std::vector<Sqrt5> series_mul(const std::vector<Sqrt5>& a, const std::vector<Sqrt5>& b, long m) {
    std::vector<Sqrt5> r(static_cast<size_t>(m));
    for (long i = 0; i < m && i < static_cast<long>(a.size()); ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (long j = 0; i + j < m && j < static_cast<long>(b.size()); ++j)
            r[static_cast<size_t>(i + j)] =
                r[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    return r;
}

std::vector<Sqrt5> series_inv(const std::vector<Sqrt5>& a, long m) {
    if (a.empty() || a[0].is_zero()) throw DivisionByZero("series inverse with zero constant term");
    std::vector<Sqrt5> r(static_cast<size_t>(m));
    Sqrt5 c0inv = a[0].inv();
    r[0] = c0inv;
    for (long n = 1; n < m; ++n) {
        Sqrt5 s;
        for (long j = 1; j <= n && j < static_cast<long>(a.size()); ++j)
            s = s + a[static_cast<size_t>(j)] * r[static_cast<size_t>(n - j)];
        r[static_cast<size_t>(n)] = -c0inv * s;
    }
    return r;
}

} // namespace

std::vector<Sqrt5> taylor_at_point(const RationalFunction5& f, const Sqrt5& x0, long m) {
    if (f.den.eval(x0).is_zero())
        throw PoleAtExpansionPoint("Taylor expansion at a pole of the function");
    if (m <= 0) return {};
    std::vector<Sqrt5> n = f.num.shifted(x0, m);
    std::vector<Sqrt5> d = f.den.shifted(x0, m);
    return series_mul(n, series_inv(d, m), m);
}

Sqrt5 residue_at(const RationalFunction5& f, const Sqrt5& p) {
    if (f.is_zero()) return {};
    Poly5 lin = Poly5::linear(p);
    long mult = 0;
    Poly5 dred = f.den;
    while (dred.degree() >= 1 && dred.eval(p).is_zero()) {
        dred = Poly5::divmod(dred, lin).first;
        ++mult;
    }
    if (mult == 0) return {};
    // f = A(t) / t^mult with t = k - p; residue is the t^{mult-1} coeff of A
    std::vector<Sqrt5> n = f.num.shifted(p, mult);
    std::vector<Sqrt5> d = dred.shifted(p, mult);
    std::vector<Sqrt5> a = series_mul(n, series_inv(d, mult), mult);
    return a[static_cast<size_t>(mult - 1)];
}

PartialFractionForm partial_fractions(const RationalFunction5& f) {
    PartialFractionForm pf;
    if (f.is_zero()) return pf;
    auto [quot, rem] = Poly5::divmod(f.num, f.den);
    pf.poly = std::move(quot);
    if (rem.is_zero()) return pf;
    auto roots = factor_level10_denominator(f.den);
    for (const auto& [p, mult] : roots) {
        Poly5 other = Poly5::divmod(f.den, Poly5::linear(p).pow(mult)).first;
        std::vector<Sqrt5> n = rem.shifted(p, mult);
        std::vector<Sqrt5> d = other.shifted(p, mult);
        std::vector<Sqrt5> a = series_mul(n, series_inv(d, mult), mult);
        // a[m-j] multiplies (k-p)^{-j}
        PoleTerm term{p, std::vector<Sqrt5>(static_cast<size_t>(mult))};
        for (long j = 1; j <= mult; ++j)
            term.coeffs[static_cast<size_t>(j - 1)] = a[static_cast<size_t>(mult - j)];
        while (!term.coeffs.empty() && term.coeffs.back().is_zero()) term.coeffs.pop_back();
        if (!term.coeffs.empty()) pf.poles.push_back(std::move(term));
    }
    return pf;
}

namespace {

// sum_j coeffs[j-1] (k-p)^{-j} over the common denominator (k-p)^{order}
RationalFunction5 pole_contribution(const Sqrt5& point, const std::vector<Sqrt5>& coeffs) {
    Poly5 lin = Poly5::linear(point);
    long order = static_cast<long>(coeffs.size());
    Poly5 num;
    for (long j = 1; j <= order; ++j) {
        const Sqrt5& c = coeffs[static_cast<size_t>(j - 1)];
        if (c.is_zero()) continue;
        num = num + c * lin.pow(order - j);
    }
    return {num, lin.pow(order)};
}

} // namespace

RationalFunction5 assemble(const PartialFractionForm& pf) {
    RationalFunction5 acc(pf.poly, Poly5::constant(Sqrt5(1)));
    for (const auto& term : pf.poles) {
        if (term.coeffs.empty()) continue;
        acc = acc + pole_contribution(term.point, term.coeffs);
    }
    return acc;
}

RationalFunction5 integrate_partial_fractions(const PartialFractionForm& pf) {
    for (const auto& term : pf.poles)
        if (!term.coeffs.empty() && !term.coeffs[0].is_zero())
            throw LogTermPresent("first-order pole at " + term.point.to_string());
    // integrate the polynomial part termwise
    std::vector<Sqrt5> ip(pf.poly.coeffs().size() + 1);
    for (size_t i = 0; i < pf.poly.coeffs().size(); ++i)
        ip[i + 1] = pf.poly.coeffs()[i] / Sqrt5(Rat(static_cast<long>(i + 1)));
    RationalFunction5 acc(Poly5(std::move(ip)), Poly5::constant(Sqrt5(1)));
    for (const auto& term : pf.poles) {
        if (term.coeffs.size() < 2) continue;
        // c (k-p)^{-order} integrates to c/(1-order) (k-p)^{1-order}
        std::vector<Sqrt5> integ(term.coeffs.size() - 1);
        for (size_t j = 1; j < term.coeffs.size(); ++j) {
            long order = static_cast<long>(j + 1);
            integ[j - 1] = term.coeffs[j] / Sqrt5(Rat(1 - order));
        }
        while (!integ.empty() && integ.back().is_zero()) integ.pop_back();
        if (integ.empty()) continue;
        acc = acc + pole_contribution(term.point, integ);
    }
    return acc;
}

} // namespace etaforge
