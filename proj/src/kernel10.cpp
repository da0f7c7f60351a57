#include "etaforge/kernel10.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "json.hpp"

namespace etaforge {

namespace {

// ---- truncated power series over a field F (default-constructed = 0) ----

template <class F>
std::vector<F> tmul(const std::vector<F>& a, const std::vector<F>& b, size_t m) {
    std::vector<F> r(m);
    for (size_t i = 0; i < a.size() && i < m; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < m && j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

template <class F>
std::vector<F> tinv(const std::vector<F>& a, size_t m) {
    std::vector<F> r(m);
    F c = a[0].inv();
    r[0] = c;
    for (size_t n = 1; n < m; ++n) {
        F s{};
        for (size_t j = 1; j <= n && j < a.size(); ++j) s = s + a[j] * r[n - j];
        r[n] = F{} - c * s;
    }
    return r;
}

template <class F>
std::vector<F> tpow(std::vector<F> base, long e, size_t m) {
    if (e < 0) {
        base = tinv(base, m);
        e = -e;
    }
    std::vector<F> r(m);
    r[0] = F(1);
    while (e > 0) {
        if (e & 1) r = tmul(r, base, m);
        e >>= 1;
        if (e > 0) base = tmul(base, base, m);
    }
    return r;
}

// ---- local data at the finite poles of f(k) dk ----

struct LocalPole {
    const char* name;
    long order;
    bool negate;
    std::vector<std::pair<std::array<Sqrt5, 3>, long>> factors;
};

std::array<Sqrt5, 3> quad(Sqrt5 c0, Sqrt5 c1, Sqrt5 c2) {
    return {std::move(c0), std::move(c1), std::move(c2)};
}

std::vector<LocalPole> finite_pole_locals(const ParamExponents& a) {
    const long a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3];
    const Sqrt5 A = quartet_alpha(), B = quartet_beta(), G = quartet_gamma(), D = quartet_delta();
    std::vector<LocalPole> out;
    out.push_back({"0", std::max(0L, 1 - a0), false,
                   {{quad(Sqrt5(1), Sqrt5(0), Sqrt5(-1)), a1},
                    {quad(Sqrt5(1), Sqrt5(1), Sqrt5(-1)), a2},
                    {quad(Sqrt5(1), Sqrt5(-4), Sqrt5(-1)), a3}}});
    out.push_back({"1", std::max(0L, -a1), (a1 & 1) != 0,
                   {{quad(Sqrt5(1), Sqrt5(1), Sqrt5(0)), a0 - 1},
                    {quad(Sqrt5(2), Sqrt5(1), Sqrt5(0)), a1},
                    {quad(Sqrt5(1), Sqrt5(-1), Sqrt5(-1)), a2},
                    {quad(Sqrt5(-4), Sqrt5(-6), Sqrt5(-1)), a3}}});
    out.push_back({"-1", std::max(0L, -a1), false,
                   {{quad(Sqrt5(-1), Sqrt5(1), Sqrt5(0)), a0 - 1},
                    {quad(Sqrt5(2), Sqrt5(-1), Sqrt5(0)), a1},
                    {quad(Sqrt5(-1), Sqrt5(3), Sqrt5(-1)), a2},
                    {quad(Sqrt5(4), Sqrt5(-2), Sqrt5(-1)), a3}}});
    out.push_back({"alpha", std::max(0L, -a2), (a2 & 1) != 0,
                   {{quad(A, Sqrt5(1), Sqrt5(0)), a0 - 1},
                    {quad(Sqrt5(1) - A * A, Sqrt5(-2) * A, Sqrt5(-1)), a1},
                    {quad(A - B, Sqrt5(1), Sqrt5(0)), a2},
                    {quad(Sqrt5(1) - Sqrt5(4) * A - A * A, Sqrt5(-4) - Sqrt5(2) * A, Sqrt5(-1)), a3}}});
    out.push_back({"gamma", std::max(0L, -a3), (a3 & 1) != 0,
                   {{quad(G, Sqrt5(1), Sqrt5(0)), a0 - 1},
                    {quad(Sqrt5(1) - G * G, Sqrt5(-2) * G, Sqrt5(-1)), a1},
                    {quad(Sqrt5(1) + G - G * G, Sqrt5(1) - Sqrt5(2) * G, Sqrt5(-1)), a2},
                    {quad(G - D, Sqrt5(1), Sqrt5(0)), a3}}});
    return out;
}

Sqrt5 local_residue(const LocalPole& lp) {
    if (lp.order == 0) return {};
    size_t m = static_cast<size_t>(lp.order);
    std::vector<Sqrt5> acc(m);
    acc[0] = Sqrt5(1);
    for (const auto& [cf, e] : lp.factors) {
        if (e == 0) continue;
        std::vector<Sqrt5> f(cf.begin(), cf.end());
        acc = tmul(acc, tpow(std::move(f), e, m), m);
    }
    Sqrt5 r = acc[m - 1];
    return lp.negate ? -r : r;
}

Sqrt5 residue_at_infinity(const ParamExponents& a) {
    if (a[0] > 0) return {};
    size_t m = static_cast<size_t>(1 - a[0]);
    std::vector<Sqrt5> acc(m);
    acc[0] = Sqrt5(1);
    const std::array<std::array<Sqrt5, 3>, 3> facs = {quad(Sqrt5(-1), Sqrt5(0), Sqrt5(1)),
                                                      quad(Sqrt5(-1), Sqrt5(1), Sqrt5(1)),
                                                      quad(Sqrt5(-1), Sqrt5(-4), Sqrt5(1))};
    for (int i = 0; i < 3; ++i) {
        long e = a[static_cast<size_t>(i + 1)];
        if (e == 0) continue;
        std::vector<Sqrt5> f(facs[static_cast<size_t>(i)].begin(), facs[static_cast<size_t>(i)].end());
        acc = tmul(acc, tpow(std::move(f), e, m), m);
    }
    return -acc[m - 1];
}

// ---- arithmetic mod the Mersenne prime 2^61 - 1 (prefilter only) ----

constexpr uint64_t P61 = (uint64_t(1) << 61) - 1;

uint64_t add61(uint64_t a, uint64_t b) {
    uint64_t r = a + b;
    if (r >= P61) r -= P61;
    return r;
}

uint64_t sub61(uint64_t a, uint64_t b) { return add61(a, P61 - b); }

uint64_t mul61(uint64_t a, uint64_t b) {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    uint64_t r = static_cast<uint64_t>(z & P61) + static_cast<uint64_t>(z >> 61);
    r = (r & P61) + (r >> 61);
    if (r >= P61) r -= P61;
    return r;
}

uint64_t pow61(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul61(r, a);
        a = mul61(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t inv61(uint64_t a) { return pow61(a, P61 - 2); }

struct Fp {
    uint64_t v = 0;
    Fp() = default;
    explicit Fp(long x) {
        long r = x % static_cast<long>(P61);
        if (r < 0) r += static_cast<long>(P61);
        v = static_cast<uint64_t>(r);
    }
    static Fp raw(uint64_t x) {
        Fp f;
        f.v = x;
        return f;
    }
    bool is_zero() const { return v == 0; }
    Fp inv() const { return raw(inv61(v)); }
    friend Fp operator+(Fp a, Fp b) { return raw(add61(a.v, b.v)); }
    friend Fp operator-(Fp a, Fp b) { return raw(sub61(a.v, b.v)); }
    friend Fp operator*(Fp a, Fp b) { return raw(mul61(a.v, b.v)); }
};

uint64_t rat_mod61(const Rat& x) {
    uint64_t n = mpz_fdiv_ui(x.get_num().get_mpz_t(), P61);
    uint64_t d = mpz_fdiv_ui(x.get_den().get_mpz_t(), P61);
    return mul61(n, inv61(d));
}

uint64_t sqrt5_mod61() {
    static const uint64_t s = [] {
        uint64_t r = pow61(5, (P61 + 1) / 4);
        if (mul61(r, r) != 5) throw std::logic_error("no square root of 5 mod 2^61-1");
        return r;
    }();
    return s;
}

Fp fp_of(const Sqrt5& x) {
    return Fp::raw(add61(rat_mod61(x.a), mul61(rat_mod61(x.b), sqrt5_mod61())));
}

bool residues_vanish_mod_p(const ParamExponents& a) {
    auto locals = finite_pole_locals(a);
    // an order-1 pole has a unit residue, so it can never vanish
    for (const auto& lp : locals)
        if (lp.order == 1) return false;
    std::sort(locals.begin(), locals.end(),
              [](const LocalPole& x, const LocalPole& y) { return x.order < y.order; });
    for (const auto& lp : locals) {
        if (lp.order < 2) continue;
        size_t m = static_cast<size_t>(lp.order);
        std::vector<Fp> acc(m);
        acc[0] = Fp(1);
        for (const auto& [cf, e] : lp.factors) {
            if (e == 0) continue;
            std::vector<Fp> f = {fp_of(cf[0]), fp_of(cf[1]), fp_of(cf[2])};
            acc = tmul(acc, tpow(std::move(f), e, m), m);
        }
        if (!acc[m - 1].is_zero()) return false;
    }
    return true;
}

} // namespace

bool is_admissible(const EtaExponents& e) {
    if (e[0] + e[1] + e[2] + e[3] != 4) return false;
    long w = e[0] + 2 * e[1] + 5 * e[2] + 10 * e[3];
    return ((w % 24) + 24) % 24 == 0;
}

std::array<Rat, 4> e_to_a_exact(const EtaExponents& e) {
    std::array<Rat, 4> a = {Rat(e[0] + 2 * e[1] + 5 * e[2] + 10 * e[3], 24),
                            Rat(-4 * e[0] - 5 * e[1] + 4 * e[2] - e[3], 24),
                            Rat(-e[0] + 4 * e[1] - 5 * e[2] - 4 * e[3], 24),
                            Rat(4 * e[0] - e[1] - 4 * e[2] - 5 * e[3], 24)};
    for (auto& x : a) x.canonicalize();
    return a;
}

ParamExponents e_to_a(const EtaExponents& e) {
    auto ax = e_to_a_exact(e);
    ParamExponents out{};
    for (size_t i = 0; i < 4; ++i) {
        if (ax[i].get_den() != 1)
            throw NonIntegralParams("parameter exponent " + std::to_string(i) +
                                    " is non-integral: " + ax[i].get_str());
        out[i] = ax[i].get_num().get_si();
    }
    return out;
}

EtaExponents a_to_e(const ParamExponents& a) {
    if (a[0] + a[1] + a[2] + a[3] != 0)
        throw std::invalid_argument("parameter exponents must sum to zero");
    const long a1 = a[1], a2 = a[2], a3 = a[3];
    return {1 - a1 - 2 * a2 + 3 * a3, 2 + a1 + 4 * a2 - a3, 3 + 5 * a1 + 2 * a2 + a3,
            -2 - 5 * a1 - 4 * a2 - 3 * a3};
}

FamilyRow family_exponents(int family, long m) {
    if (family < 1 || family > 4) throw std::invalid_argument("family index must be 1..4");
    if (m < 0) throw std::invalid_argument("family parameter m must be nonnegative");
    FamilyRow row;
    switch (family) {
        case 1:
            row.e = {10 * m + 8, -10 * m - 7, -2 * m, 2 * m + 3};
            row.a = {1, 0, -2 * m - 2, 2 * m + 1};
            break;
        case 2:
            row.e = {-2 * m, 2 * m + 3, 10 * m + 8, -10 * m - 7};
            row.a = {-2 * m - 1, 2 * m + 1, 0, 0};
            break;
        case 3:
            row.e = {2 * m + 3, -2 * m, -10 * m - 7, 10 * m + 8};
            row.a = {2 * m + 2, -2 * m - 2, 0, 0};
            break;
        default:
            row.e = {-10 * m - 7, 10 * m + 8, 2 * m + 3, -2 * m};
            row.a = {1, 0, 2 * m + 1, -2 * m - 2};
            break;
    }
    if (e_to_a(row.e) != row.a) throw std::logic_error("family table inconsistency");
    return row;
}

PuiseuxSeries k_series(long terms) {
    return generalized_eta_product(
        10, {{1, 1}, {2, 1}, {8, 1}, {9, 1}, {3, -1}, {4, -1}, {6, -1}, {7, -1}}, Rat(1), terms);
}

PuiseuxSeries r_series(long terms) {
    return generalized_eta_product(5, {{1, 1}, {4, 1}, {2, -1}, {3, -1}}, Rat(1, 5), terms);
}

PuiseuxSeries y10_series(long terms) {
    return eta_quotient({{1, 1}, {2, 2}, {5, 3}, {10, -2}}, terms);
}

PuiseuxSeries eta_exponent_series(const EtaExponents& e, long terms) {
    return eta_quotient({{1, e[0]}, {2, e[1]}, {5, e[2]}, {10, e[3]}}, terms);
}

RationalFunction5 integrand_k_form(const ParamExponents& a) {
    const std::array<Poly5, 4> base = {
        Poly5(std::vector<Sqrt5>{Sqrt5(0), Sqrt5(1)}),
        Poly5(std::vector<Sqrt5>{Sqrt5(1), Sqrt5(0), Sqrt5(-1)}),
        Poly5(std::vector<Sqrt5>{Sqrt5(1), Sqrt5(1), Sqrt5(-1)}),
        Poly5(std::vector<Sqrt5>{Sqrt5(1), Sqrt5(-4), Sqrt5(-1)})};
    const std::array<long, 4> ex = {a[0] - 1, a[1], a[2], a[3]};
    Poly5 num = Poly5::constant(Sqrt5(1));
    Poly5 den = num;
    for (size_t i = 0; i < 4; ++i) {
        if (ex[i] > 0) num = num * base[i].pow(ex[i]);
        if (ex[i] < 0) den = den * base[i].pow(-ex[i]);
    }
    return {num, den};
}

RationalityCertificate decide_rationality(const ParamExponents& a, bool with_g) {
    if (a[0] + a[1] + a[2] + a[3] != 0)
        throw std::invalid_argument("parameter exponents must sum to zero");
    RationalityCertificate cert;
    cert.a = a;
    auto locals = finite_pole_locals(a);
    Sqrt5 r0 = local_residue(locals[0]);
    Sqrt5 r1 = local_residue(locals[1]);
    Sqrt5 rm1 = local_residue(locals[2]);
    Sqrt5 ra = local_residue(locals[3]);
    Sqrt5 rg = local_residue(locals[4]);
    cert.residues = {{"0", r0},          {"1", r1},           {"-1", rm1},
                     {"alpha", ra},      {"beta", ra.conj()}, {"gamma", rg},
                     {"delta", rg.conj()}, {"inf", residue_at_infinity(a)}};
    cert.rational =
        r0.is_zero() && r1.is_zero() && rm1.is_zero() && ra.is_zero() && rg.is_zero();
    if (cert.rational && with_g) {
        RationalFunction5 f = integrand_k_form(a);
        RationalFunction5 g = integrate_partial_fractions(partial_fractions(f));
        if (!(g.derivative() == f)) throw std::logic_error("antiderivative check failed");
        if (!g.is_rational()) throw std::logic_error("antiderivative has irrational coefficients");
        cert.g = std::move(g);
    }
    return cert;
}

bool is_rational_quick(const ParamExponents& a) {
    if (!residues_vanish_mod_p(a)) return false;
    return decide_rationality(a, false).rational;
}

std::pair<PuiseuxSeries, PuiseuxSeries> rp_identity_series(int index, long terms) {
    PuiseuxSeries k = k_series(terms);
    PuiseuxSeries one = PuiseuxSeries::constant(1, terms);
    PuiseuxSeries k2 = k * k;
    PuiseuxSeries p1 = one - k2;
    PuiseuxSeries p2 = one + k - k2;
    PuiseuxSeries p3 = one - Rat(4) * k - k2;
    PuiseuxSeries y6 = y10_series(terms).pow(6);
    PuiseuxSeries lhs, num, den;
    switch (index) {
        case 1:
            lhs = eta_quotient({{1, 24}}, terms);
            num = k * p3.pow(4);
            den = p1.pow(4) * p2;
            break;
        case 2:
            lhs = eta_quotient({{2, 24}}, terms);
            num = k.pow(2) * p2.pow(4);
            den = p1.pow(5) * p3;
            break;
        case 3:
            lhs = eta_quotient({{5, 24}}, terms);
            num = k.pow(5) * p1.pow(4);
            den = p2.pow(5) * p3.pow(4);
            break;
        case 4:
            lhs = eta_quotient({{10, 24}}, terms);
            num = k.pow(10);
            den = p1 * p2.pow(4) * p3.pow(5);
            break;
        default:
            throw std::invalid_argument("identity index must be 1..4");
    }
    return {lhs, y6 * num / den};
}

PuiseuxSeries compose_rational_with_k(const RationalFunction5& g, long terms) {
    if (!g.is_rational())
        throw NonInvertibleComposition("rational function has irrational coefficients");
    PuiseuxSeries s = k_series(terms);
    auto eval_poly = [&](const Poly5& p) {
        PuiseuxSeries acc;
        for (long i = p.degree(); i >= 0; --i) {
            acc = acc * s;
            Rat c = p.coeff(i).a;
            if (c != 0) acc = acc + PuiseuxSeries::constant(c, terms);
        }
        return acc;
    };
    PuiseuxSeries num = eval_poly(g.num);
    PuiseuxSeries den = eval_poly(g.den);
    if (den.is_zero()) throw NonInvertibleComposition("denominator composes to the zero series");
    return num / den;
}

std::string certificate_to_json(const RationalityCertificate& cert) {
    nlohmann::json j;
    j["a"] = cert.a;
    j["rational"] = cert.rational;
    nlohmann::json res = nlohmann::json::object();
    for (const auto& [name, r] : cert.residues)
        res[name] = {{"a", r.a.get_str()}, {"b", r.b.get_str()}};
    j["residues"] = res;
    if (cert.g) {
        std::vector<std::string> num, den;
        for (const auto& c : cert.g->num.coeffs()) num.push_back(c.a.get_str());
        for (const auto& c : cert.g->den.coeffs()) den.push_back(c.a.get_str());
        j["g"] = {{"num", num}, {"den", den}};
    }
    return j.dump(2);
}

} // namespace etaforge
