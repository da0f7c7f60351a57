#include "doctest.h"
#include "etaforge/qseries.hpp"

#include <set>

using namespace etaforge;

namespace {

PuiseuxSeries from_ints(long offset, std::vector<long> coeffs) {
    std::vector<Rat> c(coeffs.begin(), coeffs.end());
    return PuiseuxSeries(Rat(offset), std::move(c));
}

} // namespace

TEST_CASE("euler product expansion") {
    PuiseuxSeries e = euler_product(1, 13);
    CHECK(e == from_ints(0, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    CHECK(e.window_end() == 13);
}

TEST_CASE("pentagonal sparsity") {
    const long n = 1000;
    PuiseuxSeries e = euler_product(1, n);
    std::set<long> pent;
    for (long j = 1;; ++j) {
        long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
        if (g1 >= n && g2 >= n) break;
        if (g1 < n) pent.insert(g1);
        if (g2 < n) pent.insert(g2);
    }
    for (long i = 0; i < n; ++i) {
        Rat c = e.coefficients()[static_cast<size_t>(i)];
        CHECK((c == -1 || c == 0 || c == 1));
        CHECK((c != 0) == (i == 0 || pent.count(i) > 0));
    }
}

TEST_CASE("euler product equals direct factor multiplication") {
    const long n = 200;
    PuiseuxSeries direct = PuiseuxSeries::constant(1, n);
    for (long j = 1; j < n; ++j) {
        std::vector<Rat> f(static_cast<size_t>(n), Rat(0));
        f[0] = 1;
        f[static_cast<size_t>(j)] = -1;
        direct = direct * PuiseuxSeries(Rat(0), std::move(f));
    }
    CHECK(euler_product(1, n) == direct);
}

TEST_CASE("eta quotient example") {
    PuiseuxSeries u = eta_quotient({{1, 8}, {2, -7}, {5, 0}, {10, 3}}, 8);
    CHECK(u == from_ints(1, {1, -8, 27, -56, 105, -216, 406, -672}));
}

TEST_CASE("series arithmetic basics") {
    const long n = 50;
    PuiseuxSeries e = euler_product(1, n);
    CHECK(e / e == PuiseuxSeries::constant(1, n));
    CHECK(e * e.pow(-1) == PuiseuxSeries::constant(1, n));
    CHECK(e - e == PuiseuxSeries::zero());
    CHECK((e + PuiseuxSeries::zero()) == e);
    CHECK(e.pow(3) == e * e * e);
}

TEST_CASE("addition window is the intersection") {
    PuiseuxSeries a = from_ints(0, {1, 2, 3, 4, 5});
    PuiseuxSeries b = from_ints(2, {7, 7});
    PuiseuxSeries s = a + b;
    CHECK(s.offset() == 0);
    CHECK(s.window_end() == 4);
    CHECK(s == from_ints(0, {1, 2, 10, 11}));
}

TEST_CASE("multiplication and division truncation") {
    PuiseuxSeries a = from_ints(1, {1, 1, 1, 1, 1});
    PuiseuxSeries b = from_ints(-2, {2, 0, 1});
    PuiseuxSeries p = a * b;
    CHECK(p.offset() == -1);
    CHECK(p.truncation() == 3);
    PuiseuxSeries q = a / b;
    CHECK(q.offset() == 3);
    CHECK(q.truncation() == 3);
    CHECK(q * b == a.truncated(3));
}

TEST_CASE("offset mismatch") {
    PuiseuxSeries a = from_ints(0, {1, 1});
    PuiseuxSeries b = PuiseuxSeries::monomial(1, Rat(1, 5), 2);
    CHECK_THROWS_AS(a + b, OffsetMismatch);
    PuiseuxSeries c = PuiseuxSeries::monomial(1, Rat(6, 5), 2);
    CHECK_NOTHROW(b + c);
}

TEST_CASE("rational powers") {
    PuiseuxSeries base = from_ints(2, {4, 8, 4});
    PuiseuxSeries half = base.pow(Rat(1, 2));
    CHECK(half == from_ints(1, {2, 2, 0}));
    CHECK(half * half == base);

    PuiseuxSeries e = euler_product(1, 40);
    CHECK(e.pow(Rat(1, 3)).pow(3L) == e);
    CHECK(e.pow(Rat(-2, 3)).pow(-3L) == e * e);

    PuiseuxSeries bad = from_ints(0, {2, 1});
    CHECK_THROWS_AS(bad.pow(Rat(1, 2)), NonUnitLeadingCoefficient);
    PuiseuxSeries negbase = from_ints(0, {-8, 1});
    CHECK(negbase.pow(Rat(1, 3)).coefficients()[0] == -2);
    CHECK_THROWS_AS(negbase.pow(Rat(1, 2)), NonUnitLeadingCoefficient);
}

TEST_CASE("q derivative and antiderivative") {
    PuiseuxSeries a = from_ints(-1, {3, 5, 0, 7});
    PuiseuxSeries d = a.q_derivative();
    CHECK(d == from_ints(-1, {-3, 0, 0, 14}));
    CHECK(d.antiderivative_dq_over_q() + from_ints(0, {5, 0, 0}) == a);

    PuiseuxSeries with_const = from_ints(0, {1, 2});
    CHECK_THROWS_AS(with_const.antiderivative_dq_over_q(), ConstantTermPresent);
    PuiseuxSeries frac = PuiseuxSeries::monomial(1, Rat(1, 5), 3);
    CHECK_THROWS_AS(frac.antiderivative_dq_over_q(), NonIntegerExponent);
}

TEST_CASE("dilation") {
    const long n = 60;
    CHECK(euler_product(1, n).dilated(2) == euler_product(2, 2 * n));
    CHECK(euler_product(1, n).dilated(5) == euler_product(5, 5 * n));
}

TEST_CASE("coefficient access") {
    PuiseuxSeries a = from_ints(2, {9, 0, 5});
    CHECK(a.coefficient(Rat(2)) == 9);
    CHECK(a.coefficient(Rat(3)) == 0);
    CHECK(a.coefficient(Rat(4)) == 5);
    CHECK(a.coefficient(Rat(0)) == 0);
    CHECK(a.coefficient(Rat(7, 2)) == 0);
    CHECK_THROWS_AS(a.coefficient(Rat(5)), InsufficientTruncation);
}

TEST_CASE("first mismatch") {
    PuiseuxSeries a = from_ints(0, {1, 2, 3, 4});
    PuiseuxSeries b = from_ints(0, {1, 2, 7, 4});
    auto [found, where] = a.first_mismatch(b);
    CHECK(found);
    CHECK(where == 2);
    auto [found2, end2] = a.first_mismatch(a);
    CHECK_FALSE(found2);
    CHECK(end2 == 4);
}

TEST_CASE("lambert and eisenstein series") {
    const long n = 30;
    PuiseuxSeries q4 = eisenstein_q(n);
    PuiseuxSeries r6 = eisenstein_r(n);
    auto sigma = [](long s, long m) {
        long t = 0;
        for (long d = 1; d <= m; ++d) {
            if (m % d) continue;
            long p = 1;
            for (long i = 0; i < s; ++i) p *= d;
            t += p;
        }
        return t;
    };
    for (long m = 1; m < n; ++m) {
        CHECK(q4.coefficient(Rat(m)) == 240 * sigma(3, m));
        CHECK(r6.coefficient(Rat(m)) == -504 * sigma(5, m));
    }
    CHECK(q4.coefficient(Rat(0)) == 1);
    CHECK(r6.coefficient(Rat(0)) == 1);

    PuiseuxSeries leg = legendre_lambert_5(n);
    for (long m = 1; m < n; ++m) {
        long t = 0;
        for (long d = 1; d <= m; ++d) {
            if (m % d) continue;
            long r = d % 5;
            int chi = (r == 1 || r == 4) ? 1 : (r == 2 || r == 3) ? -1 : 0;
            t += chi * d;
        }
        CHECK(leg.coefficient(Rat(m)) == -5 * t);
    }
    CHECK(leg.coefficient(Rat(0)) == 1);
}

TEST_CASE("legendre lambert sum is an eta quotient") {
    const long n = 200;
    PuiseuxSeries lhs = legendre_lambert_5(n);
    PuiseuxSeries rhs = euler_product(1, n).pow(5) / euler_product(5, n);
    CHECK(lhs == rhs);
}

TEST_CASE("generalized eta products") {
    const long n = 40;
    // product over all residues equals the plain Euler product without prefix
    PuiseuxSeries all = generalized_eta_product(5, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, Rat(0), n);
    CHECK(all == euler_product(1, n));
}
