#include "doctest.h"
#include "etaforge/kernel10.hpp"

using namespace etaforge;

namespace {

Poly5 poly_from_longs(std::vector<long> cs) {
    std::vector<Sqrt5> v(cs.begin(), cs.end());
    return Poly5(std::move(v));
}

bool equal_up_to_constant(const RationalFunction5& f, const RationalFunction5& g) {
    RationalFunction5 diff = f - g;
    return diff.den == Poly5::constant(Sqrt5(1)) && diff.num.degree() <= 0;
}

const Sqrt5 zero5{};

} // namespace

TEST_CASE("exponent maps") {
    CHECK(e_to_a({8, -7, 0, 3}) == ParamExponents{1, 0, -2, 1});
    CHECK(e_to_a({-13, 8, 9, 0}) == ParamExponents{2, 2, 0, -4});
    CHECK(e_to_a({14, -19, -6, 15}) == ParamExponents{4, 0, -5, 1});
    CHECK_THROWS_AS(e_to_a({2, 4, -2, 0}), NonIntegralParams);

    CHECK(is_admissible({8, -7, 0, 3}));
    CHECK(is_admissible({2, 4, -2, 0}));
    CHECK_FALSE(is_admissible({4, 0, 0, 0}));
    CHECK_FALSE(is_admissible({8, -7, 0, 2}));

    for (ParamExponents a : {ParamExponents{1, 0, -2, 1}, ParamExponents{2, 2, 0, -4},
                             ParamExponents{-3, 3, 0, 0}, ParamExponents{4, 0, -5, 1}}) {
        CHECK(e_to_a(a_to_e(a)) == a);
        CHECK(a[0] + a[1] + a[2] + a[3] == 0);
    }
}

TEST_CASE("involution pairs rows") {
    EtaExponents row10 = {8, -7, 0, 3};
    EtaExponents flipped = {row10[3], row10[2], row10[1], row10[0]};
    CHECK(e_to_a(flipped) == family_exponents(3, 0).a);
}

TEST_CASE("family rows") {
    auto f1 = family_exponents(1, 0);
    CHECK(f1.e == EtaExponents{8, -7, 0, 3});
    CHECK(f1.a == ParamExponents{1, 0, -2, 1});
    auto f2 = family_exponents(2, 1);
    CHECK(f2.e == EtaExponents{-2, 5, 18, -17});
    CHECK(f2.a == ParamExponents{-3, 3, 0, 0});
    auto f4 = family_exponents(4, 0);
    CHECK(f4.e == EtaExponents{-7, 8, 3, 0});
    CHECK(f4.a == ParamExponents{1, 0, 1, -2});
    for (int fam = 1; fam <= 4; ++fam)
        for (long m = 0; m <= 8; ++m) {
            auto row = family_exponents(fam, m);
            CHECK(is_admissible(row.e));
            CHECK(e_to_a(row.e) == row.a);
        }
    CHECK_THROWS_AS(family_exponents(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_exponents(1, -1), std::invalid_argument);
}

TEST_CASE("k series equals the continued-fraction product") {
    const long n = 200;
    PuiseuxSeries k = k_series(n);
    CHECK(k.offset() == 1);
    PuiseuxSeries r1 = r_series(n);
    PuiseuxSeries r2 = r_series(n).dilated(2);
    CHECK(k == r1 * r2 * r2);
}

TEST_CASE("y10 is the logarithmic derivative of k") {
    const long n = 200;
    PuiseuxSeries k = k_series(n);
    CHECK(y10_series(n) == k.q_derivative() / k);
}

TEST_CASE("eta parametrizations by k") {
    for (int i = 1; i <= 4; ++i) {
        auto [lhs, rhs] = rp_identity_series(i, 100);
        CHECK(lhs.offset() == rhs.offset());
        auto [mismatch, where] = lhs.first_mismatch(rhs);
        CAPTURE(i);
        CAPTURE(where.get_str());
        CHECK_FALSE(mismatch);
    }
    auto [lhs2, rhs2] = rp_identity_series(2, 1);
    CHECK(lhs2.offset() == 2);
    CHECK(rhs2.offset() == 2);
    CHECK_THROWS_AS(rp_identity_series(0, 10), std::invalid_argument);
}

TEST_CASE("rationality decision examples") {
    auto c1 = decide_rationality({1, 0, -2, 1});
    CHECK(c1.rational);
    REQUIRE(c1.g.has_value());
    RationalFunction5 target(poly_from_longs({-1, 0, -1}), poly_from_longs({1, 1, -1}));
    CHECK(equal_up_to_constant(*c1.g, target));
    CHECK(c1.g->derivative() == integrand_k_form({1, 0, -2, 1}));

    auto c0 = decide_rationality({0, 0, 0, 0});
    CHECK_FALSE(c0.rational);
    CHECK(c0.residues[0].first == "0");
    CHECK(c0.residues[0].second == Sqrt5(1));

    auto c12 = decide_rationality({1, 3, 1, -5});
    CHECK(c12.rational);
    RationalFunction5 t12(poly_from_longs({1, -6, 37, -98, 35, 110, 55, 10}),
                          Sqrt5(10) * poly_from_longs({1, -4, -1}).pow(4));
    CHECK(equal_up_to_constant(*c12.g, t12));
}

TEST_CASE("residue bookkeeping") {
    for (long a1 = -2; a1 <= 2; ++a1)
        for (long a2 = -2; a2 <= 2; ++a2)
            for (long a3 = -2; a3 <= 2; ++a3) {
                ParamExponents a = {-(a1 + a2 + a3), a1, a2, a3};
                auto cert = decide_rationality(a, false);
                REQUIRE(cert.residues.size() == 8);
                Sqrt5 sum;
                for (auto& [name, r] : cert.residues) sum = sum + r;
                CAPTURE(a1);
                CAPTURE(a2);
                CAPTURE(a3);
                CHECK(sum == zero5);
                CHECK(cert.residues[0].second.is_rational());
                CHECK(cert.residues[1].second.is_rational());
                CHECK(cert.residues[2].second.is_rational());
                CHECK(cert.residues[4].second == cert.residues[3].second.conj());
                CHECK(cert.residues[6].second == cert.residues[5].second.conj());
                CHECK(is_rational_quick(a) == cert.rational);
            }
}

TEST_CASE("composition with the k series") {
    const long n = 200;
    RationalFunction5 ident(poly_from_longs({0, 1}), Poly5::constant(Sqrt5(1)));
    CHECK(compose_rational_with_k(ident, n) == k_series(n));

    RationalFunction5 corollary(poly_from_longs({0, 2, 1}), poly_from_longs({1, -4, -1}));
    PuiseuxSeries comp = compose_rational_with_k(corollary, 500);
    for (const Rat& c : comp.coefficients()) CHECK(c.get_den() == 1);

    auto cert = decide_rationality({1, 0, -2, 1});
    PuiseuxSeries g_of_k = compose_rational_with_k(*cert.g, n);
    PuiseuxSeries eta = eta_exponent_series({8, -7, 0, 3}, n);
    auto [mismatch, where] = g_of_k.q_derivative().first_mismatch(eta);
    CAPTURE(where.get_str());
    CHECK_FALSE(mismatch);

    RationalFunction5 irr(Poly5::constant(quartet_alpha()), Poly5::constant(Sqrt5(1)));
    CHECK_THROWS_AS(compose_rational_with_k(irr, 10), NonInvertibleComposition);
}

TEST_CASE("certificate serialization") {
    auto cert = decide_rationality({1, 0, -2, 1});
    std::string j = certificate_to_json(cert);
    CHECK(j.find("\"rational\": true") != std::string::npos);
    CHECK(j.find("\"residues\"") != std::string::npos);
    CHECK(j.find("\"g\"") != std::string::npos);
}
