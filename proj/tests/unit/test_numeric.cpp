#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "etaforge/errors.hpp"
#include "etaforge/kernel10.hpp"
#include "etaforge/numeric.hpp"
#include "etaforge/verify.hpp"

using namespace etaforge;

namespace {

BigFloat bf(long v, long prec = 256) { return BigFloat::from_long(v, prec); }

BigFloat tol10(long e, long prec = 256) { return bf(10, prec).pow_long(e); }

BigFloat q10(long prec = 256) {
    BigFloat two_pi = bf(2, prec) * BigFloat::pi(prec);
    return BigFloat::exp(-(two_pi / sqrt_rat(Rat(10), prec)));
}

} // namespace

TEST_CASE("big float arithmetic and precision propagation") {
    BigFloat a = BigFloat::from_rat(Rat(3, 4), 128);
    BigFloat b = BigFloat::from_rat(Rat(1, 4), 320);
    BigFloat sum = a + b;
    CHECK(sum.precision() == 320);
    CHECK(sum.cmp(bf(1, 64)) == 0);
    CHECK((a * b).precision() == 320);
    CHECK(BigFloat::from_rat(Rat(1, 4)).to_double() == 0.25);
    CHECK((-bf(3)).sign() == -1);
    CHECK(BigFloat(256).is_zero());
    CHECK(BigFloat::pi(256).to_string(30).substr(0, 30) == "3.1415926535897932384626433832");
}

TEST_CASE("big float roots and powers") {
    BigFloat s2 = BigFloat::sqrt(bf(2));
    CHECK((s2 * s2 - bf(2)).abs() <= tol10(-70));
    CHECK((bf(2).pow_rat(Rat(1, 2)) - s2).abs() <= tol10(-70));
    CHECK((bf(8).pow_rat(Rat(2, 3)) - bf(4)).abs() <= tol10(-70));
    CHECK((bf(2).pow_long(-2) - BigFloat::from_rat(Rat(1, 4))).abs().is_zero());
    CHECK((sqrt_rat(Rat(9, 4), 256) - BigFloat::from_rat(Rat(3, 2))).abs() <= tol10(-70));
    CHECK_THROWS_AS(BigFloat::sqrt(bf(-1)), std::domain_error);
    CHECK_THROWS_AS(sqrt_rat(Rat(-2), 256), std::domain_error);
    CHECK_THROWS_AS(bf(1) / bf(0), DivisionByZero);
}

TEST_CASE("series evaluation with tail bounds") {
    BigFloat half = BigFloat::from_rat(Rat(1, 2));
    SeriesEval mono = eval_series(PuiseuxSeries::monomial(Rat(1), Rat(1), 50), half);
    CHECK((mono.value - half).abs() <= tol10(-70));
    CHECK(mono.tail_bound <= tol10(-10));

    SeriesEval c = eval_series(PuiseuxSeries::constant(Rat(3), 50), BigFloat::from_rat(Rat(1, 4)));
    CHECK((c.value - bf(3)).abs() <= tol10(-70));

    std::vector<Rat> ones(100, Rat(1));
    SeriesEval geo = eval_series(PuiseuxSeries(Rat(0), ones), half);
    BigFloat missing = (bf(2) - geo.value).abs();
    CHECK(missing <= geo.tail_bound + tol10(-70));
    CHECK(geo.tail_bound <= tol10(-28));

    std::vector<Rat> fast;
    Rat p(1);
    for (int i = 0; i < 40; ++i) {
        fast.push_back(p);
        p *= 3;
    }
    CHECK_THROWS_AS(eval_series(PuiseuxSeries(Rat(0), fast), half), InsufficientTruncation);
    CHECK_THROWS_AS(eval_series(PuiseuxSeries::constant(Rat(1), 10), bf(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_series(PuiseuxSeries::constant(Rat(1), 10), bf(0)),
                    std::invalid_argument);
}

TEST_CASE("tail bound dominates the effect of deeper truncation") {
    ParamExponents a = row_parameters("1.0");
    EtaExponents e = a_to_e(a);
    BigFloat q0 = q10();
    SeriesEval coarse = eval_series(eta_exponent_series(e, 60).antiderivative_dq_over_q(), q0);
    SeriesEval fine = eval_series(eta_exponent_series(e, 400).antiderivative_dq_over_q(), q0);
    CHECK((coarse.value - fine.value).abs() <= coarse.tail_bound);
    CHECK(fine.tail_bound < coarse.tail_bound);
}

TEST_CASE("quadrature reproduces polynomial integrals") {
    PuiseuxSeries poly(Rat(0), std::vector<Rat>{Rat(1), Rat(1)});
    BigFloat val = quadrature_check(poly, BigFloat::from_rat(Rat(1, 2)), tol10(-30));
    CHECK((val - BigFloat::from_rat(Rat(5, 8))).abs() <= tol10(-30));
    CHECK_THROWS_AS(quadrature_check(poly, BigFloat::from_rat(Rat(1, 2)), bf(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(quadrature_check(PuiseuxSeries::monomial(Rat(1), Rat(-1), 10),
                                     BigFloat::from_rat(Rat(1, 2)), tol10(-10)),
                    std::invalid_argument);
}

TEST_CASE("antiderivative and quadrature routes agree") {
    ParamExponents a = row_parameters("1.0");
    PuiseuxSeries integrand =
        eta_exponent_series(a_to_e(a), 400) / PuiseuxSeries::monomial(Rat(1), Rat(1), 400);
    BigFloat quad = quadrature_check(integrand, q10(), tol10(-12));
    std::pair<BigFloat, BigFloat> row = ramanujan_fine_value("1.0");
    CHECK((quad - row.first).abs() <= tol10(-12));
}

TEST_CASE("closed forms of the certified rows") {
    long prec = 256;
    BigFloat s5 = sqrt_rat(Rat(5), prec);

    std::pair<BigFloat, BigFloat> r10 = ramanujan_fine_value("1.0", prec);
    CHECK((r10.first - r10.second).abs() <= tol10(-60));
    BigFloat printed10 = bf(1) - bf(2) * BigFloat::sqrt((bf(10) - bf(4) * s5) / bf(5));
    CHECK((r10.first - printed10).abs() <= tol10(-50));
    CHECK(r10.first.to_double() == doctest::Approx(0.080988).epsilon(1e-5));

    std::pair<BigFloat, BigFloat> r30 = ramanujan_fine_value("3.0", prec);
    BigFloat printed30 = (BigFloat::sqrt(bf(10) - bf(4) * s5) - bf(1)) / bf(4);
    CHECK((r30.first - r30.second).abs() <= tol10(-60));
    CHECK((r30.first - printed30).abs() <= tol10(-50));
    CHECK(r30.first.to_double() == doctest::Approx(0.0068715).epsilon(1e-4));

    std::pair<BigFloat, BigFloat> r40 = ramanujan_fine_value("4.0", prec);
    BigFloat printed40 = (BigFloat::sqrt((bf(10) + bf(4) * s5) / bf(5)) - bf(1)) / bf(4);
    CHECK((r40.first - r40.second).abs() <= tol10(-60));
    CHECK((r40.first - printed40).abs() <= tol10(-50));

    std::pair<BigFloat, BigFloat> r31 = ramanujan_fine_value("3.1", prec);
    BigFloat printed31 = BigFloat::from_rat(Rat(1, 24), prec) +
                         (bf(15) * s5 - bf(34)) * BigFloat::sqrt(bf(10) + bf(4) * s5) / bf(48);
    CHECK((r31.first - r31.second).abs() <= tol10(-60));
    CHECK((r31.first - printed31).abs() <= tol10(-50));
}

TEST_CASE("series route matches the rational antiderivative on every integrable row") {
    for (const char* label : {"1.0", "3.0", "4.0", "5", "7", "8", "9", "11", "12"}) {
        std::pair<BigFloat, BigFloat> both = ramanujan_fine_value(label);
        CHECK_MESSAGE((both.first - both.second).abs() <= tol10(-60), "row ", label);
    }
}

TEST_CASE("rows that diverge at the origin are rejected") {
    CHECK_THROWS_AS(ramanujan_fine_value("2.0"), NotIntegrableAtZero);
    CHECK_THROWS_AS(ramanujan_fine_value("6"), NotIntegrableAtZero);
    CHECK_THROWS_AS(ramanujan_fine_value("10"), NotIntegrableAtZero);
    CHECK_THROWS_AS(ramanujan_fine_value("2.1"), NotIntegrableAtZero);
    CHECK_THROWS_AS(ramanujan_fine_value("13"), std::invalid_argument);
    CHECK_THROWS_AS(ramanujan_fine_value("0.5"), std::invalid_argument);
}

TEST_CASE("row label parsing covers printed rows and families") {
    CHECK(row_parameters("1.0") == family_exponents(1, 0).a);
    CHECK(row_parameters("3.1") == family_exponents(3, 1).a);
    ParamExponents r5 = row_parameters("5");
    CHECK(r5 == ParamExponents{3, 1, -4, 0});
}

TEST_CASE("modulus certificate holds at both precisions") {
    NumericReport report = appendix_k_certificate(256);
    REQUIRE(report.entries.size() == 4);
    CHECK(report.entries[0].check == "k-multiplier-product");
    CHECK(report.entries[1].check == "u-value");
    CHECK(report.entries[2].check == "k-range");
    CHECK(report.entries[3].check == "k-closed-form");
    CHECK(report.all_pass());
    CHECK(report.entries[3].lhs.to_double() ==
          doctest::Approx(0.11643382146585332579).epsilon(1e-15));

    NumericReport wide = appendix_k_certificate(512);
    CHECK(wide.all_pass());
    CHECK((report.entries[3].lhs - wide.entries[3].lhs).abs() <= tol10(-70));

    std::string json = numeric_report_to_json(report);
    CHECK(json.find("\"precision_bits\": 256") != std::string::npos);
    CHECK(json.find("k-closed-form") != std::string::npos);
    CHECK(json.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("integral series pairs satisfy the derivative relation") {
    for (int index = 1; index <= 6; ++index) {
        PuiseuxSeries v = integral_antiderivative_series(index, 80);
        PuiseuxSeries uq =
            integral_integrand_series(index, 80) * PuiseuxSeries::monomial(Rat(1), Rat(1), 80);
        auto mismatch = v.q_derivative().first_mismatch(uq);
        CHECK_MESSAGE(!mismatch.first, "index ", index);
    }
    CHECK_THROWS_AS(integral_antiderivative_series(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(integral_integrand_series(7, 10), std::invalid_argument);
}

TEST_CASE("named special values match their closed forms") {
    for (const char* what : {"k", "u", "fine0", "row:3.1", "integral1", "integral2", "integral3",
                             "integral4", "integral5", "integral6"}) {
        NumericReport report = evaluate_special(what);
        CHECK_MESSAGE(report.all_pass(), what);
        for (const NumericCheck& entry : report.entries)
            CHECK_MESSAGE(entry.abs_error <= entry.tolerance, entry.check);
    }
    CHECK(evaluate_special("integral2").entries.size() == 3);
    CHECK(evaluate_special("integral5").entries.size() == 1);
    CHECK_THROWS_AS(evaluate_special("integral7"), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_special("integral"), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_special("nonsense"), std::invalid_argument);
}

TEST_CASE("quadrature confirms a displayed integral value") {
    std::vector<IntegralSpecialValue> values = integral_special_values(6);
    REQUIRE(values.size() == 1);
    BigFloat quad =
        quadrature_check(integral_integrand_series(6, 400), values[0].q0, tol10(-12));
    CHECK((quad - values[0].closed).abs() <= tol10(-12));
}
