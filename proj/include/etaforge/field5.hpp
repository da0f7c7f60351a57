#pragma once
#include <optional>
#include <string>
#include <vector>

#include "qseries.hpp"

namespace etaforge {

// element a + b sqrt(5) of Q(sqrt5)
struct Sqrt5 {
    Rat a{0}, b{0};

    Sqrt5() = default;
    Sqrt5(Rat av) : a(std::move(av)) {}
    Sqrt5(Rat av, Rat bv) : a(std::move(av)), b(std::move(bv)) {}
    Sqrt5(long v) : a(v) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    Sqrt5 conj() const { return {a, -b}; }
    Rat norm() const { return a * a - 5 * b * b; }

    friend Sqrt5 operator-(const Sqrt5& x) { return {-x.a, -x.b}; }
    friend Sqrt5 operator+(const Sqrt5& x, const Sqrt5& y) { return {x.a + y.a, x.b + y.b}; }
    friend Sqrt5 operator-(const Sqrt5& x, const Sqrt5& y) { return {x.a - y.a, x.b - y.b}; }
    friend Sqrt5 operator*(const Sqrt5& x, const Sqrt5& y) {
        return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Sqrt5 inv() const {
        Rat n = norm();
        if (n == 0) throw DivisionByZero("inverse of zero in Q(sqrt5)");
        return {a / n, -b / n};
    }
    friend Sqrt5 operator/(const Sqrt5& x, const Sqrt5& y) { return x * y.inv(); }
    friend bool operator==(const Sqrt5& x, const Sqrt5& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Sqrt5& x, const Sqrt5& y) { return !(x == y); }

    std::string to_string() const;
};

// golden-ratio quartet: (alpha+beta)(gamma+delta) = 2(alpha beta + gamma delta)
Sqrt5 quartet_alpha();
Sqrt5 quartet_beta();
Sqrt5 quartet_gamma();
Sqrt5 quartet_delta();

// dense polynomial over Q(sqrt5), trailing zeros trimmed; zero = empty
class Poly5 {
  public:
    Poly5() = default;
    explicit Poly5(std::vector<Sqrt5> c) : c_(std::move(c)) { trim(); }
    static Poly5 constant(const Sqrt5& v);
    static Poly5 linear(const Sqrt5& root); // k - root

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Sqrt5>& coeffs() const { return c_; }
    const Sqrt5& leading() const { return c_.back(); }
    Sqrt5 coeff(long i) const { return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[static_cast<size_t>(i)] : Sqrt5(); }
    bool is_rational() const;
    Poly5 conj() const;

    Sqrt5 eval(const Sqrt5& x) const;
    Poly5 derivative() const;
    Poly5 pow(long n) const;
    // coefficients of p(x0 + t) mod t^m
    std::vector<Sqrt5> shifted(const Sqrt5& x0, long m) const;

    friend Poly5 operator-(const Poly5& p);
    friend Poly5 operator+(const Poly5& p, const Poly5& q);
    friend Poly5 operator-(const Poly5& p, const Poly5& q);
    friend Poly5 operator*(const Poly5& p, const Poly5& q);
    friend Poly5 operator*(const Sqrt5& s, const Poly5& p);
    friend bool operator==(const Poly5& p, const Poly5& q) { return p.c_ == q.c_; }

    static std::pair<Poly5, Poly5> divmod(const Poly5& n, const Poly5& d);
    static Poly5 gcd(Poly5 a, Poly5 b); // monic
    Poly5 monic() const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Sqrt5> c_;
};

// reduced fraction of Poly5 with monic denominator
struct RationalFunction5 {
    Poly5 num, den;

    RationalFunction5() : num(), den(Poly5::constant(Sqrt5(1))) {}
    RationalFunction5(Poly5 n, Poly5 d);

    bool is_zero() const { return num.is_zero(); }
    bool is_rational() const { return num.is_rational() && den.is_rational(); }
    Sqrt5 eval(const Sqrt5& x) const;
    RationalFunction5 derivative() const;

    friend RationalFunction5 operator+(const RationalFunction5& f, const RationalFunction5& g);
    friend RationalFunction5 operator-(const RationalFunction5& f, const RationalFunction5& g);
    friend RationalFunction5 operator*(const RationalFunction5& f, const RationalFunction5& g);
    friend RationalFunction5 operator/(const RationalFunction5& f, const RationalFunction5& g);
    friend bool operator==(const RationalFunction5& f, const RationalFunction5& g) {
        return f.num == g.num && f.den == g.den;
    }

    std::string to_string() const;
};

struct PoleTerm {
    Sqrt5 point;
    std::vector<Sqrt5> coeffs; // coeffs[j-1] multiplies (k - point)^{-j}
};

struct PartialFractionForm {
    Poly5 poly;
    std::vector<PoleTerm> poles;
};

// split a denominator into linear factors using the level-10 pole set
// {0, 1, -1, alpha, beta, gamma, delta} plus at most one leftover linear
// factor; UnsplitDenominator if a factor of degree >= 2 remains
std::vector<std::pair<Sqrt5, long>> factor_level10_denominator(const Poly5& den);

// Taylor coefficients of f at x0 through order m-1; PoleAtExpansionPoint if
// the (reduced) denominator vanishes at x0
std::vector<Sqrt5> taylor_at_point(const RationalFunction5& f, const Sqrt5& x0, long m);

// residue of f at p (0 when p is not a pole)
Sqrt5 residue_at(const RationalFunction5& f, const Sqrt5& p);

PartialFractionForm partial_fractions(const RationalFunction5& f);

// exact reassembly of a partial-fraction form
RationalFunction5 assemble(const PartialFractionForm& pf);

// termwise antiderivative; LogTermPresent if any first-order pole
// coefficient is nonzero
RationalFunction5 integrate_partial_fractions(const PartialFractionForm& pf);

} // namespace etaforge
