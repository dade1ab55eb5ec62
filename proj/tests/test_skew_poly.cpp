#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

TEST_CASE("twisted product worked values over F9") {
    const auto f = f9();
    const auto aut = f->aut(1);
    const auto w = f->generator();
    const auto x = FqPoly::monomial(f, aut, f->one(), 1);
    const auto cw = FqPoly::constant(f, aut, w);
    // x * w = theta(w) x = 2w x
    CHECK(x * cw == FqPoly::monomial(f, aut, f->from_int(2) * w, 1));
    CHECK(cw * x == FqPoly::monomial(f, aut, w, 1));
    CHECK(x * cw != cw * x);
    // (w x)(w x) = w theta(w) x^2 = x^2
    const auto wx = FqPoly::monomial(f, aut, w, 1);
    CHECK(wx * wx == FqPoly::monomial(f, aut, f->one(), 2));
    const auto one = FqPoly::one(f, aut);
    CHECK(wx * one == wx);
    CHECK(one * wx == wx);
    // over the fixed subfield x commutes with constants
    for (int c = 0; c < 3; ++c) {
        const auto a = FqPoly::constant(f, aut, f->from_int(c));
        CHECK(x * a == a * x);
    }
}

TEST_CASE("ring axioms for the skew product") {
    std::mt19937_64 rng(17);
    const auto f = f9();
    const auto aut = f->aut(1);
    for (int s = 0; s < 500; ++s) {
        const auto a = random_fq_poly(f, aut, 6, rng), b = random_fq_poly(f, aut, 6, rng),
                   c = random_fq_poly(f, aut, 6, rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a + b) * c == a * c + b * c);
        if (!a.is_zero() && !b.is_zero()) REQUIRE((a * b).degree() == a.degree() + b.degree());
    }
    const auto g = f25();
    const auto ag = g->aut(1);
    for (int s = 0; s < 300; ++s) {
        const auto a = random_r_poly(g, ag, 4, rng), b = random_r_poly(g, ag, 4, rng),
                   c = random_r_poly(g, ag, 4, rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("product over R projects to componentwise products") {
    std::mt19937_64 rng(19);
    const auto f = f9();
    const auto aut = f->aut(1);
    for (int s = 0; s < 300; ++s) {
        const auto a = random_r_poly(f, aut, 5, rng), b = random_r_poly(f, aut, 5, rng);
        for (int k = 0; k < 3; ++k) REQUIRE(project(a * b, k) == project(a, k) * project(b, k));
    }
}

TEST_CASE("right division") {
    const auto f = f9();
    const auto aut = f->aut(1);
    const auto xn = FqPoly::x_n_minus_one(f, aut, 2);
    const auto g = fq(f, aut, "x - [0,1]");
    const auto d = right_divide(xn, g);
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient == fq(f, aut, "x + [0,2]"));
    CHECK(d.quotient * g == xn);
    const auto one = FqPoly::one(f, aut);
    const auto d1 = right_divide(g, one);
    CHECK(d1.quotient == g);
    CHECK(d1.remainder.is_zero());

    std::mt19937_64 rng(23);
    for (int s = 0; s < 500; ++s) {
        auto a = random_fq_poly(f, aut, 8, rng);
        auto b = random_fq_poly(f, aut, 4, rng);
        if (b.is_zero()) continue;
        b = make_monic(b);
        const auto r = right_divide(a, b);
        REQUIRE(r.quotient * b + r.remainder == a);
        REQUIRE(r.remainder.degree() < b.degree());
    }
    for (int s = 0; s < 300; ++s) {
        const auto a = random_r_poly(f, aut, 7, rng);
        auto b = random_r_poly(f, aut, 3, rng);
        std::vector<RingElem> c = b.coeffs();
        c.push_back(RingElem::one(*f));
        b = RPoly(f, aut, c);
        const auto r = right_divide(a, b);
        REQUIRE(r.quotient * b + r.remainder == a);
        REQUIRE(r.remainder.degree() < b.degree());
    }

    CHECK(error_kind([&] { right_divide(xn, FqPoly(f, aut)); }) == ErrorKind::ZeroDivisor);
    const auto v = RingElem::v(*f);
    const RPoly bad(f, aut, {RingElem::one(*f), v});
    CHECK(error_kind([&] { right_divide(RPoly::x_n_minus_one(f, aut, 3), bad); }) == ErrorKind::NonMonicDivisor);
    CHECK(error_kind([&] { (void)(g + FqPoly::one(f, f->aut(2))); }) == ErrorKind::AutMismatch);
    CHECK(error_kind([&] { (void)(g + FqPoly::one(FiniteField::create(3, 2, {2, 1, 1}), aut)); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("right divisors of x^n - 1") {
    const auto f = f9();
    const auto aut = f->aut(1);
    for (int n = 1; n <= 5; ++n) {
        CHECK(is_right_divisor_of_xn_minus_1(fq(f, aut, "x - 1"), n));
        CHECK(is_right_divisor_of_xn_minus_1(FqPoly::x_n_minus_one(f, aut, n), n));
    }
    CHECK(is_right_divisor_of_xn_minus_1(fq(f, aut, "x - [0,1]"), 2));
    CHECK_FALSE(is_right_divisor_of_xn_minus_1(fq(f, aut, "x - [1,1]"), 2));

    const auto d1 = monic_right_divisors(1, f, aut);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == FqPoly::one(f, aut));
    CHECK(d1[1] == fq(f, aut, "x - 1"));

    // x - a divides x^2 - 1 iff theta(a) a = 1, i.e. a^4 = 1
    const auto d2 = monic_right_divisors(2, f, aut);
    std::size_t linear = 0;
    for (const auto& a : f->elements()) {
        const bool root = (a * a * a * a).is_one();
        if (root) ++linear;
        const FqPoly g(f, aut, {-a, f->one()});
        CHECK(is_right_divisor_of_xn_minus_1(g, 2) == root);
    }
    CHECK(linear == 4);
    CHECK(d2.size() == linear + 2);

    for (int n : {3, 5, 7}) {
        const auto d = monic_right_divisors(n, f, aut);
        CHECK(d.size() == 4);
        for (const auto& g : d) {
            const auto h = left_quotient_of_xn_minus_1(g, n);
            CHECK(h * g == FqPoly::x_n_minus_one(f, aut, n));
            CHECK(has_fixed_coefficients(g));
        }
        CHECK(d == brute_force_right_divisors(n, f, aut));
    }
    for (int n : {1, 3, 5})
        for (const auto& g : brute_force_right_divisors(n, f, aut)) CHECK(has_fixed_coefficients(g));

    CHECK(error_kind([&] { left_quotient_of_xn_minus_1(fq(f, aut, "x - [1,1]"), 2); }) ==
          ErrorKind::NotRightDivisor);
}

TEST_CASE("factorization of x^n - 1 over the fixed subfield") {
    const auto f = f9();
    const auto aut = f->aut(1);
    const auto f1 = factor_xn_minus_1(1, f, aut);
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0].first == fq(f, aut, "x - 1"));
    CHECK(f1.factors[0].second == 1);

    const auto f5 = factor_xn_minus_1(5, f, aut);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0] == std::make_pair(fq(f, aut, "x - 1"), 1));
    CHECK(f5.factors[1] == std::make_pair(fq(f, aut, "x^4 + x^3 + x^2 + x + 1"), 1));
    CHECK(f5.divisor_count() == 4);

    const auto f3c = factor_xn_minus_1(3, f, aut);
    REQUIRE(f3c.factors.size() == 1);
    CHECK(f3c.factors[0] == std::make_pair(fq(f, aut, "x - 1"), 3));

    for (int n = 1; n <= 13; n += 2) {
        const auto fac = factor_xn_minus_1(n, f, aut);
        CHECK(fac.expand(f, aut) == FqPoly::x_n_minus_one(f, aut, n));
        for (const auto& [p, s] : fac.factors) {
            CHECK(is_irreducible_over_subfield(p));
            CHECK(p.is_monic());
        }
    }
    // x^2 + 1 has no root in F_3; x^2 - 1 does
    CHECK(is_irreducible_over_subfield(fq(f, aut, "x^2 + 1")));
    CHECK_FALSE(is_irreducible_over_subfield(fq(f, aut, "x^2 - 1")));
    // F_25 with theta_1: fixed subfield F_5, x^4 - 1 splits into linear factors
    const auto g = f25();
    const auto fac = factor_xn_minus_1(3, g, g->aut(1));
    CHECK(fac.expand(g, g->aut(1)) == FqPoly::x_n_minus_one(g, g->aut(1), 3));
    // x^3 - 1 = (x - 1)(x^2 + x + 1) over F_5, the quadratic is irreducible
    CHECK(fac.divisor_count() == 4);
}

TEST_CASE("commutative extended gcd") {
    const auto f = f9();
    const auto aut = f->aut(1);
    const auto a = fq(f, aut, "2x + 1");
    const auto z = FqPoly(f, aut);
    const auto r = extended_gcd_commutative(a, z);
    CHECK(r.d == make_monic(a));
    CHECK(r.a == FqPoly::constant(f, aut, f->from_int(2).inverse()));
    CHECK(r.b.is_zero());

    const auto p = fq(f, aut, "x - 1"), q = fq(f, aut, "x^4 + x^3 + x^2 + x + 1");
    const auto g = extended_gcd_commutative(p, q);
    CHECK(g.d == FqPoly::one(f, aut));
    CHECK(g.a * p + g.b * q == g.d);
    CHECK(error_kind([&] { extended_gcd_commutative(z, z); }) == ErrorKind::BothZero);

    std::mt19937_64 rng(29);
    const auto f3f = f3();
    const auto a3 = f3f->aut(1);
    for (int s = 0; s < 500; ++s) {
        const auto u = random_fq_poly(f3f, a3, 6, rng), v = random_fq_poly(f3f, a3, 6, rng);
        if (u.is_zero() && v.is_zero()) continue;
        const auto e = extended_gcd_commutative(u, v);
        REQUIRE(e.a * u + e.b * v == e.d);
        REQUIRE(e.d.is_monic());
        REQUIRE(right_divide(u, e.d).remainder.is_zero());
        REQUIRE(right_divide(v, e.d).remainder.is_zero());
    }
}

TEST_CASE("combine and project") {
    const auto f = f9();
    const auto aut = f->aut(1);
    const auto g = fq(f, aut, "x - 1");
    const auto one = FqPoly::one(f, aut);
    const auto c = combine(g, g, g);
    CHECK(c.degree() == 1);
    CHECK(c.coeffs()[1] == RingElem::one(*f));
    CHECK(c.coeffs()[0] == -RingElem::one(*f));

    const auto eta = make_idempotents(*f);
    const auto m = combine(g, one, one);
    CHECK(m.coeffs()[1] == eta.eta1);
    CHECK(m.coeffs()[0] == eta.eta2 + eta.eta3 - eta.eta1);
    CHECK(project(m, 0) == g);
    CHECK(project(m, 1) == one);
    CHECK(project(m, 2) == one);

    std::mt19937_64 rng(31);
    for (int s = 0; s < 500; ++s) {
        const auto a = random_fq_poly(f, aut, 5, rng), b = random_fq_poly(f, aut, 5, rng),
                   d = random_fq_poly(f, aut, 5, rng);
        const auto r = combine(a, b, d);
        REQUIRE(project(r, 0) == a);
        REQUIRE(project(r, 1) == b);
        REQUIRE(project(r, 2) == d);
    }
}

TEST_CASE("right gcd with x^n - 1") {
    const auto f = f9();
    const auto aut = f->aut(1);
    const auto xn = FqPoly::x_n_minus_one(f, aut, 2);
    CHECK(right_gcd(fq(f, aut, "x - [0,1]"), xn) == fq(f, aut, "x - [0,1]"));
    CHECK(right_gcd(fq(f, aut, "x - [1,1]"), xn) == FqPoly::one(f, aut));
    // a left multiple keeps the same right gcd
    const auto g = fq(f, aut, "x - [0,1]");
    CHECK(right_gcd(fq(f, aut, "[0,1]*x + 2") * g, xn) == g);
}
