#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace testing;

namespace {

struct Setup {
    FieldPtr f = f9();
    AutExponent aut = f->aut(1);
    FieldElem w = f->generator();

    FqPoly p(const char* s) const { return fq(f, aut, s); }
    ComponentCode full(int n) const { return ComponentCode::from_generator(n, FqPoly::one(f, aut)); }
    ComponentCode zero(int n) const { return ComponentCode::from_generator(n, FqPoly::x_n_minus_one(f, aut, n)); }
};

// All F_q-combinations of the rows, as a set of codes for comparison.
std::set<std::vector<std::uint32_t>> span_set(const FiniteField& f, const FqMatrix& rows, std::size_t n) {
    std::set<std::vector<std::uint32_t>> out;
    for_each_in_span(f, rref(rows), n, 1'000'000, [&](const FqVector& v) {
        std::vector<std::uint32_t> k;
        for (const auto& x : v) k.push_back(x.code());
        out.insert(k);
    });
    return out;
}

}  // namespace

TEST_CASE("component codes") {
    Setup s;
    const auto full = s.full(3);
    CHECK(full.dimension() == 3);
    CHECK(s.zero(3).dimension() == 0);
    const auto c = ComponentCode::from_generator(2, s.p("x - [0,1]"));
    CHECK(c.dimension() == 1);
    CHECK(c.check_polynomial() == s.p("x + [0,2]"));
    CHECK(error_kind([&] { ComponentCode::from_generator(2, s.p("2x + 1")); }) == ErrorKind::NotMonic);
    CHECK(error_kind([&] { ComponentCode::from_generator(2, s.p("x - [1,1]")); }) == ErrorKind::NotRightDivisor);
    CHECK_FALSE(ComponentCode::unchecked(2, s.p("x - [1,1]")).verified());
}

TEST_CASE("generator matrices") {
    Setup s;
    const auto g1 = s.full(2).generator_matrix();
    CHECK(g1 == FqMatrix{{s.f->one(), s.f->zero()}, {s.f->zero(), s.f->one()}});
    const auto c = ComponentCode::from_generator(2, s.p("x - [0,1]"));
    CHECK(c.generator_matrix() == FqMatrix{{-s.w, s.f->one()}});
    // row j is x^j g
    const auto c5 = ComponentCode::from_generator(5, s.p("x - 1"));
    const auto rows = c5.generator_matrix();
    for (int j = 0; j < 4; ++j)
        CHECK(rows[j] == (FqPoly::monomial(s.f, s.aut, s.f->one(), j) * c5.generator()).to_vector(5));
    const auto code = SkewCyclicCode::from_components(c, s.full(2), s.zero(2));
    CHECK(rank(code.gray_generator_matrix()) == 3);
    CHECK(code.generator_matrix().size() == 3);
}

TEST_CASE("codes over R from components") {
    Setup s;
    const auto z = SkewCyclicCode::from_components(s.zero(4), s.zero(4), s.zero(4));
    CHECK(z.log_q_size() == 0);
    CHECK(z.generator() == RPoly::x_n_minus_one(s.f, s.aut, 4));
    const auto full = SkewCyclicCode::from_components(s.full(4), s.full(4), s.full(4));
    CHECK(full.generator() == RPoly::one(s.f, s.aut));
    CHECK(full.log_q_size() == 12);

    const auto c = SkewCyclicCode::from_generators(5, s.p("x - 1"), FqPoly::one(s.f, s.aut), FqPoly::one(s.f, s.aut));
    CHECK(c.log_q_size() == 14);
    CHECK(power_string(9, 14) == "22876792454961");
    CHECK(c.generator() == combine(s.p("x - 1"), FqPoly::one(s.f, s.aut), FqPoly::one(s.f, s.aut)));
    CHECK(c.check_polynomial() * c.generator() == RPoly::x_n_minus_one(s.f, s.aut, 5));

    const auto d = c.decompose();
    CHECK(d[0] == ComponentCode::from_generator(5, s.p("x - 1")));
    CHECK(d[1] == s.full(5));
    CHECK(SkewCyclicCode::from_components(d[0], d[1], d[2]) == c);
    CHECK(SkewCyclicCode::from_combined(5, c.generator()) == c);
    for (int k = 0; k < 3; ++k) CHECK(z.component(k) == s.zero(4));

    CHECK(error_kind([&] { SkewCyclicCode::from_components(s.full(2), s.full(3), s.full(3)); }) ==
          ErrorKind::LengthMismatch);
    const auto other = ComponentCode::from_generator(2, FqPoly::one(s.f, s.f->aut(2)));
    CHECK(error_kind([&] { SkewCyclicCode::from_components(s.full(2), other, s.full(2)); }) ==
          ErrorKind::AutMismatch);
}

TEST_CASE("membership") {
    Setup s;
    const auto c = ComponentCode::from_generator(2, s.p("x - [0,1]"));
    CHECK(c.contains(FqPoly(s.f, s.aut)));
    CHECK(c.contains(c.generator()));
    CHECK_FALSE(c.contains(s.p("x + [0,1]")));
    CHECK(c.contains(FqVector{s.f->zero(), s.f->zero()}));

    // membership agrees with the explicit row span for every word of F_9^2
    const auto span = span_set(*s.f, c.generator_matrix(), 2);
    CHECK(span.size() == 9);
    for (const auto& a : s.f->elements())
        for (const auto& b : s.f->elements())
            REQUIRE(c.contains(FqVector{a, b}) == (span.count({a.code(), b.code()}) == 1));

    const auto code = SkewCyclicCode::from_components(c, s.full(2), s.zero(2));
    const auto eta = make_idempotents(*s.f);
    RVector row;
    const auto rows = c.generator_matrix();
    for (const auto& x : rows[0]) row.push_back(eta.eta1 * RingElem::scalar(x));
    CHECK(code.contains(row));
    CHECK(code.contains(reduce_mod_xn_minus_1(code.generator(), 2)));
    CHECK_FALSE(code.contains(RVector{RingElem::one(*s.f), RingElem::zero(*s.f)}));
    CHECK(error_kind([&] { (void)c.contains(FqVector(3, s.f->zero())); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("skew shift") {
    Setup s;
    CHECK(skew_shift(FqVector(3, s.f->zero()), s.aut) == FqVector(3, s.f->zero()));
    CHECK(skew_shift(FqVector{s.w, s.f->zero()}, s.aut) == FqVector{s.f->zero(), s.f->from_int(2) * s.w});
    std::mt19937_64 rng(37);
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 50; ++t) {
            FqVector v;
            for (int j = 0; j < n; ++j) v.push_back(random_elem(*s.f, rng));
            FqVector u = v;
            for (int k = 0; k < n * s.aut.order(); ++k) u = skew_shift(u, s.aut);
            REQUIRE(u == v);
        }
}

TEST_CASE("duals") {
    Setup s;
    const auto full = SkewCyclicCode::from_components(s.full(3), s.full(3), s.full(3));
    const auto zero = SkewCyclicCode::from_components(s.zero(3), s.zero(3), s.zero(3));
    CHECK(full.dual() == zero);
    CHECK(zero.dual() == full);

    const auto c = ComponentCode::from_generator(2, s.p("x - [0,1]"));
    CHECK(c.h_tilde() == s.p("1 + [0,1]*x"));
    const auto rows = c.generator_matrix();
    const FqVector htv = c.h_tilde().to_vector(2);
    CHECK(dot(rows[0], htv).is_zero());
    CHECK(c.dual_generator() == s.p("x + [0,2]"));
    CHECK(c.dual() == c);
    CHECK(c.is_self_dual());

    // dual via linear algebra matches for every component code of length <= 4
    for (int n = 1; n <= 4; ++n)
        for (const auto& comp : component_census(n, s.f, s.aut)) {
            const auto d = comp.dual();
            const auto perp = orthogonal_complement(*s.f, comp.generator_matrix(), n);
            REQUIRE(same_row_space(perp, d.generator_matrix()));
            REQUIRE(d.dual() == comp);
            REQUIRE(comp.dimension() + d.dimension() == n);
        }
}

TEST_CASE("self-duality") {
    Setup s;
    CHECK_FALSE(SkewCyclicCode::from_components(s.full(2), s.full(2), s.full(2)).is_self_dual());
    // 2 * log|C| != 3n rules out self-duality
    const auto odd = SkewCyclicCode::from_components(s.full(3), s.zero(3), s.zero(3));
    CHECK_FALSE(odd.is_self_dual());
    const auto c = ComponentCode::from_generator(2, s.p("x - [0,1]"));
    const auto sd = SkewCyclicCode::from_components(c, c, c);
    CHECK(sd.is_self_dual());
    CHECK(sd.dual() == sd);
    const auto mixed = SkewCyclicCode::from_components(c, c, ComponentCode::from_generator(2, s.p("x + [0,1]")));
    // x + w generates {k(w, 1)}: (w,1).(w,1) = w^2 + 1 = 0, so it is self-dual too
    CHECK(mixed.is_self_dual());
    const auto not_sd = SkewCyclicCode::from_components(c, c, ComponentCode::from_generator(2, s.p("x - 1")));
    CHECK_FALSE(not_sd.is_self_dual());
}

TEST_CASE("idempotent generators") {
    Setup s;
    const auto one = FqPoly::one(s.f, s.aut);
    CHECK(idempotent_generator(s.full(5)) == one);
    CHECK(idempotent_generator(s.zero(5)).is_zero());
    const auto c = ComponentCode::from_generator(5, s.p("x - 1"));
    const auto e = idempotent_generator(c);
    CHECK(reduce_mod_xn_minus_1(e * e, 5) == e);
    CHECK(c.contains(e));
    CHECK(right_gcd(e, FqPoly::x_n_minus_one(s.f, s.aut, 5)) == c.generator());

    const auto code = SkewCyclicCode::from_components(c, s.full(5), s.full(5));
    const auto er = idempotent_generator(code);
    CHECK(reduce_mod_xn_minus_1(er * er, 5) == er);
    CHECK(project(er, 0) == e);
    CHECK(project(er, 1) == one);
    CHECK(idempotent_generator(SkewCyclicCode::from_components(s.full(5), s.full(5), s.full(5))) ==
          RPoly::one(s.f, s.aut));
    CHECK(idempotent_generator(SkewCyclicCode::from_components(s.zero(5), s.zero(5), s.zero(5))).is_zero());

    // n = 3: gcd(n, q) != 1
    CHECK(error_kind([&] { idempotent_generator(ComponentCode::from_generator(3, s.p("x - 1"))); }) ==
          ErrorKind::HypothesisViolated);
    // n = 2: gcd(n, t) != 1
    CHECK(error_kind([&] { idempotent_generator(ComponentCode::from_generator(2, s.p("x - 1"))); }) ==
          ErrorKind::HypothesisViolated);
}

TEST_CASE("census counts") {
    Setup s;
    const auto c1 = count_skew_cyclic_codes(1, s.f, s.aut);
    CHECK(c1.over_fq == 2);
    CHECK(c1.over_r == 8);
    const auto c5 = count_skew_cyclic_codes(5, s.f, s.aut);
    CHECK(c5.over_fq == 4);
    CHECK(c5.over_r == 64);
    const auto c3 = count_skew_cyclic_codes(3, s.f, s.aut);
    CHECK(c3.over_fq == 4);
    CHECK(c3.over_r == 64);
    CHECK(error_kind([&] { count_skew_cyclic_codes(4, s.f, s.aut); }) == ErrorKind::HypothesisViolated);
    CHECK(census(1, s.f, s.aut).size() == 8);
    CHECK(census(5, s.f, s.aut).size() == 64);
    CHECK(census(2, s.f, s.aut).size() == 216);
    CHECK(error_kind([&] { census(2, s.f, s.aut, 100); }) == ErrorKind::TableTooLarge);
}

TEST_CASE("minimum distances") {
    Setup s;
    CHECK(min_hamming_distance(s.zero(3)) == DistanceResult{0, true});
    CHECK(min_hamming_distance(s.full(3)) == DistanceResult{1, false});
    const auto c = ComponentCode::from_generator(2, s.p("x - [0,1]"));
    CHECK(min_hamming_distance(c).distance == 2);
    const auto code = SkewCyclicCode::from_components(c, s.zero(2), s.zero(2));
    CHECK(min_lee_distance(code).distance == 2);
    // minimum over nonzero components only
    const auto mixed = SkewCyclicCode::from_components(c, s.zero(2), s.full(2));
    CHECK(min_lee_distance(mixed).distance == 1);
    CHECK(min_lee_distance(SkewCyclicCode::from_components(s.zero(2), s.zero(2), s.zero(2))).degenerate);
    // repetition-like code <x^4 + ... + 1> has weight 5
    const auto rep = ComponentCode::from_generator(5, s.p("x^4 + x^3 + x^2 + x + 1"));
    CHECK(min_hamming_distance(rep).distance == 5);
    CHECK(error_kind([&] { min_hamming_distance(s.full(5), 100); }) == ErrorKind::EnumerationTooLarge);
}
