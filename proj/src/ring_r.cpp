#include "skewcyc/ring_r.hpp"

namespace skewcyc {

RingElem RingElem::operator*(const RingElem& o) const {
    // v^3 = v, v^4 = v^2
    const FieldElem bc = b * o.c + c * o.b;
    return {a * o.a, a * o.b + b * o.a + bc, a * o.c + c * o.a + b * o.b + c * o.c};
}

bool RingElem::is_unit() const {
    const auto t = crt_split(*this);
    return !t.x1.is_zero() && !t.x2.is_zero() && !t.x3.is_zero();
}

RingElem RingElem::inverse() const {
    const auto t = crt_split(*this);
    if (t.x1.is_zero() || t.x2.is_zero() || t.x3.is_zero())
        throw Error(ErrorKind::ZeroInverse, "ring element " + to_string(*this) + " is not a unit");
    return crt_join({t.x1.inverse(), t.x2.inverse(), t.x3.inverse()});
}

Idempotents make_idempotents(const FiniteField& f) {
    const FieldElem half = f.from_int(2).inverse();
    const FieldElem z = f.zero();
    Idempotents e{
        {f.one(), z, -f.one()},
        {z, half, half},
        {z, -half, half},
    };
    const RingElem one = RingElem::one(f);
    if (e.eta1 + e.eta2 + e.eta3 != one)
        throw Error(ErrorKind::DomainMismatch, "idempotents do not sum to 1");
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const RingElem expect = j == k ? e[j] : RingElem::zero(f);
            if (e[j] * e[k] != expect) throw Error(ErrorKind::DomainMismatch, "idempotents are not orthogonal");
        }
    return e;
}

CrtTriple crt_split(const RingElem& r) { return {r.a, r.a + r.b + r.c, r.a - r.b + r.c}; }

RingElem crt_join(const CrtTriple& t) {
    // a = x1, b = (x2 - x3)/2, c = (x2 + x3)/2 - x1
    const FieldElem half = t.x1.field().from_int(2).inverse();
    return {t.x1, (t.x2 - t.x3) * half, (t.x2 + t.x3) * half - t.x1};
}

FieldElem crt_component(const RingElem& r, int k) {
    switch (k) {
        case 0: return r.a;
        case 1: return r.a + r.b + r.c;
        default: return r.a - r.b + r.c;
    }
}

RingElem theta(const RingElem& r, const AutExponent& aut) {
    const auto& f = r.field();
    return {f.frobenius(r.a, aut), f.frobenius(r.b, aut), f.frobenius(r.c, aut)};
}

RingElem frobenius_power(const RingElem& r, int j) {
    const auto& f = r.field();
    return {f.frobenius_power(r.a, j), f.frobenius_power(r.b, j), f.frobenius_power(r.c, j)};
}

FqVector gray_map(std::span<const RingElem> r) {
    FqVector out;
    out.reserve(3 * r.size());
    for (const auto& x : r) {
        out.push_back(x.a);
        out.push_back(x.a + x.b + x.c);
        out.push_back(x.a - x.b + x.c);
    }
    return out;
}

RVector gray_inverse(std::span<const FieldElem> g) {
    if (g.size() % 3 != 0)
        throw Error(ErrorKind::LengthNotDivisibleBy3, "Gray vector length " + std::to_string(g.size()));
    RVector out;
    out.reserve(g.size() / 3);
    for (std::size_t j = 0; j < g.size(); j += 3) out.push_back(crt_join({g[j], g[j + 1], g[j + 2]}));
    return out;
}

std::size_t hamming_weight(std::span<const FieldElem> x) {
    std::size_t w = 0;
    for (const auto& e : x) w += !e.is_zero();
    return w;
}

std::size_t hamming_distance(std::span<const FieldElem> x, std::span<const FieldElem> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "vectors differ in length");
    std::size_t d = 0;
    for (std::size_t j = 0; j < x.size(); ++j) d += x[j] != y[j];
    return d;
}

std::size_t lee_weight(const RingElem& r) {
    const auto t = crt_split(r);
    return !t.x1.is_zero() + !t.x2.is_zero() + !t.x3.is_zero();
}

std::size_t lee_weight(std::span<const RingElem> r) {
    std::size_t w = 0;
    for (const auto& x : r) w += lee_weight(x);
    return w;
}

std::size_t lee_distance(std::span<const RingElem> x, std::span<const RingElem> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "vectors differ in length");
    std::size_t d = 0;
    for (std::size_t j = 0; j < x.size(); ++j) d += lee_weight(x[j] - y[j]);
    return d;
}

std::string to_string(const RingElem& r) { return to_string(r.a) + "|" + to_string(r.b) + "|" + to_string(r.c); }

}  // namespace skewcyc
