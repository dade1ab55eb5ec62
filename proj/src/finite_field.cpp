#include "skewcyc/finite_field.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace skewcyc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::InvalidExponent: return "InvalidExponent";
        case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorKind::LengthNotDivisibleBy3: return "LengthNotDivisibleBy3";
        case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::AutMismatch: return "AutMismatch";
        case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::NotRightDivisor: return "NotRightDivisor";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::TableTooLarge: return "TableTooLarge";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense polynomials over Z_p, ascending, trailing zeros stripped.
using ZpPoly = std::vector<std::uint32_t>;

void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // a^(p-2) mod p
    std::uint64_t r = 1, b = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, std::uint32_t p) {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

// Returns (quotient, remainder); b nonzero.
std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& b, std::uint32_t p) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    ZpPoly quot(a.size() - b.size() + 1, 0);
    const std::size_t db = b.size() - 1;
    for (std::size_t k = a.size(); k-- > db;) {
        const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a[k]) * lead_inv % p);
        const std::size_t shift = k - db;
        quot[shift] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + std::uint64_t(p - c) * b[j]) % p);
    }
    trim(a);
    trim(quot);
    return {quot, a};
}

bool has_root(const ZpPoly& f, std::uint32_t p) {
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t k = f.size(); k-- > 0;) acc = (acc * x + f[k]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool has_small_factor(const ZpPoly& f, std::uint32_t p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        ZpPoly cand(d + 1, 0);
        cand[d] = 1;
        std::uint64_t count = 1;
        for (int k = 0; k < d; ++k) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            for (int k = 0; k < d; ++k) {
                cand[k] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (zp_divmod(f, cand, p).second.empty()) return true;
        }
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// AutExponent

AutExponent::AutExponent(int i, int m) : i_(i), m_(m) {
    if (m <= 0 || i <= 0 || m % i != 0)
        throw Error(ErrorKind::InvalidExponent,
                    "automorphism exponent " + std::to_string(i) + " does not divide m=" + std::to_string(m));
}

int AutExponent::power_exponent(long long k) const {
    long long j = (static_cast<long long>(i_) * (k % m_)) % m_;
    if (j < 0) j += m_;
    return static_cast<int>(j);
}

// ---------------------------------------------------------------------------
// FiniteField

FieldPtr FiniteField::create(std::uint32_t p, int m, std::vector<std::int64_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic must be odd");
    if (m < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be positive");

    long double size = 1;
    for (int k = 0; k < m; ++k) size *= p;
    if (size > static_cast<long double>(std::numeric_limits<std::int32_t>::max()))
        throw Error(ErrorKind::FieldTooLarge, "p^m must stay below 2^31");

    if (modulus.size() != static_cast<std::size_t>(m) + 1)
        throw Error(ErrorKind::DegreeMismatch, "modulus must have m+1 coefficients");
    ZpPoly f(modulus.size());
    for (std::size_t k = 0; k < modulus.size(); ++k) {
        std::int64_t r = modulus[k] % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        f[k] = static_cast<std::uint32_t>(r);
    }
    if (f.back() != 1) throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree m");

    if (m == 1) {
        f = {0, 1};
    } else {
        const bool reducible = m <= 3 ? has_root(f, p) : has_small_factor(f, p);
        if (reducible) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over Z_p");
    }
    // Interned: the same parameters always give the same instance, so
    // elements parsed in different places compare and combine.
    static std::mutex lock;
    static std::map<std::pair<std::uint32_t, ZpPoly>, std::weak_ptr<const FiniteField>> cache;
    const std::lock_guard guard(lock);
    auto& slot = cache[{p, f}];
    if (auto live = slot.lock()) return live;
    FieldPtr made(new FiniteField(p, m, std::move(f)));
    slot = made;
    return made;
}

FiniteField::FiniteField(std::uint32_t p, int m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (int k = 0; k < m_; ++k) q_ *= p_;
    place_.assign(m_, 1);
    for (int k = m_ - 2; k >= 0; --k) place_[k] = place_[k + 1] * p_;

    if (q_ <= 729) {
        add_table_.resize(std::size_t(q_) * q_);
        mul_table_.resize(std::size_t(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
                mul_table_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(mul_slow(a, b));
            }
    }
    if (q_ <= (1u << 16)) {
        neg_table_.resize(q_);
        inv_table_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_table_[a] = neg_slow(a);
            inv_table_[a] = a == 0 ? 0 : inv_euclid(a);
        }
        frob_tables_.assign(m_, std::vector<std::uint32_t>(q_));
        for (std::uint32_t a = 0; a < q_; ++a) {
            frob_tables_[0][a] = a;
            if (m_ > 1) frob_tables_[1][a] = pow_slow(a, p_);
        }
        for (int j = 2; j < m_; ++j)
            for (std::uint32_t a = 0; a < q_; ++a) frob_tables_[j][a] = frob_tables_[1][frob_tables_[j - 1][a]];
    }
}

std::vector<std::uint32_t> FiniteField::unpack(std::uint32_t code) const {
    std::vector<std::uint32_t> c(m_);
    for (int k = m_ - 1; k >= 0; --k) {
        c[k] = code % p_;
        code /= p_;
    }
    return c;
}

std::uint32_t FiniteField::pack(std::span<const std::uint32_t> coeffs) const {
    std::uint32_t code = 0;
    for (int k = 0; k < m_; ++k) code += coeffs[k] * place_[k];
    return code;
}

std::uint32_t FiniteField::add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (int k = 0; k < m_; ++k) {
        const std::uint32_t x = (a / place_[k]) % p_;
        const std::uint32_t y = (b / place_[k]) % p_;
        r += ((x + y) % p_) * place_[k];
    }
    return r;
}

std::uint32_t FiniteField::neg_slow(std::uint32_t a) const {
    std::uint32_t r = 0;
    for (int k = 0; k < m_; ++k) {
        const std::uint32_t x = (a / place_[k]) % p_;
        r += ((p_ - x) % p_) * place_[k];
    }
    return r;
}

std::uint32_t FiniteField::mul_slow(std::uint32_t a, std::uint32_t b) const {
    ZpPoly x = unpack(a), y = unpack(b);
    trim(x);
    trim(y);
    ZpPoly prod = zp_mul(x, y, p_);
    ZpPoly r = m_ == 1 ? prod : zp_divmod(prod, modulus_, p_).second;
    r.resize(m_, 0);
    return pack(r);
}

std::uint32_t FiniteField::inv_euclid(std::uint32_t a) const {
    // Extended Euclid on (f, a): track s with s * a == r (mod f).
    ZpPoly r0 = modulus_, r1 = unpack(a);
    trim(r1);
    if (m_ == 1) r0 = {0, 1};
    ZpPoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        auto [quot, rem] = zp_divmod(r0, r1, p_);
        ZpPoly s2 = zp_sub(s0, zp_mul(quot, s1, p_), p_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since f is irreducible.
    const std::uint32_t scale = inv_mod(r0[0], p_);
    ZpPoly s = zp_mul(s0, ZpPoly{scale}, p_);
    if (m_ > 1 && s.size() > static_cast<std::size_t>(m_)) s = zp_divmod(s, modulus_, p_).second;
    if (m_ == 1 && !s.empty()) s = {s[0]};
    s.resize(m_, 0);
    return pack(s);
}

std::uint32_t FiniteField::pow_slow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = pack(std::vector<std::uint32_t>([&] {
        std::vector<std::uint32_t> one(m_, 0);
        one[0] = 1;
        return one;
    }()));
    std::uint32_t b = a;
    for (; e; e >>= 1) {
        if (e & 1) r = mul_code(r, b);
        b = mul_code(b, b);
    }
    return r;
}

std::uint32_t FiniteField::add_code(std::uint32_t a, std::uint32_t b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_slow(a, b);
}

std::uint32_t FiniteField::neg_code(std::uint32_t a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
}

std::uint32_t FiniteField::sub_code(std::uint32_t a, std::uint32_t b) const { return add_code(a, neg_code(b)); }

std::uint32_t FiniteField::mul_code(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
    return mul_slow(a, b);
}

std::uint32_t FiniteField::inv_code(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorKind::ZeroInverse, "zero has no inverse");
    if (!inv_table_.empty()) return inv_table_[a];
    return inv_euclid(a);
}

std::uint32_t FiniteField::frob_code(std::uint32_t a, int j) const {
    j %= m_;
    if (j < 0) j += m_;
    if (j == 0) return a;
    if (!frob_tables_.empty()) return frob_tables_[j][a];
    std::uint64_t e = 1;
    for (int k = 0; k < j; ++k) e *= p_;
    return pow_slow(a, e);
}

FieldElem FiniteField::one() const { return from_int(1); }

FieldElem FiniteField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {this, static_cast<std::uint32_t>(r) * place_[0]};
}

FieldElem FiniteField::from_coeffs(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(m_))
        throw Error(ErrorKind::DegreeMismatch,
                    "element needs exactly " + std::to_string(m_) + " coefficients, got " +
                        std::to_string(coeffs.size()));
    std::vector<std::uint32_t> c(m_);
    for (int k = 0; k < m_; ++k) {
        std::int64_t r = coeffs[k] % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        c[k] = static_cast<std::uint32_t>(r);
    }
    return {this, pack(c)};
}

FieldElem FiniteField::from_code(std::uint32_t code) const {
    if (code >= q_) throw Error(ErrorKind::DomainMismatch, "element code out of range");
    return {this, code};
}

FieldElem FiniteField::generator() const {
    if (m_ == 1) return one();
    return {this, place_[1]};
}

FieldElem FiniteField::frobenius_power(const FieldElem& x, int j) const {
    if (x.field_ptr() != this) throw Error(ErrorKind::FieldMismatch, "element belongs to another field");
    return {this, frob_code(x.code(), j)};
}

FieldElem FiniteField::frobenius(const FieldElem& x, int i) const { return frobenius(x, AutExponent(i, m_)); }

FieldElem FiniteField::frobenius(const FieldElem& x, const AutExponent& aut) const {
    if (aut.field_degree() != m_) throw Error(ErrorKind::InvalidExponent, "exponent built for another field");
    return frobenius_power(x, aut.value());
}

std::vector<FieldElem> FiniteField::elements(std::uint64_t bound) const {
    if (q_ > bound)
        throw Error(ErrorKind::EnumerationTooLarge,
                    "field has " + std::to_string(q_) + " elements, bound is " + std::to_string(bound));
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(this, c);
    return out;
}

std::vector<FieldElem> FiniteField::fixed_subfield(const AutExponent& aut) const {
    std::vector<FieldElem> out;
    for (std::uint32_t c = 0; c < q_; ++c)
        if (frob_code(c, aut.value()) == c) out.emplace_back(this, c);
    return out;
}

// ---------------------------------------------------------------------------
// FieldElem

namespace {
const FiniteField& common(const FieldElem& a, const FieldElem& b) {
    if (a.field_ptr() != b.field_ptr() || a.field_ptr() == nullptr)
        throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
    return a.field();
}
}  // namespace

std::vector<std::uint32_t> FieldElem::coeffs() const {
    std::vector<std::uint32_t> c(field_->degree());
    std::uint32_t code = code_;
    const auto p = field_->characteristic();
    for (int k = field_->degree() - 1; k >= 0; --k) {
        c[k] = code % p;
        code /= p;
    }
    return c;
}

bool FieldElem::is_one() const { return field_ && *this == field_->one(); }

FieldElem FieldElem::operator+(const FieldElem& o) const { return {field_, common(*this, o).add_code(code_, o.code_)}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { return {field_, common(*this, o).sub_code(code_, o.code_)}; }
FieldElem FieldElem::operator*(const FieldElem& o) const { return {field_, common(*this, o).mul_code(code_, o.code_)}; }
FieldElem FieldElem::operator/(const FieldElem& o) const {
    const auto& f = common(*this, o);
    return {field_, f.mul_code(code_, f.inv_code(o.code_))};
}
FieldElem FieldElem::operator-() const { return {field_, field_->neg_code(code_)}; }
FieldElem FieldElem::inverse() const { return {field_, field_->inv_code(code_)}; }

std::string to_string(const FiniteField& f) {
    std::ostringstream os;
    os << "p=" << f.characteristic() << ",m=" << f.degree() << ",mod=";
    for (std::size_t k = 0; k < f.modulus().size(); ++k) os << (k ? "," : "") << f.modulus()[k];
    return os.str();
}

std::string to_string(const FieldElem& x) {
    std::ostringstream os;
    os << '[';
    auto c = x.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
    os << ']';
    return os.str();
}

}  // namespace skewcyc
