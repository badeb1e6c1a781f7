#include "weilzeta/finite_field.hpp"

#include <string>

#include "weilzeta/arith.hpp"
#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

using Coeffs = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // p is prime: Fermat.
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t inv_lead = invmod(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t f = mulmod(a.back(), inv_lead, p);
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(f, m[i], p)) % p;
        trim(a);
    }
    return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return poly_mod(std::move(r), m, p);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint64_t p) {
    Coeffs r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

PrimePower::PrimePower(std::uint64_t p, unsigned k) : p_(p), k_(k), q_(1) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
    q_ = checked_pow(p, k, ~0ULL);
    if (q_ == 0) throw Error(ErrorKind::SizeExceeded, "p^k does not fit in 64 bits");
}

bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    // Ben-Or: gcd(x^{p^i} - x, f) = 1 for i = 1..n/2.
    Coeffs xp{0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        xp = poly_powmod(xp, p, f, p);
        Coeffs diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> least_irreducible(std::uint64_t p, unsigned degree) {
    if (degree == 1) return {0, 1};
    Coeffs f(degree + 1, 0);
    f[degree] = 1;
    // Lexicographic low-degree-first order: c_0 is the most significant digit.
    while (true) {
        if (f[0] != 0 && is_irreducible(f, p)) return f;
        int i = static_cast<int>(degree) - 1;
        while (i >= 0 && f[static_cast<std::size_t>(i)] == p - 1) {
            f[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
        ++f[static_cast<std::size_t>(i)];
    }
}

Field::Field(std::uint64_t p, unsigned degree) : p_(p), degree_(degree), order_(0) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (degree == 0) throw Error(ErrorKind::InvalidArgument, "field degree must be positive");
    order_ = checked_pow(p, degree, ~0ULL);
    if (order_ == 0) throw Error(ErrorKind::SizeExceeded, "field order does not fit in 64 bits");
    modulus_ = least_irreducible(p, degree);
}

void Field::check(const FieldElement& a) const {
    if (a.coeffs.size() != degree_) throw Error(ErrorKind::InvalidArgument, "element belongs to a different field");
}

FieldElement Field::zero() const { return FieldElement{Coeffs(degree_, 0)}; }

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long long v) const {
    FieldElement e = zero();
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    e.coeffs[0] = static_cast<std::uint64_t>(r);
    return e;
}

bool Field::is_zero(const FieldElement& a) const {
    for (auto c : a.coeffs)
        if (c) return false;
    return true;
}

FieldElement Field::element_at(std::uint64_t index) const {
    FieldElement e = zero();
    for (unsigned i = 0; i < degree_; ++i) {
        e.coeffs[i] = index % p_;
        index /= p_;
    }
    return e;
}

std::uint64_t Field::index_of(const FieldElement& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (unsigned i = degree_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
    return idx;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = zero();
    for (unsigned i = 0; i < degree_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
    return r;
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    FieldElement r = zero();
    for (unsigned i = 0; i < degree_; ++i) r.coeffs[i] = (p_ - a.coeffs[i]) % p_;
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    Coeffs r = poly_mulmod(a.coeffs, b.coeffs, modulus_, p_);
    r.resize(degree_, 0);
    return FieldElement{std::move(r)};
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
    FieldElement r = one();
    FieldElement base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement Field::inv(const FieldElement& a) const {
    if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return pow(a, order_ - 2);
}

FieldElement Field::arith(const FieldElement& a, const FieldElement& b, FieldOp op, std::uint64_t exponent) const {
    switch (op) {
        case FieldOp::Add: return add(a, b);
        case FieldOp::Sub: return sub(a, b);
        case FieldOp::Mul: return mul(a, b);
        case FieldOp::Inv: return inv(a);
        case FieldOp::Pow: return pow(a, exponent);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown field operation");
}

Field make_field(std::uint64_t p, unsigned k, const Limits& limits) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
    if (checked_pow(p, k, limits.max_points) == 0)
        throw Error(ErrorKind::SizeExceeded, std::to_string(p) + "^" + std::to_string(k) + " exceeds the size guard");
    return Field(p, k);
}

ElementRange enumerate(const Field& field, unsigned m, const Limits& limits) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
    if (checked_pow(field.order(), m, limits.max_points) == 0)
        throw Error(ErrorKind::SizeExceeded, "q^m exceeds the size guard");
    return ElementRange(field.extension(m));
}

}  // namespace weilzeta
