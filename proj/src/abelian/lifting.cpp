#include "weilzeta/abelian/lifting.hpp"

#include "weilzeta/error.hpp"

namespace weilzeta::abelian {

namespace {

void reduce_into(IntMatrix& m, const BigInt& mod) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), mod.get_mpz_t());
}

}  // namespace

ModMatrix::ModMatrix(IntMatrix entries, BigInt modulus) : m_(std::move(entries)), mod_(std::move(modulus)) {
    if (mod_ < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
    if (m_.rows() != m_.cols()) throw Error(ErrorKind::InvalidArgument, "matrix ring elements are square");
    reduce_into(m_, mod_);
}

ModMatrix ModMatrix::identity(std::size_t n, const BigInt& modulus) { return ModMatrix(IntMatrix::identity(n), modulus); }

ModMatrix ModMatrix::reduced(const BigInt& divisor) const {
    if (!mpz_divisible_p(mod_.get_mpz_t(), divisor.get_mpz_t()))
        throw Error(ErrorKind::InvalidArgument, divisor.get_str() + " does not divide " + mod_.get_str());
    return ModMatrix(m_, divisor);
}

bool ModMatrix::is_zero() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (m_(i, j) != 0) return false;
    return true;
}

ModMatrix ModMatrix::pow(unsigned long e) const {
    ModMatrix result = identity(size(), mod_);
    ModMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

static void check_same(const ModMatrix& x, const ModMatrix& y) {
    if (x.size() != y.size() || x.modulus() != y.modulus())
        throw Error(ErrorKind::InvalidArgument, "matrix ring elements from different rings");
}

ModMatrix operator+(const ModMatrix& x, const ModMatrix& y) {
    check_same(x, y);
    IntMatrix m = x.m_;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) m(i, j) += y.m_(i, j);
    return ModMatrix(std::move(m), x.mod_);
}

ModMatrix operator-(const ModMatrix& x, const ModMatrix& y) {
    check_same(x, y);
    IntMatrix m = x.m_;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) m(i, j) -= y.m_(i, j);
    return ModMatrix(std::move(m), x.mod_);
}

ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
    check_same(x, y);
    return ModMatrix(x.m_ * y.m_, x.mod_);
}

ModMatrix operator+(const ModMatrix& x, const BigInt& a) {
    IntMatrix m = x.m_;
    for (std::size_t i = 0; i < x.size(); ++i) m(i, i) += a;
    return ModMatrix(std::move(m), x.mod_);
}

std::pair<unsigned long, unsigned> prime_power_modulus(const BigInt& m) {
    if (m < 2 || !m.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, "modulus must be a prime power p^s");
    const auto factors = prime_factors(m.get_ui());
    for (auto f : factors)
        if (f != factors.front()) throw Error(ErrorKind::InvalidArgument, m.get_str() + " is not a prime power");
    return {factors.front(), static_cast<unsigned>(factors.size())};
}

IdempotentLift lift_idempotent(const ModMatrix& a) {
    const auto [p, s] = prime_power_modulus(a.modulus());
    const ModMatrix abar = a.reduced(BigInt(p));
    if (!(abar * abar == abar)) throw Error(ErrorKind::NotIdempotentModP, a.to_string() + " is not idempotent mod " + std::to_string(p));

    const ModMatrix defect = a - a * a;
    unsigned long n = 1;
    ModMatrix power = defect;
    while (!power.is_zero()) {
        power = power * defect;
        ++n;
    }
    const ModMatrix one = ModMatrix::identity(a.size(), a.modulus());
    const ModMatrix lifted = (one - (one - a).pow(n)).pow(n);
    if (!(lifted * lifted == lifted) || !((lifted - a).reduced(BigInt(p)).is_zero()))
        throw Error(ErrorKind::HypothesisFailed, "idempotent lift failed verification");
    return {lifted, n};
}

std::optional<IntMatrix> inverse_mod_prime(const IntMatrix& a0, unsigned long p) {
    const std::size_t n = a0.rows();
    IntMatrix a = a0;
    IntMatrix inv = IntMatrix::identity(n);
    const BigInt P(p);
    reduce_into(a, P);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(col, j), a(piv, j));
            std::swap(inv(col, j), inv(piv, j));
        }
        BigInt scale;
        mpz_invert(scale.get_mpz_t(), a(col, col).get_mpz_t(), P.get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * scale % P;
            inv(col, j) = inv(col, j) * scale % P;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const BigInt f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
        reduce_into(a, P);
        reduce_into(inv, P);
    }
    return inv;
}

ModMatrix lift_unit(const ModMatrix& a) {
    const auto [p, s] = prime_power_modulus(a.modulus());
    const auto cbar = inverse_mod_prime(a.entries(), p);
    if (!cbar) throw Error(ErrorKind::NotUnitModP, a.to_string() + " is not invertible mod " + std::to_string(p));
    const ModMatrix c(*cbar, a.modulus());
    const ModMatrix u = a * c;  // u = 1 mod p
    const ModMatrix one = ModMatrix::identity(a.size(), a.modulus());
    const ModMatrix x = one - u;  // nilpotent: x^s = 0 mod p^s
    ModMatrix series = one, term = one;
    for (unsigned k = 1; k < s; ++k) {
        term = term * x;
        series = series + term;
    }
    // a c series = u series = 1, so a^{-1} = c series.
    const ModMatrix inv = c * series;
    if (!(a * inv == one)) throw Error(ErrorKind::HypothesisFailed, "unit lift failed verification");
    return inv;
}

}  // namespace weilzeta::abelian
