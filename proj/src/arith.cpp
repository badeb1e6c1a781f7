#include "weilzeta/arith.hpp"
#include "weilzeta/error.hpp"

#include <array>

namespace weilzeta {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InhomogeneousPolynomial: return "InhomogeneousPolynomial";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::SizeExceeded: return "SizeExceeded";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::UnsupportedVariety: return "UnsupportedVariety";
        case ErrorKind::InsufficientCounts: return "InsufficientCounts";
        case ErrorKind::NoRationalFit: return "NoRationalFit";
        case ErrorKind::WeightAmbiguous: return "WeightAmbiguous";
        case ErrorKind::InternalZero: return "InternalZero";
        case ErrorKind::NotFinite: return "NotFinite";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::NotIdempotentModP: return "NotIdempotentModP";
        case ErrorKind::NotUnitModP: return "NotUnitModP";
        case ErrorKind::MinPolyInconsistent: return "MinPolyInconsistent";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::InhomogeneousPolynomial:
        case ErrorKind::InvalidArgument:
            return 2;
        case ErrorKind::SizeExceeded:
            return 3;
        case ErrorKind::InsufficientCounts:
        case ErrorKind::NoRationalFit:
        case ErrorKind::WeightAmbiguous:
        case ErrorKind::InternalZero:
            return 4;
        default:
            return 5;
    }
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rpow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        Rational inv = 1 / base;
        return rpow(inv, -exp);
    }
    Rational r(ipow(base.get_num(), static_cast<unsigned long>(exp)), ipow(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
}

unsigned long valuation(const BigInt& n, unsigned long l) {
    BigInt x = abs(n);
    unsigned long v = 0;
    while (x != 0 && mpz_divisible_ui_p(x.get_mpz_t(), l)) {
        x /= l;
        ++v;
    }
    return v;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return 0;
        r *= base;
        if (r > limit) return 0;
    }
    return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    Rational c = canonical(x);
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace weilzeta
