#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilzeta/arith.hpp"

namespace weilzeta::cli {

inline constexpr int kReportVersion = 1;

struct OrderEntry {
    bool finite = true;
    Rational order{1};
    long rank = 0;
    friend bool operator==(const OrderEntry&, const OrderEntry&) = default;
};

struct ZetaBlock {
    std::vector<std::vector<BigInt>> factors;  // P_0..P_{2d}, constant term first
    std::vector<long> betti;
    bool functional_equation = false;
    int functional_equation_sign = 0;
    long euler_characteristic = 0;
    bool riemann_hypothesis = false;
    std::vector<double> max_relative_deviation;  // per factor
    std::string smoothness = "not-run";
    friend bool operator==(const ZetaBlock&, const ZetaBlock&) = default;
};

struct SpecialBlock {
    long r = 0;
    long rho = 0;
    Rational leading;
    int sign = 0;
    BigInt chi_O;
    Rational predicted_chi_prime;
    std::string smoothness;
    bool weights_ok = false;
    bool functional_equation_ok = false;
    bool hodge_char_caveat = false;
    bool hypotheses_verified = false;
    friend bool operator==(const SpecialBlock&, const SpecialBlock&) = default;
};

struct Gamma0Entry {
    unsigned i = 0;
    long rho = 0;
    OrderEntry h0, h1;
    Rational residual;
    friend bool operator==(const Gamma0Entry&, const Gamma0Entry&) = default;
};

struct DegreeEntry {
    unsigned i = 0;
    OrderEntry coinvariants, invariants;
    long rank = 0;
    friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};

struct PrimeEntry {
    std::string prime;
    long exponent = 0;
    friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

struct VerifyBlock {
    std::string frobenius_source;  // "zeta" or "input"
    std::vector<Gamma0Entry> gamma0;
    std::vector<DegreeEntry> degrees;
    std::vector<unsigned> rank_degrees;
    bool crosscheck_match = false;
    Rational cohomological;
    Rational analytic;
    std::string tate;
    std::string semisimplicity;
    std::vector<PrimeEntry> chi_prime_primes;
    friend bool operator==(const VerifyBlock&, const VerifyBlock&) = default;
};

struct Report {
    int report_version = kReportVersion;
    std::string command;
    std::uint64_t p = 0;
    unsigned k = 0;
    BigInt q;
    std::string variety;  // empty when running from Frobenius data only
    unsigned dimension = 0;
    std::vector<BigInt> counts;   // N_1..N_M
    unsigned enumerated_terms = 0;  // leading counts obtained by direct enumeration
    std::optional<ZetaBlock> zeta;
    std::optional<SpecialBlock> special;
    std::optional<VerifyBlock> verify;
    friend bool operator==(const Report&, const Report&) = default;
};

/// Machine format: one JSON object, newline-terminated.
std::string to_json(const Report& r);
Report report_from_json(const std::string& text);

std::string to_text(const Report& r);

/// Rationals are {"sign": -1|0|1, "num": "...", "den": "..."}; exposed for the group utilities.
std::string rational_json(const Rational& x);

}  // namespace weilzeta::cli
