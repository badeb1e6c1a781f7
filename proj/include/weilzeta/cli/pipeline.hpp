#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilzeta/cli/input.hpp"
#include "weilzeta/cli/report.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/variety.hpp"
#include "weilzeta/zeta.hpp"

namespace weilzeta::cli {

struct RunOptions {
    std::string command;  // count | zeta | special | verify
    std::optional<PrimePower> q;
    std::optional<unsigned> terms;
    std::optional<long> r;
    std::optional<std::uint64_t> max_points;
    unsigned threads = 1;
};

Report run_pipeline(const InputDocument& doc, const RunOptions& opts);

/// 0, or 4 when a verify report's cross-check failed.
int report_exit_code(const Report& r);

/// N_1..N_M. Hypersurfaces are enumerated while the size guard allows and
/// extended through their reconstructed zeta function beyond that; products
/// multiply factor counts. `enumerated` receives how many leading counts came
/// from enumeration (or closed forms) for every factor.
std::vector<BigInt> variety_counts(const VarietyExpr& v, const Field& field, unsigned M, const Limits& limits,
                                   unsigned* enumerated = nullptr);

/// Weil factorization from counts, with Betti numbers from the Hodge diamond.
ZetaFunction variety_zeta(const VarietyExpr& v, const Field& field, const Limits& limits);

struct AbgrpArgs {
    std::optional<std::string> group, source, target;
    std::optional<std::size_t> rows;
    std::vector<BigInt> entries;
    std::optional<BigInt> n;
    std::optional<std::uint64_t> l;
    std::optional<unsigned> exponent;
    std::optional<BigInt> modulus;
    std::vector<std::uint64_t> orders;
    std::vector<std::vector<std::uint64_t>> gens;
    std::optional<std::uint64_t> seed;  // selfcheck
};

struct AbgrpResult {
    std::string json;  // newline-terminated
    std::string text;
};

/// snf, zvalue, decompose, quotient, ulm, complete, complement, lift-idempotent,
/// lift-unit, and selfcheck (randomized postcondition checks driven by the seed).
AbgrpResult run_abgrp(const std::string& op, const AbgrpArgs& args);

}  // namespace weilzeta::cli
