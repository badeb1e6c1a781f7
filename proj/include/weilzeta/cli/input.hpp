#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "weilzeta/error.hpp"
#include "weilzeta/form.hpp"
#include "weilzeta/hodge_diamond.hpp"
#include "weilzeta/poly.hpp"
#include "weilzeta/variety.hpp"

namespace weilzeta::cli {

class ParseError : public Error {
public:
    ParseError(unsigned line, unsigned column, std::set<std::string> expected, const std::string& found);

    unsigned line() const { return line_; }
    unsigned column() const { return column_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    unsigned line_, column_;
    std::set<std::string> expected_;
};

struct InputDocument {
    // [field]
    std::optional<std::uint64_t> p;
    std::optional<unsigned> k;
    // [variety]
    std::optional<VarietyExpr> variety;
    // [run]
    std::optional<long> r;
    std::optional<unsigned> terms;
    std::optional<std::uint64_t> bounds;
    // [frobenius] P0, P1, ... as coefficient lists, constant term first
    std::map<unsigned, ZPoly> frobenius;
    // [claims]
    std::optional<long> cycle_rank;
    std::optional<ZPoly> minimal_poly;
    // [hodge] h0, h1, ...: row j lists h[j][0..d]
    std::optional<HodgeDiamond> hodge;
};

/// Line-based sections `[name]` with `key = value` lines; `#` starts a comment line.
InputDocument parse_input(std::string_view text);

/// Variety grammar: P(n) | hyp(n; poly) | curve(poly) | prod(expr, expr).
VarietyExpr parse_variety(std::string_view text, unsigned line = 1, unsigned column = 1);

/// Integer polynomial in x0, x1, ...; whitespace is ignored.
Form parse_poly(std::string_view text, unsigned line = 1, unsigned column = 1);

/// Comma-separated integers, constant term first.
ZPoly parse_coefficients(std::string_view text, unsigned line = 1, unsigned column = 1);

}  // namespace weilzeta::cli
