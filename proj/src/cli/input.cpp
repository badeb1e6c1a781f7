#include "weilzeta/cli/input.hpp"

#include <cctype>
#include <sstream>

namespace weilzeta::cli {

namespace {

std::string describe(const std::set<std::string>& expected) {
    std::string s;
    for (const auto& e : expected) s += (s.empty() ? "" : ", ") + e;
    return "{" + s + "}";
}

}  // namespace

ParseError::ParseError(unsigned line, unsigned column, std::set<std::string> expected, const std::string& found)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                       ": expected one of " + describe(expected) + ", found " + found),
      line_(line), column_(column), expected_(std::move(expected)) {}

namespace {

class Cursor {
public:
    Cursor(std::string_view s, unsigned line, unsigned column) : s_(s), line_(line), col0_(column) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool at_end() {
        skip_ws();
        return i_ == s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail({std::string("'") + c + "'"});
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s_.substr(i_, w.size()) != w) return false;
        i_ += w.size();
        return true;
    }

    [[noreturn]] void fail(std::set<std::string> expected) {
        skip_ws();
        std::string found = i_ < s_.size() ? std::string("'") + s_[i_] + "'" : std::string("end of input");
        throw ParseError(line_, col0_ + static_cast<unsigned>(i_), std::move(expected), found);
    }

    // Digits may not be split by whitespace.
    BigInt nat() {
        skip_ws();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail({"natural number"});
        return BigInt(std::string(s_.substr(start, i_ - start)));
    }
    BigInt integer() {
        bool neg = eat('-');
        if (!neg) eat('+');
        BigInt v = nat();
        return neg ? BigInt(-v) : v;
    }
    template <class T>
    T bounded(const BigInt& v, T lo, T hi, const char* what) {
        if (v < lo || v > hi) fail({std::string(what) + " in range"});
        return static_cast<T>(v.get_si());
    }

    bool digit_next() {
        skip_ws();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
    unsigned line_, col0_;
};

using Monomial = std::map<unsigned, unsigned>;

unsigned parse_var(Cursor& c) {
    if (!c.eat('x')) c.fail({"variable x<digits>"});
    if (!c.digit_next()) c.fail({"variable index"});
    BigInt idx = c.nat();
    if (idx > 63) c.fail({"variable index <= 63"});
    return static_cast<unsigned>(idx.get_ui());
}

void parse_monomial(Cursor& c, Monomial& m) {
    while (true) {
        unsigned v = parse_var(c);
        unsigned e = 1;
        if (c.eat('^')) {
            BigInt ee = c.nat();
            if (ee > 1000) c.fail({"exponent <= 1000"});
            e = static_cast<unsigned>(ee.get_ui());
        }
        m[v] += e;
        if (c.peek() == '*') {
            c.eat('*');
            if (c.peek() != 'x') c.fail({"variable x<digits>"});
            continue;
        }
        if (c.peek() == 'x') continue;
        return;
    }
}

Form parse_poly_at(Cursor& c) {
    std::vector<std::pair<BigInt, Monomial>> terms;
    bool negative = c.eat('-');
    while (true) {
        BigInt coeff = 1;
        Monomial m;
        if (c.digit_next()) {
            coeff = c.nat();
            if (c.eat('*')) {
                parse_monomial(c, m);
            } else if (c.peek() == 'x') {
                parse_monomial(c, m);
            }
        } else if (c.peek() == 'x') {
            parse_monomial(c, m);
        } else {
            c.fail({"natural number", "variable x<digits>"});
        }
        terms.emplace_back(negative ? BigInt(-coeff) : coeff, std::move(m));
        if (c.eat('+')) {
            negative = false;
        } else if (c.eat('-')) {
            negative = true;
        } else {
            break;
        }
    }
    unsigned nvars = 0;
    for (const auto& [coeff, m] : terms)
        for (const auto& [v, e] : m) nvars = std::max(nvars, v + 1);
    std::vector<Term> out;
    for (auto& [coeff, m] : terms) {
        Term t{coeff, std::vector<unsigned>(nvars, 0)};
        for (const auto& [v, e] : m) t.exps[v] = e;
        out.push_back(std::move(t));
    }
    return Form(nvars, std::move(out));
}

VarietyExpr parse_variety_at(Cursor& c) {
    static const std::set<std::string> kStarts{"P(", "hyp(", "curve(", "prod("};
    if (c.eat_word("prod")) {
        c.expect('(');
        VarietyExpr left = parse_variety_at(c);
        c.expect(',');
        VarietyExpr right = parse_variety_at(c);
        c.expect(')');
        return VarietyExpr::product(std::move(left), std::move(right));
    }
    if (c.eat_word("hyp")) {
        c.expect('(');
        BigInt n = c.nat();
        unsigned nn = c.bounded<unsigned>(n, 1u, 64u, "ambient dimension");
        c.expect(';');
        Form f = parse_poly_at(c);
        c.expect(')');
        return VarietyExpr::hypersurface(nn, std::move(f));
    }
    if (c.eat_word("curve")) {
        c.expect('(');
        Form f = parse_poly_at(c);
        c.expect(')');
        return VarietyExpr::plane_curve(std::move(f));
    }
    if (c.eat_word("P")) {
        c.expect('(');
        BigInt n = c.nat();
        unsigned nn = c.bounded<unsigned>(n, 1u, 64u, "dimension");
        c.expect(')');
        return VarietyExpr::projective_space(nn);
    }
    c.fail(kStarts);
}

std::vector<BigInt> parse_int_list(Cursor& c) {
    std::vector<BigInt> out;
    do {
        out.push_back(c.integer());
    } while (c.eat(','));
    return out;
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace

VarietyExpr parse_variety(std::string_view text, unsigned line, unsigned column) {
    Cursor c(text, line, column);
    VarietyExpr v = parse_variety_at(c);
    if (!c.at_end()) c.fail({"end of input"});
    return v;
}

Form parse_poly(std::string_view text, unsigned line, unsigned column) {
    Cursor c(text, line, column);
    Form f = parse_poly_at(c);
    if (!c.at_end()) c.fail({"'+'", "'-'", "end of input"});
    return f;
}

ZPoly parse_coefficients(std::string_view text, unsigned line, unsigned column) {
    Cursor c(text, line, column);
    ZPoly p(parse_int_list(c));
    if (!c.at_end()) c.fail({"','", "end of input"});
    return p;
}

InputDocument parse_input(std::string_view text) {
    static const std::map<std::string, std::set<std::string>> kKeys{
        {"field", {"p", "k"}},
        {"variety", {"expr"}},
        {"run", {"r", "terms", "bounds"}},
        {"frobenius", {"P<i>"}},
        {"claims", {"cycle_rank", "minimal_poly"}},
        {"hodge", {"h<j>"}},
    };
    InputDocument doc;
    std::string section;
    std::set<std::string> seen;
    std::map<unsigned, std::vector<long>> hodge_rows;
    unsigned hodge_line = 0;
    unsigned lineno = 0;
    std::size_t pos = 0;
    bool any_section = false;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        const std::string line = trim(raw);
        const unsigned indent = static_cast<unsigned>(raw.find_first_not_of(" \t"));
        if (line.empty() || line[0] == '#') continue;

        if (line[0] == '[') {
            if (line.back() != ']') throw ParseError(lineno, indent + static_cast<unsigned>(line.size()), {"']'"}, "end of line");
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (!kKeys.count(section)) {
                std::set<std::string> names;
                for (const auto& [k, v] : kKeys) names.insert("[" + k + "]");
                throw ParseError(lineno, indent + 1, names, "'" + section + "'");
            }
            any_section = true;
            if (section == "hodge") hodge_line = lineno;
            continue;
        }
        if (section.empty()) throw ParseError(lineno, indent + 1, {"'['"}, "'" + std::string(1, line[0]) + "'");

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, indent + static_cast<unsigned>(line.size()) + 1, {"'='"}, "end of line");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string_view rest = std::string_view(line).substr(eq + 1);
        const unsigned vcol = indent + static_cast<unsigned>(eq) + 2;

        auto bad_key = [&]() -> ParseError { return ParseError(lineno, indent + 1, kKeys.at(section), "'" + key + "'"); };
        if (!seen.insert(section + "." + key).second) throw ParseError(lineno, indent + 1, {"a key not already set"}, "'" + key + "'");

        Cursor c(rest, lineno, vcol);
        auto finish = [&] {
            if (!c.at_end()) c.fail({"end of line"});
        };
        auto indexed = [&](char prefix) -> std::optional<unsigned> {
            if (key.size() < 2 || key[0] != prefix) return std::nullopt;
            for (std::size_t i = 1; i < key.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(key[i]))) return std::nullopt;
            if (key.size() > 4) return std::nullopt;
            return static_cast<unsigned>(std::stoul(key.substr(1)));
        };

        if (section == "field") {
            if (key == "p") {
                BigInt v = c.nat();
                if (!v.fits_ulong_p()) c.fail({"prime below 2^64"});
                doc.p = v.get_ui();
            } else if (key == "k") {
                doc.k = c.bounded<unsigned>(c.nat(), 1u, 64u, "extension degree");
            } else {
                throw bad_key();
            }
            finish();
        } else if (section == "variety") {
            if (key != "expr") throw bad_key();
            doc.variety = parse_variety(rest, lineno, vcol);
        } else if (section == "run") {
            if (key == "r") {
                doc.r = c.bounded<long>(c.integer(), -64, 64, "twist");
            } else if (key == "terms") {
                doc.terms = c.bounded<unsigned>(c.nat(), 1u, 512u, "term count");
            } else if (key == "bounds") {
                BigInt v = c.nat();
                if (!v.fits_ulong_p() || v == 0) c.fail({"positive 64-bit bound"});
                doc.bounds = v.get_ui();
            } else {
                throw bad_key();
            }
            finish();
        } else if (section == "frobenius") {
            auto i = indexed('P');
            if (!i) throw bad_key();
            doc.frobenius[*i] = parse_coefficients(rest, lineno, vcol);
        } else if (section == "claims") {
            if (key == "cycle_rank") {
                doc.cycle_rank = c.bounded<long>(c.nat(), 0L, 1L << 30, "rank");
                finish();
            } else if (key == "minimal_poly") {
                doc.minimal_poly = parse_coefficients(rest, lineno, vcol);
            } else {
                throw bad_key();
            }
        } else if (section == "hodge") {
            auto j = indexed('h');
            if (!j) throw bad_key();
            std::vector<long> row;
            for (const auto& v : parse_int_list(c)) {
                if (v < 0 || !v.fits_slong_p()) throw ParseError(lineno, vcol, {"nonnegative Hodge number"}, v.get_str());
                row.push_back(v.get_si());
            }
            finish();
            hodge_rows[*j] = std::move(row);
        }
    }
    if (!any_section) throw ParseError(lineno, 1, {"'['"}, "end of input");

    if (!hodge_rows.empty()) {
        const unsigned d = static_cast<unsigned>(hodge_rows.size()) - 1;
        HodgeDiamond hd = HodgeDiamond::zero(d);
        for (unsigned j = 0; j <= d; ++j) {
            auto it = hodge_rows.find(j);
            if (it == hodge_rows.end() || it->second.size() != d + 1)
                throw ParseError(hodge_line, 1, {"rows h0..h" + std::to_string(d) + " of length " + std::to_string(d + 1)},
                                 "an incomplete diamond");
            for (std::size_t i = 0; i < it->second.size(); ++i) hd.h[j][i] = it->second[i];
        }
        doc.hodge = hd;
    }
    return doc;
}

}  // namespace weilzeta::cli
