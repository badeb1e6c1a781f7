// weilzeta: zeta functions of varieties over finite fields, special values at
// s = r, and the abelian-group utilities behind them.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "weilzeta/cli/input.hpp"
#include "weilzeta/cli/pipeline.hpp"
#include "weilzeta/cli/report.hpp"
#include "weilzeta/error.hpp"

namespace {

using namespace weilzeta;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

BigInt big(const std::string& s, const char* what) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    BigInt v;
    if (t.empty() || v.set_str(t, 10) != 0) throw Error(ErrorKind::ParseError, std::string("bad integer in ") + what + ": '" + s + "'");
    return v;
}

PrimePower parse_q(const std::string& s) {
    const auto parts = split(s, '^');
    if (parts.empty() || parts.size() > 2) throw Error(ErrorKind::ParseError, "--q expects P or P^K, got '" + s + "'");
    const BigInt p = big(parts[0], "--q");
    const BigInt k = parts.size() == 2 ? big(parts[1], "--q") : BigInt(1);
    if (p < 2 || !p.fits_ulong_p() || k < 1 || k > 64) throw Error(ErrorKind::InvalidArgument, "--q out of range: " + s);
    return PrimePower(p.get_ui(), static_cast<unsigned>(k.get_ui()));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeta functions over finite fields and their special values"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input_path, q_text, entries_text, orders_text, gens_text;
    std::optional<unsigned> terms;
    std::optional<long> r;
    std::optional<std::uint64_t> max_points;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    bool json = false;

    app.add_option("--input", input_path, "Input document");
    app.add_option("--q", q_text, "Field size as P^K (overrides [field])");
    app.add_option("--terms", terms, "Number of point counts N_1..N_M");
    app.add_option("--r", r, "Twist r for special values");
    app.add_option("--max-points", max_points, "Size guard on enumerated point spaces");
    app.add_option("--seed", seed, "Seed for randomized checks");
    app.add_option("--threads", threads, "Counting threads (0 = all cores)");
    app.add_flag("--json", json, "Machine-readable report");

    std::string command;
    for (const char* name : {"count", "zeta", "special", "verify"}) {
        app.add_subcommand(name, std::string("Run the ") + name + " pipeline")->callback([&command, name] { command = name; });
    }

    cli::AbgrpArgs ab;
    std::string op;
    std::string n_text, modulus_text;
    auto* abgrp = app.add_subcommand("abgrp", "Abelian group utilities");
    abgrp->add_option("op", op,
                      "snf | zvalue | decompose | quotient | ulm | complete | complement | lift-idempotent | lift-unit | selfcheck")
        ->required();
    abgrp->add_option("--rows", ab.rows, "Matrix row count");
    abgrp->add_option("--entries", entries_text, "Row-major matrix entries, comma separated");
    abgrp->add_option("--group", ab.group, "Group such as Z^2+Q+Z/6+Q_3/Z_3^1");
    abgrp->add_option("--source", ab.source, "Source group of a homomorphism");
    abgrp->add_option("--target", ab.target, "Target group of a homomorphism");
    abgrp->add_option("--n", n_text, "Integer n (quotient G/nG, or the exponent in l^n N)");
    abgrp->add_option("--l", ab.l, "Prime l");
    abgrp->add_option("--modulus", modulus_text, "Modulus p^s for lifting");
    abgrp->add_option("--orders", orders_text, "Cyclic orders of N, comma separated");
    abgrp->add_option("--gens", gens_text, "Generators of M: coordinates comma separated, elements separated by ';'");
    abgrp->callback([&command] { command = "abgrp"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (command == "abgrp") {
            if (!entries_text.empty())
                for (const auto& e : split(entries_text, ',')) ab.entries.push_back(big(e, "--entries"));
            if (!n_text.empty()) {
                ab.n = big(n_text, "--n");
                if (*ab.n >= 0 && ab.n->fits_uint_p()) ab.exponent = static_cast<unsigned>(ab.n->get_ui());
            }
            if (!modulus_text.empty()) ab.modulus = big(modulus_text, "--modulus");
            if (!orders_text.empty())
                for (const auto& o : split(orders_text, ',')) ab.orders.push_back(big(o, "--orders").get_ui());
            if (!gens_text.empty())
                for (const auto& g : split(gens_text, ';')) {
                    std::vector<std::uint64_t> el;
                    for (const auto& c : split(g, ',')) {
                        BigInt v = big(c, "--gens");
                        if (v < 0) throw Error(ErrorKind::InvalidArgument, "--gens coordinates must be nonnegative");
                        el.push_back(v.get_ui());
                    }
                    ab.gens.push_back(el);
                }
            ab.seed = seed;
            const auto res = cli::run_abgrp(op, ab);
            std::cout << (json ? res.json : res.text);
            return 0;
        }

        if (input_path.empty()) throw Error(ErrorKind::InvalidArgument, "--input is required for " + command);
        const cli::InputDocument doc = cli::parse_input(read_file(input_path));
        cli::RunOptions opts;
        opts.command = command;
        if (!q_text.empty()) opts.q = parse_q(q_text);
        opts.terms = terms;
        opts.r = r;
        opts.max_points = max_points;
        opts.threads = threads;
        const cli::Report rep = cli::run_pipeline(doc, opts);
        std::cout << (json ? cli::to_json(rep) : cli::to_text(rep));
        const int code = cli::report_exit_code(rep);
        if (code) std::cerr << "error: Mismatch: cohomological and analytic special values differ\n";
        return code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}
