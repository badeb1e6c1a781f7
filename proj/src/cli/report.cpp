#include "weilzeta/cli/report.hpp"

#include <sstream>

#include <json.hpp>

#include "weilzeta/error.hpp"

namespace weilzeta::cli {

using Json = nlohmann::ordered_json;

namespace {

Json rat(const Rational& x) {
    Json j;
    j["sign"] = sgn(x);
    j["num"] = BigInt(abs(x.get_num())).get_str();
    j["den"] = x.get_den().get_str();
    return j;
}

Rational rat(const Json& j) {
    const int sign = j.at("sign").get<int>();
    Rational x(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
    x.canonicalize();
    if (sign < 0) x = -x;
    if ((sign == 0) != (x == 0)) throw Error(ErrorKind::ParseError, "rational sign does not match its numerator");
    return x;
}

Json ints(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::vector<BigInt> ints(const Json& a) {
    std::vector<BigInt> v;
    for (const auto& x : a) v.emplace_back(x.get<std::string>());
    return v;
}

Json order(const OrderEntry& o) {
    Json j;
    j["finite"] = o.finite;
    if (o.finite)
        j["order"] = rat(o.order);
    else
        j["rank"] = o.rank;
    return j;
}

OrderEntry order(const Json& j) {
    OrderEntry o;
    o.finite = j.at("finite").get<bool>();
    if (o.finite) {
        o.order = rat(j.at("order"));
    } else {
        o.order = 0;
        o.rank = j.at("rank").get<long>();
    }
    return o;
}

std::string rational_text(const Rational& x) { return x.get_str(); }

}  // namespace

std::string rational_json(const Rational& x) { return rat(x).dump(); }

std::string to_json(const Report& r) {
    Json j;
    j["report_version"] = r.report_version;
    j["command"] = r.command;
    j["field"] = {{"p", r.p}, {"k", r.k}, {"q", r.q.get_str()}};
    j["variety"] = r.variety.empty() ? Json(nullptr) : Json(r.variety);
    j["dimension"] = r.dimension;
    j["counts"] = ints(r.counts);
    j["enumerated_terms"] = r.enumerated_terms;
    if (r.zeta) {
        const auto& z = *r.zeta;
        Json f = Json::array();
        for (const auto& p : z.factors) f.push_back(ints(p));
        j["zeta"] = {
            {"factors", f},
            {"betti", z.betti},
            {"functional_equation", {{"holds", z.functional_equation}, {"sign", z.functional_equation_sign},
                                     {"euler_characteristic", z.euler_characteristic}}},
            {"riemann_hypothesis", {{"holds", z.riemann_hypothesis}, {"max_relative_deviation", z.max_relative_deviation}}},
            {"smoothness", z.smoothness},
        };
    }
    if (r.special) {
        const auto& s = *r.special;
        j["special"] = {
            {"r", s.r},
            {"rho", s.rho},
            {"leading", rat(s.leading)},
            {"sign", s.sign},
            {"chi_O", s.chi_O.get_str()},
            {"predicted_chi_prime", rat(s.predicted_chi_prime)},
            {"hypotheses",
             {{"smoothness", s.smoothness},
              {"weights_ok", s.weights_ok},
              {"functional_equation_ok", s.functional_equation_ok},
              {"hodge_char_caveat", s.hodge_char_caveat},
              {"verified", s.hypotheses_verified}}},
        };
    }
    if (r.verify) {
        const auto& v = *r.verify;
        Json g = Json::array();
        for (const auto& e : v.gamma0)
            g.push_back({{"i", e.i}, {"rho", e.rho}, {"h0", order(e.h0)}, {"h1", order(e.h1)}, {"residual", rat(e.residual)}});
        Json d = Json::array();
        for (const auto& e : v.degrees)
            d.push_back({{"i", e.i}, {"coinvariants", order(e.coinvariants)}, {"invariants", order(e.invariants)}, {"rank", e.rank}});
        Json primes = Json::array();
        for (const auto& p : v.chi_prime_primes) primes.push_back({{"prime", p.prime}, {"exponent", p.exponent}});
        j["verify"] = {
            {"frobenius_source", v.frobenius_source},
            {"gamma0", g},
            {"weil_etale", d},
            {"rank_degrees", v.rank_degrees},
            {"crosscheck", {{"match", v.crosscheck_match}, {"cohomological", rat(v.cohomological)}, {"analytic", rat(v.analytic)}}},
            {"tate", v.tate},
            {"semisimplicity", v.semisimplicity},
            {"chi_prime_primes", primes},
        };
    }
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("report is not valid JSON: ") + e.what());
    }
    try {
        Report r;
        r.report_version = j.at("report_version").get<int>();
        if (r.report_version != kReportVersion)
            throw Error(ErrorKind::ParseError, "unsupported report_version " + std::to_string(r.report_version));
        r.command = j.at("command").get<std::string>();
        r.p = j.at("field").at("p").get<std::uint64_t>();
        r.k = j.at("field").at("k").get<unsigned>();
        r.q = BigInt(j.at("field").at("q").get<std::string>());
        if (!j.at("variety").is_null()) r.variety = j.at("variety").get<std::string>();
        r.dimension = j.at("dimension").get<unsigned>();
        r.counts = ints(j.at("counts"));
        r.enumerated_terms = j.at("enumerated_terms").get<unsigned>();
        if (j.contains("zeta")) {
            const Json& z = j["zeta"];
            ZetaBlock b;
            for (const auto& f : z.at("factors")) b.factors.push_back(ints(f));
            b.betti = z.at("betti").get<std::vector<long>>();
            b.functional_equation = z.at("functional_equation").at("holds").get<bool>();
            b.functional_equation_sign = z.at("functional_equation").at("sign").get<int>();
            b.euler_characteristic = z.at("functional_equation").at("euler_characteristic").get<long>();
            b.riemann_hypothesis = z.at("riemann_hypothesis").at("holds").get<bool>();
            b.max_relative_deviation = z.at("riemann_hypothesis").at("max_relative_deviation").get<std::vector<double>>();
            b.smoothness = z.at("smoothness").get<std::string>();
            r.zeta = b;
        }
        if (j.contains("special")) {
            const Json& s = j["special"];
            SpecialBlock b;
            b.r = s.at("r").get<long>();
            b.rho = s.at("rho").get<long>();
            b.leading = rat(s.at("leading"));
            b.sign = s.at("sign").get<int>();
            b.chi_O = BigInt(s.at("chi_O").get<std::string>());
            b.predicted_chi_prime = rat(s.at("predicted_chi_prime"));
            const Json& h = s.at("hypotheses");
            b.smoothness = h.at("smoothness").get<std::string>();
            b.weights_ok = h.at("weights_ok").get<bool>();
            b.functional_equation_ok = h.at("functional_equation_ok").get<bool>();
            b.hodge_char_caveat = h.at("hodge_char_caveat").get<bool>();
            b.hypotheses_verified = h.at("verified").get<bool>();
            r.special = b;
        }
        if (j.contains("verify")) {
            const Json& v = j["verify"];
            VerifyBlock b;
            b.frobenius_source = v.at("frobenius_source").get<std::string>();
            for (const auto& e : v.at("gamma0"))
                b.gamma0.push_back({e.at("i").get<unsigned>(), e.at("rho").get<long>(), order(e.at("h0")), order(e.at("h1")),
                                    rat(e.at("residual"))});
            for (const auto& e : v.at("weil_etale"))
                b.degrees.push_back({e.at("i").get<unsigned>(), order(e.at("coinvariants")), order(e.at("invariants")),
                                     e.at("rank").get<long>()});
            b.rank_degrees = v.at("rank_degrees").get<std::vector<unsigned>>();
            b.crosscheck_match = v.at("crosscheck").at("match").get<bool>();
            b.cohomological = rat(v.at("crosscheck").at("cohomological"));
            b.analytic = rat(v.at("crosscheck").at("analytic"));
            b.tate = v.at("tate").get<std::string>();
            b.semisimplicity = v.at("semisimplicity").get<std::string>();
            for (const auto& p : v.at("chi_prime_primes"))
                b.chi_prime_primes.push_back({p.at("prime").get<std::string>(), p.at("exponent").get<long>()});
            r.verify = b;
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
    }
}

namespace {

std::string poly_text(const std::vector<BigInt>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        BigInt a = abs(c[i]);
        os << (first ? (c[i] < 0 ? "-" : "") : (c[i] < 0 ? " - " : " + "));
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return first ? "0" : os.str();
}

std::string order_text(const OrderEntry& o) {
    return o.finite ? "finite " + rational_text(o.order) : "rank " + std::to_string(o.rank);
}

}  // namespace

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "field      F_" << r.q.get_str() << " (p = " << r.p << ", k = " << r.k << ")\n";
    os << "variety    " << (r.variety.empty() ? "(frobenius data)" : r.variety) << ", dimension " << r.dimension << "\n";
    if (!r.counts.empty()) {
        os << "counts    ";
        for (std::size_t m = 0; m < r.counts.size(); ++m) os << " N_" << m + 1 << "=" << r.counts[m].get_str();
        os << "\n";
        if (r.enumerated_terms < r.counts.size())
            os << "           (N_1..N_" << r.enumerated_terms << " enumerated, rest from the zeta function)\n";
    }
    if (r.zeta) {
        const auto& z = *r.zeta;
        for (std::size_t i = 0; i < z.factors.size(); ++i) os << "P_" << i << "        " << poly_text(z.factors[i]) << "\n";
        os << "functional equation " << (z.functional_equation ? "holds" : "FAILS") << ", sign "
           << (z.functional_equation_sign > 0 ? "+1" : "-1") << ", chi " << z.euler_characteristic << "\n";
        os << "weights    " << (z.riemann_hypothesis ? "ok" : "FAIL") << "\n";
        os << "smoothness " << z.smoothness << "\n";
    }
    if (r.special) {
        const auto& s = *r.special;
        os << "special value at r = " << s.r << "\n";
        os << "  rho              " << s.rho << "\n";
        os << "  leading          " << rational_text(s.leading) << "\n";
        os << "  chi(X,O_X,r)     " << s.chi_O.get_str() << "\n";
        os << "  predicted chi'   " << rational_text(s.predicted_chi_prime) << "\n";
        os << "  hypotheses       smoothness=" << s.smoothness << " weights=" << (s.weights_ok ? "ok" : "fail")
           << " functional-equation=" << (s.functional_equation_ok ? "ok" : "fail")
           << (s.hodge_char_caveat ? " (characteristic divides a degree: Hodge numbers are lifted)" : "") << "\n";
    }
    if (r.verify) {
        const auto& v = *r.verify;
        os << "weil-etale (frobenius from " << v.frobenius_source << ")\n";
        for (const auto& d : v.degrees)
            os << "  H^" << d.i << "  coinvariants " << order_text(d.coinvariants) << ", invariants "
               << order_text(d.invariants) << "\n";
        os << "  rank-positive degrees:";
        for (auto i : v.rank_degrees) os << " " << i;
        os << "\n";
        os << "crosscheck " << (v.crosscheck_match ? "Match" : "Mismatch") << " (" << rational_text(v.cohomological)
           << " vs " << rational_text(v.analytic) << ")\n";
        os << "tate       " << v.tate << "\n";
        os << "semisimple " << v.semisimplicity << "\n";
    }
    return os.str();
}

}  // namespace weilzeta::cli
