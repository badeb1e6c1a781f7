#include "weilzeta/cli/pipeline.hpp"

#include <random>
#include <sstream>

#include <json.hpp>

#include "weilzeta/abelian/finite.hpp"
#include "weilzeta/abelian/groups.hpp"
#include "weilzeta/abelian/lifting.hpp"
#include "weilzeta/abelian/smith.hpp"
#include "weilzeta/frob_cohomology.hpp"
#include "weilzeta/hodge.hpp"
#include "weilzeta/special_value.hpp"

namespace weilzeta::cli {

namespace {

long total(const std::vector<long>& b) {
    long s = 0;
    for (long x : b) s += x;
    return s;
}

PrimePower prime_power_of(const Field& f) { return PrimePower(f.characteristic(), f.degree()); }

std::vector<BigInt> leaf_counts(const VarietyExpr& v, const Field& field, unsigned M, const Limits& limits,
                                unsigned& enumerated) {
    std::vector<BigInt> counts;
    for (unsigned m = 1; m <= M; ++m) {
        try {
            counts.push_back(count_points(v, field, m, limits));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SizeExceeded) throw;
            break;
        }
    }
    enumerated = static_cast<unsigned>(counts.size());
    if (counts.size() == M) return counts;

    const auto betti = betti_degrees(v, hodge_of);
    if (static_cast<long>(counts.size()) < total(betti))
        throw Error(ErrorKind::SizeExceeded, "only " + std::to_string(counts.size()) + " counts of " + v.to_string() +
                                                 " fit the size guard; the zeta function needs " +
                                                 std::to_string(total(betti)));
    const ZetaFunction z = zeta_from_counts(prime_power_of(field), counts, betti);
    std::vector<BigInt> full = expand_counts(z, M);
    for (std::size_t m = 0; m < counts.size(); ++m)
        if (full[m] != counts[m]) throw Error(ErrorKind::NoRationalFit, "reconstructed zeta function does not reproduce N_" + std::to_string(m + 1));
    return full;
}

}  // namespace

std::vector<BigInt> variety_counts(const VarietyExpr& v, const Field& field, unsigned M, const Limits& limits,
                                   unsigned* enumerated) {
    unsigned local = M;
    std::vector<BigInt> out;
    if (const auto* prod = v.as<Product>()) {
        unsigned el = 0, er = 0;
        out = variety_counts(*prod->left, field, M, limits, &el);
        const auto right = variety_counts(*prod->right, field, M, limits, &er);
        for (unsigned m = 0; m < M; ++m) out[m] *= right[m];
        local = std::min(el, er);
    } else if (v.as<ProjectiveSpace>()) {
        out = count_vector(v, field, M, limits);
    } else {
        out = leaf_counts(v, field, M, limits, local);
    }
    if (enumerated) *enumerated = local;
    return out;
}

ZetaFunction variety_zeta(const VarietyExpr& v, const Field& field, const Limits& limits) {
    const auto betti = betti_degrees(v, hodge_of);
    const auto counts = variety_counts(v, field, static_cast<unsigned>(total(betti)), limits);
    return zeta_from_counts(prime_power_of(field), counts, betti);
}

namespace {

OrderEntry order_entry(const CohomologyOrder& o) { return {o.finite, o.finite ? o.order : Rational(0), o.rank}; }

std::string smoothness_verdict(const VarietyExpr& v, const Field& field, const Limits& limits) {
    for (unsigned depth : {2u, 1u}) {
        try {
            return smoothness_probe(v, field, depth, limits).verdict();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SizeExceeded) throw;
        }
    }
    return "not-run";
}

}  // namespace

Report run_pipeline(const InputDocument& doc, const RunOptions& opts) {
    static const std::vector<std::string> kCommands{"count", "zeta", "special", "verify"};
    if (std::find(kCommands.begin(), kCommands.end(), opts.command) == kCommands.end())
        throw Error(ErrorKind::InvalidArgument, "unknown command '" + opts.command + "'");

    std::optional<PrimePower> pq = opts.q;
    if (!pq) {
        if (!doc.p || !doc.k) throw Error(ErrorKind::InvalidArgument, "field not given: set [field] p and k, or --q");
        pq = PrimePower(*doc.p, *doc.k);
    }
    Limits limits;
    limits.threads = opts.threads;
    if (doc.bounds) limits.max_points = *doc.bounds;
    if (opts.max_points) limits.max_points = *opts.max_points;
    const Field field = make_field(pq->p(), pq->k(), limits);

    Report rep;
    rep.command = opts.command;
    rep.p = pq->p();
    rep.k = pq->k();
    rep.q = BigInt(static_cast<unsigned long>(pq->q()));

    const bool want_zeta = opts.command != "count";
    const bool want_special = opts.command == "special" || opts.command == "verify";
    const std::optional<long> r = opts.r ? opts.r : doc.r;
    if (want_special && !r) throw Error(ErrorKind::InvalidArgument, "twist r not given: set [run] r or --r");
    std::optional<unsigned> terms = opts.terms ? opts.terms : doc.terms;

    std::optional<ZetaFunction> z;
    std::optional<HodgeDiamond> hd = doc.hodge;
    std::string smoothness = "not-run";

    if (doc.variety) {
        const VarietyExpr& v = *doc.variety;
        rep.variety = v.to_string();
        rep.dimension = v.dimension();
        if (!hd && want_zeta) hd = hodge_of(v);
        if (hd && hd->d != v.dimension())
            throw Error(ErrorKind::InvalidArgument, "[hodge] diamond has dimension " + std::to_string(hd->d) +
                                                        ", variety has " + std::to_string(v.dimension()));
        if (want_zeta) {
            const std::vector<long> betti = doc.hodge ? doc.hodge->betti() : betti_degrees(v, hodge_of);
            const unsigned need = static_cast<unsigned>(total(betti));
            const unsigned M = terms ? *terms : need;
            rep.counts = variety_counts(v, field, M, limits, &rep.enumerated_terms);
            z = zeta_from_counts(*pq, rep.counts, betti);
            smoothness = smoothness_verdict(v, field, limits);
        } else {
            rep.counts = variety_counts(v, field, terms ? *terms : 3, limits, &rep.enumerated_terms);
        }
    } else if (!doc.frobenius.empty()) {
        std::vector<ZPoly> polys;
        for (unsigned i = 0; i < doc.frobenius.size(); ++i) {
            auto it = doc.frobenius.find(i);
            if (it == doc.frobenius.end())
                throw Error(ErrorKind::InvalidArgument, "[frobenius] is missing P" + std::to_string(i));
            polys.push_back(it->second);
        }
        const FrobData fd = FrobData::from_polys(*pq, polys);
        z = ZetaFunction{fd.d, *pq, fd.polys};
        rep.dimension = fd.d;
        rep.counts = expand_counts(*z, terms ? *terms : static_cast<unsigned>(2 * fd.d + 1));
        rep.enumerated_terms = 0;
        if (hd && hd->d != fd.d) throw Error(ErrorKind::InvalidArgument, "[hodge] dimension does not match [frobenius]");
    } else {
        throw Error(ErrorKind::InvalidArgument, "input needs a [variety] expr or [frobenius] data");
    }

    if (!want_zeta) return rep;

    const FunctionalEquation fe = functional_equation_check(*z);
    const RiemannHypothesisReport rh = riemann_hypothesis_check(*z);
    ZetaBlock zb;
    for (const auto& P : z->factors) zb.factors.push_back(P.coeffs());
    zb.betti = z->betti();
    zb.functional_equation = fe.holds;
    zb.functional_equation_sign = fe.sign;
    zb.euler_characteristic = fe.chi_top;
    zb.riemann_hypothesis = rh.holds();
    for (const auto& w : rh.factors) zb.max_relative_deviation.push_back(w.max_relative_deviation);
    zb.smoothness = smoothness;
    rep.zeta = zb;

    if (!want_special) return rep;

    if (!hd) throw Error(ErrorKind::InvalidArgument, "special values need Hodge numbers: add a [hodge] section");
    const SpecialValueReport sv = predict_chi_prime(*z, *hd, *r);
    SpecialBlock sb;
    sb.r = sv.r;
    sb.rho = sv.rho;
    sb.leading = sv.leading;
    sb.sign = sv.sign;
    sb.chi_O = sv.chi_O;
    sb.predicted_chi_prime = sv.predicted_chi_prime;
    sb.smoothness = smoothness;
    sb.weights_ok = rh.holds();
    sb.functional_equation_ok = fe.holds;
    sb.hodge_char_caveat = doc.variety && !doc.hodge && hodge_characteristic_caveat(*doc.variety, pq->p());
    HypothesisFlags flags{smoothness, sb.weights_ok, sb.functional_equation_ok, sb.hodge_char_caveat};
    sb.hypotheses_verified = flags.verified();
    rep.special = sb;

    if (opts.command != "verify") return rep;

    VerifyBlock vb;
    FrobData fd;
    if (!doc.frobenius.empty() && doc.variety) {
        std::vector<ZPoly> polys;
        for (const auto& [i, P] : doc.frobenius) polys.push_back(P);
        fd = FrobData::from_polys(*pq, polys);
        vb.frobenius_source = "input";
    } else {
        fd = FrobData::from_zeta(*z);
        vb.frobenius_source = doc.variety ? "zeta" : "input";
    }
    const WeilEtaleReport we = weil_etale_orders(fd, *r);
    for (const auto& g : we.gamma0) vb.gamma0.push_back({g.degree, g.rho, order_entry(g.h0), order_entry(g.h1), g.residual});
    for (const auto& d : we.degrees)
        vb.degrees.push_back({d.i, order_entry(d.coinvariants), order_entry(d.invariants), d.rank()});
    vb.rank_degrees = we.rank_degrees();
    const CrossCheck cc = crosscheck_special_value(fd, *z, *r);
    vb.crosscheck_match = cc.match;
    vb.cohomological = cc.cohomological;
    vb.analytic = cc.analytic;
    vb.tate = tate_verdict(*z, *r, doc.cycle_rank).to_string();
    const long two_r = 2 * *r;
    if (two_r >= 0 && two_r < static_cast<long>(fd.polys.size()))
        vb.semisimplicity = to_string(semisimplicity_verdict(fd.polys[two_r], pq->q(), *r, doc.minimal_poly));
    else
        vb.semisimplicity = to_string(Semisimplicity::Unknown);
    for (const auto& pp : prime_breakdown(sv.predicted_chi_prime)) vb.chi_prime_primes.push_back({pp.prime, pp.exponent});
    rep.verify = vb;
    return rep;
}

int report_exit_code(const Report& r) { return r.verify && !r.verify->crosscheck_match ? 4 : 0; }

// ---------------------------------------------------------------------------
// abgrp

namespace {

using Json = nlohmann::ordered_json;
using namespace abelian;

Json rat(const Rational& x) { return Json::parse(rational_json(x)); }

Json ints(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Json matrix_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<BigInt> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        a.push_back(ints(row));
    }
    return a;
}

Json element_json(const Element& e) { return Json(e); }

IntMatrix matrix_arg(const AbgrpArgs& a, std::size_t default_rows) {
    const std::size_t rows = a.rows.value_or(default_rows);
    if (rows == 0) {
        if (!a.entries.empty()) throw Error(ErrorKind::InvalidArgument, "entries given for a matrix with zero rows");
        return IntMatrix(0, 0);
    }
    if (a.entries.size() % rows != 0)
        throw Error(ErrorKind::InvalidArgument, std::to_string(a.entries.size()) + " entries do not fill " +
                                                    std::to_string(rows) + " rows");
    return IntMatrix(rows, a.entries.size() / rows, a.entries);
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
    if (!v) throw Error(ErrorKind::InvalidArgument, std::string("missing ") + flag);
    return *v;
}

std::string text_of(const Json& j) {
    std::ostringstream os;
    for (const auto& [k, v] : j.items()) {
        if (k == "report_version") continue;
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return os.str();
}

// Smith forms of random matrices and lifts of random near-idempotents and units.
Json selfcheck(std::uint64_t seed, unsigned rounds) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    unsigned snf_ok = 0, idem_ok = 0, unit_ok = 0;
    for (unsigned round = 0; round < rounds; ++round) {
        const std::size_t rows = uniform(1, 4), cols = uniform(1, 4);
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-20, 20);
        const SmithForm sf = smith_normal_form(m);
        bool ok = sf.U * m * sf.V == sf.D && is_unimodular(sf.U) && is_unimodular(sf.V);
        const auto inv = sf.invariants();
        for (std::size_t i = 1; i < inv.size(); ++i) ok = ok && mpz_divisible_p(inv[i].get_mpz_t(), inv[i - 1].get_mpz_t());
        snf_ok += ok;

        static const std::vector<std::pair<long, unsigned>> kMods{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}};
        const auto [p, s] = kMods[uniform(0, kMods.size() - 1)];
        const BigInt mod = ipow(BigInt(p), s);
        const std::size_t n = uniform(1, 3);
        // e = c diag(0/1) c^{-1} mod p, then perturbed by p * random.
        IntMatrix c(n, n), diag(n, n), noise(n, n);
        std::optional<IntMatrix> cinv;
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) c(i, j) = uniform(0, p - 1);
            cinv = inverse_mod_prime(c, p);
        } while (!cinv);
        for (std::size_t i = 0; i < n; ++i) {
            diag(i, i) = uniform(0, 1);
            for (std::size_t j = 0; j < n; ++j) noise(i, j) = p * uniform(0, mod.get_si() / p);
        }
        const ModMatrix a(c * diag * *cinv, mod);
        const ModMatrix near = a + ModMatrix(noise, mod);
        const IdempotentLift lift = lift_idempotent(near);
        idem_ok += lift.value * lift.value == lift.value && (lift.value - near).reduced(BigInt(p)).is_zero();
        const ModMatrix unit = ModMatrix(c, mod) + ModMatrix(noise, mod);
        unit_ok += unit * lift_unit(unit) == ModMatrix::identity(n, mod);
    }
    Json j;
    j["seed"] = seed;
    j["rounds"] = rounds;
    j["snf_ok"] = snf_ok;
    j["idempotent_ok"] = idem_ok;
    j["unit_ok"] = unit_ok;
    j["all_ok"] = snf_ok == rounds && idem_ok == rounds && unit_ok == rounds;
    return j;
}

}  // namespace

AbgrpResult run_abgrp(const std::string& op, const AbgrpArgs& a) {
    Json j;
    j["report_version"] = kReportVersion;
    j["op"] = op;
    if (op == "snf") {
        const IntMatrix m = matrix_arg(a, 1);
        const SmithForm sf = smith_normal_form(m);
        j["D"] = matrix_json(sf.D);
        j["U"] = matrix_json(sf.U);
        j["V"] = matrix_json(sf.V);
        j["invariants"] = ints(sf.invariants());
    } else if (op == "zvalue") {
        const AbGroup s = AbGroup::parse(need(a.source, "--source"));
        const AbGroup t = AbGroup::parse(need(a.target, "--target"));
        const GroupHom f(s, t, matrix_arg(a, t.fg_generators()));
        const KernelCokernel kc = kernel_cokernel(f);
        j["kernel_order"] = kc.kernel_finite ? Json(kc.kernel_order.get_str()) : Json("infinite");
        j["cokernel_order"] = kc.cokernel_finite ? Json(kc.cokernel_order.get_str()) : Json("infinite");
        j["z"] = rat(z_value(f));
    } else if (op == "decompose") {
        j["cyclic_orders"] = ints(cyclic_decomposition(matrix_arg(a, 1)));
    } else if (op == "quotient") {
        const AbGroup g = AbGroup::parse(need(a.group, "--group"));
        j["group"] = g.to_string();
        j["quotient"] = quotient_mod_n(g, need(a.n, "--n")).to_string();
        j["tate_module"] = tate_to_string(torsion_T(g));
    } else if (op == "ulm") {
        const AbGroup g = AbGroup::parse(need(a.group, "--group"));
        const UlmReport u = ulm_and_divisible(g);
        j["group"] = g.to_string();
        j["ulm"] = u.ulm.to_string();
        j["divisible"] = u.divisible.to_string();
        j["ulm_equals_divisible"] = u.ulm_equals_divisible;
        j["tate_trivial"] = u.tate_trivial;
        j["uniquely_divisible"] = u.uniquely_divisible;
        j["tate_trivial_implies_torsion_free"] = u.tate_trivial_implies_torsion_free;
    } else if (op == "complete") {
        const AbGroup g = AbGroup::parse(need(a.group, "--group"));
        const std::uint64_t l = need(a.l, "--l");
        j["group"] = g.to_string();
        j["completion"] = l_adic_completion(g, l).to_string(l);
    } else if (op == "complement") {
        const FiniteGroup n(a.orders);
        const Complement c = summand_complement(n, a.gens, need(a.l, "--l"), need(a.exponent, "--n"));
        Json gens = Json::array();
        for (const auto& g : c.generators) gens.push_back(element_json(g));
        j["complement"] = gens;
        j["orders"] = c.generator_orders;
        j["m_order"] = c.m_size;
        j["c_order"] = c.c_size;
    } else if (op == "lift-idempotent") {
        const BigInt& mod = need(a.modulus, "--modulus");
        const IdempotentLift lift = lift_idempotent(ModMatrix(matrix_arg(a, 1), mod));
        j["lift"] = matrix_json(lift.value.entries());
        j["N"] = lift.exponent_n;
    } else if (op == "lift-unit") {
        const BigInt& mod = need(a.modulus, "--modulus");
        j["inverse"] = matrix_json(lift_unit(ModMatrix(matrix_arg(a, 1), mod)).entries());
    } else if (op == "selfcheck") {
        unsigned rounds = 200;
        if (a.n) {
            if (*a.n < 1 || *a.n > 100000) throw Error(ErrorKind::InvalidArgument, "--n rounds must be in 1..100000");
            rounds = static_cast<unsigned>(a.n->get_ui());
        }
        const Json checks = selfcheck(a.seed.value_or(1), rounds);
        for (const auto& [k, v] : checks.items()) j[k] = v;
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown abgrp operation '" + op + "'");
    }
    return {j.dump(2) + "\n", text_of(j)};
}

}  // namespace weilzeta::cli
