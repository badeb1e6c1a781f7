// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "oracles.hpp"
#include "weilzeta/abelian/finite.hpp"
#include "weilzeta/abelian/groups.hpp"
#include "weilzeta/abelian/lifting.hpp"
#include "weilzeta/cli/input.hpp"
#include "weilzeta/cli/pipeline.hpp"
#include "weilzeta/cli/report.hpp"
#include "weilzeta/error.hpp"
#include "weilzeta/frob_cohomology.hpp"
#include "weilzeta/hodge.hpp"
#include "weilzeta/special_value.hpp"
#include "weilzeta/zeta.hpp"

using namespace weilzeta;
using namespace weilzeta::abelian;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << what;
        ok = ok && cond;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

cli::InputDocument doc_for(const std::string& expr, std::uint64_t p, unsigned k) {
    return cli::parse_input("[field]\np = " + std::to_string(p) + "\nk = " + std::to_string(k) + "\n[variety]\nexpr = " +
                            expr + "\n");
}

cli::Report run(const cli::InputDocument& d, const std::string& cmd, long r, unsigned threads = 1) {
    cli::RunOptions o;
    o.command = cmd;
    o.r = r;
    o.threads = threads;
    return cli::run_pipeline(d, o);
}

PrimePower prime_power_of(std::uint64_t q) {
    const auto f = prime_factors(q);
    return PrimePower(f[0], static_cast<unsigned>(f.size()));
}

// 1. Z(P^n) = prod (1 - q^i t)^{-1}. The closed-form counts are also checked
//    against the hyperplane {x0 = 0} in P^{n+1}, enumerated for every m the
//    size guard admits; when enough terms fit, the zeta function is rebuilt
//    from the enumerated counts alone.
void criterion1(Outcome& o) {
    const auto t0 = Clock::now();
    int enumerated = 0, rebuilt = 0;
    for (unsigned n = 1; n <= 3; ++n)
        for (std::uint64_t q : {2u, 3u, 5u}) {
            const std::string tag = " n=" + std::to_string(n) + " q=" + std::to_string(q);
            ZetaFunction want{n, PrimePower(q, 1), {}};
            for (unsigned i = 0; i <= 2 * n; ++i)
                want.factors.push_back(i % 2 ? ZPoly{1}
                                             : ZPoly{BigInt(1), -ipow(BigInt(static_cast<unsigned long>(q)), i / 2)});
            const Field F(q, 1);
            const ZetaFunction closed = cli::variety_zeta(VarietyExpr::projective_space(n), F, {});
            o.require(closed == want, "closed form differs for" + tag);
            const auto hyperplane = VarietyExpr::hypersurface(n + 1, cli::parse_poly("x0"));
            const auto expected = expand_counts(want, n + 1);
            std::vector<BigInt> counts;
            for (unsigned m = 1; m <= n + 1; ++m) {
                try {
                    counts.push_back(count_points(hyperplane, F, m));
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::SizeExceeded) throw;
                    break;
                }
                o.require(counts.back() == expected[m - 1], "hyperplane count differs for" + tag);
                ++enumerated;
            }
            if (counts.size() == n + 1) {
                std::vector<long> betti(2 * n + 1, 0);
                for (unsigned i = 0; i <= 2 * n; i += 2) betti[i] = 1;
                o.require(zeta_from_counts(PrimePower(q, 1), counts, betti) == want, "hyperplane zeta differs for" + tag);
                ++rebuilt;
            }
        }
    const double s = seconds_since(t0);
    o.require(s < 10.0, "took " + std::to_string(s) + " s");
    o.detail << "9 closed forms, " << enumerated << " hyperplane counts, " << rebuilt << " rebuilt from enumeration, " << s
             << " s";
}

// 2. P^2 over F_2 at r = 1 against the hand computation: H^1 is Z/(q-1) and
//    e^2 is the identity on Pic = Z, so chi' = (q - 1) * z(id_Z) = 1.
void criterion2(Outcome& o) {
    const cli::Report r = run(doc_for("P(2)", 2, 1), "verify", 1);
    o.require(r.special.has_value() && r.verify.has_value(), "missing blocks");
    if (!o.ok) return;
    const auto& s = *r.special;
    const AbGroup Z = AbGroup::make(1, 0, {});
    const Rational hand = Rational(AbGroup::finite({BigInt(2 - 1)}).order()) * z_value(GroupHom(Z, Z, IntMatrix{{1}}));
    o.require(s.rho == 1, "rho");
    o.require(abs(s.leading) == 2, "|leading|");
    o.require(s.chi_O == 1, "chi_O");
    o.require(s.predicted_chi_prime == 1, "chi'");
    o.require(hand == s.predicted_chi_prime, "hand value");
    o.require(r.verify->crosscheck_match, "crosscheck");
    o.detail << "rho=1 leading=" << to_string(s.leading) << " chi_O=1 chi'=" << to_string(s.predicted_chi_prime);
}

// 3. y^2 z = x^3 + x z^2 over F_5.
void criterion3(Outcome& o) {
    const std::string poly = "x1^2*x2 - x0^3 - x0*x2^2";
    const cli::Report r = run(doc_for("curve(" + poly + ")", 5, 1), "special", 1);
    const Field F(5, 1);
    const auto e = VarietyExpr::plane_curve(cli::parse_poly(poly));
    const ZetaFunction z = cli::variety_zeta(e, F, {});
    o.require(r.zeta && r.zeta->functional_equation && r.zeta->riemann_hypothesis, "FE/RH in report");
    o.require(functional_equation_check(z).holds && riemann_hypothesis_check(z).holds(), "FE/RH");
    // N_2 from P_1, checked against a brute-force count over F_25.
    const BigInt n2_pred = expand_counts(z, 2)[1];
    const BigInt a = z.factors[1].coeff(1);  // P_1 = 1 + a t + 5 t^2
    const BigInt n2_genus1 = 25 + 1 - (a * a - 2 * 5);
    const std::uint64_t n2 = oracle::projective_zeros(2, cli::parse_poly(poly), F.extension(2));
    o.require(n2_pred == static_cast<unsigned long>(n2), "N_2 from zeta");
    o.require(n2_genus1 == static_cast<unsigned long>(n2), "N_2 from P_1");
    o.require(r.special && r.special->predicted_chi_prime == 1, "chi'");
    o.detail << "P_1=" << to_string(z.factors[1]) << " N_2=" << n2 << " chi'=1";
}

// 4 and 7 share the corpus sweep; 5 compares Hodge diamonds with factor degrees.
struct CorpusSweep {
    bool crosscheck = true, shape = true, hodge = true;
    std::string first_failure;
    int runs = 0;
};

CorpusSweep sweep_corpus() {
    CorpusSweep s;
    for (const auto& c : fixtures::corpus()) {
        const auto d = doc_for(c.expr, c.p, c.k);
        const unsigned dim = d.variety->dimension();
        for (long r = 0; r <= static_cast<long>(dim); ++r) {
            const cli::Report rep = run(d, "verify", r);
            ++s.runs;
            if (!rep.verify || !rep.verify->crosscheck_match) {
                s.crosscheck = false;
                if (s.first_failure.empty()) s.first_failure = c.name + " r=" + std::to_string(r);
            }
            const std::vector<unsigned> want{static_cast<unsigned>(2 * r), static_cast<unsigned>(2 * r + 1)};
            if (!rep.verify || rep.verify->rank_degrees != want) s.shape = false;
            if (r == 0) {
                const HodgeDiamond hd = hodge_of(*d.variety);
                const auto b = hd.betti();
                for (std::size_t m = 0; m < rep.zeta->factors.size(); ++m)
                    if (static_cast<long>(rep.zeta->factors[m].size()) - 1 != b[m]) s.hodge = false;
            }
        }
    }
    return s;
}

void criterion7(Outcome& o, const CorpusSweep& s) {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int t = 0; t < 500; ++t) {
        std::vector<BigInt> c{1};
        for (int k = 0, deg = 1 + static_cast<int>(rng() % 6); k < deg; ++k) c.emplace_back(static_cast<long>(rng() % 21) - 10);
        const ZPoly P(c);
        const auto g = gamma0_cohomology(P, static_cast<unsigned>(rng() % 5), 2 + rng() % 7, static_cast<long>(rng() % 4));
        for (unsigned j = 2; j <= 5; ++j, ++checked) o.require(g.h(j).finite && g.h(j).order == 1, "H^j nonzero");
    }
    o.require(s.shape, "rank degrees differ from {2r, 2r+1}");
    o.detail << checked << " higher groups zero; rank degrees {2r,2r+1} on " << s.runs << " corpus runs";
}

// 6. Abelian-group suite.
std::vector<std::uint64_t> random_chain(std::mt19937_64& rng, std::uint64_t max_order) {
    for (;;) {
        std::vector<std::uint64_t> o;
        std::uint64_t cur = 2 + rng() % 9, size = 1;
        for (unsigned i = 0, k = 1 + rng() % 3; i < k; ++i) {
            o.push_back(cur);
            size *= cur;
            cur *= 1 + rng() % 3;
        }
        if (size <= max_order) return o;
    }
}

std::set<std::uint64_t> closure(const oracle::Brute& g, const std::vector<std::vector<std::uint64_t>>& gens) {
    std::set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
        const auto x = g.at(frontier.back());
        frontier.pop_back();
        for (const auto& s : gens) {
            std::vector<long long> y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = static_cast<long long>(x[i] + s[i]);
            const auto idx = g.index(y);
            if (seen.insert(idx).second) frontier.push_back(idx);
        }
    }
    return seen;
}

std::set<std::uint64_t> multiples(const oracle::Brute& g, std::uint64_t k) {
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        const auto x = g.at(i);
        std::vector<long long> y(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) y[j] = static_cast<long long>((x[j] * k) % g.orders[j]);
        out.insert(g.index(y));
    }
    return out;
}

bool trivial_meet(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    return std::none_of(a.begin(), a.end(), [&](std::uint64_t x) { return x != 0 && b.count(x); });
}

void criterion6(Outcome& o) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(6);

    // (a) z_value against enumeration.
    int za = 0;
    for (int t = 0; t < 500; ++t) {
        const auto so = random_chain(rng, 10000), to = random_chain(rng, 10000);
        std::vector<std::vector<long long>> a(to.size(), std::vector<long long>(so.size()));
        IntMatrix m(to.size(), so.size());
        for (std::size_t i = 0; i < to.size(); ++i)
            for (std::size_t j = 0; j < so.size(); ++j) {
                const std::uint64_t step = to[i] / std::gcd(to[i], so[j]);
                a[i][j] = static_cast<long long>(step * (rng() % (to[i] / step)));
                m(i, j) = static_cast<long>(a[i][j]);
            }
        std::vector<BigInt> sb, tb;
        for (auto x : so) sb.emplace_back(static_cast<unsigned long>(x));
        for (auto x : to) tb.emplace_back(static_cast<unsigned long>(x));
        const auto [k, c] = oracle::brute_kernel_cokernel({so}, {to}, a);
        const Rational z = z_value(GroupHom(AbGroup::finite(sb), AbGroup::finite(tb), m));
        za += z == canonical(Rational(static_cast<unsigned long>(k), static_cast<unsigned long>(c)));
    }
    o.require(za == 500, "(a) " + std::to_string(za) + "/500");

    // (b) complements: 100 valid instances built greedily, plus invalid ones.
    int valid = 0, invalid_ok = 0, invalid = 0;
    while (valid < 100 || invalid < 100) {
        const std::uint64_t l = rng() % 2 ? 2 : 3;
        std::vector<std::uint64_t> orders;
        for (unsigned i = 0, k = 1 + rng() % 3; i < k; ++i) {
            std::uint64_t ord = 1;
            for (unsigned e = 0, E = 1 + rng() % 4; e < E; ++e) ord *= l;
            if (rng() % 3 == 0) ord *= l == 2 ? 3 : 2;
            orders.push_back(ord);
        }
        const oracle::Brute g{orders};
        if (g.size() > 4096) continue;
        const unsigned n = 1 + rng() % 2;
        const auto lnN = multiples(g, n == 1 ? l : l * l);
        const bool want_valid = valid < 100 && (invalid >= 100 || rng() % 2);
        std::vector<std::vector<std::uint64_t>> gens;
        if (want_valid) {
            std::vector<std::uint64_t> idx(g.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            for (auto i : idx) {
                auto trial = gens;
                trial.push_back(g.at(i));
                if (trivial_meet(closure(g, trial), lnN)) gens = trial;
            }
        } else {
            gens.push_back(g.at(rng() % g.size()));
        }
        const auto m = closure(g, gens);
        try {
            const Complement c = summand_complement(FiniteGroup(orders), gens, l, n);
            const auto cs = closure(g, c.generators);
            auto all = gens;
            all.insert(all.end(), c.generators.begin(), c.generators.end());
            const bool good = m.size() * cs.size() == g.size() && trivial_meet(m, cs) && closure(g, all).size() == g.size();
            if (want_valid) valid += good;
            else {
                // A random subgroup may happen to satisfy the hypotheses.
                if (!good) o.require(false, "(b) bad complement");
            }
            o.require(good, "(b) complement does not verify");
        } catch (const HypothesisError& e) {
            o.require(!want_valid, "(b) greedy maximal instance rejected");
            const auto& w = e.witness();
            const auto widx = g.index(std::vector<long long>(w.begin(), w.end()));
            auto bigger = gens;
            bigger.push_back(w);
            const bool meets = widx != 0 && m.count(widx) && lnN.count(widx);
            const bool extends = !m.count(widx) && trivial_meet(closure(g, bigger), lnN);
            ++invalid;
            invalid_ok += meets || extends;
        }
    }
    o.require(invalid_ok == invalid, "(b) witness check");

    // (c) lifts.
    int lifts = 0;
    const std::pair<long, unsigned> mods[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}};
    for (int t = 0; t < 200; ++t) {
        const auto [p, s] = mods[rng() % 10];
        long mod = 1;
        for (unsigned i = 0; i < s; ++i) mod *= p;
        const std::size_t n = 1 + rng() % 3;
        IntMatrix P = IntMatrix::identity(n), Pinv = IntMatrix::identity(n), D(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            D(i, i) = static_cast<long>(rng() % 2);
            for (std::size_t j = i + 1; j < n; ++j) P(i, j) = static_cast<long>(rng() % p);
        }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = j; i-- > 0;) {
                BigInt acc = 0;
                for (std::size_t k = i + 1; k <= j; ++k) acc += P(i, k) * Pinv(k, j);
                Pinv(i, j) = -acc;
            }
        IntMatrix a = P * D * Pinv;
        IntMatrix u = P;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const long noise = p * static_cast<long>(rng() % (mod / p));
                a(i, j) += noise;
                u(i, j) += noise;
            }
        const ModMatrix am(a, mod), um(u, mod);
        const auto lift = lift_idempotent(am);
        const bool idem = lift.value * lift.value == lift.value && (lift.value - am).reduced(p).is_zero();
        const bool unit = um * lift_unit(um) == ModMatrix::identity(n, mod);
        lifts += idem && unit;
    }
    o.require(lifts == 200, "(c) " + std::to_string(lifts) + "/200");

    // (d) Ulm / divisible / completion identities on the closed class.
    int ids = 0;
    const std::uint64_t primes[] = {2, 3, 5, 7, 11};
    for (int t = 0; t < 500; ++t) {
        std::vector<BigInt> cyc;
        for (unsigned i = 0, k = rng() % 4; i < k; ++i) cyc.emplace_back(static_cast<unsigned long>(2 + rng() % 60));
        std::map<std::uint64_t, unsigned> cof;
        for (unsigned i = 0, k = rng() % 3; i < k; ++i) cof[primes[rng() % 5]] += 1 + rng() % 2;
        const AbGroup g = AbGroup::make(rng() % 4, rng() % 3, cyc, cof);
        const auto u = ulm_and_divisible(g);
        bool ok = u.ulm_equals_divisible && u.tate_trivial_implies_torsion_free && u.ulm == u.divisible && u.ulm.is_divisible();
        for (std::uint64_t n = 2; n <= 30; ++n) ok = ok && quotient_mod_n(g, n).is_finite();
        if (g.cofinite.empty()) ok = ok && u.uniquely_divisible && u.ulm.is_torsion_free();
        const AbGroup free_part = AbGroup::make(g.free_rank, 0, {});
        for (std::uint64_t l : {2u, 3u, 5u})
            ok = ok && l_adic_completion(free_part, l).free_rank == quotient_mod_n(free_part, l).invariant_factors.size();
        ids += ok;
    }
    o.require(ids == 500, "(d) " + std::to_string(ids) + "/500");
    const double secs = seconds_since(t0);
    o.require(secs < 300.0, "took " + std::to_string(secs) + " s");
    o.detail << "(a) " << za << "/500 (b) " << valid << " valid, " << invalid_ok << "/" << invalid
             << " witnesses (c) " << lifts << "/200 (d) " << ids << "/500 in " << secs << " s";
}

// 8. verify twice, serial and with four counting threads.
void criterion8(Outcome& o) {
    int cases = 0;
    const std::pair<const char*, std::uint64_t> inputs[] = {{"hyp(2; x0^3 + x1^3 + x2^3)", 7},
                                                            {"prod(curve(x1^2*x2 - x0^3 - x0*x2^2), P(1))", 7},
                                                            {"hyp(3; x0*x1 - x2*x3)", 3}};
    for (const auto& [expr, p] : inputs) {
        const auto d = doc_for(expr, p, 1);
        const std::string a = cli::to_json(run(d, "verify", 1, 1));
        const std::string b = cli::to_json(run(d, "verify", 1, 1));
        const std::string c = cli::to_json(run(d, "verify", 1, 4));
        o.require(a == b && a == c, std::string("reports differ for ") + expr);
        ++cases;
    }
    o.detail << cases << " inputs, byte-identical at 1 and 4 threads";
}

int report(int id, const std::function<void(Outcome&)>& fn) {
    Outcome o;
    try {
        fn(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << " exception: " << e.what();
    }
    std::printf("%s criterion %d: %s\n", o.ok ? "PASS" : "FAIL", id, o.detail.str().c_str());
    std::fflush(stdout);
    return o.ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    failures += report(1, criterion1);
    failures += report(2, criterion2);
    failures += report(3, criterion3);
    CorpusSweep sweep;
    bool swept = false;
    auto ensure_sweep = [&] {
        if (!swept) sweep = sweep_corpus();
        swept = true;
    };
    failures += report(4, [&](Outcome& o) {
        ensure_sweep();
        o.require(sweep.crosscheck, "Mismatch at " + sweep.first_failure);
        o.detail << "Match on " << sweep.runs << " (variety, r) pairs";
    });
    failures += report(5, [&](Outcome& o) {
        ensure_sweep();
        o.require(sweep.hodge, "Hodge-Betti mismatch");
        o.detail << fixtures::corpus().size() << " corpus varieties";
    });
    failures += report(6, criterion6);
    failures += report(7, [&](Outcome& o) {
        ensure_sweep();
        criterion7(o, sweep);
    });
    failures += report(8, criterion8);
    return failures;
}
