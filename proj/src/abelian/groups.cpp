#include "weilzeta/abelian/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta::abelian {

std::vector<BigInt> normalize_invariants(const std::vector<BigInt>& cyclic) {
    for (const auto& n : cyclic)
        if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic orders must be positive, got " + n.get_str());
    std::vector<BigInt> out;
    for (const auto& d : smith_normal_form(IntMatrix::diagonal(cyclic)).invariants())
        if (d > 1) out.push_back(d);
    return out;
}

AbGroup AbGroup::make(unsigned a, unsigned b, const std::vector<BigInt>& cyclic,
                      const std::map<std::uint64_t, unsigned>& c) {
    AbGroup g;
    g.free_rank = a;
    g.rational_rank = b;
    g.invariant_factors = normalize_invariants(cyclic);
    for (auto [l, rank] : c) {
        if (!is_prime(l)) throw Error(ErrorKind::NotPrime, "Q_l/Z_l needs a prime l, got " + std::to_string(l));
        if (rank > 0) g.cofinite[l] = rank;
    }
    return g;
}

BigInt AbGroup::order() const {
    if (!is_finite()) throw Error(ErrorKind::NotFinite, to_string() + " is infinite");
    BigInt o = 1;
    for (const auto& n : invariant_factors) o *= n;
    return o;
}

std::string AbGroup::to_string() const {
    std::vector<std::string> parts;
    auto with_rank = [](std::string base, unsigned r) { return r == 1 ? base : base + "^" + std::to_string(r); };
    if (free_rank) parts.push_back(with_rank("Z", free_rank));
    if (rational_rank) parts.push_back(with_rank("Q", rational_rank));
    for (const auto& n : invariant_factors) parts.push_back("Z/" + n.get_str());
    for (auto [l, c] : cofinite) {
        const std::string ls = std::to_string(l);
        parts.push_back(with_rank("Q_" + ls + "/Z_" + ls, c));
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
    return out;
}

AbGroup AbGroup::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&](const std::string& why) -> AbGroup {
        throw Error(ErrorKind::ParseError, "group '" + text + "': " + why);
    };
    if (s.empty()) return fail("empty");
    if (s == "0") return {};
    unsigned a = 0, b = 0;
    std::vector<BigInt> cyclic;
    std::map<std::uint64_t, unsigned> c;
    std::size_t pos = 0;
    auto read_nat = [&](std::size_t& p) -> std::string {
        std::size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) fail("expected a number at offset " + std::to_string(start));
        return s.substr(start, p - start);
    };
    auto read_rank = [&](std::size_t& p) -> unsigned {
        if (p < s.size() && s[p] == '^') {
            ++p;
            return static_cast<unsigned>(std::stoul(read_nat(p)));
        }
        return 1;
    };
    while (pos < s.size()) {
        if (s.compare(pos, 2, "Z/") == 0) {
            pos += 2;
            BigInt n(read_nat(pos));
            unsigned r = read_rank(pos);
            for (unsigned i = 0; i < r; ++i) cyclic.push_back(n);
        } else if (s.compare(pos, 2, "Q_") == 0) {
            pos += 2;
            std::string l = read_nat(pos);
            if (s.compare(pos, 3, "/Z_") != 0) fail("expected /Z_" + l);
            pos += 3;
            if (read_nat(pos) != l) fail("mismatched primes in Q_l/Z_l");
            c[std::stoull(l)] += read_rank(pos);
        } else if (s[pos] == 'Z') {
            ++pos;
            a += read_rank(pos);
        } else if (s[pos] == 'Q') {
            ++pos;
            b += read_rank(pos);
        } else {
            fail(std::string("unexpected '") + s[pos] + "'");
        }
        if (pos < s.size()) {
            if (s[pos] != '+') fail("expected '+'");
            ++pos;
            if (pos == s.size()) fail("trailing '+'");
        }
    }
    return make(a, b, cyclic, c);
}

namespace {

// Relation matrix of the finitely generated part: diagonal 0 for free, n_i for torsion.
IntMatrix relation_diagonal(const AbGroup& g) {
    std::vector<BigInt> d(g.free_rank, BigInt(0));
    for (const auto& n : g.invariant_factors) d.push_back(n);
    return IntMatrix::diagonal(d);
}

}  // namespace

GroupHom::GroupHom(AbGroup src, AbGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (!source.is_finitely_generated() || !target.is_finitely_generated())
        throw Error(ErrorKind::InvalidArgument, "homomorphisms are defined between finitely generated groups");
    if (matrix.rows() != target.fg_generators() || matrix.cols() != source.fg_generators())
        throw Error(ErrorKind::InvalidArgument, "matrix shape " + std::to_string(matrix.rows()) + "x" +
                                                    std::to_string(matrix.cols()) + " does not match " +
                                                    source.to_string() + " -> " + target.to_string());
    const std::size_t ta = target.free_rank;
    for (std::size_t i = 0; i < target.invariant_factors.size(); ++i) {
        const BigInt& n = target.invariant_factors[i];
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            BigInt& e = matrix(ta + i, j);
            mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
        }
    }
    // n_j * (image of torsion generator j) must vanish in the target.
    for (std::size_t j = 0; j < source.invariant_factors.size(); ++j) {
        const BigInt& nj = source.invariant_factors[j];
        const std::size_t col = source.free_rank + j;
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            BigInt v = nj * matrix(i, col);
            bool ok = i < ta ? v == 0 : mpz_divisible_p(v.get_mpz_t(), target.invariant_factors[i - ta].get_mpz_t()) != 0;
            if (!ok)
                throw Error(ErrorKind::InvalidArgument,
                            "matrix does not define a homomorphism: generator " + std::to_string(col) + " of order " +
                                nj.get_str() + " maps to an element of larger order");
        }
    }
}

KernelCokernel kernel_cokernel(const GroupHom& f) {
    KernelCokernel kc;
    const IntMatrix rs = relation_diagonal(f.source);
    const IntMatrix rt = relation_diagonal(f.target);
    const std::size_t k = f.source.fg_generators();
    const std::size_t kt = f.target.fg_generators();

    const SmithForm coker = smith_normal_form(f.matrix.hconcat(rt));
    const auto cinv = coker.invariants();
    kc.cokernel_free_rank = static_cast<unsigned>(kt - cinv.size());
    kc.cokernel_finite = kc.cokernel_free_rank == 0;
    kc.cokernel_order = 1;
    for (const auto& d : cinv)
        if (d > 1) {
            kc.cokernel_invariants.push_back(d);
            kc.cokernel_order *= d;
        }

    // L = {x : A x in im R_T}; Ker f = L / im R_S.
    IntMatrix neg_rt = rt;
    for (std::size_t i = 0; i < kt; ++i) neg_rt(i, i) = -neg_rt(i, i);
    const IntMatrix full = integer_kernel(f.matrix.hconcat(neg_rt));
    const IntMatrix lattice = full.row_block(0, k);
    const SmithForm ls = smith_normal_form(lattice);
    const auto linv = ls.invariants();
    const std::size_t torsion_gens = f.source.invariant_factors.size();
    kc.kernel_finite = linv.size() == torsion_gens;
    if (kc.kernel_finite) {
        BigInt lcontent = 1, scontent = 1;
        for (const auto& d : linv) lcontent *= d;
        for (const auto& n : f.source.invariant_factors) scontent *= n;
        kc.kernel_order = scontent / lcontent;
    }
    return kc;
}

Rational z_value(const GroupHom& f) {
    const KernelCokernel kc = kernel_cokernel(f);
    if (!kc.kernel_finite) throw Error(ErrorKind::NotFinite, "kernel is infinite");
    if (!kc.cokernel_finite) throw Error(ErrorKind::NotFinite, "cokernel is infinite");
    return canonical(Rational(kc.kernel_order, kc.cokernel_order));
}

AbGroup quotient_mod_n(const AbGroup& g, const BigInt& n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
    std::vector<BigInt> cyclic(g.free_rank, n);
    for (const auto& m : g.invariant_factors) cyclic.push_back(gcd(m, n));
    return AbGroup::finite(cyclic);
}

std::map<std::uint64_t, unsigned> torsion_T(const AbGroup& g) { return g.cofinite; }

std::string tate_to_string(const std::map<std::uint64_t, unsigned>& t) {
    if (t.empty()) return "0";
    std::string out;
    for (auto [l, c] : t) {
        if (!out.empty()) out += "+";
        out += "Z_" + std::to_string(l) + (c == 1 ? "" : "^" + std::to_string(c));
    }
    return out;
}

namespace {

// Isomorphism type of nG together with which components survive as subgroups of G.
AbGroup multiple_subgroup(const AbGroup& g, const BigInt& n) {
    std::vector<BigInt> cyclic;
    for (const auto& m : g.invariant_factors) cyclic.push_back(m / gcd(m, n));
    return AbGroup::make(g.free_rank, g.rational_rank, cyclic, g.cofinite);
}

}  // namespace

UlmReport ulm_and_divisible(const AbGroup& g) {
    UlmReport rep;
    // nG for n = exponent of the torsion part kills Z/n_i; within the free part
    // a nonzero vector x avoids (max|x_i| + 1) Z^a, so the intersection is zero there.
    BigInt exponent = 1;
    for (const auto& m : g.invariant_factors) exponent = lcm(exponent, m);
    AbGroup at_exponent = multiple_subgroup(g, exponent);
    rep.ulm = AbGroup::make(0, at_exponent.rational_rank, at_exponent.invariant_factors, at_exponent.cofinite);

    // Z^a and Z/n contain no nonzero divisible element.
    rep.divisible = AbGroup::make(0, g.rational_rank, {}, g.cofinite);

    rep.quotients_finite = true;
    for (long n = 1; n <= 64; ++n)
        if (!quotient_mod_n(g, BigInt(n)).is_finite()) rep.quotients_finite = false;
    rep.ulm_equals_divisible = rep.quotients_finite && rep.ulm == rep.divisible;

    rep.tate_trivial = torsion_T(g).empty();
    rep.uniquely_divisible = rep.ulm.is_divisible() && rep.ulm.is_torsion_free();
    rep.tate_trivial_implies_torsion_free = !rep.tate_trivial || (rep.uniquely_divisible && rep.ulm == AbGroup::make(0, g.rational_rank, {}));
    return rep;
}

std::string Completion::to_string(std::uint64_t l) const {
    std::vector<std::string> parts;
    const std::string ls = std::to_string(l);
    if (free_rank) parts.push_back("Z_" + ls + (free_rank == 1 ? "" : "^" + std::to_string(free_rank)));
    for (const auto& n : finite_part) parts.push_back("Z/" + n.get_str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
    return out;
}

Completion l_adic_completion(const AbGroup& g, std::uint64_t l) {
    if (!is_prime(l)) throw Error(ErrorKind::NotPrime, std::to_string(l) + " is not prime");
    Completion c;
    c.free_rank = g.free_rank;
    for (const auto& m : g.invariant_factors) {
        unsigned long v = valuation(m, l);
        if (v > 0) c.finite_part.push_back(ipow(BigInt(l), v));
    }
    return c;
}

std::vector<BigInt> cyclic_decomposition(const IntMatrix& relations) {
    const SmithForm sf = smith_normal_form(relations);
    const auto inv = sf.invariants();
    if (inv.size() < relations.cols())
        throw Error(ErrorKind::NotFinite, "presentation has a free summand of rank " +
                                              std::to_string(relations.cols() - inv.size()));
    std::vector<BigInt> out;
    for (const auto& d : inv)
        if (d > 1) out.push_back(d);
    return out;
}

PairingEmbedding pairing_embedding(const IntMatrix& phi) {
    PairingEmbedding pe;
    // x -> (phi(x, e_1), ..., phi(x, e_b)) is x^T Phi, i.e. the matrix Phi itself.
    pe.embedding = phi;
    pe.injective = smith_normal_form(phi).rank() == phi.rows();
    return pe;
}

}  // namespace weilzeta::abelian
