#include "weilzeta/variety.hpp"

#include <algorithm>
#include <thread>

#include "weilzeta/error.hpp"
#include "weilzeta/kernels/count_kernel.hpp"

namespace weilzeta {

using kernels::Code;
using kernels::LogTables;

VarietyExpr VarietyExpr::projective_space(unsigned n) {
    if (n == 0) throw Error(ErrorKind::UnsupportedVariety, "P^0 is a point; use n >= 1");
    return VarietyExpr(ProjectiveSpace{n});
}

namespace {

Form validate_form(unsigned n, Form f) {
    if (f.max_variable() > static_cast<int>(n))
        throw Error(ErrorKind::InvalidArgument, "polynomial uses variables beyond x" + std::to_string(n));
    if (!f.is_homogeneous()) throw Error(ErrorKind::InhomogeneousPolynomial, f.to_string());
    if (f.is_zero() || f.degree() < 1)
        throw Error(ErrorKind::InvalidArgument, "hypersurface equation must have degree >= 1");
    return f.widened(n + 1);
}

}  // namespace

VarietyExpr VarietyExpr::hypersurface(unsigned n, Form f) {
    if (n < 1) throw Error(ErrorKind::UnsupportedVariety, "hypersurfaces need ambient dimension >= 1");
    return VarietyExpr(Hypersurface{n, validate_form(n, std::move(f))});
}

VarietyExpr VarietyExpr::plane_curve(Form f) { return VarietyExpr(PlaneCurve{validate_form(2, std::move(f))}); }

VarietyExpr VarietyExpr::product(VarietyExpr left, VarietyExpr right) {
    return VarietyExpr(Product{std::make_shared<const VarietyExpr>(std::move(left)),
                               std::make_shared<const VarietyExpr>(std::move(right))});
}

unsigned VarietyExpr::dimension() const {
    return std::visit(
        [](const auto& n) -> unsigned {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) return n.n;
            else if constexpr (std::is_same_v<T, Hypersurface>) return n.n - 1;
            else if constexpr (std::is_same_v<T, PlaneCurve>) return 1;
            else return n.left->dimension() + n.right->dimension();
        },
        node_);
}

std::string VarietyExpr::to_string() const {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) return "P(" + std::to_string(n.n) + ")";
            else if constexpr (std::is_same_v<T, Hypersurface>)
                return "hyp(" + std::to_string(n.n) + "; " + n.f.to_string() + ")";
            else if constexpr (std::is_same_v<T, PlaneCurve>) return "curve(" + n.f.to_string() + ")";
            else return "prod(" + n.left->to_string() + ", " + n.right->to_string() + ")";
        },
        node_);
}

namespace {

struct CodedTerm {
    Code coeff;
    std::vector<unsigned> exps;
};

std::vector<CodedTerm> encode_terms(const Form& f, const LogTables& t) {
    std::vector<CodedTerm> out;
    const BigInt p(static_cast<unsigned long>(t.characteristic));
    for (const auto& term : f.terms()) {
        BigInt r = term.coeff % p;
        if (r < 0) r += p;
        Code c = t.from_integer(r.get_si());
        if (c == t.zero()) continue;
        out.push_back({c, term.exps});
    }
    return out;
}

Code eval_at(const std::vector<CodedTerm>& terms, const std::vector<Code>& x, const LogTables& t) {
    Code acc = t.zero();
    for (const auto& term : terms) {
        Code v = term.coeff;
        for (std::size_t i = 0; i < x.size() && v != t.zero(); ++i)
            if (term.exps[i]) v = t.mul(v, t.pow(x[i], term.exps[i]));
        acc = t.add(acc, v);
    }
    return acc;
}

void check_space(std::uint64_t q_ext, unsigned n, const Limits& limits) {
    if (q_ext > kernels::kMaxTableOrder || checked_pow(q_ext, n, limits.max_points) == 0)
        throw Error(ErrorKind::SizeExceeded, "search space " + std::to_string(q_ext) + "^" + std::to_string(n) +
                                                 " exceeds the size guard of " + std::to_string(limits.max_points));
}

unsigned worker_count(const Limits& limits, std::uint64_t work) {
    unsigned w = limits.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : limits.threads;
    return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(work, 1)));
}

/// Counts zeros of the affine slice x_j = 1, x_i = 0 (i < j), free x_{j+1..n};
/// the last variable is swept by the kernel.
std::uint64_t count_slice(unsigned n, unsigned j, const std::vector<CodedTerm>& terms, unsigned deg,
                          const LogTables& t, const Limits& limits) {
    std::vector<const CodedTerm*> active;
    for (const auto& term : terms) {
        bool ok = true;
        for (unsigned i = 0; i < j; ++i)
            if (term.exps[i]) ok = false;
        if (ok) active.push_back(&term);
    }
    const unsigned free_vars = n - 1 - j;
    const std::uint64_t q = t.order;
    std::uint64_t prefixes = 1;
    for (unsigned i = 0; i < free_vars; ++i) prefixes *= q;

    auto run = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
        std::vector<Code> digits(free_vars);
        std::uint64_t idx = begin;
        for (unsigned i = 0; i < free_vars; ++i) {
            digits[i] = static_cast<Code>(idx % q);
            idx /= q;
        }
        std::vector<Code> coeffs(deg + 1);
        std::uint64_t count = 0;
        for (std::uint64_t k = begin; k < end; ++k) {
            std::fill(coeffs.begin(), coeffs.end(), t.zero());
            for (const CodedTerm* term : active) {
                Code v = term->coeff;
                for (unsigned i = 0; i < free_vars && v != t.zero(); ++i) {
                    unsigned e = term->exps[j + 1 + i];
                    if (e) v = t.mul(v, t.pow(digits[i], e));
                }
                unsigned en = term->exps[n];
                coeffs[en] = t.add(coeffs[en], v);
            }
            count += kernels::count_roots(coeffs, t);
            for (unsigned i = 0; i < free_vars; ++i) {
                if (++digits[i] < static_cast<Code>(q)) break;
                digits[i] = 0;
            }
        }
        return count;
    };

    const unsigned workers = worker_count(limits, prefixes);
    if (workers <= 1) return run(0, prefixes);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = prefixes * w / workers, e = prefixes * (w + 1) / workers;
        pool.emplace_back([&, w, b, e] { partial[w] = run(b, e); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

/// Calls fn(codes) for each normalized projective representative of P^n
/// until fn returns true.
template <class Fn>
bool for_each_projective_point(unsigned n, const LogTables& t, Fn&& fn) {
    const Code q = static_cast<Code>(t.order);
    std::vector<Code> x(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        std::fill(x.begin(), x.end(), t.zero());
        x[j] = t.one();
        // Odometer over x_{j+1..n} through all codes 0..Q-1.
        std::vector<Code> free(n - j, 0);
        while (true) {
            for (unsigned i = 0; i < free.size(); ++i) x[j + 1 + i] = free[i];
            if (fn(x)) return true;
            unsigned i = 0;
            for (; i < free.size(); ++i) {
                if (++free[i] < q) break;
                free[i] = 0;
            }
            if (i == free.size()) break;
        }
    }
    return false;
}

}  // namespace

std::uint64_t count_hypersurface(unsigned n, const Form& f, const Field& ext, const Limits& limits) {
    check_space(ext.order(), n, limits);
    auto tables = kernels::cached_log_tables(ext);
    const LogTables& t = *tables;
    const Form g = f.widened(n + 1);
    const auto terms = encode_terms(g, t);
    const unsigned deg = g.degree();

    std::uint64_t count = 0;
    for (unsigned j = 0; j < n; ++j) count += count_slice(n, j, terms, deg, t, limits);
    // The point (0 : ... : 0 : 1).
    std::vector<Code> last(n + 1, t.zero());
    last[n] = t.one();
    count += eval_at(terms, last, t) == t.zero();
    return count;
}

BigInt count_points(const VarietyExpr& v, const Field& field, unsigned m, const Limits& limits) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
    return std::visit(
        [&](const auto& n) -> BigInt {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                BigInt qm = ipow(BigInt(static_cast<unsigned long>(field.order())), m);
                return (ipow(qm, n.n + 1) - 1) / (qm - 1);
            } else if constexpr (std::is_same_v<T, Product>) {
                return count_points(*n.left, field, m, limits) * count_points(*n.right, field, m, limits);
            } else {
                unsigned amb = 2;
                const Form* f = nullptr;
                if constexpr (std::is_same_v<T, Hypersurface>) {
                    amb = n.n;
                    f = &n.f;
                } else {
                    f = &n.f;
                }
                std::uint64_t qm = checked_pow(field.order(), m, kernels::kMaxTableOrder);
                if (qm == 0) throw Error(ErrorKind::SizeExceeded, "F_{q^m} too large to enumerate");
                check_space(qm, amb, limits);
                BigInt r;
                mpz_set_ui(r.get_mpz_t(), count_hypersurface(amb, *f, field.extension(m), limits));
                return r;
            }
        },
        v.node());
}

std::vector<BigInt> count_vector(const VarietyExpr& v, const Field& field, unsigned M, const Limits& limits) {
    std::vector<BigInt> out;
    out.reserve(M);
    for (unsigned m = 1; m <= M; ++m) out.push_back(count_points(v, field, m, limits));
    return out;
}

SmoothnessProbe smoothness_probe(unsigned n, const Form& f, const Field& field, unsigned depth, const Limits& limits) {
    const Form g = f.widened(n + 1);
    std::vector<Form> partials;
    for (unsigned i = 0; i <= n; ++i) partials.push_back(g.derivative(i));

    for (unsigned m = 1; m <= depth; ++m) {
        std::uint64_t qm = checked_pow(field.order(), m, kernels::kMaxTableOrder);
        if (qm == 0) throw Error(ErrorKind::SizeExceeded, "F_{q^m} too large to enumerate");
        check_space(qm, n, limits);
        Field ext = field.extension(m);
        auto tables = kernels::cached_log_tables(ext);
        const LogTables& t = *tables;
        const auto fterms = encode_terms(g, t);
        std::vector<std::vector<CodedTerm>> dterms;
        for (const auto& d : partials) dterms.push_back(encode_terms(d, t));

        SmoothnessProbe found;
        bool hit = for_each_projective_point(n, t, [&](const std::vector<Code>& x) {
            if (eval_at(fterms, x, t) != t.zero()) return false;
            for (const auto& d : dterms)
                if (eval_at(d, x, t) != t.zero()) return false;
            found.singular = true;
            found.extension = m;
            for (Code c : x) found.witness.push_back(c == t.zero() ? 0 : t.exp[static_cast<std::size_t>(c)]);
            return true;
        });
        if (hit) return found;
    }
    return {};
}

SmoothnessProbe smoothness_probe(const VarietyExpr& v, const Field& field, unsigned depth, const Limits& limits) {
    return std::visit(
        [&](const auto& n) -> SmoothnessProbe {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) return {};
            else if constexpr (std::is_same_v<T, Hypersurface>) return smoothness_probe(n.n, n.f, field, depth, limits);
            else if constexpr (std::is_same_v<T, PlaneCurve>) return smoothness_probe(2, n.f, field, depth, limits);
            else {
                SmoothnessProbe l = smoothness_probe(*n.left, field, depth, limits);
                if (l.singular) return l;
                return smoothness_probe(*n.right, field, depth, limits);
            }
        },
        v.node());
}

std::vector<long> betti_degrees(const VarietyExpr& v, const HodgeProvider& hodge) {
    if (const auto* p = v.as<Product>())
        return betti_convolution(betti_degrees(*p->left, hodge), betti_degrees(*p->right, hodge));
    return hodge(v).betti();
}

}  // namespace weilzeta
