#include "weilzeta/abelian/finite.hpp"

#include <numeric>

#include "weilzeta/abelian/smith.hpp"
#include "weilzeta/arith.hpp"

namespace weilzeta::abelian {

FiniteGroup::FiniteGroup(std::vector<std::uint64_t> orders, std::uint64_t max_order) : orders_(std::move(orders)) {
    for (auto o : orders_) {
        if (o == 0) throw Error(ErrorKind::NotFinite, "cyclic factor of order 0 is not finite");
        if (size_ > max_order / o)
            throw Error(ErrorKind::SizeExceeded, "group order exceeds the exhaustive bound " + std::to_string(max_order));
        size_ *= o;
    }
}

std::uint64_t FiniteGroup::index(const Element& x) const {
    std::uint64_t idx = 0;
    for (std::size_t i = orders_.size(); i-- > 0;) idx = idx * orders_[i] + x[i] % orders_[i];
    return idx;
}

Element FiniteGroup::element(std::uint64_t index) const {
    Element x(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        x[i] = index % orders_[i];
        index /= orders_[i];
    }
    return x;
}

Element FiniteGroup::reduce(const Element& x) const {
    if (x.size() != orders_.size())
        throw Error(ErrorKind::InvalidArgument, "element " + to_string(x) + " has the wrong number of coordinates");
    Element r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] % orders_[i];
    return r;
}

Element FiniteGroup::add(const Element& x, const Element& y) const {
    Element r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (x[i] + y[i]) % orders_[i];
    return r;
}

Element FiniteGroup::scale(const Element& x, std::uint64_t k) const {
    Element r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint64_t>((unsigned __int128)(x[i]) * k % orders_[i]);
    return r;
}

std::uint64_t FiniteGroup::order_of(const Element& x) const {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) o = std::lcm(o, orders_[i] / std::gcd(x[i] % orders_[i], orders_[i]));
    return o;
}

std::vector<bool> FiniteGroup::span(const std::vector<Element>& gens) const {
    std::vector<bool> in(size_, false);
    std::vector<std::uint64_t> members{0};
    in[0] = true;
    for (const auto& g0 : gens) {
        const Element g = reduce(g0);
        if (in[index(g)]) continue;
        // New subgroup is {s + k g}; walk each existing member along multiples of g.
        const std::size_t existing = members.size();
        for (std::size_t i = 0; i < existing; ++i) {
            Element x = add(element(members[i]), g);
            while (!in[index(x)]) {
                in[index(x)] = true;
                members.push_back(index(x));
                x = add(x, g);
            }
        }
    }
    return in;
}

std::vector<bool> FiniteGroup::multiples(std::uint64_t k) const {
    std::vector<bool> in(size_, false);
    for (std::uint64_t i = 0; i < size_; ++i) in[index(scale(element(i), k))] = true;
    return in;
}

std::string FiniteGroup::to_string(const Element& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

namespace {

bool meets_trivially(const std::vector<bool>& a, const std::vector<bool>& b, std::uint64_t* witness) {
    for (std::uint64_t i = 1; i < a.size(); ++i)
        if (a[i] && b[i]) {
            if (witness) *witness = i;
            return false;
        }
    return true;
}

// Inverse of a unimodular matrix through its Smith form: U V0 W = I.
IntMatrix unimodular_inverse(const IntMatrix& v0) {
    const SmithForm sf = smith_normal_form(v0);
    return sf.V * sf.U;
}

}  // namespace

Complement summand_complement(const FiniteGroup& n, const std::vector<Element>& m_gens, std::uint64_t l,
                              unsigned exp_n) {
    if (!is_prime(l)) throw Error(ErrorKind::NotPrime, std::to_string(l) + " is not prime");
    // l^n only matters up to the exponent of N; keep it bounded.
    std::uint64_t ln = 1;
    for (unsigned i = 0; i < exp_n && ln <= n.size(); ++i) ln *= l;

    const std::vector<bool> m = n.span(m_gens);
    const std::vector<bool> lnN = n.multiples(ln);

    std::uint64_t w = 0;
    if (!meets_trivially(m, lnN, &w)) throw HypothesisError("M meets l^n N nontrivially", n.element(w));

    // Maximality: every subgroup <M, x> with x outside M must meet l^n N.
    std::vector<bool> seen_coset = m;
    for (std::uint64_t i = 0; i < n.size(); ++i) {
        if (seen_coset[i]) continue;
        const Element x = n.element(i);
        std::vector<Element> gens = m_gens;
        gens.push_back(x);
        const std::vector<bool> bigger = n.span(gens);
        if (meets_trivially(bigger, lnN, nullptr))
            throw HypothesisError("M is not maximal: adjoining x keeps the intersection with l^n N trivial", x);
        for (std::uint64_t j = 0; j < n.size(); ++j)
            if (m[j]) seen_coset[n.index(n.add(x, n.element(j)))] = true;
    }

    std::vector<Element> m_elems;
    for (std::uint64_t i = 0; i < n.size(); ++i)
        if (m[i]) m_elems.push_back(n.element(i));

    // Presentation of N/M: relation rows diag(orders) and the generators of M.
    const std::size_t k = n.rank();
    IntMatrix rel(k + m_gens.size(), k);
    for (std::size_t i = 0; i < k; ++i) rel(i, i) = n.orders()[i];
    for (std::size_t g = 0; g < m_gens.size(); ++g) {
        const Element r = n.reduce(m_gens[g]);
        for (std::size_t i = 0; i < k; ++i) rel(k + g, i) = r[i];
    }
    const SmithForm sf = smith_normal_form(rel);
    const IntMatrix vinv = unimodular_inverse(sf.V);

    Complement out;
    for (std::size_t j = 0; j < k; ++j) {
        const BigInt d = sf.D(j, j);
        if (d <= 1) continue;
        Element y(k);
        for (std::size_t i = 0; i < k; ++i) {
            BigInt e = vinv(j, i);
            mpz_fdiv_r_ui(e.get_mpz_t(), e.get_mpz_t(), n.orders()[i]);
            y[i] = e.get_ui();
        }
        const std::uint64_t o = d.get_ui();
        const Element oy = n.scale(y, o);
        // Purity: o*y = o*m for some m in M; y - m then has order o.
        bool found = false;
        for (const auto& mm : m_elems) {
            if (n.scale(mm, o) != oy) continue;
            Element c(k);
            for (std::size_t i = 0; i < k; ++i) c[i] = (y[i] + n.orders()[i] - mm[i]) % n.orders()[i];
            out.generators.push_back(c);
            out.generator_orders.push_back(o);
            found = true;
            break;
        }
        if (!found) throw HypothesisError("M is not pure in N", y);
    }

    const std::vector<bool> c = n.span(out.generators);
    std::uint64_t msz = 0, csz = 0;
    for (std::uint64_t i = 0; i < n.size(); ++i) {
        msz += m[i];
        csz += c[i];
    }
    if (!meets_trivially(m, c, &w) || msz * csz != n.size())
        throw Error(ErrorKind::HypothesisFailed, "constructed complement failed verification");
    out.m_size = msz;
    out.c_size = csz;
    return out;
}

}  // namespace weilzeta::abelian
