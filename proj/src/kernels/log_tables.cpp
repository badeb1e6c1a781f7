#include "weilzeta/kernels/count_kernel.hpp"

#include <algorithm>

#include "weilzeta/arith.hpp"
#include "weilzeta/error.hpp"

namespace weilzeta::kernels {

Code LogTables::neg(Code a) const {
    if (a == group_order) return a;
    if (characteristic == 2) return a;
    // -1 = g^{(Q-1)/2} in odd characteristic.
    return mul(a, group_order / 2);
}

LogTables build_log_tables(const Field& field) {
    const std::uint64_t q = field.order();
    if (q > kMaxTableOrder) throw Error(ErrorKind::SizeExceeded, "field too large for log tables");
    LogTables t;
    t.order = q;
    t.characteristic = field.characteristic();
    t.group_order = static_cast<Code>(q - 1);
    t.log.assign(q, t.group_order);
    t.exp.assign(q - 1 == 0 ? 1 : q - 1, 0);
    t.zech.assign(q, t.group_order);

    if (q == 2) {
        t.exp[0] = 1;
        t.log[1] = 0;
        t.zech[0] = t.group_order;  // 1 + 1 = 0
        return t;
    }

    std::vector<std::uint64_t> primes = prime_factors(q - 1);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    FieldElement gen;
    bool found = false;
    for (std::uint64_t idx = 2; idx < q && !found; ++idx) {
        FieldElement g = field.element_at(idx);
        bool primitive = true;
        for (auto l : primes) {
            if (field.pow(g, (q - 1) / l) == field.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::InvalidArgument, "no primitive element found");

    FieldElement cur = field.one();
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
        std::uint64_t idx = field.index_of(cur);
        t.exp[k] = static_cast<std::uint32_t>(idx);
        t.log[idx] = static_cast<Code>(k);
        cur = field.mul(cur, gen);
    }
    const FieldElement one = field.one();
    for (std::uint64_t d = 0; d + 1 < q; ++d) {
        FieldElement s = field.add(one, field.element_at(t.exp[d]));
        t.zech[d] = t.log[field.index_of(s)];
    }
    return t;
}

}  // namespace weilzeta::kernels

#include <map>
#include <mutex>

namespace weilzeta::kernels {

std::shared_ptr<const LogTables> cached_log_tables(const Field& field) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const LogTables>> cache;
    const auto key = std::make_pair(field.characteristic(), field.degree());
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto tables = std::make_shared<const LogTables>(build_log_tables(field));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(tables)).first->second;
}

}  // namespace weilzeta::kernels
