#include "weilzeta/kernels/count_kernel.hpp"

namespace weilzeta::kernels {

std::uint64_t count_roots_scalar(std::span<const Code> coeffs, const LogTables& t) {
    const Code zero = t.zero();
    if (coeffs.empty()) return t.order;
    std::uint64_t count = 0;
    for (Code x = 0; x <= zero; ++x) {
        Code acc = coeffs.back();
        for (std::size_t e = coeffs.size() - 1; e-- > 0;) acc = t.add(t.mul(acc, x), coeffs[e]);
        count += acc == zero;
    }
    return count;
}

}  // namespace weilzeta::kernels
