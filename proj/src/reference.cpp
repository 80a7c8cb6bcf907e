#include "lhopf/reference.hpp"

#include "lhopf/leibniz.hpp"

namespace lhopf::reference {

std::map<Composition, std::uint64_t> overlapping_shuffle_counts(const Composition& a, const Composition& b) {
    if (b.empty())
        return {{a, 1}};
    if (a.empty())
        return {{b, 1}};
    std::map<Composition, std::uint64_t> out;
    const auto b_tail = b.tail(1);
    for (std::size_t i = 0; i <= a.size(); ++i) {
        const auto head = a.slice(0, i);
        for (const auto& [t, mult] : overlapping_shuffle_counts(a.tail(i), b_tail)) {
            out[head.concat(Composition::unchecked({b[0]})).concat(t)] += mult;
            if (i > 0) {
                auto merged = head.vec();
                merged.back() += b[0];
                out[Composition::unchecked(std::move(merged)).concat(t)] += mult;
            }
        }
    }
    return out;
}

F2Sum overlapping_shuffle(const Composition& a, const Composition& b) {
    std::vector<Composition> odd;
    for (const auto& [t, mult] : overlapping_shuffle_counts(a, b))
        if (mult % 2 == 1)
            odd.push_back(t);
    return F2Sum(Basis::Dual, std::move(odd));
}

F2Sum shuffle_product(const F2Sum& x, const F2Sum& y) {
    x.require_basis(Basis::Dual);
    y.require_basis(Basis::Dual);
    F2Sum out(Basis::Dual);
    for (const auto& s : x)
        for (const auto& t : y)
            out += overlapping_shuffle(s, t);
    return out;
}

F2Sum chi_dual_partitions(const Composition& i) {
    if (i.empty())
        return F2Sum::monomial(Basis::Dual, Composition{});
    F2Sum out(Basis::Dual);
    for (const auto& beta : block_partitions(i)) {
        auto prod = F2Sum::monomial(Basis::Dual, Composition{});
        for (const auto& block : beta.blocks)
            prod = shuffle_product(prod, F2Sum::monomial(Basis::Dual, block));
        out += prod;
    }
    return out;
}

F2Sum adem_reduce(const Composition& monomial) {
    std::size_t k = 0;
    while (k + 1 < monomial.size() && monomial[k] >= 2 * monomial[k + 1])
        ++k;
    if (k + 1 >= monomial.size())
        return F2Sum::monomial(Basis::Steenrod, monomial);
    F2Sum out(Basis::Steenrod);
    const auto prefix = monomial.slice(0, k);
    const auto suffix = monomial.tail(k + 2);
    for (const auto& middle : adem_rewrite_pair(monomial[k], monomial[k + 1]))
        out += adem_reduce(prefix.concat(middle).concat(suffix));
    return out;
}

} // namespace lhopf::reference
