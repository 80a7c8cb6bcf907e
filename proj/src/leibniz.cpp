#include "lhopf/leibniz.hpp"

namespace lhopf {

F2Sum concat_product(const F2Sum& x, const F2Sum& y) {
    x.require_basis(Basis::Free);
    y.require_basis(Basis::Free);
    std::vector<Composition> terms;
    terms.reserve(x.size() * y.size());
    for (const auto& a : x)
        for (const auto& b : y)
            terms.push_back(a.concat(b));
    return F2Sum(Basis::Free, std::move(terms));
}

F2Sum adem_rewrite_pair(unsigned i, unsigned j) {
    if (i == 0 || j == 0)
        throw Error("Adem relation needs positive indices");
    if (i >= 2 * j)
        throw Error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") is admissible");
    std::vector<Composition> terms;
    for (unsigned k = 0; k <= i / 2; ++k) {
        // binom(j-k-1, i-2k); j-k-1 >= 0 because k <= i/2 < j
        if (!binom_mod2(j - k - 1, i - 2 * k))
            continue;
        if (k == 0)
            terms.push_back(Composition{i + j});
        else
            terms.push_back(Composition{i + j - k, k});
    }
    return F2Sum(Basis::Free, std::move(terms));
}

TensorSum coproduct_free(const Composition& i) {
    // Odometer over splits i_k = a_k + b_k; zero parts drop out of each side.
    std::vector<TensorTerm> terms;
    std::vector<Composition::value_type> left_part(i.size(), 0);
    std::vector<Composition::value_type> a, b;
    a.reserve(i.size());
    b.reserve(i.size());
    while (true) {
        a.clear();
        b.clear();
        for (std::size_t k = 0; k < i.size(); ++k) {
            if (left_part[k] > 0)
                a.push_back(left_part[k]);
            if (i[k] - left_part[k] > 0)
                b.push_back(i[k] - left_part[k]);
        }
        terms.emplace_back(Composition::unchecked(a), Composition::unchecked(b));
        std::size_t k = 0;
        while (k < i.size() && left_part[k] == i[k])
            left_part[k++] = 0;
        if (k == i.size())
            break;
        ++left_part[k];
    }
    return TensorSum(Basis::Free, std::move(terms));
}

TensorSum coproduct_free(const F2Sum& x) {
    x.require_basis(Basis::Free);
    TensorSum out(Basis::Free);
    for (const auto& t : x)
        out += coproduct_free(t);
    return out;
}

F2Sum chi_free(const Composition& i) {
    return F2Sum(Basis::Free, refinements(reverse(i)));
}

F2Sum chi_free(const F2Sum& x) {
    x.require_basis(Basis::Free);
    F2Sum out(Basis::Free);
    for (const auto& t : x)
        out += chi_free(t);
    return out;
}

const F2Sum& AdemReducer::reduce(const Composition& monomial) {
    if (auto it = cache_.find(monomial); it != cache_.end())
        return it->second;

    std::size_t k = 0;
    while (k + 1 < monomial.size() && monomial[k] >= 2 * monomial[k + 1])
        ++k;

    F2Sum result(Basis::Steenrod);
    if (k + 1 >= monomial.size()) {
        result = F2Sum::monomial(Basis::Steenrod, monomial);
    } else {
        const auto prefix = monomial.slice(0, k);
        const auto suffix = monomial.tail(k + 2);
        for (const auto& middle : adem_rewrite_pair(monomial[k], monomial[k + 1]))
            result += reduce(prefix.concat(middle).concat(suffix));
    }
    return cache_.insert_or_assign(monomial, std::move(result)).first->second;
}

F2Sum AdemReducer::reduce(const F2Sum& x) {
    x.require_basis(Basis::Free);
    F2Sum out(Basis::Steenrod);
    for (const auto& t : x)
        out += reduce(t);
    return out;
}

F2Sum adem_reduce(const F2Sum& x) {
    AdemReducer r;
    return r.reduce(x);
}

} // namespace lhopf
