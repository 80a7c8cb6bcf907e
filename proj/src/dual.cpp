#include "lhopf/dual.hpp"

namespace lhopf {

Composition shuffle_power_2m(const Composition& a, unsigned m) {
    std::vector<Composition::value_type> out(a.vec());
    for (auto& p : out)
        p <<= m;
    return Composition::unchecked(std::move(out));
}

TensorSum coproduct_dual(const Composition& i) {
    std::vector<TensorTerm> terms;
    terms.reserve(i.size() + 1);
    for (std::size_t k = 0; k <= i.size(); ++k)
        terms.emplace_back(i.slice(0, k), i.tail(k));
    return TensorSum(Basis::Dual, std::move(terms));
}

TensorSum coproduct_dual(const F2Sum& x) {
    x.require_basis(Basis::Dual);
    TensorSum out(Basis::Dual);
    for (const auto& t : x)
        out += coproduct_dual(t);
    return out;
}

F2Sum chi_dual_coarsening(const Composition& i) {
    return F2Sum(Basis::Dual, coarsenings(reverse(i)));
}

const F2Sum& ShuffleAlgebra::shuffle_ref(const Composition& a, const Composition& b) {
    // commutative, so only one ordering of each pair is stored
    const bool swap = b < a;
    const auto& lo = swap ? b : a;
    const auto& hi = swap ? a : b;

    PairKey key;
    key.packed.reserve(lo.size() + hi.size() + 1);
    key.packed.insert(key.packed.end(), lo.vec().begin(), lo.vec().end());
    key.packed.push_back(0);
    key.packed.insert(key.packed.end(), hi.vec().begin(), hi.vec().end());
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;

    F2Sum result(Basis::Dual, expand(lo, hi));
    cached_terms_ += result.size();
    return cache_.emplace(std::move(key), std::move(result)).first->second;
}

std::vector<Composition> ShuffleAlgebra::expand(const Composition& a, const Composition& b) {
    if (b.empty())
        return {a};
    if (a.empty())
        return {b};

    const auto b_tail = b.tail(1);
    const auto b1 = b[0];
    std::vector<Composition> terms;
    std::vector<Composition::value_type> buf;
    for (std::size_t i = 0; i <= a.size(); ++i) {
        const auto& rest = shuffle_ref(a.tail(i), b_tail);
        for (const auto& t : rest) {
            // (a_1..a_i, b_1, t)
            buf.assign(a.vec().begin(), a.vec().begin() + static_cast<std::ptrdiff_t>(i));
            buf.push_back(b1);
            buf.insert(buf.end(), t.vec().begin(), t.vec().end());
            terms.push_back(Composition::unchecked(buf));
            if (i == 0)
                continue;
            // (a_1..a_i + b_1, t)
            buf.assign(a.vec().begin(), a.vec().begin() + static_cast<std::ptrdiff_t>(i));
            buf.back() += b1;
            buf.insert(buf.end(), t.vec().begin(), t.vec().end());
            terms.push_back(Composition::unchecked(buf));
        }
    }
    return terms;
}

void ShuffleAlgebra::maybe_flush() {
    if (cached_terms_ > cache_limit_) {
        cache_.clear();
        cached_terms_ = 0;
    }
}

F2Sum ShuffleAlgebra::shuffle(const Composition& a, const Composition& b) {
    maybe_flush();
    return shuffle_ref(a, b);
}

F2Sum ShuffleAlgebra::product(const Composition& a, const F2Sum& y) {
    y.require_basis(Basis::Dual);
    maybe_flush();
    std::vector<Composition> terms;
    for (const auto& t : y) {
        const auto& part = shuffle_ref(a, t);
        terms.insert(terms.end(), part.begin(), part.end());
    }
    return F2Sum(Basis::Dual, std::move(terms));
}

F2Sum ShuffleAlgebra::product(const F2Sum& x, const F2Sum& y) {
    x.require_basis(Basis::Dual);
    y.require_basis(Basis::Dual);
    maybe_flush();
    std::vector<Composition> terms;
    for (const auto& s : x) {
        for (const auto& t : y) {
            const auto& part = shuffle_ref(s, t);
            terms.insert(terms.end(), part.begin(), part.end());
        }
    }
    return F2Sum(Basis::Dual, std::move(terms));
}

F2Sum ShuffleAlgebra::chi_partitions(const Composition& i) {
    maybe_flush();
    const std::size_t n = i.size();
    // suffix[k] = sum over block partitions of (i_k, ..., i_n)
    std::vector<F2Sum> suffix(n + 1, F2Sum(Basis::Dual));
    suffix[n] = F2Sum::monomial(Basis::Dual, Composition{});
    for (std::size_t k = n; k-- > 0;) {
        std::vector<Composition> terms;
        for (std::size_t j = k + 1; j <= n; ++j) {
            const auto block = i.slice(k, j - k);
            for (const auto& t : suffix[j]) {
                const auto& part = shuffle_ref(block, t);
                terms.insert(terms.end(), part.begin(), part.end());
            }
        }
        suffix[k] = F2Sum(Basis::Dual, std::move(terms));
    }
    return suffix[0];
}

F2Sum ShuffleAlgebra::antipode(const F2Sum& x) const { return chi_dual(x); }

F2Sum overlapping_shuffle(const Composition& a, const Composition& b) {
    ShuffleAlgebra alg;
    return alg.shuffle(a, b);
}

F2Sum shuffle_product(const F2Sum& x, const F2Sum& y) {
    ShuffleAlgebra alg;
    return alg.product(x, y);
}

F2Sum chi_dual_partitions(const Composition& i) {
    ShuffleAlgebra alg;
    return alg.chi_partitions(i);
}

F2Sum chi_dual(const F2Sum& x) {
    x.require_basis(Basis::Dual);
    std::vector<Composition> terms;
    for (const auto& t : x) {
        auto c = coarsenings(reverse(t));
        terms.insert(terms.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    }
    return F2Sum(Basis::Dual, std::move(terms));
}

} // namespace lhopf
