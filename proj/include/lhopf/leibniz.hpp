#pragma once

#include "lhopf/f2_linear.hpp"

#include <unordered_map>

namespace lhopf {

// Concatenation product on the free basis S^I.
F2Sum concat_product(const F2Sum& x, const F2Sum& y);

// Right-hand side of the Adem relation for Sq^i Sq^j with 0 < i < 2j, in the
// free basis. Throws Error if (i, j) is already admissible.
F2Sum adem_rewrite_pair(unsigned i, unsigned j);

// Multiplicative coproduct generated by Delta(S^n) = sum S^a (x) S^(n-a).
TensorSum coproduct_free(const Composition& i);
TensorSum coproduct_free(const F2Sum& x);

// chi(S^I) = sum of S^I' over all refinements I' of reverse(I).
F2Sum chi_free(const Composition& i);
F2Sum chi_free(const F2Sum& x);

// Reduction onto the admissible basis of the Steenrod algebra. Holds a
// monomial cache, so an instance must not be shared between threads.
class AdemReducer {
public:
    // Leftmost non-admissible pair first; reduced forms are memoized per
    // monomial.
    const F2Sum& reduce(const Composition& monomial);
    F2Sum reduce(const F2Sum& x);

    std::size_t cache_size() const { return cache_.size(); }
    void clear_cache() { cache_.clear(); }

private:
    std::unordered_map<Composition, F2Sum> cache_;
};

// Convenience wrapper with a throwaway cache.
F2Sum adem_reduce(const F2Sum& x);

} // namespace lhopf
