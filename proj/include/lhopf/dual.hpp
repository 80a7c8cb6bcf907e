#pragma once

#include "lhopf/f2_linear.hpp"

#include <unordered_map>

namespace lhopf {

// Entrywise multiplication by 2^m: the 2^m-th shuffle power of S_A.
Composition shuffle_power_2m(const Composition& a, unsigned m);

// Deconcatenation: all size()+1 prefix/suffix splits.
TensorSum coproduct_dual(const Composition& i);
TensorSum coproduct_dual(const F2Sum& x);

// Antipode of S_I as the sum over coarsenings of reverse(I).
F2Sum chi_dual_coarsening(const Composition& i);

// Multiplication in the dual Leibniz-Hopf algebra. Caches overlapping
// shuffles of composition pairs; one instance per thread.
class ShuffleAlgebra {
public:
    // The cache is flushed at the start of a public call once it holds more
    // than this many terms in total.
    static constexpr std::size_t kDefaultCacheLimit = 1 << 18;

    explicit ShuffleAlgebra(std::size_t cache_limit = kDefaultCacheLimit) : cache_limit_(cache_limit) {}

    // A . B reduced mod 2, as a set of compositions in the dual basis.
    F2Sum shuffle(const Composition& a, const Composition& b);

    F2Sum product(const F2Sum& x, const F2Sum& y);
    F2Sum product(const Composition& a, const F2Sum& y);

    // Sum over ordered block partitions of I of the product of the blocks,
    // evaluated through the recursion chi(S_I) = sum_k S_{i_1..i_k} chi(S_{i_k+1..}).
    F2Sum chi_partitions(const Composition& i);

    F2Sum antipode(const F2Sum& x) const;

    std::size_t cache_size() const { return cache_.size(); }
    void clear_cache() {
        cache_.clear();
        cached_terms_ = 0;
    }

private:
    struct PairKey {
        std::vector<std::uint32_t> packed; // a, 0, b

        friend bool operator==(const PairKey&, const PairKey&) = default;
    };
    struct PairHash {
        std::size_t operator()(const PairKey& k) const noexcept { return hash_parts(k.packed); }
    };

    // References stay valid until the next maybe_flush().
    const F2Sum& shuffle_ref(const Composition& a, const Composition& b);
    std::vector<Composition> expand(const Composition& a, const Composition& b);
    void maybe_flush();

    std::size_t cache_limit_;
    std::size_t cached_terms_ = 0;
    std::unordered_map<PairKey, F2Sum, PairHash> cache_;
};

F2Sum overlapping_shuffle(const Composition& a, const Composition& b);
F2Sum shuffle_product(const F2Sum& x, const F2Sum& y);
F2Sum chi_dual_partitions(const Composition& i);
F2Sum chi_dual(const F2Sum& x);

} // namespace lhopf
