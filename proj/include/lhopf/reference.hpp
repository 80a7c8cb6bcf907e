#pragma once

// Literal, uncached transcriptions of the recursive definitions. Slow; used
// by tests and benchmarks as the baseline for the memoized kernels.

#include "lhopf/f2_linear.hpp"

#include <map>

namespace lhopf::reference {

// Integer multiplicities of the overlapping shuffle A . B before reduction.
std::map<Composition, std::uint64_t> overlapping_shuffle_counts(const Composition& a, const Composition& b);

F2Sum overlapping_shuffle(const Composition& a, const Composition& b);
F2Sum shuffle_product(const F2Sum& x, const F2Sum& y);

// Enumerates every block partition and multiplies its blocks left to right.
F2Sum chi_dual_partitions(const Composition& i);

// Leftmost-pair Adem reduction without memoization.
F2Sum adem_reduce(const Composition& monomial);

} // namespace lhopf::reference
