#pragma once

#include "lhopf/f2_linear.hpp"
#include "lhopf/parallel.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lhopf {

enum class Side { Free, Dual };

std::string_view side_name(Side s);

// Outcome of one exhaustive (or seeded random) check over a degree range.
struct Report {
    std::string suite;
    std::string side; // "free", "dual", "both" or "-"
    unsigned degree = 0; // upper end of the checked range
    bool passed = true;
    std::size_t checked = 0; // number of basis elements / pairs examined
    std::size_t failures = 0;
    std::vector<std::string> witnesses; // first few counterexamples

    void fail(std::vector<std::string> found);
};

// Uniformly random composition of the given degree.
Composition random_composition(unsigned degree, std::mt19937_64& rng);

// Applies D termwise: S^I -> S_dual(I) and S_I -> S^dual(I).
F2Sum apply_duality(const F2Sum& x);

// Antipode of one basis element on either side.
F2Sum antipode(Side side, const Composition& i);

Report check_antipode_axiom(Side side, unsigned max_degree, Execution exec = Execution::Parallel);
Report check_duality_theorem(unsigned max_degree, Execution exec = Execution::Parallel);
Report check_bialgebra(Side side, unsigned max_degree, Execution exec = Execution::Parallel);

// Basis of ker(chi - 1) in one degree.
std::vector<F2Sum> invariants_basis(Side side, unsigned degree, const Limits& limits = {});
Report check_invariant_duality(unsigned degree, const Limits& limits = {});

// Matrix of chi on the dual side is the transpose of the free one.
Report check_transpose(unsigned max_degree, const Limits& limits = {});

Report check_formula_agreement(unsigned max_degree, Execution exec = Execution::Parallel);
Report check_route_equivalence(unsigned max_degree, const Limits& limits, Execution exec = Execution::Parallel);
Report check_triangularity(unsigned max_degree, const Limits& limits, Execution exec = Execution::Parallel);
Report check_milnor_conjugation(unsigned max_n);

// Re-expanding xi^L through the pi*(Sq_J) rows reproduces pi*(xi^L), and
// the admissible count matches the Milnor monomial count.
Report check_milnor_round_trip(unsigned max_degree, const Limits& limits, Execution exec = Execution::Parallel);

Report check_shuffle_commutativity(unsigned max_total_degree, Execution exec = Execution::Parallel);
Report check_shuffle_associativity(std::size_t samples, unsigned max_total_degree, std::uint64_t seed);
Report check_squaring(unsigned max_degree);
// <xy, z> = <x (x) y, Delta z> and <Delta x, y (x) z> = <x, yz> on basis triples.
Report check_adjointness(unsigned max_total_degree, Execution exec = Execution::Parallel);
// chi(xy) = chi(y) chi(x) on random basis pairs.
Report check_antihomomorphism(Side side, std::size_t samples, unsigned max_degree, std::uint64_t seed);

} // namespace lhopf
