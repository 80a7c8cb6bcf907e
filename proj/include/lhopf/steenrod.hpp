#pragma once

#include "lhopf/dual.hpp"

#include <map>
#include <memory>
#include <unordered_map>

namespace lhopf {

class TriangularityError : public Error {
public:
    using Error::Error;
};

// Image of xi_n in the dual Leibniz-Hopf algebra: S_(2^(n-1), ..., 2, 1).
Composition xi_image(unsigned n);
// Image of xi_n^(2^m): S_(2^(n+m-1), ..., 2^m).
Composition xi_power_image(unsigned n, unsigned m);

// Left inverse of pi*: keeps admissible terms, relabelled as Sq_J.
F2Sum r_map(const F2Sum& x);

// Ordered compositions of the integer n (block lengths, not degrees).
std::vector<Composition> compositions_of_int(unsigned n);

// Everything the triangular inversion produces for one degree.
struct DegreeTable {
    unsigned degree = 0;
    // admissible sequences of this degree, ascending right-lex
    std::vector<Composition> admissibles;
    // pi*(xi^L) in the S_I basis, keyed by L = gamma(J)
    std::map<ExponentVector, F2Sum> pi_star_xi;
    // xi^L in the Sq_J basis (the B^L_J rows)
    std::map<ExponentVector, F2Sum> xi_expansions;
    // pi*(Sq_J) in the S_I basis (the C^I_J rows)
    std::map<Composition, F2Sum> pi_star_sq;
    // transpose of pi_star_sq: I -> { J : C^I_J = 1 }, ascending
    std::unordered_map<Composition, std::vector<Composition>> adem_index;

    // {Sq^J : C^I_J = 1}, i.e. Sq^I expanded in admissible monomials.
    F2Sum adem_coefficients(const Composition& i) const;
};

// Computes all rows for one degree. Throws TriangularityError if a row
// fails to be unitriangular in right-lex order.
DegreeTable build_degree_table(unsigned degree, ShuffleAlgebra& shuffles, const Limits& limits = {});

// Product of the xi-images with exponent L: dyadic parts of each l_n come
// from xi_power_image, the rest from overlapping shuffles.
F2Sum pi_star_xi_monomial(const ExponentVector& l, ShuffleAlgebra& shuffles);

// Per-thread working state: a shuffle cache plus lazily built tables.
class SteenrodContext {
public:
    explicit SteenrodContext(Limits limits = {});

    const Limits& limits() const { return limits_; }
    ShuffleAlgebra& shuffles() { return shuffles_; }

    F2Sum pi_star_xi_monomial(const ExponentVector& l);
    F2Sum milnor_to_admissible(const ExponentVector& l);
    const DegreeTable& table(unsigned degree);
    F2Sum pi_star_sq(const Composition& j);
    F2Sum adem_coefficients(const Composition& i);

    // pi* of sum over compositions alpha of n of prod_k xi_alpha(k)^(2^sigma(k)).
    F2Sum milnor_conjugation_rhs(unsigned n);

    // Adopts a table built elsewhere (e.g. by a parallel sweep).
    void install(DegreeTable table);

private:
    Limits limits_;
    ShuffleAlgebra shuffles_;
    std::map<unsigned, std::unique_ptr<DegreeTable>> tables_;
};

} // namespace lhopf
