#include "lhopf/steenrod.hpp"

namespace lhopf {

Composition xi_image(unsigned n) { return xi_sequence(n); }

Composition xi_power_image(unsigned n, unsigned m) {
    if (n + m > 32)
        throw Error("xi power image exceeds 32-bit entries");
    return shuffle_power_2m(xi_sequence(n), m);
}

F2Sum r_map(const F2Sum& x) {
    x.require_basis(Basis::Dual);
    std::vector<Composition> kept;
    for (const auto& t : x)
        if (is_admissible(t))
            kept.push_back(t);
    return F2Sum(Basis::DualSteenrod, std::move(kept));
}

std::vector<Composition> compositions_of_int(unsigned n) {
    if (n == 0)
        throw Error("compositions_of_int requires n >= 1");
    return compositions_of_degree(n, Limits{n});
}

F2Sum DegreeTable::adem_coefficients(const Composition& i) const {
    if (i.degree() != degree)
        throw Error("composition " + to_string(i) + " does not have degree " + std::to_string(degree));
    auto it = adem_index.find(i);
    if (it == adem_index.end())
        return F2Sum(Basis::Steenrod);
    return F2Sum(Basis::Steenrod, it->second);
}

F2Sum pi_star_xi_monomial(const ExponentVector& l, ShuffleAlgebra& shuffles) {
    auto acc = F2Sum::monomial(Basis::Dual, Composition{});
    for (std::size_t k = 0; k < l.size(); ++k) {
        for (unsigned m = 0; (l[k] >> m) != 0; ++m) {
            if ((l[k] >> m & 1) == 0)
                continue;
            acc = shuffles.product(xi_power_image(static_cast<unsigned>(k + 1), m), acc);
        }
    }
    return acc;
}

DegreeTable build_degree_table(unsigned degree, ShuffleAlgebra& shuffles, const Limits& limits) {
    DegreeTable table;
    table.degree = degree;
    table.admissibles = admissibles_of_degree(degree, limits);

    for (const auto& j : table.admissibles) {
        const auto l = gamma(j);
        auto row = pi_star_xi_monomial(l, shuffles);
        if (row.is_zero() || row.lowest() != j)
            throw TriangularityError("pi*(xi^" + to_string(l) + ") does not have lowest term S_" + to_string(j));
        auto expansion = r_map(row);
        if (expansion.is_zero() || expansion.lowest() != j)
            throw TriangularityError("xi^" + to_string(l) + " does not have leading term Sq_" + to_string(j));
        table.xi_expansions.emplace(l, std::move(expansion));
        table.pi_star_xi.emplace(l, std::move(row));
    }

    // pi*(Sq_J) = pi*(xi^gamma(J)) + sum over J' > J with B^gamma(J)_J' = 1 of pi*(Sq_J')
    for (auto it = table.admissibles.rbegin(); it != table.admissibles.rend(); ++it) {
        const auto& j = *it;
        const auto l = gamma(j);
        auto image = table.pi_star_xi.at(l);
        for (const auto& higher : table.xi_expansions.at(l)) {
            if (higher == j)
                continue;
            image += table.pi_star_sq.at(higher);
        }
        if (image.is_zero() || image.lowest() != j)
            throw TriangularityError("pi*(Sq_" + to_string(j) + ") does not have lowest term S_" + to_string(j));
        table.pi_star_sq.emplace(j, std::move(image));
    }

    for (const auto& [j, image] : table.pi_star_sq)
        for (const auto& i : image)
            table.adem_index[i].push_back(j);
    // pi_star_sq iterates in ascending J, so each index list is already sorted
    return table;
}

SteenrodContext::SteenrodContext(Limits limits) : limits_(limits) {}

F2Sum SteenrodContext::pi_star_xi_monomial(const ExponentVector& l) {
    return lhopf::pi_star_xi_monomial(l, shuffles_);
}

F2Sum SteenrodContext::milnor_to_admissible(const ExponentVector& l) { return r_map(pi_star_xi_monomial(l)); }

const DegreeTable& SteenrodContext::table(unsigned degree) {
    limits_.check(degree);
    auto& slot = tables_[degree];
    if (!slot)
        slot = std::make_unique<DegreeTable>(build_degree_table(degree, shuffles_, limits_));
    return *slot;
}

void SteenrodContext::install(DegreeTable table) {
    const auto degree = table.degree;
    tables_[degree] = std::make_unique<DegreeTable>(std::move(table));
}

F2Sum SteenrodContext::pi_star_sq(const Composition& j) {
    if (!is_admissible(j))
        throw Error("Sq_" + to_string(j) + " is not an admissible basis element");
    return table(j.degree()).pi_star_sq.at(j);
}

F2Sum SteenrodContext::adem_coefficients(const Composition& i) {
    return table(i.degree()).adem_coefficients(i);
}

F2Sum SteenrodContext::milnor_conjugation_rhs(unsigned n) {
    F2Sum total(Basis::Dual);
    for (const auto& alpha : compositions_of_int(n)) {
        auto prod = F2Sum::monomial(Basis::Dual, Composition{});
        unsigned sigma = 0;
        for (auto block : alpha.parts()) {
            prod = shuffles_.product(xi_power_image(block, sigma), prod);
            sigma += block;
        }
        total += prod;
    }
    return total;
}

} // namespace lhopf
