#include "lhopf/verify.hpp"

#include "lhopf/dual.hpp"
#include "lhopf/leibniz.hpp"
#include "lhopf/reference.hpp"
#include "lhopf/steenrod.hpp"

#include <array>
#include <optional>

namespace lhopf {

namespace {

constexpr std::size_t kMaxWitnesses = 10;

std::vector<Composition> compositions_between(unsigned lo, unsigned hi) {
    std::vector<Composition> out;
    for (unsigned d = lo; d <= hi; ++d) {
        auto c = compositions_of_degree(d, Limits{hi});
        out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    }
    return out;
}

// Pairs (a, b) with deg(a) + deg(b) <= max_total.
std::vector<std::pair<Composition, Composition>> pairs_up_to(unsigned max_total) {
    std::vector<std::pair<Composition, Composition>> out;
    std::vector<std::vector<Composition>> by_degree;
    for (unsigned d = 0; d <= max_total; ++d)
        by_degree.push_back(compositions_of_degree(d, Limits{max_total}));
    for (unsigned da = 0; da <= max_total; ++da)
        for (unsigned db = 0; da + db <= max_total; ++db)
            for (const auto& a : by_degree[da])
                for (const auto& b : by_degree[db])
                    out.emplace_back(a, b);
    return out;
}

Report make_report(std::string suite, std::string side, unsigned degree) {
    Report r;
    r.suite = std::move(suite);
    r.side = std::move(side);
    r.degree = degree;
    return r;
}

std::string basis_element(Basis b, const Composition& i) {
    return std::string(basis_prefix(b)) + to_string(i);
}

struct NoState {};

using Triple = std::array<Composition, 3>;

// (Delta (x) id) Delta and (id (x) Delta) Delta as triple sets.
template <class Coproduct>
std::pair<std::vector<Triple>, std::vector<Triple>> iterated_coproducts(const Composition& i, Coproduct delta) {
    std::vector<Triple> left, right;
    for (const auto& [a, b] : delta(i)) {
        for (const auto& [a1, a2] : delta(a))
            left.push_back({a1, a2, b});
        for (const auto& [b1, b2] : delta(b))
            right.push_back({a, b1, b2});
    }
    collapse_mod2(left);
    collapse_mod2(right);
    return {std::move(left), std::move(right)};
}

} // namespace

void Report::fail(std::vector<std::string> found) {
    failures += found.size();
    if (!found.empty())
        passed = false;
    for (auto& w : found) {
        if (witnesses.size() >= kMaxWitnesses)
            break;
        witnesses.push_back(std::move(w));
    }
}

std::string_view side_name(Side s) { return s == Side::Free ? "free" : "dual"; }

Composition random_composition(unsigned degree, std::mt19937_64& rng) {
    if (degree == 0)
        return {};
    std::vector<Composition::value_type> parts;
    unsigned run = 1;
    std::bernoulli_distribution cut(0.5);
    for (unsigned p = 1; p < degree; ++p) {
        if (cut(rng)) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return Composition::unchecked(std::move(parts));
}

F2Sum apply_duality(const F2Sum& x) {
    Basis target;
    switch (x.basis()) {
    case Basis::Free: target = Basis::Dual; break;
    case Basis::Dual: target = Basis::Free; break;
    default: throw Error("duality D acts only between S^ and S_ bases");
    }
    std::vector<Composition> terms;
    terms.reserve(x.size());
    for (const auto& t : x)
        terms.push_back(dual_composition(t));
    return F2Sum(target, std::move(terms));
}

F2Sum antipode(Side side, const Composition& i) {
    return side == Side::Free ? chi_free(i) : chi_dual_coarsening(i);
}

Report check_antipode_axiom(Side side, unsigned max_degree, Execution exec) {
    auto report = make_report("antipode", std::string(side_name(side)), max_degree);
    const auto items = compositions_between(1, max_degree);
    report.checked = items.size();

    std::vector<std::string> found;
    if (side == Side::Free) {
        found = sweep(items.size(), exec, [] { return NoState{}; },
                      [&](NoState&, std::size_t k) -> std::optional<std::string> {
                          const auto& i = items[k];
                          std::vector<Composition> terms;
                          for (const auto& [a, b] : coproduct_free(i))
                              for (const auto& t : chi_free(b))
                                  terms.push_back(a.concat(t));
                          F2Sum total(Basis::Free, std::move(terms));
                          if (!total.is_zero())
                              return basis_element(Basis::Free, i) + ": sum x' chi(x'') = " + to_string(total);
                          auto twice = chi_free(chi_free(i));
                          if (twice != F2Sum::monomial(Basis::Free, i))
                              return basis_element(Basis::Free, i) + ": chi^2 = " + to_string(twice);
                          return std::nullopt;
                      });
    } else {
        found = sweep(items.size(), exec, [] { return ShuffleAlgebra{}; },
                      [&](ShuffleAlgebra& alg, std::size_t k) -> std::optional<std::string> {
                          const auto& i = items[k];
                          F2Sum total(Basis::Dual);
                          for (const auto& [prefix, suffix] : coproduct_dual(i))
                              total += alg.product(prefix, chi_dual_coarsening(suffix));
                          if (!total.is_zero())
                              return basis_element(Basis::Dual, i) + ": sum x' chi(x'') = " + to_string(total);
                          auto twice = chi_dual(chi_dual_coarsening(i));
                          if (twice != F2Sum::monomial(Basis::Dual, i))
                              return basis_element(Basis::Dual, i) + ": chi^2 = " + to_string(twice);
                          return std::nullopt;
                      });
    }
    report.fail(std::move(found));
    return report;
}

Report check_duality_theorem(unsigned max_degree, Execution exec) {
    auto report = make_report("duality", "both", max_degree);
    const auto items = compositions_between(0, max_degree);
    report.checked = items.size();
    report.fail(sweep(items.size(), exec, [] { return NoState{}; },
                      [&](NoState&, std::size_t k) -> std::optional<std::string> {
                          const auto& i = items[k];
                          auto lhs = apply_duality(chi_free(i));
                          auto rhs = chi_dual_coarsening(dual_composition(i));
                          if (lhs == rhs)
                              return std::nullopt;
                          return basis_element(Basis::Free, i) + ": D(chi(x)) = " + to_string(lhs) +
                                 " but chi(D(x)) = " + to_string(rhs);
                      }));
    return report;
}

Report check_bialgebra(Side side, unsigned max_degree, Execution exec) {
    auto report = make_report("bialgebra", std::string(side_name(side)), max_degree);
    const auto items = compositions_between(0, max_degree);
    const auto pairs = pairs_up_to(max_degree);
    report.checked = items.size() + pairs.size();
    const Basis basis = side == Side::Free ? Basis::Free : Basis::Dual;
    auto delta = [side](const Composition& c) {
        return side == Side::Free ? coproduct_free(c) : coproduct_dual(c);
    };

    // coassociativity and both counit laws
    report.fail(sweep(items.size(), exec, [] { return NoState{}; },
                      [&](NoState&, std::size_t k) -> std::optional<std::string> {
                          const auto& i = items[k];
                          const auto d = delta(i);
                          std::vector<Composition> left_counit, right_counit;
                          for (const auto& [a, b] : d) {
                              if (a.empty())
                                  left_counit.push_back(b);
                              if (b.empty())
                                  right_counit.push_back(a);
                          }
                          const auto self = F2Sum::monomial(basis, i);
                          if (F2Sum(basis, left_counit) != self || F2Sum(basis, right_counit) != self)
                              return basis_element(basis, i) + ": counit law fails";
                          auto [l, r] = iterated_coproducts(i, delta);
                          if (l != r)
                              return basis_element(basis, i) + ": coassociativity fails";
                          return std::nullopt;
                      }));

    // Delta(xy) = Delta(x) Delta(y), componentwise product on the tensor square
    report.fail(sweep(pairs.size(), exec, [] { return ShuffleAlgebra{}; },
                      [&](ShuffleAlgebra& alg, std::size_t k) -> std::optional<std::string> {
                          const auto& [x, y] = pairs[k];
                          auto mult = [&](const Composition& a, const Composition& b) {
                              return side == Side::Free ? F2Sum::monomial(Basis::Free, a.concat(b))
                                                        : alg.shuffle(a, b);
                          };
                          TensorSum lhs(basis);
                          for (const auto& t : mult(x, y))
                              lhs += delta(t);
                          std::vector<TensorTerm> rhs_terms;
                          for (const auto& [a, b] : delta(x))
                              for (const auto& [c, d] : delta(y))
                                  for (const auto& ac : mult(a, c))
                                      for (const auto& bd : mult(b, d))
                                          rhs_terms.emplace_back(ac, bd);
                          if (lhs == TensorSum(basis, std::move(rhs_terms)))
                              return std::nullopt;
                          return "Delta(" + basis_element(basis, x) + " * " + basis_element(basis, y) +
                                 ") differs from Delta(x) Delta(y)";
                      }));
    return report;
}

std::vector<F2Sum> invariants_basis(Side side, unsigned degree, const Limits& limits) {
    const DegreeIndex index(degree, limits);
    const Basis basis = side == Side::Free ? Basis::Free : Basis::Dual;
    auto chi = matrix_of(index, basis, [side](const Composition& c) { return antipode(side, c); });
    auto kernel = kernel_basis(chi + GF2Matrix::identity(index.size()));
    std::vector<F2Sum> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel)
        out.push_back(index.to_sum(v, basis));
    return out;
}

Report check_invariant_duality(unsigned degree, const Limits& limits) {
    auto report = make_report("invariants", "both", degree);
    const auto free_inv = invariants_basis(Side::Free, degree, limits);
    const auto dual_inv = invariants_basis(Side::Dual, degree, limits);
    report.checked = free_inv.size() + dual_inv.size();
    std::vector<std::string> found;
    if (free_inv.size() != dual_inv.size())
        found.push_back("degree " + std::to_string(degree) + ": dim ker(chi_free - 1) = " +
                        std::to_string(free_inv.size()) + " but dim ker(chi_dual - 1) = " +
                        std::to_string(dual_inv.size()));

    const DegreeIndex index(degree, limits);
    std::vector<GF2Vector> dual_vectors;
    for (const auto& f : dual_inv)
        dual_vectors.push_back(index.to_vector(f));
    for (const auto& f : free_inv) {
        const auto image = apply_duality(f);
        if (chi_dual(image) != image || !in_span(dual_vectors, index.to_vector(image)))
            found.push_back(to_string(f) + " maps to " + to_string(image) + ", not a dual invariant");
    }
    report.fail(std::move(found));
    return report;
}

Report check_transpose(unsigned max_degree, const Limits& limits) {
    auto report = make_report("transpose", "both", max_degree);
    std::vector<std::string> found;
    for (unsigned d = 0; d <= max_degree; ++d) {
        const DegreeIndex index(d, limits);
        auto free_m = matrix_of(index, Basis::Free, [](const Composition& c) { return chi_free(c); });
        auto dual_m = matrix_of(index, Basis::Dual, [](const Composition& c) { return chi_dual_coarsening(c); });
        auto id = GF2Matrix::identity(index.size());
        ++report.checked;
        if ((free_m + id).transpose() != dual_m + id)
            found.push_back("degree " + std::to_string(d) + ": chi_dual - 1 is not the transpose of chi_free - 1");
    }
    report.fail(std::move(found));
    return report;
}

Report check_formula_agreement(unsigned max_degree, Execution exec) {
    auto report = make_report("formulas", "dual", max_degree);
    const auto items = compositions_between(0, max_degree);
    report.checked = items.size();
    report.fail(sweep(items.size(), exec, [] { return ShuffleAlgebra{}; },
                      [&](ShuffleAlgebra& alg, std::size_t k) -> std::optional<std::string> {
                          const auto& i = items[k];
                          auto coarse = chi_dual_coarsening(i);
                          auto parts = alg.chi_partitions(i);
                          if (coarse == parts)
                              return std::nullopt;
                          return basis_element(Basis::Dual, i) + ": coarsening form " + to_string(coarse) +
                                 " vs block-partition form " + to_string(parts);
                      }));
    return report;
}

namespace {

std::vector<DegreeTable> tables_up_to(unsigned max_degree, const Limits& limits, Execution exec) {
    return parallel_map<DegreeTable>(max_degree + 1, exec, [] { return ShuffleAlgebra{}; },
                                     [&](ShuffleAlgebra& alg, std::size_t d) {
                                         return build_degree_table(static_cast<unsigned>(d), alg, limits);
                                     });
}

} // namespace

Report check_route_equivalence(unsigned max_degree, const Limits& limits, Execution exec) {
    limits.check(max_degree);
    auto report = make_report("routes", "-", max_degree);
    const auto tables = tables_up_to(max_degree, limits, exec);
    const auto items = compositions_between(0, max_degree);
    report.checked = items.size();
    report.fail(sweep(items.size(), exec, [] { return AdemReducer{}; },
                      [&](AdemReducer& reducer, std::size_t k) -> std::optional<std::string> {
                          const auto& i = items[k];
                          auto dual_route = tables[i.degree()].adem_coefficients(i);
                          auto direct = reducer.reduce(F2Sum::monomial(Basis::Free, i));
                          if (dual_route == direct)
                              return std::nullopt;
                          return basis_element(Basis::Steenrod, i) + ": table gives " + to_string(dual_route) +
                                 ", Adem rewriting gives " + to_string(direct);
                      }));
    return report;
}

Report check_triangularity(unsigned max_degree, const Limits& limits, Execution exec) {
    limits.check(max_degree);
    auto report = make_report("triangularity", "-", max_degree);
    for (unsigned d = 0; d <= max_degree; ++d)
        report.checked += admissibles_of_degree(d, limits).size();
    report.fail(sweep(max_degree + 1, exec, [] { return ShuffleAlgebra{}; },
                      [&](ShuffleAlgebra& alg, std::size_t d) -> std::optional<std::string> {
                          DegreeTable table;
                          try {
                              table = build_degree_table(static_cast<unsigned>(d), alg, limits);
                          } catch (const TriangularityError& e) {
                              return "degree " + std::to_string(d) + ": " + e.what();
                          }
                          for (const auto& j : table.admissibles) {
                              const auto l = gamma(j);
                              const auto& row = table.xi_expansions.at(l);
                              const auto& image = table.pi_star_sq.at(j);
                              const auto& xi = table.pi_star_xi.at(l);
                              if (row.lowest() != j || !row.coefficient(j) || image.lowest() != j ||
                                  xi.lowest() != j)
                                  return "Sq_" + to_string(j) + ": row is not unitriangular";
                          }
                          return std::nullopt;
                      }));
    return report;
}

Report check_milnor_conjugation(unsigned max_n) {
    auto report = make_report("milnor", "dual", max_n);
    std::vector<std::string> found;
    SteenrodContext ctx(Limits{0});
    for (unsigned n = 1; n <= max_n; ++n) {
        ++report.checked;
        auto lhs = chi_dual(F2Sum::monomial(Basis::Dual, xi_sequence(n)));
        auto rhs = ctx.milnor_conjugation_rhs(n);
        if (lhs != rhs)
            found.push_back("n = " + std::to_string(n) + ": chi(xi_n) image " + to_string(lhs) +
                            " vs composition sum " + to_string(rhs));
    }
    report.fail(std::move(found));
    return report;
}

namespace {

// Number of L with sum l_i (2^i - 1) = n, counted directly.
std::size_t count_milnor_monomials(unsigned n) {
    std::vector<unsigned> weights;
    for (unsigned i = 1; (1u << i) - 1 <= std::max(n, 1u); ++i)
        weights.push_back((1u << i) - 1);
    std::vector<std::size_t> ways(n + 1, 0);
    ways[0] = 1;
    for (auto w : weights)
        for (unsigned s = w; s <= n; ++s)
            ways[s] += ways[s - w];
    return ways[n];
}

} // namespace

Report check_milnor_round_trip(unsigned max_degree, const Limits& limits, Execution exec) {
    limits.check(max_degree);
    auto report = make_report("steenrod", "-", max_degree);
    const auto tables = tables_up_to(max_degree, limits, exec);
    std::vector<std::string> found;
    for (const auto& table : tables) {
        const auto expected = count_milnor_monomials(table.degree);
        if (table.admissibles.size() != expected)
            found.push_back("degree " + std::to_string(table.degree) + ": " +
                            std::to_string(table.admissibles.size()) + " admissibles vs " +
                            std::to_string(expected) + " Milnor monomials");
        for (const auto& [l, row] : table.xi_expansions) {
            ++report.checked;
            F2Sum expanded(Basis::Dual);
            for (const auto& j : row)
                expanded += table.pi_star_sq.at(j);
            if (expanded != table.pi_star_xi.at(l))
                found.push_back("xi^" + to_string(l) + ": pi*(r(pi*(xi^L))) differs from pi*(xi^L)");
        }
    }
    report.fail(std::move(found));
    return report;
}

Report check_shuffle_commutativity(unsigned max_total_degree, Execution exec) {
    auto report = make_report("commutativity", "dual", max_total_degree);
    const auto pairs = pairs_up_to(max_total_degree);
    report.checked = pairs.size();
    report.fail(sweep(pairs.size(), exec, [] { return ShuffleAlgebra{}; },
                      [&](ShuffleAlgebra& alg, std::size_t k) -> std::optional<std::string> {
                          const auto& [a, b] = pairs[k];
                          auto ab = reference::overlapping_shuffle(a, b);
                          auto ba = reference::overlapping_shuffle(b, a);
                          if (ab != ba)
                              return basis_element(Basis::Dual, a) + " * " + basis_element(Basis::Dual, b) +
                                     " is not commutative";
                          if (alg.shuffle(a, b) != ab)
                              return basis_element(Basis::Dual, a) + " * " + basis_element(Basis::Dual, b) +
                                     ": cached kernel disagrees with the literal recursion";
                          return std::nullopt;
                      }));
    return report;
}

Report check_shuffle_associativity(std::size_t samples, unsigned max_total_degree, std::uint64_t seed) {
    auto report = make_report("associativity", "dual", max_total_degree);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> total_dist(0, max_total_degree);
    ShuffleAlgebra alg;
    std::vector<std::string> found;
    for (std::size_t s = 0; s < samples; ++s) {
        const unsigned total = total_dist(rng);
        std::uniform_int_distribution<unsigned> first(0, total);
        const unsigned da = first(rng);
        std::uniform_int_distribution<unsigned> second(0, total - da);
        const unsigned db = second(rng);
        const auto a = F2Sum::monomial(Basis::Dual, random_composition(da, rng));
        const auto b = F2Sum::monomial(Basis::Dual, random_composition(db, rng));
        const auto c = F2Sum::monomial(Basis::Dual, random_composition(total - da - db, rng));
        ++report.checked;
        if (alg.product(alg.product(a, b), c) != alg.product(a, alg.product(b, c)))
            found.push_back("(" + to_string(a) + " * " + to_string(b) + ") * " + to_string(c) +
                            " != " + to_string(a) + " * (" + to_string(b) + " * " + to_string(c) + ")");
    }
    report.fail(std::move(found));
    return report;
}

Report check_squaring(unsigned max_degree) {
    auto report = make_report("squaring", "dual", max_degree);
    ShuffleAlgebra alg;
    std::vector<std::string> found;
    for (const auto& a : compositions_between(0, max_degree)) {
        ++report.checked;
        const auto x = F2Sum::monomial(Basis::Dual, a);
        const auto square = alg.product(x, x);
        if (square != F2Sum::monomial(Basis::Dual, shuffle_power_2m(a, 1)))
            found.push_back(to_string(x) + " squared is " + to_string(square));
        else if (alg.product(square, square) != F2Sum::monomial(Basis::Dual, shuffle_power_2m(a, 2)))
            found.push_back(to_string(x) + " to the fourth is not " + to_string(shuffle_power_2m(a, 2)));
    }
    report.fail(std::move(found));
    return report;
}

Report check_adjointness(unsigned max_total_degree, Execution exec) {
    auto report = make_report("adjointness", "both", max_total_degree);
    const auto pairs = pairs_up_to(max_total_degree);
    std::vector<std::vector<Composition>> by_degree;
    std::vector<std::vector<TensorSum>> free_delta, dual_delta;
    for (unsigned d = 0; d <= max_total_degree; ++d) {
        by_degree.push_back(compositions_of_degree(d, Limits{max_total_degree}));
        free_delta.emplace_back();
        dual_delta.emplace_back();
        for (const auto& z : by_degree.back()) {
            free_delta.back().push_back(coproduct_free(z));
            dual_delta.back().push_back(coproduct_dual(z));
        }
    }
    for (const auto& [x, y] : pairs)
        report.checked += by_degree[x.degree() + y.degree()].size();

    report.fail(sweep(pairs.size(), exec, [] { return ShuffleAlgebra{}; },
                      [&](ShuffleAlgebra& alg, std::size_t k) -> std::optional<std::string> {
                          const auto& [x, y] = pairs[k];
                          const unsigned d = x.degree() + y.degree();
                          const auto xy_free = x.concat(y);
                          const auto xy_dual = alg.shuffle(x, y);
                          const TensorTerm xy{x, y};
                          for (std::size_t zi = 0; zi < by_degree[d].size(); ++zi) {
                              const auto& z = by_degree[d][zi];
                              // <S^x S^y, S_z> = <S^x (x) S^y, Delta S_z>
                              if ((xy_free == z) != dual_delta[d][zi].coefficient(xy))
                                  return "<S^" + to_string(x) + " S^" + to_string(y) + ", S_" + to_string(z) +
                                         "> disagrees with the deconcatenation coproduct";
                              // <Delta S^z, S_x (x) S_y> = <S^z, S_x S_y>
                              if (free_delta[d][zi].coefficient(xy) != xy_dual.coefficient(z))
                                  return "<Delta S^" + to_string(z) + ", S_" + to_string(x) + " (x) S_" +
                                         to_string(y) + "> disagrees with the shuffle product";
                          }
                          return std::nullopt;
                      }));
    return report;
}

Report check_antihomomorphism(Side side, std::size_t samples, unsigned max_degree, std::uint64_t seed) {
    auto report = make_report("antihomomorphism", std::string(side_name(side)), max_degree);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> total_dist(0, max_degree);
    ShuffleAlgebra alg;
    std::vector<std::string> found;
    for (std::size_t s = 0; s < samples; ++s) {
        const unsigned total = total_dist(rng);
        std::uniform_int_distribution<unsigned> first(0, total);
        const unsigned da = first(rng);
        const auto a = random_composition(da, rng);
        const auto b = random_composition(total - da, rng);
        ++report.checked;
        bool ok;
        if (side == Side::Free) {
            ok = chi_free(a.concat(b)) ==
                 concat_product(chi_free(b), chi_free(a));
        } else {
            ok = chi_dual(alg.shuffle(a, b)) == alg.product(chi_dual_coarsening(b), chi_dual_coarsening(a));
        }
        if (!ok)
            found.push_back("chi(x y) != chi(y) chi(x) for x = " + to_string(a) + ", y = " + to_string(b));
    }
    report.fail(std::move(found));
    return report;
}

} // namespace lhopf
