#include "lhopf/f2_linear.hpp"
#include "lhopf/leibniz.hpp"

#include <doctest.h>

#include <random>

using namespace lhopf;

namespace {

using C = Composition;

F2Sum dual(std::vector<C> terms) { return F2Sum(Basis::Dual, std::move(terms)); }
F2Sum free_(std::vector<C> terms) { return F2Sum(Basis::Free, std::move(terms)); }

} // namespace

TEST_CASE("addition is symmetric difference") {
    CHECK((dual({C{6}}) + dual({C{6}})).is_zero());
    CHECK(dual({C{6}}) + dual({C{2, 4}}) == dual({C{6}, C{2, 4}}));
    CHECK(dual({}) + dual({C{4, 2}}) == dual({C{4, 2}}));
    CHECK(add(dual({C{1}}), dual({C{1}, C{2}})) == dual({C{2}}));
}

TEST_CASE("construction collapses mod 2 and sorts") {
    const auto x = dual({C{2, 4}, C{6}, C{2, 4}, C{2, 4}, C{4, 2}});
    CHECK(x.terms() == std::vector<C>{C{6}, C{4, 2}, C{2, 4}});
    CHECK(x.lowest() == C{6});
}

TEST_CASE("basis mismatch") {
    CHECK_THROWS_AS(dual({C{1}}) + free_({C{1}}), BasisMismatch);
    CHECK_THROWS_AS(dual({C{1}}).require_basis(Basis::Free), BasisMismatch);
    CHECK_THROWS_AS(pairing(dual({C{1}}), dual({C{1}})), Error);
}

TEST_CASE("pairing") {
    CHECK(pairing(free_({C{2, 1}}), dual({C{2, 1}})));
    CHECK_FALSE(pairing(free_({C{2, 1}}), dual({C{1, 2}})));
    CHECK(pairing(free_({C{6}, C{2, 4}}), dual({C{2, 4}})));
    CHECK_FALSE(pairing(free_({C{6}, C{2, 4}}), dual({C{6}, C{2, 4}})));
}

TEST_CASE("pairing is bilinear and the bases are dual") {
    std::mt19937_64 rng(7);
    for (unsigned n = 1; n <= 6; ++n) {
        const auto basis = compositions_of_degree(n);
        for (const auto& a : basis)
            for (const auto& b : basis)
                CHECK(pairing(free_({a}), dual({b})) == (a == b));
        auto random_sum = [&](Basis bs) {
            std::vector<C> t;
            for (const auto& c : basis)
                if (rng() & 1)
                    t.push_back(c);
            return F2Sum(bs, t);
        };
        for (int k = 0; k < 50; ++k) {
            const auto x = random_sum(Basis::Free), x2 = random_sum(Basis::Free), y = random_sum(Basis::Dual);
            CHECK(pairing(x + x2, y) == (pairing(x, y) != pairing(x2, y)));
        }
    }
}

TEST_CASE("coefficient") {
    const auto pi_sq6 = dual({C{6}, C{2, 4}});
    CHECK(coefficient(pi_sq6, C{2, 4}));
    CHECK_FALSE(coefficient(dual({C{4, 2}}), C{2, 4}));
    CHECK_FALSE(coefficient(dual({}), C{1}));
}

TEST_CASE("rendering") {
    CHECK(to_string(dual({C{6}, C{2, 4}})) == "S_[6] + S_[2,4]");
    CHECK(to_string(free_({})) == "0");
    CHECK(to_string(F2Sum(Basis::Steenrod, {C{3}})) == "Sq^[3]");
    CHECK(to_string(MilnorSum(Basis::Milnor, {ExponentVector{3, 1}})) == "xi_[3,1]");
}

TEST_CASE("tensor sums") {
    TensorSum t(Basis::Dual, {{C{1}, C{1}}, {C{}, C{2}}, {C{1}, C{1}}});
    CHECK(t.size() == 1);
    CHECK(t.coefficient({C{}, C{2}}));
    TensorSum f(Basis::Free, {{C{}, C{2}}});
    CHECK(pairing(f, t));
    CHECK_THROWS_AS(pairing(t, t), Error);
}

TEST_CASE("kernel of identity and zero") {
    CHECK(kernel_basis(GF2Matrix::identity(5)).empty());
    const auto k = kernel_basis(GF2Matrix(4, 4));
    CHECK(k.size() == 4);
    CHECK(GF2Matrix(4, 4).rank() == 0);
    CHECK(GF2Matrix::identity(70).rank() == 70);
}

TEST_CASE("random kernels are independent and annihilated") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 80, cols = 1 + rng() % 80;
        GF2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 3 == 0)
                    m.set(r, c);
        const auto k = kernel_basis(m);
        CHECK(k.size() + m.rank() == cols);
        for (const auto& v : k)
            CHECK(m.multiply(v).is_zero());
        GF2Matrix stacked(k.size(), cols);
        for (std::size_t r = 0; r < k.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                stacked.set(r, c, k[r].get(c));
        CHECK(stacked.rank() == k.size());
        CHECK(m.transpose().transpose() == m);
        CHECK(m.transpose().rank() == m.rank());
    }
}

TEST_CASE("the free invariant lies in ker(chi - 1) in degree 4") {
    const DegreeIndex index(4);
    const auto chi = matrix_of(index, Basis::Free, [](const C& i) { return chi_free(i); });
    const auto k = kernel_basis(chi + GF2Matrix::identity(index.size()));
    const auto f = free_({C{1, 1, 2}, C{2, 1, 1}, C{1, 1, 1, 1}});
    CHECK(in_span(k, index.to_vector(f)));
    CHECK_FALSE(in_span(k, index.to_vector(free_({C{4}}))));
    CHECK(index.to_sum(index.to_vector(f), Basis::Free) == f);
}

TEST_CASE("degree index") {
    const DegreeIndex index(5);
    CHECK(index.size() == 16);
    for (std::size_t k = 0; k < index.size(); ++k)
        CHECK(index.index_of(index.at(k)) == k);
    CHECK_THROWS_AS(index.index_of(C{1}), Error);
}
