#include "lhopf/leibniz.hpp"
#include "lhopf/reference.hpp"
#include "lhopf/verify.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace lhopf;

namespace {

using C = Composition;

F2Sum free_(std::vector<C> terms) { return F2Sum(Basis::Free, std::move(terms)); }
F2Sum sq(std::vector<C> terms) { return F2Sum(Basis::Steenrod, std::move(terms)); }

// binomial coefficient by the multiplicative formula, exact for small args
std::uint64_t binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (long long t = 1; t <= k; ++t)
        r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
    return r;
}

// Adem right-hand side read straight off the relation, integers then mod 2.
F2Sum adem_by_hand(unsigned i, unsigned j) {
    std::vector<C> terms;
    for (unsigned k = 0; k <= i / 2; ++k) {
        if (binomial(static_cast<long long>(j) - k - 1, static_cast<long long>(i) - 2 * k) % 2 == 0)
            continue;
        if (k == 0)
            terms.push_back(C{i + j});
        else
            terms.push_back(C{i + j - k, k});
    }
    return free_(terms);
}

// Multiplies Delta(S^i1) ... Delta(S^ik) in F2 (x) F2 keeping integer
// multiplicities, then reduces mod 2.
TensorSum coproduct_by_expansion(const C& i) {
    std::map<TensorTerm, std::uint64_t> acc{{{C{}, C{}}, 1}};
    for (std::size_t k = 0; k < i.size(); ++k) {
        std::map<TensorTerm, std::uint64_t> next;
        for (const auto& [t, mult] : acc)
            for (std::uint32_t a = 0; a <= i[k]; ++a) {
                auto left = a ? t.first.concat(C{a}) : t.first;
                auto right = a < i[k] ? t.second.concat(C{i[k] - a}) : t.second;
                next[{left, right}] += mult;
            }
        acc = std::move(next);
    }
    std::vector<TensorTerm> odd;
    for (const auto& [t, mult] : acc)
        if (mult % 2)
            odd.push_back(t);
    return TensorSum(Basis::Free, odd);
}

F2Sum lift(const F2Sum& x) { return x.relabel(Basis::Free); }

} // namespace

TEST_CASE("concatenation product") {
    CHECK(concat_product(free_({C{1}}), free_({C{2}})) == free_({C{1, 2}}));
    CHECK(concat_product(free_({C{3, 1}}), free_({C{}})) == free_({C{3, 1}}));
    CHECK(concat_product(free_({C{1}, C{2}}), free_({C{1}})) == free_({C{1, 1}, C{2, 1}}));
    CHECK_THROWS_AS(concat_product(free_({C{1}}), F2Sum(Basis::Dual, {C{1}})), BasisMismatch);
}

TEST_CASE("free coproduct") {
    CHECK(coproduct_free(C{1}) == TensorSum(Basis::Free, {{C{}, C{1}}, {C{1}, C{}}}));
    CHECK(coproduct_free(C{2}) == TensorSum(Basis::Free, {{C{}, C{2}}, {C{1}, C{1}}, {C{2}, C{}}}));
    CHECK(coproduct_free(C{1, 1}) == TensorSum(Basis::Free, {{C{}, C{1, 1}}, {C{1, 1}, C{}}}));
    CHECK(coproduct_free(C{}) == TensorSum(Basis::Free, {{C{}, C{}}}));
}

TEST_CASE("free coproduct matches expansion of the generators") {
    for (unsigned n = 0; n <= 8; ++n)
        for (const auto& i : compositions_of_degree(n))
            CHECK(coproduct_free(i) == coproduct_by_expansion(i));
}

TEST_CASE("Adem pair relation") {
    CHECK(adem_rewrite_pair(1, 1).is_zero());
    CHECK(adem_rewrite_pair(1, 2) == free_({C{3}}));
    CHECK(adem_rewrite_pair(2, 2) == free_({C{3, 1}}));
    CHECK_THROWS_AS(adem_rewrite_pair(2, 1), Error);
    CHECK_THROWS_AS(adem_rewrite_pair(0, 1), Error);
    for (unsigned j = 1; j <= 24; ++j)
        for (unsigned i = 1; i < 2 * j; ++i)
            CHECK(adem_rewrite_pair(i, j) == adem_by_hand(i, j));
}

TEST_CASE("Adem reduction") {
    CHECK(adem_reduce(free_({C{1, 2}})) == sq({C{3}}));
    CHECK(adem_reduce(free_({C{4, 2}})) == sq({C{4, 2}}));
    CHECK(adem_reduce(free_({C{1, 1}})).is_zero());
    CHECK(adem_reduce(free_({C{2, 4}})).coefficient(C{6}));
    CHECK(adem_reduce(free_({})).is_zero());
    CHECK(adem_reduce(free_({C{}})) == sq({C{}}));
}

TEST_CASE("Adem reduction lands in admissibles and matches the uncached rewrite") {
    AdemReducer reducer;
    for (unsigned n = 1; n <= 12; ++n)
        for (const auto& i : compositions_of_degree(n)) {
            const auto& r = reducer.reduce(i);
            for (const auto& t : r)
                CHECK(is_admissible(t));
            if (n <= 9)
                CHECK(r == reference::adem_reduce(i));
        }
    CHECK(reducer.cache_size() > 0);
    reducer.clear_cache();
    CHECK(reducer.cache_size() == 0);
}

TEST_CASE("no non-admissible monomial of degree 2^n reaches Sq^(2^n)") {
    AdemReducer reducer;
    for (unsigned n = 1; n <= 6; ++n) {
        const unsigned top = 1u << n;
        for (unsigned i = 1; i < top; ++i) {
            const C pair{i, top - i};
            if (!is_admissible(pair))
                CHECK_FALSE(reducer.reduce(pair).coefficient(C{top}));
        }
    }
    for (unsigned n = 1; n <= 3; ++n) {
        const unsigned top = 1u << n;
        for (const auto& i : compositions_of_degree(top))
            if (!is_admissible(i))
                CHECK_FALSE(reducer.reduce(i).coefficient(C{top}));
    }
}

TEST_CASE("Adem reduction respects products") {
    // Reducing a factor first and then the product gives the same result.
    std::mt19937_64 rng(2024);
    AdemReducer reducer;
    for (int trial = 0; trial < 400; ++trial) {
        const unsigned total = 2 + static_cast<unsigned>(rng() % 9);
        const unsigned dx = 1 + static_cast<unsigned>(rng() % (total - 1));
        const auto x = free_({random_composition(dx, rng)});
        const auto y = free_({random_composition(total - dx, rng)});
        const auto whole = reducer.reduce(concat_product(x, y));
        CHECK(whole == reducer.reduce(concat_product(lift(reducer.reduce(x)), y)));
        CHECK(whole == reducer.reduce(concat_product(x, lift(reducer.reduce(y)))));
    }
}

TEST_CASE("free antipode") {
    CHECK(chi_free(C{}) == free_({C{}}));
    CHECK(chi_free(C{2}) == free_({C{2}, C{1, 1}}));
    const auto f = free_({C{1, 1, 2}, C{2, 1, 1}, C{1, 1, 1, 1}});
    CHECK(chi_free(f) == f);
    // sum x' chi(x'') over Delta(S^2) vanishes
    F2Sum acc(Basis::Free);
    for (const auto& [a, b] : coproduct_free(C{2}))
        acc += concat_product(free_({a}), chi_free(b));
    CHECK(acc.is_zero());
}

TEST_CASE("free antipode is an involutive anti-homomorphism") {
    for (unsigned n = 0; n <= 7; ++n)
        for (const auto& i : compositions_of_degree(n))
            CHECK(chi_free(chi_free(i)) == free_({i}));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = free_({random_composition(1 + rng() % 4, rng)});
        const auto y = free_({random_composition(1 + rng() % 4, rng)});
        CHECK(chi_free(concat_product(x, y)) == concat_product(chi_free(y), chi_free(x)));
    }
}
