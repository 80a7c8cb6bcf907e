// Acceptance run: one line per criterion with its exactness check and time
// budget. Exit status is nonzero if any criterion fails.

#include "lhopf/dual.hpp"
#include "lhopf/leibniz.hpp"
#include "lhopf/steenrod.hpp"
#include "lhopf/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace lhopf;

namespace {

using C = Composition;
using L = ExponentVector;

F2Sum dual(std::vector<C> terms) { return F2Sum(Basis::Dual, std::move(terms)); }
F2Sum free_(std::vector<C> terms) { return F2Sum(Basis::Free, std::move(terms)); }
F2Sum sq_dual(std::vector<C> terms) { return F2Sum(Basis::DualSteenrod, std::move(terms)); }

struct Outcome {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
    void expect_equal(const F2Sum& got, const F2Sum& want, const std::string& what) {
        expect(got == want && to_string(got) == to_string(want), what + ": got " + to_string(got));
    }
    void expect_report(const Report& r, std::size_t min_checked) {
        std::string detail = r.suite + "/" + r.side + " up to " + std::to_string(r.degree);
        if (!r.witnesses.empty())
            detail += ": " + r.witnesses.front();
        expect(r.passed, detail);
        expect(r.checked >= min_checked, r.suite + " covered only " + std::to_string(r.checked) + " cases");
    }
};

// 2^(n-1) compositions of each degree n in [1, max]
std::size_t compositions_up_to(unsigned max) { return (std::size_t{1} << max) - 1; }

int failures = 0;

void criterion(int id, double budget_s, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= budget_s)
        out.expect(false, "over time budget");
    if (!out.ok)
        ++failures;
    std::printf("%s criterion %2d  %-58s %9.3f s / %5.0f s%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(),
                elapsed, budget_s, out.ok ? "" : "  -- ", out.why.str().c_str());
    std::fflush(stdout);
}

} // namespace

int main() {
    std::printf("lhopf acceptance, %d worker thread(s)\n", worker_count());

    criterion(1, 1, "degree 6 worked example, exact terms", [](Outcome& o) {
        SteenrodContext ctx;
        const auto eleven = dual({C{5, 1}, C{4, 2}, C{3, 3}, C{2, 4}, C{2, 3, 1}, C{1, 4, 1}, C{3, 1, 2},
                                  C{2, 2, 2}, C{1, 2, 3}, C{2, 1, 2, 1}, C{1, 2, 1, 2}});
        const auto ten = dual({C{5, 1}, C{3, 3}, C{2, 4}, C{2, 3, 1}, C{1, 4, 1}, C{3, 1, 2}, C{2, 2, 2},
                               C{1, 2, 3}, C{2, 1, 2, 1}, C{1, 2, 1, 2}});
        o.expect_equal(ctx.pi_star_xi_monomial(L{0, 2}), dual({C{4, 2}}), "pi*(xi_2^2)");
        o.expect_equal(ctx.pi_star_xi_monomial(L{6}), dual({C{6}, C{4, 2}, C{2, 4}}), "pi*(xi_1^6)");
        o.expect_equal(ctx.pi_star_xi_monomial(L{3, 1}), eleven, "pi*(xi_1^3 xi_2)");
        o.expect(eleven.size() == 11, "eleven-term sum has a repeated term");
        o.expect_equal(ctx.milnor_to_admissible(L{0, 2}), sq_dual({C{4, 2}}), "xi_2^2");
        o.expect_equal(ctx.milnor_to_admissible(L{3, 1}), sq_dual({C{5, 1}, C{4, 2}}), "xi_1^3 xi_2");
        o.expect_equal(ctx.milnor_to_admissible(L{6}), sq_dual({C{6}, C{4, 2}}), "xi_1^6");
        o.expect_equal(ctx.pi_star_sq(C{4, 2}), dual({C{4, 2}}), "pi*(Sq_{4,2})");
        o.expect_equal(ctx.pi_star_sq(C{6}), dual({C{6}, C{2, 4}}), "pi*(Sq_6)");
        o.expect_equal(ctx.pi_star_sq(C{5, 1}), ten, "pi*(Sq_{5,1})");
        o.expect(ten.size() == 10, "ten-term sum has a repeated term");
    });

    criterion(2, 1, "dual antipode of S_{1,2,3} by both formulas", [](Outcome& o) {
        const auto want = dual({C{3, 2, 1}, C{5, 1}, C{3, 3}, C{6}});
        o.expect_equal(chi_dual_coarsening(C{1, 2, 3}), want, "coarsening formula");
        o.expect_equal(chi_dual_partitions(C{1, 2, 3}), want, "block partition formula");
    });

    criterion(3, 1, "duality map and invariant example", [](Outcome& o) {
        o.expect(dual_composition(C{1, 3, 2}) == C{2, 1, 2, 1}, "D(1,3,2)");
        const auto f = free_({C{1, 1, 2}, C{2, 1, 1}, C{1, 1, 1, 1}});
        o.expect_equal(chi_free(f), f, "chi_free(f)");
        const auto df = apply_duality(f);
        o.expect_equal(df, dual({C{3, 1}, C{1, 3}, C{4}}), "D(f)");
        o.expect_equal(chi_dual(df), df, "chi_dual(D(f))");
    });

    criterion(4, 60, "dual route = Adem rewriting, all I of degree <= 10", [](Outcome& o) {
        SteenrodContext ctx(Limits{10});
        AdemReducer reducer;
        std::size_t checked = 0;
        for (unsigned n = 1; n <= 10; ++n)
            for (const auto& i : compositions_of_degree(n)) {
                ++checked;
                const auto direct = reducer.reduce(i);
                const auto via_table = ctx.adem_coefficients(i);
                if (via_table != direct)
                    o.expect(false, "Sq^" + to_string(i) + ": table gives " + to_string(via_table) +
                                        ", rewriting gives " + to_string(direct));
            }
        o.expect(checked == compositions_up_to(10), "not every composition was visited");
        o.expect_report(check_route_equivalence(10, Limits{10}), compositions_up_to(10));
    });

    criterion(5, 120, "antipode axiom and involution (dual <= 12, free <= 10)", [](Outcome& o) {
        o.expect_report(check_antipode_axiom(Side::Dual, 12), compositions_up_to(12));
        o.expect_report(check_antipode_axiom(Side::Free, 10), compositions_up_to(10));
    });

    criterion(6, 120, "coarsening formula = block partition formula, <= 12", [](Outcome& o) {
        o.expect_report(check_formula_agreement(12), compositions_up_to(12));
    });

    criterion(7, 60, "D intertwines antipodes (<= 10), invariants (<= 8)", [](Outcome& o) {
        o.expect_report(check_duality_theorem(10), compositions_up_to(10));
        for (unsigned d = 0; d <= 8; ++d)
            o.expect_report(check_invariant_duality(d), d == 0 ? 0 : 1);
    });

    criterion(8, 60, "unitriangular rows in every degree <= 12", [](Outcome& o) {
        o.expect_report(check_triangularity(12, Limits{12}), 1);
    });

    criterion(9, 30, "conjugate of xi_n, n = 1..5", [](Outcome& o) {
        SteenrodContext ctx(Limits{0});
        for (unsigned n = 1; n <= 5; ++n)
            o.expect_equal(ctx.milnor_conjugation_rhs(n), chi_dual(dual({xi_sequence(n)})),
                           "n = " + std::to_string(n));
        o.expect_report(check_milnor_conjugation(5), 5);
    });

    criterion(10, 120, "shuffle commutativity, associativity, squares, adjointness", [](Outcome& o) {
        o.expect_report(check_shuffle_commutativity(10), 1);
        o.expect_report(check_shuffle_associativity(1000, 12, 0x5eed), 1000);
        o.expect_report(check_squaring(8), std::size_t{1} << 8);
        o.expect_report(check_adjointness(8), 1);
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
