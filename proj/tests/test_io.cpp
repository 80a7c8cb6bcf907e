#include "lhopf/io.hpp"

#include <doctest.h>

#include <random>

using namespace lhopf;

namespace {

using C = Composition;

std::size_t error_column(std::string_view text, std::optional<Basis> zero = std::nullopt) {
    try {
        parse_expression(text, zero);
    } catch (const ParseError& e) {
        return e.column();
    }
    return 0;
}

} // namespace

TEST_CASE("bracket lists") {
    CHECK(parse_bracket_list("[1,2,3]") == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(parse_bracket_list(" [ 4 , 2 ] ") == std::vector<std::uint32_t>{4, 2});
    CHECK(parse_bracket_list("[]").empty());
    CHECK(parse_composition("[5,1]") == C{5, 1});
    CHECK(parse_exponent_vector("[3,1,0]") == ExponentVector{3, 1});
    CHECK_THROWS_AS(parse_bracket_list("[1,2"), ParseError);
    CHECK_THROWS_AS(parse_bracket_list("[1,,2]"), ParseError);
    CHECK_THROWS_AS(parse_bracket_list("[1] x"), ParseError);
    CHECK_THROWS_AS(parse_bracket_list("[-1]"), ParseError);
}

TEST_CASE("zero entries report their column") {
    try {
        parse_composition("[1, 0]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
    CHECK(error_column("S_[2] + S_[3,0]") == 14);
}

TEST_CASE("expressions") {
    const auto e = parse_expression("S_[6] + S_[2,4]");
    REQUIRE(std::holds_alternative<F2Sum>(e));
    CHECK(std::get<F2Sum>(e) == F2Sum(Basis::Dual, {C{6}, C{2, 4}}));
    CHECK(std::get<F2Sum>(parse_expression("Sq^[3]")).basis() == Basis::Steenrod);
    CHECK(std::get<F2Sum>(parse_expression("Sq_[4,2]")).basis() == Basis::DualSteenrod);
    CHECK(std::get<F2Sum>(parse_expression("S^[1,2]")).basis() == Basis::Free);
    CHECK(std::get<MilnorSum>(parse_expression("xi[3,1]")) == MilnorSum(Basis::Milnor, {ExponentVector{3, 1}}));
    CHECK(std::get<MilnorSum>(parse_expression("xi_[0,2]")).size() == 1);
    CHECK(std::get<F2Sum>(parse_expression("S_[1]+S_[1]")).is_zero());
    CHECK(std::get<F2Sum>(parse_expression("S_[]")) == F2Sum(Basis::Dual, {C{}}));
    CHECK(std::get<F2Sum>(parse_expression("0", Basis::Free)) == F2Sum(Basis::Free));
}

TEST_CASE("expression errors") {
    CHECK(error_column("S_[1] + S^[1]") == 9);
    CHECK(error_column("T_[1]") == 1);
    CHECK(error_column("S_[1] S_[2]") == 7);
    CHECK(error_column("0") == 1);
    CHECK(error_column("") == 1);
    CHECK(error_column("S_[1] +") == 8);
    CHECK_THROWS_AS(parse_sum("S^[1]", Basis::Dual), BasisMismatch);
    CHECK_THROWS_AS(parse_sum("xi[1]", Basis::Dual), BasisMismatch);
}

TEST_CASE("render then parse is the identity") {
    std::mt19937_64 rng(123);
    const Basis bases[] = {Basis::Free, Basis::Dual, Basis::Steenrod, Basis::DualSteenrod};
    for (int trial = 0; trial < 2000; ++trial) {
        const auto basis = bases[rng() % 4];
        std::vector<C> terms;
        const auto count = rng() % 6;
        for (std::size_t k = 0; k < count; ++k) {
            std::vector<std::uint32_t> parts(rng() % 5);
            for (auto& p : parts)
                p = 1 + static_cast<std::uint32_t>(rng() % 40);
            terms.emplace_back(parts);
        }
        const F2Sum x(basis, terms);
        const auto text = to_string(x);
        CHECK(parse_sum(text, basis) == x);
        CHECK(to_string(parse_sum(text, basis)) == text);
        CHECK(f2sum_from_json(to_json(x)) == x);
    }
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<ExponentVector> terms;
        for (std::size_t k = 0; k < 1 + rng() % 4; ++k) {
            std::vector<std::uint32_t> e(1 + rng() % 4);
            for (auto& v : e)
                v = static_cast<std::uint32_t>(rng() % 5);
            e.back() += 1;
            terms.emplace_back(e);
        }
        const MilnorSum x(Basis::Milnor, terms);
        CHECK(std::get<MilnorSum>(parse_expression(to_string(x), Basis::Milnor)) == x);
    }
}

TEST_CASE("json") {
    const F2Sum x(Basis::Dual, {C{6}, C{2, 4}});
    CHECK(to_json(x).dump() == R"({"basis":"dual","terms":[[6],[2,4]]})");
    Report r;
    r.suite = "antipode";
    r.side = "dual";
    r.degree = 6;
    r.checked = 63;
    const auto j = to_json(r);
    CHECK(j["status"] == "pass");
    CHECK(j["checked"] == 63);
    CHECK(j["witnesses"].empty());
    CHECK_THROWS_AS(f2sum_from_json(nlohmann::json{{"basis", "milnor"}, {"terms", nlohmann::json::array()}}), Error);
}

TEST_CASE("table rows") {
    SteenrodContext ctx;
    const auto rows = adem_table_rows(ctx.table(6));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].dump() == R"({"degree":6,"row":"Sq_[6]","terms":[[6],[2,4]]})");
    const auto milnor = milnor_table_rows(ctx.table(6));
    CHECK(milnor[0].dump() == R"({"degree":6,"row":"xi_[6]","terms":[[6],[4,2]]})");
}
