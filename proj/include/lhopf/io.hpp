#pragma once

#include "lhopf/f2_linear.hpp"
#include "lhopf/steenrod.hpp"
#include "lhopf/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>
#include <variant>

namespace lhopf {

class ParseError : public Error {
public:
    // column is 1-based
    ParseError(const std::string& message, std::size_t column);
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// "[1,2,3]" with optional whitespace; "[]" is the empty list.
std::vector<std::uint32_t> parse_bracket_list(std::string_view text);
Composition parse_composition(std::string_view text);
ExponentVector parse_exponent_vector(std::string_view text);

using Expression = std::variant<F2Sum, MilnorSum>;

// sum := term ("+" term)* | "0";  term := prefix "[" list "]"
// with prefix one of S^ S_ Sq^ Sq_ xi xi_. Repeated terms cancel mod 2.
// A bare "0" takes zero_basis, and is an error without one.
Expression parse_expression(std::string_view text, std::optional<Basis> zero_basis = std::nullopt);

// Parses and requires the given basis (BasisMismatch otherwise).
F2Sum parse_sum(std::string_view text, Basis expected);

nlohmann::json to_json(const F2Sum& x);
nlohmann::json to_json(const MilnorSum& x);
F2Sum f2sum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);

// One JSON line per row: {"degree", "row", "terms"}.
std::vector<nlohmann::json> adem_table_rows(const DegreeTable& table);
std::vector<nlohmann::json> milnor_table_rows(const DegreeTable& table);

} // namespace lhopf
