#include "lhopf/io.hpp"

#include <cctype>
#include <charconv>

namespace lhopf {

ParseError::ParseError(const std::string& message, std::size_t column)
    : Error(message + " at column " + std::to_string(column)), column_(column) {}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    std::size_t column() const { return pos_ + 1; }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint32_t integer() {
        skip_ws();
        std::uint32_t value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first)
            fail("expected a non-negative integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    // columns, when given, receives the 1-based column of each entry
    std::vector<std::uint32_t> list(std::vector<std::size_t>* columns = nullptr) {
        expect('[');
        std::vector<std::uint32_t> out;
        skip_ws();
        if (accept("]"))
            return out;
        while (true) {
            skip_ws();
            if (columns)
                columns->push_back(column());
            out.push_back(integer());
            skip_ws();
            if (accept("]"))
                return out;
            expect(',');
        }
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, column()); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Composition to_composition(std::vector<std::uint32_t> parts, const std::vector<std::size_t>& columns) {
    for (std::size_t k = 0; k < parts.size(); ++k)
        if (parts[k] == 0)
            throw ParseError("composition entries must be positive", columns[k]);
    return Composition::unchecked(std::move(parts));
}

std::optional<Basis> read_prefix(Cursor& c) {
    // longest prefixes first
    if (c.accept("Sq^"))
        return Basis::Steenrod;
    if (c.accept("Sq_"))
        return Basis::DualSteenrod;
    if (c.accept("S^"))
        return Basis::Free;
    if (c.accept("S_"))
        return Basis::Dual;
    if (c.accept("xi_") || c.accept("xi"))
        return Basis::Milnor;
    return std::nullopt;
}

} // namespace

std::vector<std::uint32_t> parse_bracket_list(std::string_view text) {
    Cursor c(text);
    auto out = c.list();
    c.skip_ws();
    if (!c.at_end())
        c.fail("unexpected trailing input");
    return out;
}

Composition parse_composition(std::string_view text) {
    Cursor c(text);
    std::vector<std::size_t> columns;
    auto parts = c.list(&columns);
    c.skip_ws();
    if (!c.at_end())
        c.fail("unexpected trailing input");
    return to_composition(std::move(parts), columns);
}

ExponentVector parse_exponent_vector(std::string_view text) { return ExponentVector(parse_bracket_list(text)); }

Expression parse_expression(std::string_view text, std::optional<Basis> zero_basis) {
    Cursor c(text);
    c.skip_ws();
    const auto start = c.column();
    if (c.accept("0")) {
        c.skip_ws();
        if (!c.at_end())
            c.fail("unexpected trailing input after 0");
        if (!zero_basis)
            throw ParseError("zero needs a known basis in this context", start);
        if (*zero_basis == Basis::Milnor)
            return MilnorSum(Basis::Milnor);
        return F2Sum(*zero_basis);
    }

    std::optional<Basis> basis;
    std::vector<Composition> terms;
    std::vector<ExponentVector> milnor_terms;
    while (true) {
        c.skip_ws();
        const auto term_column = c.column();
        auto prefix = read_prefix(c);
        if (!prefix)
            c.fail("expected a basis prefix (S^, S_, Sq^, Sq_, xi)");
        if (basis && *basis != *prefix)
            throw ParseError("mixed bases in one sum", term_column);
        basis = prefix;
        std::vector<std::size_t> columns;
        auto parts = c.list(&columns);
        if (*basis == Basis::Milnor)
            milnor_terms.emplace_back(std::move(parts));
        else
            terms.push_back(to_composition(std::move(parts), columns));
        c.skip_ws();
        if (c.at_end())
            break;
        if (!c.accept("+"))
            c.fail("expected '+' between terms");
    }
    if (*basis == Basis::Milnor)
        return MilnorSum(Basis::Milnor, std::move(milnor_terms));
    return F2Sum(*basis, std::move(terms));
}

F2Sum parse_sum(std::string_view text, Basis expected) {
    auto e = parse_expression(text, expected);
    if (auto* s = std::get_if<F2Sum>(&e)) {
        s->require_basis(expected);
        return *s;
    }
    throw BasisMismatch(expected, Basis::Milnor);
}

namespace {

template <class Sum>
nlohmann::json sum_json(const Sum& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : x) {
        nlohmann::json entry = nlohmann::json::array();
        for (std::size_t k = 0; k < t.size(); ++k)
            entry.push_back(t[k]);
        terms.push_back(std::move(entry));
    }
    return {{"basis", basis_name(x.basis())}, {"terms", std::move(terms)}};
}

} // namespace

nlohmann::json to_json(const F2Sum& x) { return sum_json(x); }
nlohmann::json to_json(const MilnorSum& x) { return sum_json(x); }

F2Sum f2sum_from_json(const nlohmann::json& j) {
    const auto name = j.at("basis").get<std::string>();
    std::optional<Basis> basis;
    for (auto b : {Basis::Free, Basis::Dual, Basis::Steenrod, Basis::DualSteenrod})
        if (basis_name(b) == name)
            basis = b;
    if (!basis)
        throw Error("unknown basis '" + name + "' for a composition sum");
    std::vector<Composition> terms;
    for (const auto& t : j.at("terms"))
        terms.emplace_back(t.get<std::vector<std::uint32_t>>());
    return F2Sum(*basis, std::move(terms));
}

nlohmann::json to_json(const Report& r) {
    return {{"suite", r.suite},
            {"side", r.side},
            {"degree", r.degree},
            {"status", r.passed ? "pass" : "fail"},
            {"checked", r.checked},
            {"failures", r.failures},
            {"witnesses", r.witnesses}};
}

std::vector<nlohmann::json> adem_table_rows(const DegreeTable& table) {
    std::vector<nlohmann::json> rows;
    for (const auto& j : table.admissibles)
        rows.push_back({{"degree", table.degree},
                        {"row", "Sq_" + to_string(j)},
                        {"terms", to_json(table.pi_star_sq.at(j))["terms"]}});
    return rows;
}

std::vector<nlohmann::json> milnor_table_rows(const DegreeTable& table) {
    std::vector<nlohmann::json> rows;
    for (const auto& j : table.admissibles) {
        const auto l = gamma(j);
        rows.push_back({{"degree", table.degree},
                        {"row", "xi_" + to_string(l)},
                        {"terms", to_json(table.xi_expansions.at(l))["terms"]}});
    }
    return rows;
}

} // namespace lhopf
