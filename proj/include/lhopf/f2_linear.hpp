#pragma once

#include "lhopf/composition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lhopf {

// Which basis the terms of a sum refer to.
//   Free          S^I   in F2
//   Dual          S_I   in F2*
//   Steenrod      Sq^J  admissible monomials in A2
//   DualSteenrod  Sq_J  dual admissible basis of A2*
//   Milnor        xi^L  Milnor monomials in A2*
enum class Basis { Free, Dual, Steenrod, DualSteenrod, Milnor };

std::string_view basis_name(Basis b);
std::string_view basis_prefix(Basis b);

class BasisMismatch : public Error {
public:
    BasisMismatch(Basis expected, Basis got);
};

// Sorts terms and cancels equal pairs (GF(2) collapse of a multiset).
template <class Term>
void collapse_mod2(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end());
    std::size_t out = 0;
    for (std::size_t k = 0; k < terms.size();) {
        std::size_t run = k + 1;
        while (run < terms.size() && terms[run] == terms[k])
            ++run;
        if ((run - k) % 2 == 1) {
            if (out != k)
                terms[out] = std::move(terms[k]);
            ++out;
        }
        k = run;
    }
    terms.resize(out);
}

// A GF(2)-linear combination of basis elements, stored as the set of terms
// with coefficient 1 in ascending right-lex order.
template <class Term>
class BasicF2Sum {
public:
    explicit BasicF2Sum(Basis basis = Basis::Dual) : basis_(basis) {}

    // Terms are treated as a multiset and reduced mod 2.
    BasicF2Sum(Basis basis, std::vector<Term> terms) : basis_(basis), terms_(std::move(terms)) {
        collapse_mod2(terms_);
    }

    static BasicF2Sum monomial(Basis basis, Term t) {
        BasicF2Sum s(basis);
        s.terms_.push_back(std::move(t));
        return s;
    }

    Basis basis() const { return basis_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool coefficient(const Term& t) const { return std::binary_search(terms_.begin(), terms_.end(), t); }

    // Lowest term in right-lex order. Precondition: nonzero.
    const Term& lowest() const { return terms_.front(); }

    BasicF2Sum& operator+=(const BasicF2Sum& rhs) {
        require_same_basis(rhs);
        std::vector<Term> merged;
        merged.reserve(terms_.size() + rhs.terms_.size());
        std::set_symmetric_difference(terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
                                      std::back_inserter(merged));
        terms_ = std::move(merged);
        return *this;
    }

    friend BasicF2Sum operator+(BasicF2Sum lhs, const BasicF2Sum& rhs) {
        lhs += rhs;
        return lhs;
    }

    // Same terms, different basis label.
    BasicF2Sum relabel(Basis basis) const {
        BasicF2Sum s(basis);
        s.terms_ = terms_;
        return s;
    }

    void require_basis(Basis b) const {
        if (basis_ != b)
            throw BasisMismatch(b, basis_);
    }

    friend bool operator==(const BasicF2Sum&, const BasicF2Sum&) = default;

private:
    void require_same_basis(const BasicF2Sum& rhs) const {
        if (basis_ != rhs.basis_)
            throw BasisMismatch(basis_, rhs.basis_);
    }

    Basis basis_;
    std::vector<Term> terms_;
};

using F2Sum = BasicF2Sum<Composition>;
using MilnorSum = BasicF2Sum<ExponentVector>;

F2Sum add(const F2Sum& x, const F2Sum& y);

// Canonical text: terms in ascending right-lex order joined by " + ", each
// as basis prefix and bracketed list, e.g. "S_[6] + S_[2,4]"; zero is "0".
std::string to_string(const F2Sum& x);
std::string to_string(const MilnorSum& x);

bool coefficient(const F2Sum& x, const Composition& i);

// <x, y> for x in a primal basis (S^ or Sq^) and y in its dual (S_ or Sq_).
bool pairing(const F2Sum& primal, const F2Sum& dual);

using TensorTerm = std::pair<Composition, Composition>;

// Sum of x' (x) x'' terms with set semantics over pairs.
class TensorSum {
public:
    explicit TensorSum(Basis basis = Basis::Dual) : basis_(basis) {}
    TensorSum(Basis basis, std::vector<TensorTerm> terms);

    Basis basis() const { return basis_; }
    const std::vector<TensorTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool coefficient(const TensorTerm& t) const;

    TensorSum& operator+=(const TensorSum& rhs);
    friend bool operator==(const TensorSum&, const TensorSum&) = default;

private:
    Basis basis_;
    std::vector<TensorTerm> terms_;
};

bool pairing(const TensorSum& primal, const TensorSum& dual);

// Dense bit vector over GF(2).
class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
    void set(std::size_t i, bool v = true) {
        const auto bit = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    bool is_zero() const;
    std::size_t popcount() const;
    GF2Vector& operator^=(const GF2Vector& rhs);
    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense bit-packed matrix over GF(2), row-major.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);

    static GF2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r * stride_ + c / 64] >> (c % 64) & 1; }
    void set(std::size_t r, std::size_t c, bool v = true);
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

    GF2Vector multiply(const GF2Vector& v) const;
    GF2Matrix transpose() const;
    GF2Matrix operator+(const GF2Matrix& rhs) const;
    std::size_t rank() const;

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * stride_; }
    const std::uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * stride_; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;

    friend std::vector<GF2Vector> kernel_basis(const GF2Matrix& m);
};

// Null space basis by Gauss-Jordan elimination on a private copy.
std::vector<GF2Vector> kernel_basis(const GF2Matrix& m);

// Whether v lies in the span of the given vectors.
bool in_span(std::span<const GF2Vector> basis, const GF2Vector& v);

// Bijection between the compositions of one degree and 0..2^(n-1)-1.
class DegreeIndex {
public:
    explicit DegreeIndex(unsigned degree, const Limits& limits = {});

    unsigned degree() const { return degree_; }
    std::size_t size() const { return basis_.size(); }
    const Composition& at(std::size_t k) const { return basis_[k]; }
    const std::vector<Composition>& basis() const { return basis_; }
    std::size_t index_of(const Composition& c) const;

    GF2Vector to_vector(const F2Sum& x) const;
    F2Sum to_sum(const GF2Vector& v, Basis basis) const;

private:
    unsigned degree_;
    std::vector<Composition> basis_;
    std::unordered_map<Composition, std::size_t> index_;
};

// Column k holds the coordinates of f(basis element k).
GF2Matrix matrix_of(const DegreeIndex& index, Basis basis, const std::function<F2Sum(const Composition&)>& f);

} // namespace lhopf
