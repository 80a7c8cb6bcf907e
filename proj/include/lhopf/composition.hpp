#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhopf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed the configured degree cap.
class DegreeCapError : public Error {
public:
    DegreeCapError(unsigned requested, unsigned cap);
    unsigned requested() const { return requested_; }
    unsigned cap() const { return cap_; }

private:
    unsigned requested_;
    unsigned cap_;
};

// Runtime limits shared by every enumeration routine. The number of
// compositions of n is 2^(n-1), so the cap is what keeps sweeps finite.
struct Limits {
    unsigned max_degree = 16;

    void check(unsigned degree) const;
};

// A finite sequence of strictly positive integers. Indexes both the free
// basis S^I and the dual basis S_I; the empty composition is the unit.
class Composition {
public:
    using value_type = std::uint32_t;

    Composition() = default;
    Composition(std::initializer_list<value_type> parts);
    explicit Composition(std::vector<value_type> parts);

    // Skips the positivity check; callers must guarantee every part is >= 1.
    static Composition unchecked(std::vector<value_type> parts);

    std::span<const value_type> parts() const { return parts_; }
    const std::vector<value_type>& vec() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    value_type operator[](std::size_t i) const { return parts_[i]; }
    value_type back() const { return parts_.back(); }

    unsigned degree() const;

    // Subsequence [first, first+count), clipped to the end.
    Composition slice(std::size_t first, std::size_t count = static_cast<std::size_t>(-1)) const;
    // Tail starting at index first (0-based); empty when first >= size().
    Composition tail(std::size_t first) const { return slice(first); }

    Composition concat(const Composition& rhs) const;

    friend bool operator==(const Composition&, const Composition&) = default;
    // Right lexicographic order: longer is greater, ties broken at the
    // rightmost differing entry.
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

private:
    std::vector<value_type> parts_;
};

std::strong_ordering compare_rlex(const Composition& a, const Composition& b);

std::size_t hash_parts(std::span<const std::uint32_t> parts);

// Milnor exponent vector L = (l_1, ..., l_n). Trailing zeros are stripped on
// construction, so equality is equality up to trailing zeros.
class ExponentVector {
public:
    using value_type = std::uint32_t;

    ExponentVector() = default;
    ExponentVector(std::initializer_list<value_type> entries);
    explicit ExponentVector(std::vector<value_type> entries);

    std::span<const value_type> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    value_type operator[](std::size_t i) const { return entries_[i]; }

    // sum of l_i * (2^i - 1)
    unsigned degree() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

private:
    std::vector<value_type> entries_;
};

// An ordered splitting of a composition into contiguous nonempty blocks.
struct BlockPartition {
    std::vector<Composition> blocks;

    std::size_t length() const { return blocks.size(); }
    Composition concatenated() const;

    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

bool is_admissible(const Composition& j);

// Excess vector. Throws Error on non-admissible input.
ExponentVector gamma(const Composition& j);
Composition gamma_inverse(const ExponentVector& l);

Composition reverse(const Composition& i);

// All 2^(len-1) compositions obtained by summing runs of adjacent entries,
// sorted in right-lex order. coarsenings(()) = {()}.
std::vector<Composition> coarsenings(const Composition& i);
bool is_coarsening_of(const Composition& coarse, const Composition& fine);

// All compositions that have i as a coarsening: 2^(degree - len) of them.
std::vector<Composition> refinements(const Composition& i);

std::vector<BlockPartition> block_partitions(const Composition& i);

// Reads i as a word of ones separated by '+' and ',' and swaps the two
// separators. Involutive; the empty composition maps to itself.
Composition dual_composition(const Composition& i);

std::vector<Composition> compositions_of_degree(unsigned n, const Limits& limits = {});
std::vector<Composition> admissibles_of_degree(unsigned n, const Limits& limits = {});
std::vector<ExponentVector> exponent_vectors_of_degree(unsigned n, const Limits& limits = {});

// (2^(n-1), ..., 2, 1)
Composition xi_sequence(unsigned n);

// binomial(a, b) mod 2 by Lucas' theorem.
constexpr bool binom_mod2(std::uint64_t a, std::uint64_t b) { return (b & ~a) == 0; }

std::string to_string(const Composition& i);
std::string to_string(const ExponentVector& l);

} // namespace lhopf

template <>
struct std::hash<lhopf::Composition> {
    std::size_t operator()(const lhopf::Composition& c) const noexcept { return lhopf::hash_parts(c.parts()); }
};

template <>
struct std::hash<lhopf::ExponentVector> {
    std::size_t operator()(const lhopf::ExponentVector& l) const noexcept { return lhopf::hash_parts(l.entries()); }
};
