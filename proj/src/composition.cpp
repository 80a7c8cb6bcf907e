#include "lhopf/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lhopf {

DegreeCapError::DegreeCapError(unsigned requested, unsigned cap)
    : Error("degree " + std::to_string(requested) + " exceeds the configured cap " + std::to_string(cap)),
      requested_(requested), cap_(cap) {}

void Limits::check(unsigned degree) const {
    if (degree > max_degree)
        throw DegreeCapError(degree, max_degree);
}

Composition::Composition(std::initializer_list<value_type> parts) : Composition(std::vector<value_type>(parts)) {}

Composition::Composition(std::vector<value_type> parts) : parts_(std::move(parts)) {
    for (auto p : parts_)
        if (p == 0)
            throw Error("composition entries must be positive");
}

Composition Composition::unchecked(std::vector<value_type> parts) {
    Composition c;
    c.parts_ = std::move(parts);
    return c;
}

unsigned Composition::degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Composition Composition::slice(std::size_t first, std::size_t count) const {
    if (first >= parts_.size())
        return {};
    auto last = count >= parts_.size() - first ? parts_.size() : first + count;
    return unchecked({parts_.begin() + static_cast<std::ptrdiff_t>(first),
                      parts_.begin() + static_cast<std::ptrdiff_t>(last)});
}

Composition Composition::concat(const Composition& rhs) const {
    std::vector<value_type> out;
    out.reserve(parts_.size() + rhs.parts_.size());
    out.insert(out.end(), parts_.begin(), parts_.end());
    out.insert(out.end(), rhs.parts_.begin(), rhs.parts_.end());
    return unchecked(std::move(out));
}

namespace {

template <class T>
std::strong_ordering rlex(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size())
        return a.size() <=> b.size();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k])
            return a[k] <=> b[k];
    }
    return std::strong_ordering::equal;
}

// Partial sums strictly inside (0, degree): the "comma positions" of the
// all-ones word. Bit p-1 is set when a comma follows the p-th one.
std::uint64_t cut_mask(const Composition& c) {
    std::uint64_t mask = 0;
    unsigned s = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        s += c[k];
        mask |= std::uint64_t{1} << (s - 1);
    }
    return mask;
}

Composition from_cut_mask(std::uint64_t mask, unsigned degree) {
    std::vector<Composition::value_type> parts;
    unsigned last = 0;
    for (unsigned p = 1; p < degree; ++p) {
        if (mask >> (p - 1) & 1) {
            parts.push_back(p - last);
            last = p;
        }
    }
    if (degree > 0)
        parts.push_back(degree - last);
    return Composition::unchecked(std::move(parts));
}

void check_mask_width(unsigned degree) {
    if (degree > 64)
        throw Error("compositions of degree above 64 are not supported by mask enumeration");
}

} // namespace

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return rlex(a.parts(), b.parts());
}

std::strong_ordering compare_rlex(const Composition& a, const Composition& b) { return a <=> b; }

std::size_t hash_parts(std::span<const std::uint32_t> parts) {
    std::uint64_t h = 0xcbf29ce484222325ull ^ parts.size();
    for (auto p : parts) {
        h ^= p;
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

ExponentVector::ExponentVector(std::initializer_list<value_type> entries)
    : ExponentVector(std::vector<value_type>(entries)) {}

ExponentVector::ExponentVector(std::vector<value_type> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0)
        entries_.pop_back();
}

unsigned ExponentVector::degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        d += entries_[i] * ((1u << (i + 1)) - 1);
    return d;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return rlex(a.entries(), b.entries());
}

Composition BlockPartition::concatenated() const {
    std::vector<Composition::value_type> out;
    for (const auto& b : blocks)
        out.insert(out.end(), b.vec().begin(), b.vec().end());
    return Composition::unchecked(std::move(out));
}

bool is_admissible(const Composition& j) {
    for (std::size_t k = 0; k + 1 < j.size(); ++k)
        if (j[k] < 2 * j[k + 1])
            return false;
    return true;
}

ExponentVector gamma(const Composition& j) {
    if (!is_admissible(j))
        throw Error("excess vector requested for non-admissible " + to_string(j));
    std::vector<ExponentVector::value_type> l(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        l[k] = k + 1 < j.size() ? j[k] - 2 * j[k + 1] : j[k];
    return ExponentVector(std::move(l));
}

Composition gamma_inverse(const ExponentVector& l) {
    std::vector<Composition::value_type> j(l.size());
    Composition::value_type acc = 0;
    for (std::size_t k = l.size(); k-- > 0;) {
        acc = l[k] + 2 * acc;
        j[k] = acc;
    }
    // l has no trailing zeros, so every entry is at least l.back() >= 1
    return Composition::unchecked(std::move(j));
}

Composition reverse(const Composition& i) {
    std::vector<Composition::value_type> out(i.vec().rbegin(), i.vec().rend());
    return Composition::unchecked(std::move(out));
}

std::vector<Composition> coarsenings(const Composition& i) {
    if (i.empty())
        return {Composition{}};
    const unsigned n = i.degree();
    check_mask_width(n);
    const std::uint64_t cuts = cut_mask(i);
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (i.size() - 1));
    // enumerate submasks of cuts
    for (std::uint64_t sub = cuts;; sub = (sub - 1) & cuts) {
        out.push_back(from_cut_mask(sub, n));
        if (sub == 0)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_coarsening_of(const Composition& coarse, const Composition& fine) {
    if (coarse.degree() != fine.degree())
        return false;
    if (coarse.empty())
        return true;
    const auto c = cut_mask(coarse);
    return (c & ~cut_mask(fine)) == 0;
}

std::vector<Composition> refinements(const Composition& i) {
    if (i.empty())
        return {Composition{}};
    const unsigned n = i.degree();
    check_mask_width(n);
    const std::uint64_t full = n > 1 ? (~std::uint64_t{0} >> (64 - (n - 1))) : 0;
    const std::uint64_t cuts = cut_mask(i);
    const std::uint64_t free_bits = full & ~cuts;
    std::vector<Composition> out;
    for (std::uint64_t sub = free_bits;; sub = (sub - 1) & free_bits) {
        out.push_back(from_cut_mask(cuts | sub, n));
        if (sub == 0)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BlockPartition> block_partitions(const Composition& i) {
    if (i.empty())
        throw Error("block partitions of the empty composition are undefined");
    const std::size_t gaps = i.size() - 1;
    std::vector<BlockPartition> out;
    out.reserve(std::size_t{1} << gaps);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
        BlockPartition p;
        std::size_t start = 0;
        for (std::size_t g = 0; g < gaps; ++g) {
            if (mask >> g & 1) {
                p.blocks.push_back(i.slice(start, g + 1 - start));
                start = g + 1;
            }
        }
        p.blocks.push_back(i.slice(start));
        out.push_back(std::move(p));
    }
    return out;
}

Composition dual_composition(const Composition& i) {
    if (i.empty())
        return {};
    const unsigned n = i.degree();
    check_mask_width(n);
    const std::uint64_t full = n > 1 ? (~std::uint64_t{0} >> (64 - (n - 1))) : 0;
    return from_cut_mask(full & ~cut_mask(i), n);
}

std::vector<Composition> compositions_of_degree(unsigned n, const Limits& limits) {
    limits.check(n);
    if (n == 0)
        return {Composition{}};
    check_mask_width(n);
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (n - 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask)
        out.push_back(from_cut_mask(mask, n));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Admissible sequences of degree n whose first entry is at most `bound`.
void admissible_rec(unsigned n, unsigned bound, std::vector<Composition::value_type>& prefix,
                    std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(Composition::unchecked(prefix));
        return;
    }
    for (unsigned first = std::min(n, bound); first >= 1; --first) {
        prefix.push_back(first);
        admissible_rec(n - first, first / 2, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> admissibles_of_degree(unsigned n, const Limits& limits) {
    limits.check(n);
    std::vector<Composition> out;
    std::vector<Composition::value_type> prefix;
    admissible_rec(n, n, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExponentVector> exponent_vectors_of_degree(unsigned n, const Limits& limits) {
    auto adm = admissibles_of_degree(n, limits);
    std::vector<ExponentVector> out;
    out.reserve(adm.size());
    for (const auto& j : adm)
        out.push_back(gamma(j));
    std::sort(out.begin(), out.end());
    return out;
}

Composition xi_sequence(unsigned n) {
    if (n == 0)
        throw Error("xi_0 is not a generator");
    if (n > 32)
        throw Error("xi_n requires n <= 32");
    std::vector<Composition::value_type> parts(n);
    for (unsigned k = 0; k < n; ++k)
        parts[k] = Composition::value_type{1} << (n - 1 - k);
    return Composition::unchecked(std::move(parts));
}

namespace {

template <class Seq>
std::string bracketed(const Seq& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k)
            os << ',';
        os << s[k];
    }
    os << ']';
    return os.str();
}

} // namespace

std::string to_string(const Composition& i) { return bracketed(i); }
std::string to_string(const ExponentVector& l) { return bracketed(l); }

} // namespace lhopf
