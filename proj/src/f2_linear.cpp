#include "lhopf/f2_linear.hpp"

#include <bit>
#include <string>

namespace lhopf {

std::string_view basis_name(Basis b) {
    switch (b) {
    case Basis::Free: return "free";
    case Basis::Dual: return "dual";
    case Basis::Steenrod: return "steenrod";
    case Basis::DualSteenrod: return "dual_steenrod";
    case Basis::Milnor: return "milnor";
    }
    return "?";
}

std::string_view basis_prefix(Basis b) {
    switch (b) {
    case Basis::Free: return "S^";
    case Basis::Dual: return "S_";
    case Basis::Steenrod: return "Sq^";
    case Basis::DualSteenrod: return "Sq_";
    case Basis::Milnor: return "xi_";
    }
    return "?";
}

BasisMismatch::BasisMismatch(Basis expected, Basis got)
    : Error("basis mismatch: expected " + std::string(basis_name(expected)) + ", got " +
            std::string(basis_name(got))) {}

F2Sum add(const F2Sum& x, const F2Sum& y) { return x + y; }

namespace {

template <class Term>
std::string render(const BasicF2Sum<Term>& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& t : x) {
        if (!out.empty())
            out += " + ";
        out += basis_prefix(x.basis());
        out += to_string(t);
    }
    return out;
}

} // namespace

std::string to_string(const F2Sum& x) { return render(x); }
std::string to_string(const MilnorSum& x) { return render(x); }

bool coefficient(const F2Sum& x, const Composition& i) { return x.coefficient(i); }

namespace {

Basis dual_of(Basis b) {
    switch (b) {
    case Basis::Free: return Basis::Dual;
    case Basis::Steenrod: return Basis::DualSteenrod;
    default: throw Error("basis " + std::string(basis_name(b)) + " has no pairing partner on the right");
    }
}

template <class T>
bool intersection_parity(const std::vector<T>& a, const std::vector<T>& b) {
    bool parity = false;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            parity = !parity;
            ++i;
            ++j;
        }
    }
    return parity;
}

} // namespace

bool pairing(const F2Sum& primal, const F2Sum& dual) {
    dual.require_basis(dual_of(primal.basis()));
    return intersection_parity(primal.terms(), dual.terms());
}

TensorSum::TensorSum(Basis basis, std::vector<TensorTerm> terms) : basis_(basis), terms_(std::move(terms)) {
    collapse_mod2(terms_);
}

bool TensorSum::coefficient(const TensorTerm& t) const {
    return std::binary_search(terms_.begin(), terms_.end(), t);
}

TensorSum& TensorSum::operator+=(const TensorSum& rhs) {
    if (basis_ != rhs.basis_)
        throw BasisMismatch(basis_, rhs.basis_);
    std::vector<TensorTerm> merged;
    std::set_symmetric_difference(terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

bool pairing(const TensorSum& primal, const TensorSum& dual) {
    if (dual.basis() != dual_of(primal.basis()))
        throw BasisMismatch(dual_of(primal.basis()), dual.basis());
    return intersection_parity(primal.terms(), dual.terms());
}

bool GF2Vector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t GF2Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& rhs) {
    if (rhs.size_ != size_)
        throw Error("GF2Vector size mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= rhs.words_[k];
    return *this;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m.set(k, k);
    return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool v) {
    auto& w = data_[r * stride_ + c / 64];
    const auto bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
}

GF2Vector GF2Matrix::multiply(const GF2Vector& v) const {
    if (v.size() != cols_)
        throw Error("GF2Matrix::multiply dimension mismatch");
    GF2Vector out(rows_);
    const auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const auto* row = row_ptr(r);
        for (std::size_t k = 0; k < stride_; ++k)
            acc ^= row[k] & vw[k];
        if (std::popcount(acc) & 1)
            out.set(r);
    }
    return out;
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r);
    return t;
}

GF2Matrix GF2Matrix::operator+(const GF2Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("GF2Matrix::operator+ dimension mismatch");
    GF2Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] ^= rhs.data_[k];
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(std::vector<std::uint64_t>& data, std::size_t rows, std::size_t cols,
                              std::size_t stride) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const std::size_t word = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t p = r;
        while (p < rows && !(data[p * stride + word] & bit))
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            std::swap_ranges(data.begin() + static_cast<std::ptrdiff_t>(p * stride),
                             data.begin() + static_cast<std::ptrdiff_t>((p + 1) * stride),
                             data.begin() + static_cast<std::ptrdiff_t>(r * stride));
        for (std::size_t q = 0; q < rows; ++q) {
            if (q != r && (data[q * stride + word] & bit)) {
                for (std::size_t k = word; k < stride; ++k)
                    data[q * stride + k] ^= data[r * stride + k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t GF2Matrix::rank() const {
    auto copy = data_;
    return rref(copy, rows_, cols_, stride_).size();
}

std::vector<GF2Vector> kernel_basis(const GF2Matrix& m) {
    auto data = m.data_;
    const auto pivots = rref(data, m.rows_, m.cols_, m.stride_);
    std::vector<bool> is_pivot(m.cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<GF2Vector> basis;
    for (std::size_t free = 0; free < m.cols_; ++free) {
        if (is_pivot[free])
            continue;
        GF2Vector v(m.cols_);
        v.set(free);
        // pivot variable in row r equals the row's entry in the free column
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (data[r * m.stride_ + free / 64] >> (free % 64) & 1)
                v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(std::span<const GF2Vector> basis, const GF2Vector& v) {
    auto stack = [&](bool include_v) {
        GF2Matrix m(basis.size() + (include_v ? 1 : 0), v.size());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const auto& row = r < basis.size() ? basis[r] : v;
            for (std::size_t c = 0; c < v.size(); ++c)
                if (row.get(c))
                    m.set(r, c);
        }
        return m;
    };
    return stack(true).rank() == stack(false).rank();
}

DegreeIndex::DegreeIndex(unsigned degree, const Limits& limits)
    : degree_(degree), basis_(compositions_of_degree(degree, limits)) {
    index_.reserve(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k)
        index_.emplace(basis_[k], k);
}

std::size_t DegreeIndex::index_of(const Composition& c) const {
    auto it = index_.find(c);
    if (it == index_.end())
        throw Error("composition " + to_string(c) + " is not of degree " + std::to_string(degree_));
    return it->second;
}

GF2Vector DegreeIndex::to_vector(const F2Sum& x) const {
    GF2Vector v(basis_.size());
    for (const auto& t : x)
        v.set(index_of(t));
    return v;
}

F2Sum DegreeIndex::to_sum(const GF2Vector& v, Basis basis) const {
    std::vector<Composition> terms;
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (v.get(k))
            terms.push_back(basis_[k]);
    return F2Sum(basis, std::move(terms));
}

GF2Matrix matrix_of(const DegreeIndex& index, Basis basis, const std::function<F2Sum(const Composition&)>& f) {
    GF2Matrix m(index.size(), index.size());
    for (std::size_t c = 0; c < index.size(); ++c) {
        const auto image = f(index.at(c));
        image.require_basis(basis);
        for (const auto& t : image)
            m.set(index.index_of(t), c);
    }
    return m;
}

} // namespace lhopf
