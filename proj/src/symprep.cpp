#include "hsz/symprep.hpp"

#include <sstream>

namespace hsz {

namespace {

void check_genus(int genus) {
    if (genus < 1) throw InvalidInput("genus must be >= 1, got " + std::to_string(genus));
}

void check_rank(const LatticeVector& a, const LatticeVector& b) {
    if (a.rank() != b.rank()) {
        throw InvalidInput("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
    }
}

// Row vector a^T J, so that theta(a, x) = (a^T J) . x.
std::vector<Integer> pairing_row(const LatticeVector& a) {
    const int g = a.genus();
    std::vector<Integer> row(static_cast<std::size_t>(2 * g));
    for (int k = 0; k < g; ++k) {
        row[static_cast<std::size_t>(k)] = -a[g + k];
        row[static_cast<std::size_t>(g + k)] = a[k];
    }
    return row;
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(int genus) : coords_(static_cast<std::size_t>(2 * genus)) {
    check_genus(genus);
}

LatticeVector::LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {
    if (coords_.empty() || coords_.size() % 2 != 0) {
        throw InvalidInput("lattice vector needs a positive even number of coordinates");
    }
}

LatticeVector LatticeVector::e(int genus, int k) {
    LatticeVector v(genus);
    if (k < 1 || k > genus) throw InvalidInput("basis index out of range");
    v[k - 1] = 1;
    return v;
}

LatticeVector LatticeVector::f(int genus, int k) {
    LatticeVector v(genus);
    if (k < 1 || k > genus) throw InvalidInput("basis index out of range");
    v[genus + k - 1] = 1;
    return v;
}

bool LatticeVector::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

bool LatticeVector::is_primitive() const {
    Integer g = 0;
    for (const auto& c : coords_) g = gcd(g, c);
    return g == 1;
}

LatticeVector LatticeVector::operator+(const LatticeVector& rhs) const {
    check_rank(*this, rhs);
    LatticeVector out = *this;
    for (int i = 0; i < rank(); ++i) out[i] += rhs[i];
    return out;
}

LatticeVector LatticeVector::operator-(const LatticeVector& rhs) const {
    check_rank(*this, rhs);
    LatticeVector out = *this;
    for (int i = 0; i < rank(); ++i) out[i] -= rhs[i];
    return out;
}

LatticeVector LatticeVector::operator-() const {
    LatticeVector out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

LatticeVector LatticeVector::operator*(const Integer& s) const {
    LatticeVector out = *this;
    for (auto& c : out.coords_) c *= s;
    return out;
}

std::string LatticeVector::to_string() const {
    std::string out;
    const int g = genus();
    for (int i = 0; i < rank(); ++i) {
        const Integer& c = coords_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const std::string name = (i < g ? "e" : "f") + std::to_string(i % g + 1);
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        const Integer mag = abs(c);
        if (mag != 1) out += mag.get_str();
        out += name;
    }
    return out.empty() ? "0" : out;
}

Integer pairing(const LatticeVector& a, const LatticeVector& b) {
    check_rank(a, b);
    const int g = a.genus();
    Integer out = 0;
    for (int k = 0; k < g; ++k) out += a[k] * b[g + k] - a[g + k] * b[k];
    return out;
}

// ---------------------------------------------------------------------------
// SympMatrix

SympMatrix::SympMatrix(int genus) : genus_(genus) {
    check_genus(genus);
    a_.resize(static_cast<std::size_t>(dim() * dim()));
}

SympMatrix::SympMatrix(int genus, std::vector<Integer> row_major) : genus_(genus), a_(std::move(row_major)) {
    check_genus(genus);
    if (a_.size() != static_cast<std::size_t>(dim() * dim())) {
        throw InvalidInput("matrix entry count does not match genus");
    }
}

SympMatrix SympMatrix::identity(int genus) {
    SympMatrix m(genus);
    for (int i = 0; i < m.dim(); ++i) m(i, i) = 1;
    return m;
}

SympMatrix SympMatrix::standard_form(int genus) {
    SympMatrix j(genus);
    for (int k = 0; k < genus; ++k) {
        j(k, genus + k) = 1;
        j(genus + k, k) = -1;
    }
    return j;
}

SympMatrix SympMatrix::operator*(const SympMatrix& rhs) const {
    if (rhs.genus_ != genus_) throw InvalidInput("genus mismatch in matrix product");
    SympMatrix out(genus_);
    const int n = dim();
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const Integer& x = (*this)(r, k);
            if (x == 0) continue;
            for (int c = 0; c < n; ++c) out(r, c) += x * rhs(k, c);
        }
    }
    return out;
}

LatticeVector SympMatrix::operator*(const LatticeVector& v) const {
    if (v.rank() != dim()) throw InvalidInput("rank mismatch in matrix-vector product");
    LatticeVector out(genus_);
    for (int r = 0; r < dim(); ++r) {
        for (int c = 0; c < dim(); ++c) out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

SympMatrix SympMatrix::operator-() const {
    SympMatrix out = *this;
    for (auto& x : out.a_) x = -x;
    return out;
}

SympMatrix SympMatrix::transpose() const {
    SympMatrix out(genus_);
    for (int r = 0; r < dim(); ++r) {
        for (int c = 0; c < dim(); ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

SympMatrix SympMatrix::symplectic_inverse() const {
    const SympMatrix j = standard_form(genus_);
    return -(j * transpose() * j);  // J^{-1} = -J
}

bool SympMatrix::is_identity() const { return *this == identity(genus_); }

bool SympMatrix::is_symplectic() const {
    const SympMatrix j = standard_form(genus_);
    return transpose() * j * *this == j;
}

void SympMatrix::apply_transvection(const LatticeVector& a, const Integer& s) {
    if (a.rank() != dim()) throw InvalidInput("rank mismatch in transvection");
    if (s == 0) return;
    const int n = dim();
    const std::vector<Integer> row = pairing_row(a);
    std::vector<Integer> ma(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (a[c] != 0) ma[static_cast<std::size_t>(r)] += (*this)(r, c) * a[c];
        }
        ma[static_cast<std::size_t>(r)] *= s;
    }
    for (int r = 0; r < n; ++r) {
        const Integer& x = ma[static_cast<std::size_t>(r)];
        if (x == 0) continue;
        for (int c = 0; c < n; ++c) {
            const Integer& y = row[static_cast<std::size_t>(c)];
            if (y != 0) (*this)(r, c) += x * y;
        }
    }
}

std::vector<double> SympMatrix::to_doubles() const {
    std::vector<double> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(x.get_d());
    return out;
}

std::string SympMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < dim(); ++r) {
        os << (r ? ",[" : "[");
        for (int c = 0; c < dim(); ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Representation

ChainBasis chain_classes(int genus) {
    check_genus(genus);
    ChainBasis basis{genus, {}};
    basis.classes.push_back(LatticeVector::e(genus, 1));
    for (int k = 1; k <= genus; ++k) {
        basis.classes.push_back(LatticeVector::f(genus, k));
        if (k < genus) basis.classes.push_back(LatticeVector::e(genus, k) + LatticeVector::e(genus, k + 1));
    }
    basis.classes.push_back(LatticeVector::e(genus, genus));
    return basis;
}

SympMatrix transvection(const LatticeVector& a, const Integer& s) {
    SympMatrix m = SympMatrix::identity(a.genus());
    m.apply_transvection(a, s);
    return m;
}

SympMatrix sigma(const BraidWord& w, int genus) {
    check_genus(genus);
    if (w.strands() != 2 * genus + 2) {
        throw InvalidInput("word on " + std::to_string(w.strands()) + " strands does not match genus " +
                           std::to_string(genus) + " (expected " + std::to_string(2 * genus + 2) + ")");
    }
    const ChainBasis chain = chain_classes(genus);
    SympMatrix m = SympMatrix::identity(genus);
    for (const auto& l : w.letters()) m.apply_transvection(chain[l.index], l.sign);
    return m;
}

LatticeVector conjugated_class(const BraidWord& w, int index, int genus) {
    const SympMatrix m = sigma(w, genus);
    if (index < 1 || index > 2 * genus + 1) {
        throw InvalidInput("generator index " + std::to_string(index) + " out of range 1.." +
                           std::to_string(2 * genus + 1));
    }
    return m * chain_classes(genus)[index];
}

}  // namespace hsz
