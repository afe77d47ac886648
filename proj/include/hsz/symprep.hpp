#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hsz/artin.hpp"

namespace hsz {

using Integer = mpz_class;

/// Vector in H_1(C_g, Z) written in the symplectic basis e_1..e_g, f_1..f_g.
class LatticeVector {
public:
    explicit LatticeVector(int genus);
    explicit LatticeVector(std::vector<Integer> coords);

    static LatticeVector e(int genus, int k);
    static LatticeVector f(int genus, int k);

    int rank() const noexcept { return static_cast<int>(coords_.size()); }
    int genus() const noexcept { return rank() / 2; }
    const Integer& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    Integer& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    /// gcd of the coordinates equals 1.
    bool is_primitive() const;

    LatticeVector operator+(const LatticeVector& rhs) const;
    LatticeVector operator-(const LatticeVector& rhs) const;
    LatticeVector operator-() const;
    LatticeVector operator*(const Integer& s) const;

    /// e.g. "e1+e2-3f1"; "0" for the zero vector.
    std::string to_string() const;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

private:
    std::vector<Integer> coords_;
};

/// theta(a, b) = a^T J b with theta(e_k, f_k) = 1.
Integer pairing(const LatticeVector& a, const LatticeVector& b);

/// Square integer matrix acting on column vectors from the left. Symplectic
/// when built by this module's operations; `is_symplectic` checks it exactly.
class SympMatrix {
public:
    /// Zero matrix of size 2g.
    explicit SympMatrix(int genus);
    SympMatrix(int genus, std::vector<Integer> row_major);

    static SympMatrix identity(int genus);
    /// Gram matrix J of the pairing.
    static SympMatrix standard_form(int genus);

    int genus() const noexcept { return genus_; }
    int dim() const noexcept { return 2 * genus_; }
    const Integer& operator()(int r, int c) const { return a_[index(r, c)]; }
    Integer& operator()(int r, int c) { return a_[index(r, c)]; }

    SympMatrix operator*(const SympMatrix& rhs) const;
    LatticeVector operator*(const LatticeVector& v) const;
    SympMatrix operator-() const;
    SympMatrix transpose() const;
    /// J^{-1} M^T J, the inverse for symplectic M.
    SympMatrix symplectic_inverse() const;

    bool is_identity() const;
    /// M^T J M == J exactly.
    bool is_symplectic() const;

    /// In-place right multiplication by the transvection T_a(s):
    /// M <- M + s (M a)(a^T J).
    void apply_transvection(const LatticeVector& a, const Integer& s);

    std::vector<double> to_doubles() const;  // row-major
    /// "[[1,1],[0,1]]"
    std::string to_string() const;

    friend bool operator==(const SympMatrix&, const SympMatrix&) = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(c);
    }

    int genus_;
    std::vector<Integer> a_;
};

/// Homology classes v_1..v_{2g+1} of the standard hyperelliptic chain.
struct ChainBasis {
    int genus = 1;
    std::vector<LatticeVector> classes;

    const LatticeVector& operator[](int i) const { return classes.at(static_cast<std::size_t>(i - 1)); }
    int size() const noexcept { return static_cast<int>(classes.size()); }
};

/// v_1 = e_1, v_{2k} = f_k, v_{2k+1} = e_k + e_{k+1}, v_{2g+1} = e_g.
ChainBasis chain_classes(int genus);

/// x -> x + s theta(a, x) a.
SympMatrix transvection(const LatticeVector& a, const Integer& s);

/// Image of a braid word on 2g+2 strands: product of T_{v_i}(+-1) in letter
/// order, leftmost letter leftmost factor.
SympMatrix sigma(const BraidWord& w, int genus);

/// Class of the vanishing cycle of w t_i w^{-1}, i.e. sigma(w) v_i.
LatticeVector conjugated_class(const BraidWord& w, int index, int genus);

}  // namespace hsz
