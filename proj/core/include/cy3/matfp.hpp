#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cy3 {

/// Dense row-major matrix of residues mod m, m <= 251.
///
/// The elimination routines (rref, rank, kernel) require a prime modulus and
/// are fully deterministic: the pivot is always the first nonzero entry in
/// row-major scan order, there is no pivoting heuristic and no randomness, so
/// two runs produce bit-identical output.  Ring operations (add, mul, kron)
/// work for any modulus; lift-obstruction arithmetic uses them mod p^2.
class MatFp {
public:
    MatFp() : rows_(0), cols_(0), mod_(2) {}
    MatFp(int rows, int cols, int modulus);
    static MatFp identity(int n, int modulus);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int modulus() const { return mod_; }

    uint8_t at(int i, int j) const { return a_[(size_t)i * cols_ + j]; }
    void set(int i, int j, int v);
    uint8_t* row(int i) { return a_.data() + (size_t)i * cols_; }
    const uint8_t* row(int i) const { return a_.data() + (size_t)i * cols_; }

    MatFp operator+(const MatFp& o) const;
    MatFp operator-(const MatFp& o) const;
    MatFp operator*(const MatFp& o) const;
    MatFp scaled(int c) const;
    MatFp transposed() const;
    bool operator==(const MatFp& o) const;
    bool operator!=(const MatFp& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Stack rows of a on top of rows of b (same cols and modulus).
    static MatFp vstack(const MatFp& a, const MatFp& b);
    /// Place a left of b (same rows and modulus).
    static MatFp hstack(const MatFp& a, const MatFp& b);

private:
    int rows_, cols_, mod_;
    std::vector<uint8_t> a_;
};

struct RrefResult {
    MatFp r;
    int rank;
    std::vector<int> pivots;
};

/// Reduced row echelon form; prime modulus required.
RrefResult rref(const MatFp& m);
int rank_of(const MatFp& m);

/// Rows spanning {x : Mx = 0}.  One row per free column, in column order,
/// normalized so the free-column block is an identity.
MatFp kernel_basis(const MatFp& m);

/// RREF with zero rows dropped: the canonical representative of a row space.
/// Two row sets span the same subspace iff their canonical forms are equal.
MatFp row_space_canonical(const MatFp& m);

/// Is v in the row space of basis?
bool in_row_space(const MatFp& basis, const MatFp& v);

MatFp kron(const MatFp& a, const MatFp& b);

/// Text format: first line "rows cols modulus", then one line per row of
/// space-separated residues.
void write_matrix(std::ostream& os, const MatFp& m);
MatFp read_matrix(std::istream& is);

}  // namespace cy3
