#pragma once

// Dense integer matrices over GMP integers, Smith normal form with full
// transform bookkeeping, and the handful of exact linear-algebra routines
// the lattice computations need.  Sizes here are tiny (rank <= 4-ish), so
// everything favors clarity over asymptotics.

#include "multifan/rational.hpp"

#include <optional>
#include <vector>

namespace multifan {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Int(0)) {}

    static IntMatrix identity(int n);
    static IntMatrix from_columns(const std::vector<ZVec>& cols);
    static IntMatrix from_rows(const std::vector<ZVec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    ZVec column(int j) const;
    ZVec row(int i) const;
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    ZVec apply(const ZVec& x) const; // M x
    bool operator==(const IntMatrix& o) const;

    // Columns [j0, j1) as a new matrix.
    IntMatrix column_slice(int j0, int j1) const;

    std::string str() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    void add_row_multiple(int dst, int src, const Int& q);   // row dst += q * row src
    void add_col_multiple(int dst, int src, const Int& q);   // col dst += q * col src

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

// U * M * V == D with U, V unimodular and D diagonal, diagonal entries
// nonnegative with d1 | d2 | ... (trailing zeros allowed).  uinv and vinv
// are the inverses of U and V, maintained during the reduction.
struct SmithDecomposition {
    IntMatrix U, D, V;
    IntMatrix uinv, vinv;
    std::vector<Int> invariant_factors() const; // the nonzero d_i, in order
    int rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& M);

// Determinant of a square matrix (fraction-free Bareiss elimination).
Int det(const IntMatrix& M);

int rank_of(const IntMatrix& M);

// Rows u_i with <u_i, v_j> = delta_ij for a basis {v_j} of Q^n given as n
// vectors of length n.  Throws SingularInput when the v_j are dependent.
std::vector<QVec> dual_basis(const std::vector<ZVec>& vectors);

// Unique rational solution of A x = b when the columns of A are
// independent; nullopt when the system is inconsistent.  Throws
// SingularInput when the columns are dependent.
std::optional<QVec> solve_exact(const IntMatrix& A, const QVec& b);

// Basis of { x in Z^n : M x = 0 } as matrix columns (may have 0 columns).
IntMatrix integer_kernel(const IntMatrix& M);

// Some integer solution of A x = b, or nullopt; deterministic (free
// coordinates are set to zero in Smith coordinates).
std::optional<ZVec> solve_integer(const IntMatrix& A, const ZVec& b);

} // namespace multifan
