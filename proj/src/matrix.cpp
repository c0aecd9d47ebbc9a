#include "multifan/matrix.hpp"

#include "multifan/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace multifan {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<ZVec>& cols) {
    if (cols.empty()) return IntMatrix(0, 0);
    IntMatrix m(int(cols[0].size()), int(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (cols[j].size() != size_t(m.rows()))
            throw Error("from_columns: ragged input");
        for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<ZVec>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[i].size() != size_t(m.cols()))
            throw Error("from_rows: ragged input");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ZVec IntMatrix::column(int j) const {
    ZVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

ZVec IntMatrix::row(int i) const {
    ZVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

ZVec IntMatrix::apply(const ZVec& x) const {
    if (int(x.size()) != cols_) throw Error("matrix apply shape mismatch");
    ZVec y(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

IntMatrix IntMatrix::column_slice(int j0, int j1) const {
    IntMatrix r(rows_, j1 - j0);
    for (int i = 0; i < rows_; ++i)
        for (int j = j0; j < j1; ++j) r.at(i, j - j0) = at(i, j);
    return r;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j) {
    for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < cols_; ++k) at(dst, k) += q * at(src, k);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < rows_; ++k) at(k, dst) += q * at(k, src);
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> f;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i)
        if (D.at(i, i) != 0) f.push_back(D.at(i, i));
    return f;
}

int SmithDecomposition::rank() const {
    return int(invariant_factors().size());
}

namespace {

// Transform bookkeeping: applying a row operation R to A (A <- R A) turns
// U into R U and uinv into uinv R^{-1}; column ops act on V and vinv
// symmetrically.  Each helper below performs one elementary operation on
// the working matrix and keeps all four transforms in sync.
struct SnfWork {
    IntMatrix A, U, V, uinv, vinv;

    void row_swap(int i, int j) {
        A.swap_rows(i, j);
        U.swap_rows(i, j);
        uinv.swap_cols(i, j);
    }
    void col_swap(int i, int j) {
        A.swap_cols(i, j);
        V.swap_cols(i, j);
        vinv.swap_rows(i, j);
    }
    void row_axpy(int dst, int src, const Int& q) { // row dst += q row src
        A.add_row_multiple(dst, src, q);
        U.add_row_multiple(dst, src, q);
        uinv.add_col_multiple(src, dst, -q);
    }
    void col_axpy(int dst, int src, const Int& q) { // col dst += q col src
        A.add_col_multiple(dst, src, q);
        V.add_col_multiple(dst, src, q);
        vinv.add_row_multiple(src, dst, -q);
    }
    void row_negate(int i) {
        A.negate_row(i);
        U.negate_row(i);
        uinv.negate_col(i);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
    const int m = M.rows(), n = M.cols();
    SnfWork w{M, IntMatrix::identity(m), IntMatrix::identity(n),
              IntMatrix::identity(m), IntMatrix::identity(n)};

    int t = 0;
    while (t < m && t < n) {
        // locate a pivot of minimal absolute value in the trailing block
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (w.A.at(i, j) == 0) continue;
                Int a = abs(w.A.at(i, j));
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing block is zero
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (w.A.at(i, t) == 0) continue;
                Int q = w.A.at(i, t) / w.A.at(t, t); // truncated: |r| < |pivot|
                w.row_axpy(i, t, -q);
                if (w.A.at(i, t) != 0) {
                    // remainder is smaller than the pivot: promote it
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (w.A.at(t, j) == 0) continue;
                Int q = w.A.at(t, j) / w.A.at(t, t);
                w.col_axpy(j, t, -q);
                if (w.A.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // pivot must divide the whole trailing block for the
            // invariant-factor chain; if not, fold the offending row in
            // and keep reducing
            bool divides = true;
            for (int i = t + 1; i < m && divides; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (w.A.at(i, j) % w.A.at(t, t) != 0) {
                        w.row_axpy(t, i, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.A.at(t, t) < 0) w.row_negate(t);
        ++t;
    }

    return SmithDecomposition{w.U, w.A, w.V, w.uinv, w.vinv};
}

Int det(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw Error("det of non-square matrix");
    const int n = M.rows();
    if (n == 0) return 1;
    IntMatrix a = M;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev; // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

int rank_of(const IntMatrix& M) {
    return smith_normal_form(M).rank();
}

std::vector<QVec> dual_basis(const std::vector<ZVec>& vectors) {
    const int n = int(vectors.size());
    if (n == 0) return {};
    if (vectors[0].size() != size_t(n))
        throw Error("dual_basis needs n vectors of length n");
    // Gauss-Jordan on [B | I] where B has the v_j as columns; the rows of
    // B^{-1} are the duals.
    std::vector<QVec> a(n, QVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(vectors[j][i]);
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) throw SingularInput("dual_basis: vectors are dependent");
        std::swap(a[c], a[p]);
        Rat inv = 1 / a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<QVec> duals(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) duals[i][j] = a[i][n + j];
    return duals;
}

std::optional<QVec> solve_exact(const IntMatrix& A, const QVec& b) {
    const int m = A.rows(), n = A.cols();
    if (int(b.size()) != m) throw Error("solve_exact shape mismatch");
    std::vector<QVec> a(m, QVec(n + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(A.at(i, j));
        a[i][n] = b[i];
    }
    std::vector<int> pivot_row(n, -1);
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rat inv = 1 / a[r][c];
        for (int j = c; j <= n; ++j) a[r][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (int c = 0; c < n; ++c)
        if (pivot_row[c] < 0) throw SingularInput("solve_exact: dependent columns");
    for (int i = r; i < m; ++i)
        if (a[i][n] != 0) return std::nullopt;
    QVec x(n);
    for (int c = 0; c < n; ++c) x[c] = a[pivot_row[c]][n];
    return x;
}

IntMatrix integer_kernel(const IntMatrix& M) {
    SmithDecomposition s = smith_normal_form(M);
    int r = s.rank();
    return s.V.column_slice(r, M.cols());
}

std::optional<ZVec> solve_integer(const IntMatrix& A, const ZVec& b) {
    const int m = A.rows(), n = A.cols();
    if (int(b.size()) != m) throw Error("solve_integer shape mismatch");
    SmithDecomposition s = smith_normal_form(A);
    ZVec c = s.U.apply(b);
    ZVec y(n, Int(0));
    int k = std::min(m, n);
    for (int i = 0; i < k; ++i) {
        const Int& d = s.D.at(i, i);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    for (int i = k; i < m; ++i)
        if (c[i] != 0) return std::nullopt;
    return s.V.apply(y);
}

} // namespace multifan
