#include "deltahall/fp.hpp"

#include <stdexcept>

namespace deltahall {

int fp_inv(int p, int a) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::logic_error("fp_inv of zero");
    // extended Euclid
    int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int quo = r / new_r;
        t -= quo * new_t;
        std::swap(t, new_t);
        r -= quo * new_r;
        std::swap(r, new_r);
    }
    return ((t % p) + p) % p;
}

FpMatrix FpMatrix::identity(int p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::mul(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("FpMatrix::mul shape mismatch");
    FpMatrix r(p_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                long long v = r.at(i, j) + static_cast<long long>(x) * o.at(k, j);
                r.e_[static_cast<size_t>(i) * o.cols_ + j] =
                    static_cast<int>(v % p_);
            }
        }
    return r;
}

bool FpMatrix::is_zero() const {
    for (int v : e_)
        if (v != 0) return false;
    return true;
}

namespace {

// In-place row reduction to reduced row echelon form; returns pivot columns.
std::vector<int> rref_inplace(int p, int rows, int cols, std::vector<int>& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(pr) * cols + j],
                          a[static_cast<size_t>(r) * cols + j]);
        int inv = fp_inv(p, a[static_cast<size_t>(r) * cols + c]);
        for (int j = 0; j < cols; ++j)
            a[static_cast<size_t>(r) * cols + j] =
                static_cast<int>(static_cast<long long>(
                                     a[static_cast<size_t>(r) * cols + j]) *
                                 inv % p);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            int f = a[static_cast<size_t>(i) * cols + c];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) {
                long long v = a[static_cast<size_t>(i) * cols + j] -
                              static_cast<long long>(f) *
                                  a[static_cast<size_t>(r) * cols + j] % p;
                a[static_cast<size_t>(i) * cols + j] =
                    static_cast<int>(((v % p) + p) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int FpMatrix::rank() const {
    std::vector<int> a(e_);
    return static_cast<int>(rref_inplace(p_, rows_, cols_, a).size());
}

FpMatrix FpMatrix::inverse() const {
    if (rows_ != cols_) throw std::logic_error("inverse of non-square matrix");
    int n = rows_;
    // augmented [A | I]
    std::vector<int> a(static_cast<size_t>(n) * 2 * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * 2 * n + j] = at(i, j);
        a[static_cast<size_t>(i) * 2 * n + n + i] = 1;
    }
    auto pivots = rref_inplace(p_, n, 2 * n, a);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots[n - 1] >= n))
        throw std::logic_error("inverse of singular matrix");
    FpMatrix r(p_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.set(i, j, a[static_cast<size_t>(i) * 2 * n + n + j]);
    return r;
}

std::vector<std::vector<int>> FpMatrix::kernel_basis() const {
    std::vector<int> a(e_);
    std::vector<int> pivots = rref_inplace(p_, rows_, cols_, a);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<int>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> v(cols_, 0);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            int val = a[r * cols_ + c];
            if (val != 0) v[pivots[r]] = p_ - val;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool FpMatrix::row_space_coords(const FpMatrix& basis,
                                const std::vector<int>& x,
                                std::vector<int>* coords) {
    int k = basis.rows(), n = basis.cols(), p = basis.p();
    // solve c * basis = x, i.e. basis^T c^T = x^T, via elimination on the
    // augmented (n x (k+1)) system
    std::vector<int> a(static_cast<size_t>(n) * (k + 1), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j)
            a[static_cast<size_t>(i) * (k + 1) + j] = basis.at(j, i);
        a[static_cast<size_t>(i) * (k + 1) + k] = ((x[i] % p) + p) % p;
    }
    auto pivots = rref_inplace(p, n, k + 1, a);
    // inconsistent iff the last column is a pivot
    for (int c : pivots)
        if (c == k) return false;
    if (coords) {
        coords->assign(k, 0);
        for (size_t r = 0; r < pivots.size(); ++r)
            (*coords)[pivots[r]] = a[r * (k + 1) + k];
    }
    return true;
}

long long subspace_count(int p, int n, int k) {
    if (k < 0 || k > n) return 0;
    // [n choose k]_p = prod (p^{n-i} - 1) / (p^{k-i} - 1)
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long long pn = 1, pk = 1;
        for (int t = 0; t < n - i; ++t) pn *= p;
        for (int t = 0; t < k - i; ++t) pk *= p;
        num *= pn - 1;
        den *= pk - 1;
    }
    return num / den;
}

namespace {

void emit_subspaces(int p, int n, int k, std::vector<int>& pivot_cols,
                    int next_col,
                    const std::function<void(const FpMatrix&)>& visit) {
    if (static_cast<int>(pivot_cols.size()) == k) {
        // free positions: row i, column c > pivot[i] with c not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (int c : pivot_cols) is_pivot[c] = true;
        for (int i = 0; i < k; ++i)
            for (int c = pivot_cols[i] + 1; c < n; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(i, c);

        FpMatrix m(p, k, n);
        for (int i = 0; i < k; ++i) m.set(i, pivot_cols[i], 1);

        std::vector<int> digits(free_pos.size(), 0);
        while (true) {
            for (size_t t = 0; t < free_pos.size(); ++t)
                m.set(free_pos[t].first, free_pos[t].second, digits[t]);
            visit(m);
            size_t t = 0;
            while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
            if (t == digits.size()) break;
        }
        return;
    }
    int need = k - static_cast<int>(pivot_cols.size());
    for (int c = next_col; c <= n - need; ++c) {
        pivot_cols.push_back(c);
        emit_subspaces(p, n, k, pivot_cols, c + 1, visit);
        pivot_cols.pop_back();
    }
}

}  // namespace

void for_each_subspace(int p, int n, int k,
                       const std::function<void(const FpMatrix&)>& visit) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        visit(FpMatrix(p, 0, n));
        return;
    }
    std::vector<int> pivot_cols;
    emit_subspaces(p, n, k, pivot_cols, 0, visit);
}

}  // namespace deltahall
