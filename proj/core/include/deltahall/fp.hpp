#pragma once

#include <compare>
#include <functional>
#include <vector>

namespace deltahall {

int fp_inv(int p, int a);

/// Dense matrix over the prime field F_p, entries stored reduced to [0, p).
/// Zero-row / zero-column shapes are legal and arise constantly (maps in and
/// out of the zero object).
class FpMatrix {
public:
    FpMatrix() : p_(2), rows_(0), cols_(0) {}
    FpMatrix(int p, int rows, int cols)
        : p_(p), rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * cols, 0) {}
    static FpMatrix identity(int p, int n);

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) {
        e_[static_cast<size_t>(r) * cols_ + c] = ((v % p_) + p_) % p_;
    }
    const std::vector<int>& entries() const { return e_; }

    FpMatrix mul(const FpMatrix& o) const;
    bool is_zero() const;
    int rank() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
    FpMatrix inverse() const;  // throws std::logic_error when singular

    // Basis of the right kernel {x : Mx = 0}, one vector per row of the
    // result ((nullity) x cols).
    std::vector<std::vector<int>> kernel_basis() const;

    // Coordinates c with c * basis = x for a full-row-rank basis (k x n) and
    // row vector x (length n); empty result when x is outside the row space.
    // 0-dimensional solution (k = 0, x = 0) returns a present empty vector.
    static bool row_space_coords(const FpMatrix& basis,
                                 const std::vector<int>& x,
                                 std::vector<int>* coords);

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
    friend auto operator<=>(const FpMatrix& x, const FpMatrix& y) {
        if (auto c = x.rows_ <=> y.rows_; c != 0) return c;
        if (auto c = x.cols_ <=> y.cols_; c != 0) return c;
        return x.e_ <=> y.e_;
    }

private:
    int p_, rows_, cols_;
    std::vector<int> e_;
};

// Gaussian binomial: number of k-dimensional subspaces of F_p^n.
long long subspace_count(int p, int n, int k);

// Visit every k-dimensional subspace of F_p^n exactly once, presented as its
// reduced-row-echelon basis (k x n). Deterministic order.
void for_each_subspace(int p, int n, int k,
                       const std::function<void(const FpMatrix&)>& visit);

}  // namespace deltahall
