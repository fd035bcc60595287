#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "deltahall/errors.hpp"

namespace deltahall {

struct Arrow {
    int source = 0;
    int target = 0;
};

/// A finite quiver without loops. Vertices are 0-based.
class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    // Number of edges between i and j in the underlying graph (either
    // orientation).
    int edge_multiplicity(int i, int j) const;

    bool has_oriented_cycle() const;

    // c_ij = 2*delta_ij - n_ij; symmetric with diagonal 2.
    std::vector<std::vector<long long>> cartan_matrix() const;

private:
    int n_;
    std::vector<Arrow> arrows_;
};

/// Dimension vector of a representation: one nonnegative entry per vertex.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> entries);
    static DimVector zero(int n) { return DimVector(std::vector<int>(n, 0)); }
    static DimVector unit(int n, int i);

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    int total() const;
    const std::vector<int>& entries() const { return e_; }

    friend DimVector operator+(const DimVector& x, const DimVector& y);
    friend bool operator==(const DimVector&, const DimVector&) = default;
    // Lexicographic; catalog ordering sorts by (total, lex) explicitly.
    friend auto operator<=>(const DimVector& x, const DimVector& y) {
        return x.e_ <=> y.e_;
    }

    bool dominates(const DimVector& y) const;  // componentwise >=

private:
    std::vector<int> e_;
};

/// Class in the Grothendieck group, identified with Z^{Q_0} on the basis of
/// simples.
class K0Class {
public:
    K0Class() = default;
    explicit K0Class(std::vector<long long> entries) : e_(std::move(entries)) {}
    static K0Class zero(int n) { return K0Class(std::vector<long long>(n, 0)); }
    static K0Class unit(int n, int i);
    static K0Class of(const DimVector& d);

    int size() const { return static_cast<int>(e_.size()); }
    long long operator[](int i) const { return e_[i]; }
    const std::vector<long long>& entries() const { return e_; }
    bool is_zero() const;

    friend K0Class operator+(const K0Class& x, const K0Class& y);
    friend K0Class operator-(const K0Class& x, const K0Class& y);
    K0Class operator-() const;
    friend bool operator==(const K0Class&, const K0Class&) = default;
    friend auto operator<=>(const K0Class& x, const K0Class& y) {
        return x.e_ <=> y.e_;
    }

private:
    std::vector<long long> e_;
};

/// Class in (1/2)K_0, stored as the doubled integer vector so that all
/// arithmetic stays integral. Integral (plain K_0) iff every doubled entry
/// is even.
class HalfK0Class {
public:
    HalfK0Class() = default;
    explicit HalfK0Class(std::vector<long long> doubled)
        : d_(std::move(doubled)) {}
    static HalfK0Class zero(int n) {
        return HalfK0Class(std::vector<long long>(n, 0));
    }
    static HalfK0Class of(const K0Class& a);  // doubles the entries
    static HalfK0Class half_of(const K0Class& a) {
        return HalfK0Class(a.entries());
    }

    int size() const { return static_cast<int>(d_.size()); }
    const std::vector<long long>& doubled() const { return d_; }
    bool is_integral() const;
    bool is_zero() const;
    K0Class to_k0() const;  // throws std::logic_error when not integral

    friend HalfK0Class operator+(const HalfK0Class& x, const HalfK0Class& y);
    friend HalfK0Class operator-(const HalfK0Class& x, const HalfK0Class& y);
    friend bool operator==(const HalfK0Class&, const HalfK0Class&) = default;
    friend auto operator<=>(const HalfK0Class& x, const HalfK0Class& y) {
        return x.d_ <=> y.d_;
    }

private:
    std::vector<long long> d_;
};

// Euler form <d,e> = sum_i d_i e_i - sum_{arrows s->t} d_s e_t. Agrees with
// dim Hom - dim Ext^1 on dimension vectors; the representation layer
// cross-checks that identity.
long long euler_form(const Quiver& quiver, const K0Class& d, const K0Class& e);
long long euler_form(const Quiver& quiver, const DimVector& d,
                     const DimVector& e);

// Symmetrized Euler form (d,e) = <d,e> + <e,d>; equals the Cartan-matrix
// contraction.
long long sym_form(const Quiver& quiver, const K0Class& d, const K0Class& e);
long long sym_form(const Quiver& quiver, const DimVector& d,
                   const DimVector& e);

// (A + B - M)/2 as an exact K_0 class. An odd entry means the caller fed a
// triple that cannot carry a nonzero weighted Hall number, which is a bug,
// not bad input.
K0Class half_shift(const DimVector& a, const DimVector& b, const DimVector& m);

}  // namespace deltahall
