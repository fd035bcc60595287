#include "deltahall/quiver.hpp"

#include <numeric>
#include <string>

namespace deltahall {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
    if (n_ <= 0) throw config_error("quiver needs at least one vertex");
    for (const Arrow& a : arrows_) {
        if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
            throw config_error("arrow endpoint out of range");
        if (a.source == a.target)
            throw config_error("loop at vertex " + std::to_string(a.source) +
                               "; only loop-free quivers are supported");
    }
}

int Quiver::edge_multiplicity(int i, int j) const {
    int m = 0;
    for (const Arrow& a : arrows_)
        if ((a.source == i && a.target == j) ||
            (a.source == j && a.target == i))
            ++m;
    return m;
}

bool Quiver::has_oriented_cycle() const {
    // colors: 0 unvisited, 1 on stack, 2 done
    std::vector<int> color(n_, 0);
    std::vector<std::vector<int>> out(n_);
    for (const Arrow& a : arrows_) out[a.source].push_back(a.target);

    // iterative DFS
    for (int root = 0; root < n_; ++root) {
        if (color[root] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out[v].size()) {
                int w = out[v][next++];
                if (color[w] == 1) return true;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

std::vector<std::vector<long long>> Quiver::cartan_matrix() const {
    std::vector<std::vector<long long>> c(n_, std::vector<long long>(n_, 0));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j)
            c[i][j] = (i == j ? 2 : 0) - edge_multiplicity(i, j);
    }
    return c;
}

DimVector::DimVector(std::vector<int> entries) : e_(std::move(entries)) {
    for (int x : e_)
        if (x < 0) throw std::invalid_argument("negative dimension entry");
}

DimVector DimVector::unit(int n, int i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    return DimVector(std::move(e));
}

int DimVector::total() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

DimVector operator+(const DimVector& x, const DimVector& y) {
    std::vector<int> e(x.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = x.e_[i] + y.e_[i];
    return DimVector(std::move(e));
}

bool DimVector::dominates(const DimVector& y) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] < y.e_[i]) return false;
    return true;
}

K0Class K0Class::unit(int n, int i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    return K0Class(std::move(e));
}

K0Class K0Class::of(const DimVector& d) {
    return K0Class(std::vector<long long>(d.entries().begin(),
                                          d.entries().end()));
}

bool K0Class::is_zero() const {
    for (long long x : e_)
        if (x != 0) return false;
    return true;
}

K0Class operator+(const K0Class& x, const K0Class& y) {
    std::vector<long long> e(x.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = x.e_[i] + y.e_[i];
    return K0Class(std::move(e));
}

K0Class operator-(const K0Class& x, const K0Class& y) {
    std::vector<long long> e(x.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = x.e_[i] - y.e_[i];
    return K0Class(std::move(e));
}

K0Class K0Class::operator-() const {
    std::vector<long long> e(e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = -e_[i];
    return K0Class(std::move(e));
}

HalfK0Class HalfK0Class::of(const K0Class& a) {
    std::vector<long long> d(a.entries());
    for (long long& x : d) x *= 2;
    return HalfK0Class(std::move(d));
}

bool HalfK0Class::is_integral() const {
    for (long long x : d_)
        if (x % 2 != 0) return false;
    return true;
}

bool HalfK0Class::is_zero() const {
    for (long long x : d_)
        if (x != 0) return false;
    return true;
}

K0Class HalfK0Class::to_k0() const {
    if (!is_integral())
        throw std::logic_error("half-integral K0 label where a plain one is required");
    std::vector<long long> e(d_);
    for (long long& x : e) x /= 2;
    return K0Class(std::move(e));
}

HalfK0Class operator+(const HalfK0Class& x, const HalfK0Class& y) {
    std::vector<long long> d(x.d_.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = x.d_[i] + y.d_[i];
    return HalfK0Class(std::move(d));
}

HalfK0Class operator-(const HalfK0Class& x, const HalfK0Class& y) {
    std::vector<long long> d(x.d_.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = x.d_[i] - y.d_[i];
    return HalfK0Class(std::move(d));
}

long long euler_form(const Quiver& quiver, const K0Class& d, const K0Class& e) {
    if (d.size() != quiver.vertex_count() || e.size() != quiver.vertex_count())
        throw std::invalid_argument("euler_form: length mismatch");
    long long v = 0;
    for (int i = 0; i < d.size(); ++i) v += d[i] * e[i];
    for (const Arrow& a : quiver.arrows()) v -= d[a.source] * e[a.target];
    return v;
}

long long euler_form(const Quiver& quiver, const DimVector& d,
                     const DimVector& e) {
    return euler_form(quiver, K0Class::of(d), K0Class::of(e));
}

long long sym_form(const Quiver& quiver, const K0Class& d, const K0Class& e) {
    return euler_form(quiver, d, e) + euler_form(quiver, e, d);
}

long long sym_form(const Quiver& quiver, const DimVector& d,
                   const DimVector& e) {
    return sym_form(quiver, K0Class::of(d), K0Class::of(e));
}

K0Class half_shift(const DimVector& a, const DimVector& b,
                   const DimVector& m) {
    std::vector<long long> e(a.size());
    for (int i = 0; i < a.size(); ++i) {
        long long s = static_cast<long long>(a[i]) + b[i] - m[i];
        if (s % 2 != 0)
            throw std::logic_error(
                "half_shift: A+B-M has an odd entry; weighted Hall number "
                "should have vanished");
        e[i] = s / 2;
    }
    return K0Class(std::move(e));
}

}  // namespace deltahall
