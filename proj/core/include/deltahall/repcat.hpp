#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "deltahall/fp.hpp"
#include "deltahall/quiver.hpp"
#include "deltahall/rational.hpp"

namespace deltahall {

/// A representation of the quiver over F_q: one vector space per vertex
/// (recorded by its dimension) and one matrix per arrow, of shape
/// (target dim) x (source dim).
struct Representation {
    int p = 2;  // kept here too: arrowless quivers have no matrices to ask
    DimVector dim;
    std::vector<FpMatrix> maps;  // parallel to quiver.arrows()

    int total_dim() const { return dim.total(); }

    friend bool operator==(const Representation&,
                           const Representation&) = default;
};

struct EnumerationCaps {
    long long matrix_tuples = 50'000'000;  // per dimension vector
    long long subspace_tuples = 1'000'000;  // per Hall-number evaluation
    long long hom_points = 50'000'000;      // per iso/aut enumeration
};

// Intertwiner space Hom(r, s): dimension and a basis (each element one
// matrix per vertex, shape dim_s[i] x dim_r[i]).
int hom_dim(const Quiver& quiver, const Representation& r,
            const Representation& s);
std::vector<std::vector<FpMatrix>> hom_basis(const Quiver& quiver,
                                             const Representation& r,
                                             const Representation& s);

// Decided by enumerating the Hom space and looking for an invertible
// intertwiner; q^{hom_dim} must stay under caps.hom_points.
bool is_isomorphic(const Quiver& quiver, const Representation& r,
                   const Representation& s,
                   const EnumerationCaps& caps = {});

// |Aut(r)|: invertible points of End(r), counted by enumeration.
Integer aut_order(const Quiver& quiver, const Representation& r,
                  const EnumerationCaps& caps = {});

// True when every long enough path acts as zero; automatic for acyclic
// quivers, checked via nilpotency of the block path-action matrix otherwise.
bool is_nilpotent(const Quiver& quiver, const Representation& r);

/// An arrow-invariant tuple of subspaces of the ambient representation,
/// together with the induced subrepresentation and quotient.
struct Subrep {
    std::vector<FpMatrix> bases;  // per vertex, row-echelon rows
    Representation sub;
    Representation quotient;
};

// Visit every arrow-invariant subspace tuple of `ambient` with the given
// sub-dimension vector. Total subspace-tuple count (before the invariance
// filter) must stay under caps.subspace_tuples.
void for_each_subrep(const Quiver& quiver, const Representation& ambient,
                     const DimVector& sub_dim,
                     const std::function<void(const Subrep&)>& visit,
                     const EnumerationCaps& caps = {});

/// The deduplicated list of isomorphism classes with total dimension at most
/// D, in a deterministic order: by total dimension, then dimension vector
/// (lex), then representative matrix tuple (lex). Class 0 is the zero object.
class Catalog {
public:
    static Catalog enumerate(const Quiver& quiver, long q, int max_total_dim,
                             EnumerationCaps caps = {});

    const Quiver& quiver() const { return quiver_; }
    long q() const { return q_; }
    int max_total_dim() const { return max_total_dim_; }
    const EnumerationCaps& caps() const { return caps_; }

    int size() const { return static_cast<int>(classes_.size()); }
    const Representation& rep(int id) const { return classes_[id]; }
    const DimVector& dim(int id) const { return classes_[id].dim; }
    int total_dim(int id) const { return classes_[id].dim.total(); }

    // Ids of classes with this exact dimension vector, ascending; empty when
    // none (or the vector exceeds the bound).
    const std::vector<int>& classes_with_dim(const DimVector& d) const;

    // Id of the class isomorphic to r; throws truncation_error when r's
    // total dimension exceeds the bound.
    int classify(const Representation& r) const;

    std::vector<int> simple_ids() const;  // S_i for each vertex, in order

private:
    Catalog(Quiver quiver, long q, int max_total_dim, EnumerationCaps caps)
        : quiver_(std::move(quiver)), q_(q), max_total_dim_(max_total_dim),
          caps_(caps) {}

    Quiver quiver_;
    long q_;
    int max_total_dim_;
    EnumerationCaps caps_;
    std::vector<Representation> classes_;
    std::map<DimVector, std::vector<int>> by_dim_;
    static const std::vector<int> no_classes_;
};

/// Fully materialized numeric tables over a catalog: Hom/Ext dimensions,
/// automorphism orders and Hall numbers F^M_{AB} (the number of
/// subrepresentations of M isomorphic to B with quotient isomorphic to A).
/// Filled eagerly at construction; the fill is parallel over independent
/// slots, so results do not depend on the worker count.
class HallTables {
public:
    explicit HallTables(const Catalog& catalog, int jobs = 1);

    const Catalog& catalog() const { return *catalog_; }
    const Quiver& quiver() const { return catalog_->quiver(); }
    long q() const { return catalog_->q(); }

    int hom_dim(int r, int s) const { return hom_[idx2(r, s)]; }
    int ext_dim(int r, int s) const;
    const Integer& aut(int m) const { return aut_[m]; }

    const Integer& hall_number(int a, int b, int m) const {
        return hall_[idx3(a, b, m)];
    }

    // |Ext^1(a,b)_m| via Riedtmann-Peng; exact division, integrality checked.
    Integer ext_count(int a, int b, int m) const;

    long long euler(int a, int b) const;  // Euler form on dimension vectors

    // Test fixtures corrupt single entries to prove the verifiers notice.
    void override_hall_number(int a, int b, int m, Integer v) {
        hall_[idx3(a, b, m)] = std::move(v);
    }

private:
    size_t idx2(int r, int s) const {
        return static_cast<size_t>(r) * n_ + s;
    }
    size_t idx3(int a, int b, int m) const {
        return (static_cast<size_t>(a) * n_ + b) * n_ + m;
    }

    const Catalog* catalog_;
    int n_;
    std::vector<int> hom_;
    std::vector<Integer> aut_;
    std::vector<Integer> hall_;
};

// Run `body(i)` for i in [0, n); when jobs > 1 the indices are spread over a
// small thread pool. Bodies must write only to their own slots.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& body);

}  // namespace deltahall
