#pragma once

#include <functional>
#include <map>

#include "deltahall/quad.hpp"
#include "deltahall/repcat.hpp"

namespace deltahall {

/// Finite Q(sqrt(q))-linear combination of iso-classes. Serves as the
/// underlying container for both the weighted Hall algebra (basis [M]) and
/// the derived Hall algebra (basis u_M).
class DeltaElement {
public:
    DeltaElement() = default;
    static DeltaElement basis(int class_id, long q);

    const std::map<int, QuadNumber>& terms() const { return terms_; }
    QuadNumber coeff(int class_id) const;
    bool is_zero() const { return terms_.empty(); }
    void add_term(int class_id, const QuadNumber& c);

    friend DeltaElement operator+(const DeltaElement& x, const DeltaElement& y);
    friend DeltaElement operator-(const DeltaElement& x, const DeltaElement& y);
    friend DeltaElement operator*(const QuadNumber& c, const DeltaElement& x);
    friend bool operator==(const DeltaElement&, const DeltaElement&) = default;

private:
    std::map<int, QuadNumber> terms_;
};

// Exponent bracket <L,I,N> = <L,I> + <I,I> + <I,N> - <L,N> on dimension
// vectors.
long long lin_bracket(const Quiver& quiver, const DimVector& l,
                      const DimVector& i, const DimVector& n);

/// One contributing hexagon of short exact sequences through (A, B, M):
/// N -> A -> I -> B -> L -> M -> N, adjacent pairs exact.
struct ThreeCycle {
    int l, i, n;
    Integer f_b;  // F^B_{L,I}
    Integer f_m;  // F^M_{N,L}
    Integer f_a;  // F^A_{I,N}
};

// Visit every (L, I, N) with all three Hall numbers nonzero. The dimension
// vectors of L, I, N are pinned by the exactness of the hexagon
// (2I = A+B-M and friends), so the candidate set is the classes of three
// fixed dimension vectors; nothing is visited when a pinned vector has an
// odd or negative entry.
void for_each_three_cycle(const HallTables& tables, int a, int b, int m,
                          const std::function<void(const ThreeCycle&)>& visit);

// Weighted count of three-cycles through (A, B, M):
//   sum v^{<L,I,N>} (a_L a_I a_N / a_M) F^B_{LI} F^M_{NL} F^A_{IN}.
QuadNumber delta_hall_number(const HallTables& tables, int a, int b, int m);

// Same cycles weighted for the derived Hall algebra: a_M in the denominator
// is replaced by a_A a_B. Kept as an independent summation so the scaling
// law between the two is a real cross-check.
QuadNumber derived_hall_number(const HallTables& tables, int a, int b, int m);

// |Aut| in the 1-periodic derived category: a_M * |Ext^1(M,M)|.
Integer derived_aut(const HallTables& tables, int m);

// [A] * [B] = sum_M delta_hall_number(A,B,M) [M], extended bilinearly.
DeltaElement delta_product(const DeltaElement& x, const DeltaElement& y,
                           const HallTables& tables);

// u_A * u_B = sum_M derived_hall_number(A,B,M) u_M on the derived basis.
DeltaElement derived_product(const DeltaElement& x, const DeltaElement& y,
                             const HallTables& tables);

// Basis change u_M -> (1/a_M) [M]; an algebra isomorphism from the derived
// Hall algebra.
DeltaElement xi_map(const HallTables& tables, int m);
DeltaElement xi_image(const HallTables& tables, const DeltaElement& derived);

// Image -v^{-1} [S_i] / a_{S_i} of the i-th coideal generator.
DeltaElement theta_generator(const HallTables& tables, int vertex);

}  // namespace deltahall
