#pragma once

#include <functional>
#include <map>

#include "deltahall/delta.hpp"

namespace deltahall {

/// Basis label [M][K_kappa]. kappa lives in (1/2)K_0 (doubled storage); a
/// label is "plain" when kappa is integral, which is the only legal kind in
/// the plain extended algebra.
struct ExtLabel {
    int class_id = 0;
    HalfK0Class kappa;

    friend bool operator==(const ExtLabel&, const ExtLabel&) = default;
    friend auto operator<=>(const ExtLabel& x, const ExtLabel& y) {
        if (auto c = x.class_id <=> y.class_id; c != 0) return c;
        return x.kappa <=> y.kappa;
    }
};

class ExtElement {
public:
    ExtElement() = default;
    static ExtElement basis(const ExtLabel& label, long q);
    static ExtElement basis(int class_id, const K0Class& kappa, long q);

    const std::map<ExtLabel, QuadNumber>& terms() const { return terms_; }
    QuadNumber coeff(const ExtLabel& label) const;
    bool is_zero() const { return terms_.empty(); }
    void add_term(const ExtLabel& label, const QuadNumber& c);

    friend ExtElement operator+(const ExtElement& x, const ExtElement& y);
    friend ExtElement operator-(const ExtElement& x, const ExtElement& y);
    friend ExtElement operator*(const QuadNumber& c, const ExtElement& x);
    friend bool operator==(const ExtElement&, const ExtElement&) = default;

private:
    std::map<ExtLabel, QuadNumber> terms_;
};

// [A][K_a] * [B][K_b] = sum_M Fhat^M_{AB} [M][K_{(A+B-M)/2 + a + b}].
// The same formula serves the plain and the half-K_0 extension; the K-shift
// (A+B-M)/2 is integral whenever Fhat is nonzero.
ExtElement ext_product(const ExtElement& x, const ExtElement& y,
                       const HallTables& tables);

// (x tensor u)(y tensor w) = (x*y) tensor (u*w): the ext_product with the
// K-shift dropped. Model of H_Delta tensor Q[(1/2)K_0] on the same labels.
ExtElement tensor_product(const ExtElement& x, const ExtElement& y,
                          const HallTables& tables);

// Same, with the derived Hall structure constants on the left factor.
ExtElement tensor_derived_product(const ExtElement& x, const ExtElement& y,
                                  const HallTables& tables);

/// Multiplicative bilinear twist phi(alpha, beta) = v^{T(alpha, beta)} for an
/// integer matrix T. Every twist used here is a v-power form; this keeps all
/// twisted coefficients inside Q(sqrt(q)).
class TwistForm {
public:
    explicit TwistForm(std::vector<std::vector<long long>> t);
    static TwistForm zero(int n);
    // T = -(Euler matrix): phi(alpha, beta) = v^{-<alpha, beta>}. Recovers
    // the semi-derived Hall multiplication.
    static TwistForm semi_derived(const Quiver& quiver);

    int size() const { return static_cast<int>(t_.size()); }
    const std::vector<std::vector<long long>>& matrix() const { return t_; }
    long long exponent(const K0Class& x, const K0Class& y) const;

private:
    std::vector<std::vector<long long>> t_;
};

// x (twisted by phi) y: each term pair picks up phi(A + 2a, B + 2b).
ExtElement twisted_product(const ExtElement& x, const ExtElement& y,
                           const TwistForm& phi, const HallTables& tables);

using ExtProductFn = std::function<ExtElement(
    const ExtElement&, const ExtElement&, const HallTables&)>;

// Does [0][K_alpha] commute with [M][K_beta] for every class M and a small
// sweep of betas? The product rule is injectable so negative-control
// fixtures can prove the sweep notices breakage.
bool central_check(const HallTables& tables, const K0Class& alpha,
                   const ExtProductFn& product = ext_product);

// [M][K_alpha] -> [M]: forgets the group-algebra part. Requires plain
// labels.
DeltaElement reduce_phi(const ExtElement& x);

// Basis change from the iHall basis: [M]*[K_alpha] -> v^{-<M,M>} [M][K_alpha].
ExtElement xi_tilde(const HallTables& tables, int m, const K0Class& alpha);
ExtElement xi_tilde_image(const HallTables& tables, const ExtElement& x);

// The iHall structure constant
//   sum v^{-<A,B>} q^{<N,L>} (a_L a_I a_N / a_M) F^B_{LI} F^M_{NL} F^A_{IN},
// summed over its own three-cycle enumeration (not derived from
// delta_hall_number, so the exponent identity between the two is testable).
QuadNumber ihall_number(const HallTables& tables, int a, int b, int m);

// Product on the iHall basis: ([A]*[K_a])([B]*[K_b]) =
// sum_M ihall_number [M]*[K_{(A+B-M)/2 + a + b}].
ExtElement ihall_product(const ExtElement& x, const ExtElement& y,
                         const HallTables& tables);

// Semi-derived Hall multiplication on the same labels: the iHall product
// scaled by v^{-<deg x, deg y>}. All of its structure constants are plain
// rationals; xi_tilde_image carries it onto the twisted product for the
// semi-derived twist form.
ExtElement sdh_product(const ExtElement& x, const ExtElement& y,
                       const HallTables& tables);

// [M][K_kappa] -> [M] tensor [K_{M/2 + kappa}], an isomorphism onto the
// tensor-product algebra.
ExtElement phi_tensor(const HallTables& tables, const ExtElement& x);
ExtElement phi_tensor_inverse(const HallTables& tables, const ExtElement& x);

// [M][K_kappa] -> a_M u_M tensor [K_{M/2 + kappa}], landing in the derived
// tensor algebra.
ExtElement psi_tensor(const HallTables& tables, const ExtElement& x);
ExtElement psi_tensor_inverse(const HallTables& tables, const ExtElement& x);

// deg([M][K_kappa]) = M + 2 kappa, always integral thanks to the doubled
// storage.
K0Class ext_degree(const Catalog& catalog, const ExtLabel& label);

}  // namespace deltahall
