#pragma once

#include <map>
#include <utility>

#include "deltahall/repcat.hpp"

namespace deltahall {

/// Finite Q-linear combination of iso-classes; no explicit zero terms.
class HallElement {
public:
    HallElement() = default;
    static HallElement basis(int class_id);

    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int class_id) const;
    bool is_zero() const { return terms_.empty(); }
    void add_term(int class_id, const Rational& c);

    friend HallElement operator+(const HallElement& x, const HallElement& y);
    friend HallElement operator-(const HallElement& x, const HallElement& y);
    friend HallElement operator*(const Rational& c, const HallElement& x);
    friend bool operator==(const HallElement&, const HallElement&) = default;

private:
    std::map<int, Rational> terms_;
};

// [A] ⋄ [B] = sum_M |Ext^1(A,B)_M| / |Hom(A,B)| [M], extended bilinearly.
// Throws truncation_error when a term pair needs classes beyond the catalog
// bound.
HallElement hall_product(const HallElement& x, const HallElement& y,
                         const HallTables& tables);

// Both sides of the Hall-number associativity identity
// sum_X F^X_{AB} F^M_{XC} = sum_Y F^M_{AY} F^Y_{BC}.
std::pair<Rational, Rational> assoc3(int a, int b, int c, int m,
                                     const HallTables& tables);

// Both sides of Green's formula for the four classes; exact rationals.
std::pair<Rational, Rational> green_check(int m, int n, int x, int y,
                                          const HallTables& tables);

}  // namespace deltahall
