#pragma once

#include <string>

#include "deltahall/errors.hpp"
#include "deltahall/rational.hpp"

namespace deltahall {

bool is_prime(long n);

/// Element a + b*sqrt(q) of the real quadratic field Q(sqrt(q)) for a fixed
/// prime q. Primality makes sqrt(q) irrational, so the pair (a, b) is a
/// unique representation and equality is componentwise.
///
/// A default-constructed value is the context-free zero: it unifies with any
/// q, so accumulators can start from QuadNumber{} without knowing the field.
/// Mixing two nonzero q contexts throws.
class QuadNumber {
public:
    QuadNumber() : q_(0), a_(0), b_(0) {}
    explicit QuadNumber(long q) : q_(q), a_(0), b_(0) { check_q(q); }
    QuadNumber(long q, Rational a, Rational b)
        : q_(q), a_(std::move(a)), b_(std::move(b)) {
        check_q(q);
        // two-argument mpq construction does not normalize on its own
        a_.canonicalize();
        b_.canonicalize();
    }

    static QuadNumber from_rational(long q, Rational a) {
        return QuadNumber(q, std::move(a), Rational(0));
    }
    static QuadNumber from_int(long q, long n) {
        return QuadNumber(q, Rational(n), Rational(0));
    }

    long q() const { return q_; }
    const Rational& rat_part() const { return a_; }
    const Rational& rad_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadNumber operator-() const { return QuadNumber(q_, -a_, -b_, unchecked{}); }

    friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator*(const Rational& c, const QuadNumber& x);

    QuadNumber& operator+=(const QuadNumber& o) { return *this = *this + o; }
    QuadNumber& operator-=(const QuadNumber& o) { return *this = *this - o; }
    QuadNumber& operator*=(const QuadNumber& o) { return *this = *this * o; }

    // Conjugate over norm; exact. Throws std::domain_error on zero.
    QuadNumber inv() const;

    friend bool operator==(const QuadNumber& x, const QuadNumber& y);
    friend bool operator!=(const QuadNumber& x, const QuadNumber& y) {
        return !(x == y);
    }

    std::string str() const;

private:
    struct unchecked {};
    QuadNumber(long q, Rational a, Rational b, unchecked)
        : q_(q), a_(std::move(a)), b_(std::move(b)) {}

    static void check_q(long q);
    static long unify(long qx, long qy);

    long q_;  // 0 marks the context-free zero
    Rational a_, b_;
};

// v^n with v = sqrt(q); n may be negative.
QuadNumber vpow(long q, long n);

// Quantum integer [r] = (v^r - v^-r)/(v - v^-1) = sum_{k=0}^{r-1} v^{r-1-2k}.
QuadNumber qint(long q, long r);

}  // namespace deltahall
