#include "deltahall/quad.hpp"

#include <sstream>

namespace deltahall {

std::string rational_to_string(const Rational& x) {
    // two-argument mpq construction does not normalize on its own
    Rational c = x;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw config_error("empty rational literal");
    try {
        Rational r;
        if (r.set_str(s, 10) != 0) throw config_error("bad rational: " + s);
        r.canonicalize();
        if (r.get_den() == 0) throw config_error("zero denominator: " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw config_error("bad rational: " + s);
    }
}

Rational rational_qpow(long q, long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    return Rational(1) / Rational(p);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void QuadNumber::check_q(long q) {
    if (!is_prime(q))
        throw config_error("field parameter q must be prime, got " +
                           std::to_string(q));
}

long QuadNumber::unify(long qx, long qy) {
    if (qx == 0) return qy;
    if (qy == 0 || qx == qy) return qx;
    throw std::invalid_argument("mixed quadratic field contexts: q=" +
                                std::to_string(qx) + " vs q=" +
                                std::to_string(qy));
}

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
    long q = QuadNumber::unify(x.q_, y.q_);
    return QuadNumber(q, x.a_ + y.a_, x.b_ + y.b_, QuadNumber::unchecked{});
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
    long q = QuadNumber::unify(x.q_, y.q_);
    return QuadNumber(q, x.a_ - y.a_, x.b_ - y.b_, QuadNumber::unchecked{});
}

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
    long q = QuadNumber::unify(x.q_, y.q_);
    // (a + b√q)(c + d√q) = (ac + bdq) + (ad + bc)√q
    return QuadNumber(q, x.a_ * y.a_ + x.b_ * y.b_ * q,
                      x.a_ * y.b_ + x.b_ * y.a_, QuadNumber::unchecked{});
}

QuadNumber QuadNumber::inv() const {
    if (is_zero()) throw std::domain_error("QuadNumber: division by zero");
    // q prime: norm a^2 - b^2 q vanishes only at zero
    Rational n = a_ * a_ - b_ * b_ * q_;
    return QuadNumber(q_, a_ / n, -b_ / n, unchecked{});
}

QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
    return x * y.inv();
}

bool operator==(const QuadNumber& x, const QuadNumber& y) {
    if (x.q_ != 0 && y.q_ != 0 && x.q_ != y.q_) return false;
    return x.a_ == y.a_ && x.b_ == y.b_;
}

QuadNumber operator*(const Rational& c, const QuadNumber& x) {
    return QuadNumber(x.q_, c * x.a_, c * x.b_, QuadNumber::unchecked{});
}

std::string QuadNumber::str() const {
    std::ostringstream os;
    os << a_.get_str();
    if (b_ != 0) os << (b_ > 0 ? "+" : "") << b_.get_str() << "*sqrt("
                    << q_ << ")";
    return os.str();
}

QuadNumber vpow(long q, long n) {
    if (n % 2 == 0) return QuadNumber(q, rational_qpow(q, n / 2), Rational(0));
    // n odd: v^n = q^{(n-1)/2} * v; (n-1)/2 is exact for either sign
    return QuadNumber(q, Rational(0), rational_qpow(q, (n - 1) / 2));
}

QuadNumber qint(long q, long r) {
    QuadNumber sum(q);
    for (long k = 0; k < r; ++k) sum += vpow(q, r - 1 - 2 * k);
    return sum;
}

}  // namespace deltahall
