#include "wg/rational_function.hpp"

#include <stdexcept>

namespace wg {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

RationalFunction RationalFunction::constant(const Rational& c) {
    return RationalFunction(Polynomial::constant(c), Polynomial::constant(Rational(1)));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

Rational RationalFunction::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::shifted(long s) const {
    return RationalFunction(num_.shifted(s), den_.shifted(s));
}

std::string RationalFunction::str(const std::string& var) const {
    if (num_.is_zero()) return "0";
    if (den_.degree() == 0) return num_.str(var);
    std::string n = num_.degree() == 0 ? num_.str(var) : "(" + num_.str(var) + ")";
    return n + "/(" + den_.str(var) + ")";
}

}  // namespace wg
