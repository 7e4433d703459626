#pragma once

#include <string>

#include "wg/polynomial.hpp"

namespace wg {

/// Reduced rational function of N with monic denominator, so equality
/// is a structural check on the two polynomials.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction constant(const Rational& c);
    static RationalFunction from_rational(const Rational& c) { return constant(c); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    /// Exact value at integer N; throws if N is a pole.
    Rational evaluate(const Rational& x) const;

    /// f(N+shift), reduced.
    RationalFunction shifted(long s) const;

    std::string str(const std::string& var = "N") const;

private:
    void reduce();
    Polynomial num_, den_;
};

}  // namespace wg
