#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "wg/rational.hpp"

namespace wg {

/// Dense univariate polynomial in the dimension indeterminate N,
/// coefficients ascending by degree. The zero polynomial has no
/// coefficients; otherwise the trailing coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c);
    static Polynomial variable();               // N
    static Polynomial monomial(const Rational& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int k) const;
    const Rational& leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Euclidean division; throws on division by zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial operator/(const Polynomial& d) const;  // exact or quotient part
    Polynomial operator%(const Polynomial& d) const;

    Rational evaluate(const Rational& x) const;
    Polynomial shifted(long s) const;  // p(N+s)
    Polynomial monic() const;

    /// Integer roots together with multiplicities, by repeated division
    /// against divisors of the constant term; complete when the
    /// polynomial splits over the integers.
    std::vector<std::pair<long, int>> integer_roots() const;

    std::string str(const std::string& var = "N") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace wg
