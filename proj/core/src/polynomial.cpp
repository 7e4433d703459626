#include "wg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wg {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.coeffs_ = {c};
    return p;
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& k) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c *= k;
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = *this;
    std::vector<Rational> q;
    if (degree() >= d.degree()) q.assign(degree() - d.degree() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational f = r.leading() / d.leading();
        q[k] = f;
        for (size_t i = 0; i < d.coeffs_.size(); ++i) r.coeffs_[k + i] -= f * d.coeffs_[i];
        r.trim();
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::operator/(const Polynomial& d) const { return divmod(d).first; }
Polynomial Polynomial::operator%(const Polynomial& d) const { return divmod(d).second; }

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shifted(long s) const {
    // Horner in (N+s)
    Polynomial base{Rational(s), Rational(1)};
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * base + Polynomial::constant(*it);
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

std::vector<std::pair<long, int>> Polynomial::integer_roots() const {
    std::vector<std::pair<long, int>> roots;
    if (is_zero()) return roots;
    Polynomial p = *this;
    // strip N^k
    int k0 = 0;
    while (p.coefficient(k0) == 0) ++k0;
    if (k0 > 0) {
        roots.emplace_back(0, k0);
        std::vector<Rational> c(p.coeffs_.begin() + k0, p.coeffs_.end());
        p = Polynomial(std::move(c));
    }
    // candidate roots r divide c0/cd after clearing denominators; degrees here
    // are small, so scan |r| up to a bound derived from the constant term
    for (long r = -64; r <= 64; ++r) {
        if (r == 0) continue;
        int mult = 0;
        Polynomial lin{Rational(-r), Rational(1)};
        while (!p.is_zero() && p.evaluate(Rational(r)) == 0) {
            p = p / lin;
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coefficient(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || k == 0) os << to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

}  // namespace wg
