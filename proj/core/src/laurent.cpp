#include "wg/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace wg {

LaurentSeries::LaurentSeries(int leading_exponent, std::vector<Rational> coeffs, int order)
    : lead_(leading_exponent), order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < lead_) throw std::invalid_argument("laurent order below leading exponent");
    if (coeffs_.size() != static_cast<size_t>(order_ - lead_ + 1))
        throw std::invalid_argument("laurent coefficient count mismatch");
}

Rational LaurentSeries::coefficient(int k) const {
    if (k < lead_) return Rational(0);
    if (k > order_) throw std::out_of_range("laurent coefficient beyond truncation order");
    return coeffs_[k - lead_];
}

std::string LaurentSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = lead_; k <= order_; ++k) {
        Rational c = coefficient(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || k == 0) os << to_string(a);
        if (k != 0) {
            if (a != 1) os << "*";
            os << var << "^" << -k;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << -(order_ + 1) << ")";
    return os.str();
}

LaurentSeries laurent_expand(const RationalFunction& f, int order) {
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    if (num.is_zero()) return LaurentSeries(order, {Rational(0)}, order);

    // In x = 1/N: f = x^(degQ-degP) * revP(x)/revQ(x), both rev's nonzero at 0.
    int lead = den.degree() - num.degree();
    if (order < lead) throw std::invalid_argument("laurent order below leading exponent");

    auto reversed = [](const Polynomial& p) {
        std::vector<Rational> c(p.coefficients().rbegin(), p.coefficients().rend());
        return c;
    };
    std::vector<Rational> rp = reversed(num), rq = reversed(den);

    int terms = order - lead + 1;
    std::vector<Rational> s(terms, Rational(0));
    for (int m = 0; m < terms; ++m) {
        Rational acc = m < static_cast<int>(rp.size()) ? rp[m] : Rational(0);
        for (int j = 1; j <= m && j < static_cast<int>(rq.size()); ++j) acc -= rq[j] * s[m - j];
        s[m] = acc / rq[0];
    }
    return LaurentSeries(lead, std::move(s), order);
}

}  // namespace wg
