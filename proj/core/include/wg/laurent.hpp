#pragma once

#include <string>
#include <vector>

#include "wg/rational_function.hpp"

namespace wg {

/// Truncated expansion in powers of 1/N: the k-th stored coefficient is
/// the coefficient of N^{-(leading_exponent+k)}, and coefficients run
/// exactly through N^{-order}. leading_exponent may be negative (genuine
/// polynomial part), order >= leading_exponent always.
class LaurentSeries {
public:
    LaurentSeries(int leading_exponent, std::vector<Rational> coeffs, int order);

    int leading_exponent() const { return lead_; }
    int order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of N^{-k}; zero outside the stored window only for k < lead_.
    /// Throws if k > order (not computed).
    Rational coefficient(int k) const;

    std::string str(const std::string& var = "N") const;

private:
    int lead_;
    int order_;
    std::vector<Rational> coeffs_;  // size order_ - lead_ + 1
};

/// Exact 1/N expansion of f through N^{-order}, by long division in the
/// variable 1/N after reversing coefficients. Throws if order lies above
/// the first nonzero term.
LaurentSeries laurent_expand(const RationalFunction& f, int order);

}  // namespace wg
