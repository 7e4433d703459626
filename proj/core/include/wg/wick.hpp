#pragma once

#include <string>
#include <vector>

#include "wg/rational.hpp"

namespace wg {

enum class FactorTag { Z, ZConj, M };

/// One matrix-element factor of a Gaussian moment: a (row, col) index
/// pair tagged complex (Z / Z*) or real (M).
struct IndexedFactor {
    int row = 0;
    int col = 0;
    FactorTag tag = FactorTag::M;
};

struct IndexedProduct {
    std::vector<IndexedFactor> factors;
    Rational omega = Rational(1);
};

/// <prod Z Z*> by pairing every Z with a Z* through all bijections;
/// each surviving pairing contributes 1/Omega per pair. Unbalanced tag
/// counts give exactly zero.
Rational complex_wick_moment(const IndexedProduct& p);

/// <prod M> by summing over all pairings of the factors; a pairing
/// survives when rows and columns both match within every pair. Odd
/// length gives exactly zero.
Rational real_wick_moment(const IndexedProduct& p);

/// "1,1;1,2;2,1;2,2" -> factor list (tags filled by the caller).
std::vector<IndexedFactor> parse_factors(const std::string& spec, FactorTag default_tag);

}  // namespace wg
