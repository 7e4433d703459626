#pragma once

#include "wg/partition.hpp"
#include "wg/rational.hpp"

namespace wg {

/// Independent Weingarten oracles at fixed integer dimension: invert the
/// Gram matrix of N^(cycle count) pairings and read the row at the
/// identity. No character theory involved, which is the point.

/// G_{sigma,tau} = N^l(sigma tau^{-1}) over S_n; the value is the entry
/// (identity, pi) of G^{-1} for any pi of cycletype alpha.
/// Throws on a singular matrix (N below the invertibility threshold).
Rational gram_wg_unitary(const Partition& alpha, long N, int bound = 5);

/// Matching Gram matrix G_{m,m'} = N^l(coset_type(m,m')) over the
/// (2n-1)!! matchings; the value is the entry (trivial, m) for m of
/// cosettype beta.
Rational gram_wg_orthogonal(const Partition& beta, long N, int bound = 4);

}  // namespace wg
