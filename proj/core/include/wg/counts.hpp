#pragma once

#include <map>
#include <optional>
#include <string>

#include "wg/laurent.hpp"
#include "wg/matching.hpp"
#include "wg/partition.hpp"

namespace wg {

enum class CountFamily {
    Monotone,             // M_alpha^k
    Proper,               // P_alpha^{k,d}
    MatchingMonotone,     // Mt_beta^k
    PalindromicMonotone,  // Mh_beta^k
    OrthogonalProper,     // Pt_beta^{k,d}
};

std::string family_name(CountFamily f);

/// Counting table for one index partition. Monotone-style families are
/// keyed by (k, -1); proper-style families by (k, d). Values are exact;
/// the monotone families are genuine nonnegative integers, the proper
/// families are character-formula outputs whose integrality is asserted
/// by callers.
struct CountTable {
    CountFamily family;
    Partition index;
    std::map<std::pair<int, int>, Rational> entries;
    std::string convention;  // palindromic-monotone order metadata, else empty

    Rational at(int k, int d = -1) const;
};

/// ---- unitary families ----

/// Length-k monotone factorizations of the standard permutation of
/// cycletype alpha: transpositions (s_i t_i), s_i < t_i, t_i weakly
/// increasing. Depth-first enumeration with rank pruning.
CountTable monotone_counts(const Partition& alpha, int k_max);

/// (-1)^(n+l(alpha)) sum_k M_alpha^k N^(-n-k); must reproduce
/// laurent_expand(wg_unitary(alpha), order).
LaurentSeries monotone_series(const Partition& alpha, int order);

/// Proper factorizations (no identity factor) of length k and depth d,
/// via the character sum over k-tuples of non-trivial classes.
Rational proper_count(const Partition& alpha, int k, int d);

/// sum_d [ sum_k (-1)^k P_alpha^{k,d} ] N^(-n-d) through N^(-order).
LaurentSeries proper_series(const Partition& alpha, int order);

/// ---- orthogonal families ----

/// Total orders on [n] u [n^] used to read "t_i > s_i" for the
/// palindromic-monotone family. No single order is forced a priori, so
/// it is a runtime parameter fixed by calibration.
enum class HatOrder {
    HatLowInterleaved,   // 1^ < 1 < 2^ < 2 < ...
    HatHighInterleaved,  // 1 < 1^ < 2 < 2^ < ...
    UnhattedFirstBlocks, // 1 < 2 < ... < n < 1^ < ... < n^
    HattedFirstBlocks,   // 1^ < ... < n^ < 1 < 2 < ... < n
};

std::string hat_order_name(HatOrder o);

/// Matching-analogue monotone factorizations: transpositions (s_i t_i)
/// with t_i in [n], t_i weakly increasing and t_i > h(s_i), whose product
/// carries the trivial matching to the target. The count is independent
/// of the target within its cosettype; default target is
/// canonical_matching(beta).
CountTable matching_monotone_counts(const Partition& beta, int k_max,
                                    std::optional<Matching> target = std::nullopt);

/// Palindromic-monotone factorizations under a chosen label order:
/// t_i in [n], t_i weakly increasing, s_i below t_i in the order.
CountTable palindromic_monotone_counts(const Partition& beta, int k_max, HatOrder order,
                                       std::optional<Matching> target = std::nullopt);

/// Counts for every candidate order at beta=(2), k=1..3; the calibrated
/// convention is the one reproducing (1, 4, 13).
HatOrder calibrate_palindromic_convention();

/// Calibrated-by-default variant.
CountTable palindromic_monotone_counts(const Partition& beta, int k_max);

/// Orthogonal proper count Pt_beta^{k,d}: factors of non-trivial
/// cosettype, via the zonal sum over k-tuples of double cosets.
Rational orthogonal_proper_count(const Partition& beta, int k, int d);

/// sum_d [ sum_k (-1)^k (2^n n!)^(1-k) Pt_beta^{k,d} ] N^(-n-d); must
/// reproduce laurent_expand(wg_orthogonal(beta), order).
LaurentSeries orthogonal_proper_series(const Partition& beta, int order);

}  // namespace wg
