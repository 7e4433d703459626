#pragma once

#include "wg/partition.hpp"
#include "wg/rational_function.hpp"

namespace wg {

enum class Group { Unitary, Orthogonal, OrthogonalShifted };

/// Weingarten value as an exact rational function of N, tagged with the
/// group and the index partition it belongs to.
struct WeingartenResult {
    Group group;
    Partition index;
    RationalFunction value;
};

/// Wg^U_N(alpha) = (1/n!^2) sum_lambda chi_lambda(1^n)^2 / s_lambda(1^N)
///                 * chi_lambda(alpha).
RationalFunction wg_unitary(const Partition& alpha, int bound = 6);

/// Wg^O_N(beta) = (2^n n! / (2n)!) sum_lambda chi_{2lambda}(1^{2n})
///                / Z_lambda(1^N) * omega_lambda(beta).
/// The dimension factor is evaluated at 1^{2n}: chi_{2lambda} lives in
/// S_2n, and this is the reading that reproduces the closed forms.
RationalFunction wg_orthogonal(const Partition& beta, int bound = 5);

/// Wg^O_{N+1}(beta): the orthogonal value with N -> N+1, the natural
/// variable for the 1/N map expansion.
RationalFunction wg_orthogonal_shifted(const Partition& beta, int bound = 5);

WeingartenResult weingarten(Group g, const Partition& index);

}  // namespace wg
